"""Canonical forms and isomorphism for leaf-labelled trees and networks.

Codes are complete isomorphism invariants: two graphs get equal codes
exactly when they are isomorphic as labelled graphs (leaf labels always,
edge labels when supplied).  Trees use a fast recursive code; networks
use colour refinement with backtracking over the residual symmetry,
taking the lexicographically least encoding over all refinement leaves.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import model
from .errors import ModeMismatch
from .model import Graph, ReticulationLabelling, ROOTED

CODE_VERSION = 1


@dataclass(frozen=True)
class CanonicalCode:
    bytes: bytes

    def hex(self) -> str:
        return self.bytes.hex()

    def __lt__(self, other: "CanonicalCode") -> bool:
        return self.bytes < other.bytes


def canonical_code(G: Graph, edge_labels: Optional[ReticulationLabelling] = None) -> CanonicalCode:
    """Deterministic, node-id-invariant code for a labelled graph."""
    header = bytes([CODE_VERSION]) + (b"R" if G.mode == ROOTED else b"U")
    elabels = {}
    if edge_labels is not None:
        elabels = {e: h for e, h in edge_labels.numbered}
    if not elabels and model.is_tree_shaped(G):
        return CanonicalCode(header + b"T" + _tree_code(G))
    body = _canon_general(G.mode, G.num_nodes, G.edges, dict(G.leaf_labels), elabels)
    return CanonicalCode(header + b"G" + body)


def canonical_positions(G: Graph,
                        edge_labels: Optional[ReticulationLabelling] = None) -> tuple[int, ...]:
    """node -> position in the canonical ordering of G (general path).

    Any two minimal orderings differ by an automorphism, so sets of
    edges compared in canonical coordinates are class invariants.  With
    edge labels supplied the ordering respects them too.
    """
    elabels = {} if edge_labels is None else {e: h for e, h in edge_labels.numbered}
    _, perm = _canon_general(G.mode, G.num_nodes, G.edges, dict(G.leaf_labels),
                             elabels, want_perm=True)
    return tuple(perm)


def are_isomorphic(A: Graph, B: Graph) -> bool:
    if A.mode != B.mode:
        raise ModeMismatch(f"{A.mode} vs {B.mode}")
    return canonical_code(A) == canonical_code(B)


# ---------------------------------------------------------------------------
# fast tree codes


def _tree_code(G: Graph) -> bytes:
    leaves = model.leaf_map(G)
    if G.mode == ROOTED:
        children = model.out_adj(G)
        root = model.root_of(G)

        def code(v: int) -> bytes:
            if v in leaves:
                return b"%d" % leaves[v]
            return b"(" + b",".join(sorted(code(c) for c in children[v])) + b")"

        return code(root)
    # Unrooted: hang the tree off leaf 1; leaf labels make this invariant.
    adj = model.undirected_adj(G)
    start = model.label_map(G)[1]

    def ucode(v: int, parent: int) -> bytes:
        nb = [w for w in adj[v] if w != parent]
        if not nb:
            return b"%d" % leaves[v]
        return b"(" + b",".join(sorted(ucode(w, v) for w in nb)) + b")"

    if G.num_nodes == 1:
        return b"1"
    return b"[1|" + ucode(adj[start][0], start) + b"]"


# ---------------------------------------------------------------------------
# general labelled-graph canonization


def _canon_general(mode: str, num_nodes: int, edges, vlabels: dict[int, int],
                   elabels: dict[tuple[int, int], int], want_perm: bool = False):
    directed = mode == ROOTED
    out_nb: list[list[tuple[int, int]]] = [[] for _ in range(num_nodes)]
    in_nb: list[list[tuple[int, int]]] = [[] for _ in range(num_nodes)]
    for e in edges:
        u, v = e
        lab = elabels.get(e, 0)
        out_nb[u].append((v, lab))
        in_nb[v].append((u, lab))
        if not directed:
            out_nb[v].append((u, lab))
            in_nb[u].append((v, lab))

    init_keys = [("L", vlabels[v]) if v in vlabels else ("I", 0) for v in range(num_nodes)]
    colors = _rank([(k,) for k in init_keys])

    edge_set = {}
    for e in edges:
        edge_set[e] = elabels.get(e, 0)

    def refine(cols: list[int]) -> list[int]:
        while True:
            sigs = []
            for v in range(num_nodes):
                sig = (cols[v],
                       tuple(sorted((cols[u], lab) for u, lab in in_nb[v])),
                       tuple(sorted((cols[u], lab) for u, lab in out_nb[v])))
                sigs.append(sig)
            new = _rank(sigs)
            if len(set(new)) == len(set(cols)):
                return new
            cols = new

    def encode(cols: list[int]) -> bytes:
        perm = [0] * num_nodes
        for v in range(num_nodes):
            perm[v] = cols[v]
        if directed:
            es = sorted((perm[u], perm[v], edge_set[(u, v)]) for u, v in edges)
        else:
            es = sorted(tuple(sorted((perm[u], perm[v]))) + (edge_set[(u, v)],)
                        for u, v in edges)
        ls = sorted((perm[v], x) for v, x in vlabels.items())
        return repr((num_nodes, es, ls)).encode()

    best: list = []

    def search(cols: list[int]) -> None:
        cols = refine(cols)
        classes: dict[int, list[int]] = {}
        for v in range(num_nodes):
            classes.setdefault(cols[v], []).append(v)
        target = None
        for c in sorted(classes):
            if len(classes[c]) > 1:
                target = c
                break
        if target is None:
            enc = encode(cols)
            if not best or enc < best[0]:
                best[:] = [enc, list(cols)]
            return
        for v in classes[target]:
            keyed = [(cols[u], 0 if u == v else 1) if cols[u] == target else (cols[u], 2)
                     for u in range(num_nodes)]
            search(_rank(keyed))

    search(colors)
    if want_perm:
        return best[0], best[1]
    return best[0]


def _rank(keys: list) -> list[int]:
    order = {k: i for i, k in enumerate(sorted(set(keys)))}
    return [order[k] for k in keys]


# ---------------------------------------------------------------------------
# automorphisms


def automorphism_count(X) -> int:
    """Number of labelled-graph automorphisms of a graph or labelled network.

    For a valid reticulation-labelled network this is always 1: the edge
    numbering pins every node.  Without edge labels larger groups are
    possible (parent-swap symmetries).
    """
    if isinstance(X, ReticulationLabelling):
        G = X.host
        elabels = {e: h for e, h in X.numbered}
    else:
        G = X
        elabels = {}
    directed = G.mode == ROOTED
    n = G.num_nodes
    vlabels = dict(G.leaf_labels)
    edge_lab = {}
    for e in G.edges:
        u, v = e
        lab = elabels.get(e, 0)
        if directed:
            edge_lab[(u, v)] = lab
        else:
            edge_lab[(u, v)] = lab
            edge_lab[(v, u)] = lab

    adj_out: list[set[int]] = [set() for _ in range(n)]
    adj_in: list[set[int]] = [set() for _ in range(n)]
    for u, v in G.edges:
        adj_out[u].add(v)
        adj_in[v].add(u)
        if not directed:
            adj_out[v].add(u)
            adj_in[u].add(v)

    # stable colouring restricts candidate images
    init = [("L", vlabels[v]) if v in vlabels else ("I", 0) for v in range(n)]
    cols = _rank([(k,) for k in init])
    while True:
        sigs = []
        for v in range(n):
            sigs.append((cols[v],
                         tuple(sorted((cols[u], edge_lab[(u, v)]) for u in adj_in[v])),
                         tuple(sorted((cols[u], edge_lab[(v, u)]) for u in adj_out[v]))))
        new = _rank(sigs)
        if len(set(new)) == len(set(cols)):
            cols = new
            break
        cols = new

    classes: dict[int, list[int]] = {}
    for v in range(n):
        classes.setdefault(cols[v], []).append(v)
    order = sorted(range(n), key=lambda v: (len(classes[cols[v]]), cols[v], v))

    count = 0
    mapping: dict[int, int] = {}
    used: set[int] = set()

    def consistent(v: int, w: int) -> bool:
        for u, mu in mapping.items():
            if (u in adj_out[v]) != (mu in adj_out[w]):
                return False
            if u in adj_out[v] and edge_lab[(v, u)] != edge_lab[(w, mu)]:
                return False
            if (u in adj_in[v]) != (mu in adj_in[w]):
                return False
            if u in adj_in[v] and edge_lab[(u, v)] != edge_lab[(mu, w)]:
                return False
        return True

    def dfs(i: int) -> None:
        nonlocal count
        if i == len(order):
            count += 1
            return
        v = order[i]
        for w in classes[cols[v]]:
            if w in used or not consistent(v, w):
                continue
            mapping[v] = w
            used.add(w)
            dfs(i + 1)
            del mapping[v]
            used.discard(w)

    dfs(0)
    return count
