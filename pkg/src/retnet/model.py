"""Value types for phylogenetic trees and networks, plus basic structural operations.

All graphs use contiguous 0-based node ids.  Rooted edges are directed
pairs (parent, child); unrooted edges are stored as (min, max) pairs.
Leaf labels map leaf nodes bijectively onto 1..n.  All types are frozen:
operations return new values and never mutate their inputs.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, Mapping, Union

from .errors import EmptyUnion, NotATree

ROOTED = "rooted"
UNROOTED = "unrooted"

Edge = tuple[int, int]


def _norm_edge(mode: str, u: int, v: int) -> Edge:
    if mode == ROOTED:
        return (u, v)
    return (u, v) if u <= v else (v, u)


def _freeze_labels(labels: Mapping[int, int] | Iterable[tuple[int, int]]) -> tuple[tuple[int, int], ...]:
    items = labels.items() if isinstance(labels, Mapping) else labels
    return tuple(sorted(items))


@dataclass(frozen=True)
class PhyloTree:
    """A binary phylogenetic tree, rooted or unrooted, with leaves labelled 1..n."""

    mode: str
    num_nodes: int
    edges: tuple[Edge, ...]
    leaf_labels: tuple[tuple[int, int], ...]

    @property
    def n(self) -> int:
        return len(self.leaf_labels)


@dataclass(frozen=True)
class RootedNetwork:
    """A binary rooted network: single-source DAG with tree nodes and reticulations."""

    num_nodes: int
    edges: tuple[Edge, ...]
    leaf_labels: tuple[tuple[int, int], ...]

    mode = ROOTED

    @property
    def n(self) -> int:
        return len(self.leaf_labels)


@dataclass(frozen=True)
class UnrootedNetwork:
    """A binary unrooted network: connected simple graph, internal degree 3."""

    num_nodes: int
    edges: tuple[Edge, ...]
    leaf_labels: tuple[tuple[int, int], ...]

    mode = UNROOTED

    @property
    def n(self) -> int:
        return len(self.leaf_labels)


Graph = Union[PhyloTree, RootedNetwork, UnrootedNetwork]


@dataclass(frozen=True)
class Switching:
    """An edge 2-labelling of a network: "on" edges (label 0) vs "off" edges (⊥).

    Rooted: every non-root node keeps exactly one on parent edge, so the
    off edges are one parent edge per reticulation.  Unrooted: the on
    edges form a spanning tree, so the off edges are the r excess edges.
    """

    host: Graph
    off_edges: frozenset[Edge]


@dataclass(frozen=True)
class ReticulationLabelling:
    """A switching extended by a bijective numbering of its off edges with 1..r."""

    host: Graph
    numbered: tuple[tuple[Edge, int], ...]  # ((u, v), h) sorted by h

    @property
    def r(self) -> int:
        return len(self.numbered)

    def label_of(self, edge: Edge) -> int:
        for e, h in self.numbered:
            if e == edge:
                return h
        return 0

    def switching(self) -> Switching:
        return Switching(self.host, frozenset(e for e, _ in self.numbered))


@dataclass(frozen=True)
class TreeSet:
    """A set of pairwise non-isomorphic trees sharing one mode and leaf set."""

    mode: str
    trees: tuple[PhyloTree, ...]

    @property
    def t(self) -> int:
        return len(self.trees)

    @property
    def n(self) -> int:
        return self.trees[0].n


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok


# ---------------------------------------------------------------------------
# graph construction and accessors


def make_graph(mode: str, nodes: Iterable[int], edges: Iterable[tuple[int, int]],
               labels: Mapping[int, int], cls=None) -> Graph:
    """Build a graph value from raw ids, renumbering nodes to contiguous 0-based ids.

    Node order (and hence renumbering) follows the sorted order of the
    input ids, so construction is deterministic.
    """
    order = sorted(set(nodes))
    idx = {v: i for i, v in enumerate(order)}
    new_edges = tuple(sorted(_norm_edge(mode, idx[u], idx[v]) for u, v in edges))
    new_labels = _freeze_labels({idx[v]: x for v, x in labels.items()})
    if cls is None:
        cls = PhyloTree
    if cls is PhyloTree:
        return PhyloTree(mode, len(order), new_edges, new_labels)
    return cls(len(order), new_edges, new_labels)


def leaf_map(G: Graph) -> dict[int, int]:
    """node -> label for the labelled leaves of G."""
    return dict(G.leaf_labels)


def label_map(G: Graph) -> dict[int, int]:
    """label -> node, the inverse of leaf_map."""
    return {x: v for v, x in G.leaf_labels}


def out_adj(G: Graph) -> dict[int, list[int]]:
    adj: dict[int, list[int]] = {v: [] for v in range(G.num_nodes)}
    for u, v in G.edges:
        adj[u].append(v)
    return adj


def in_adj(G: Graph) -> dict[int, list[int]]:
    adj: dict[int, list[int]] = {v: [] for v in range(G.num_nodes)}
    for u, v in G.edges:
        adj[v].append(u)
    return adj


def undirected_adj(G: Graph) -> dict[int, list[int]]:
    adj: dict[int, list[int]] = {v: [] for v in range(G.num_nodes)}
    for u, v in G.edges:
        adj[u].append(v)
        adj[v].append(u)
    return adj


def root_of(G: Graph) -> int:
    """The unique in-degree-0 node of a rooted graph."""
    indeg = [0] * G.num_nodes
    for _, v in G.edges:
        indeg[v] += 1
    roots = [v for v in range(G.num_nodes) if indeg[v] == 0]
    if len(roots) != 1:
        raise ValueError("graph does not have a single root")
    return roots[0]


def reticulations_of(G: Graph) -> list[int]:
    """In-degree-2 nodes of a rooted graph, in id order."""
    indeg = [0] * G.num_nodes
    for _, v in G.edges:
        indeg[v] += 1
    return [v for v in range(G.num_nodes) if indeg[v] >= 2]


def is_tree_shaped(G: Graph) -> bool:
    """True if G has no reticulations (rooted) / no cycles (unrooted)."""
    if G.mode == ROOTED:
        return not reticulations_of(G)
    return len(G.edges) == G.num_nodes - 1


def as_phylo_tree(G: Graph) -> PhyloTree:
    if isinstance(G, PhyloTree):
        return G
    return PhyloTree(G.mode, G.num_nodes, G.edges, G.leaf_labels)


def reticulation_count(N: Graph) -> int:
    """r(N): in-degree-2 node count (rooted) or |E| - |V| + 1 (unrooted)."""
    if N.mode == ROOTED:
        return len(reticulations_of(N))
    return len(N.edges) - N.num_nodes + 1


# ---------------------------------------------------------------------------
# validation


def _has_directed_cycle(num_nodes: int, edges: Iterable[Edge]) -> bool:
    adj = defaultdict(list)
    indeg = [0] * num_nodes
    for u, v in edges:
        adj[u].append(v)
        indeg[v] += 1
    stack = [v for v in range(num_nodes) if indeg[v] == 0]
    seen = 0
    while stack:
        u = stack.pop()
        seen += 1
        for w in adj[u]:
            indeg[w] -= 1
            if indeg[w] == 0:
                stack.append(w)
    return seen != num_nodes


def _is_connected(num_nodes: int, edges: Iterable[Edge]) -> bool:
    if num_nodes == 0:
        return False
    adj = defaultdict(list)
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == num_nodes


def _common_violations(G: Graph) -> list[str]:
    bad = []
    for u, v in G.edges:
        if not (0 <= u < G.num_nodes and 0 <= v < G.num_nodes):
            bad.append("edge endpoint out of range")
        if u == v:
            bad.append("self-loop")
    if len(set(_norm_edge(UNROOTED, u, v) for u, v in G.edges)) != len(G.edges):
        bad.append("parallel edges")
    labels = [x for _, x in G.leaf_labels]
    nodes = [v for v, _ in G.leaf_labels]
    if len(set(nodes)) != len(nodes):
        bad.append("node labelled twice")
    if sorted(labels) != list(range(1, len(labels) + 1)):
        bad.append("leaf labels are not a bijection onto [n]")
    return bad


def _validate_rooted_graph(G: Graph, allow_reticulations: bool) -> list[str]:
    bad = _common_violations(G)
    if bad:
        return bad
    if G.num_nodes == 1:
        if len(G.edges) != 0:
            bad.append("single node with edges")
        if dict(G.leaf_labels) != {0: 1}:
            bad.append("degenerate tree must be one leaf labelled 1")
        return bad
    indeg = [0] * G.num_nodes
    outdeg = [0] * G.num_nodes
    for u, v in G.edges:
        outdeg[u] += 1
        indeg[v] += 1
    if _has_directed_cycle(G.num_nodes, G.edges):
        bad.append("directed cycle")
    roots = [v for v in range(G.num_nodes) if indeg[v] == 0]
    if len(roots) != 1:
        bad.append("single source violated")
        return bad
    if not _is_connected(G.num_nodes, G.edges):
        bad.append("not connected")
    labelled = set(v for v, _ in G.leaf_labels)
    r = 0
    for v in range(G.num_nodes):
        din, dout = indeg[v], outdeg[v]
        if din == 0:
            if dout != 2:
                bad.append("root out-degree must be 2")
            if v in labelled:
                bad.append("root is labelled")
        elif dout == 0:
            if din != 1:
                bad.append("leaf in-degree must be 1")
            if v not in labelled:
                bad.append("unlabelled leaf")
        elif din == 1 and dout == 2:
            if v in labelled:
                bad.append("internal node is labelled")
        elif din == 2 and dout == 1:
            if not allow_reticulations:
                bad.append("tree contains a reticulation")
            if v in labelled:
                bad.append("internal node is labelled")
            r += 1
        else:
            bad.append("not binary")
    if not bad and len(G.edges) != G.num_nodes - 1 + r:
        bad.append("edge count does not match |V| - 1 + r")
    return bad


def _validate_unrooted_graph(G: Graph, allow_cycles: bool) -> list[str]:
    bad = _common_violations(G)
    if bad:
        return bad
    for u, v in G.edges:
        if u > v:
            bad.append("unrooted edge not stored as (min, max)")
            return bad
    if G.num_nodes == 1:
        if len(G.edges) != 0 or dict(G.leaf_labels) != {0: 1}:
            bad.append("degenerate tree must be one leaf labelled 1")
        return bad
    if not _is_connected(G.num_nodes, G.edges):
        bad.append("not connected")
        return bad
    deg = [0] * G.num_nodes
    for u, v in G.edges:
        deg[u] += 1
        deg[v] += 1
    labelled = set(v for v, _ in G.leaf_labels)
    for v in range(G.num_nodes):
        if deg[v] == 1:
            if v not in labelled:
                bad.append("unlabelled leaf")
        elif deg[v] == 3:
            if v in labelled:
                bad.append("internal node is labelled")
        else:
            bad.append("not binary (internal degree must be 3)")
    if not allow_cycles and len(G.edges) != G.num_nodes - 1:
        bad.append("tree contains a cycle")
    return bad


def _validate_switching(s: Switching) -> list[str]:
    host = s.host
    bad = list(validate(host).violations)
    if bad:
        return ["host invalid: " + b for b in bad]
    edge_set = set(host.edges)
    for e in s.off_edges:
        if e not in edge_set:
            return ["off edge not in host"]
    r = reticulation_count(host)
    if len(s.off_edges) != r:
        bad.append("off edge count differs from reticulation number")
    if host.mode == ROOTED:
        per_ret = defaultdict(int)
        for u, v in s.off_edges:
            per_ret[v] += 1
        rets = set(reticulations_of(host))
        for v, k in per_ret.items():
            if v not in rets:
                bad.append("off edge does not enter a reticulation")
            elif k != 1:
                bad.append("reticulation with two off parent edges")
    else:
        on = [e for e in host.edges if e not in s.off_edges]
        if len(on) != host.num_nodes - 1 or not _is_connected(host.num_nodes, on):
            bad.append("on edges do not form a spanning tree")
    return bad


def _validate_labelling(lab: ReticulationLabelling) -> list[str]:
    bad = _validate_switching(lab.switching())
    if bad:
        return bad
    hs = [h for _, h in lab.numbered]
    if sorted(hs) != list(range(1, len(hs) + 1)):
        bad.append("numbered labels are not a bijection onto [r]")
    return bad


def validate(obj) -> ValidationReport:
    """List every violated invariant of a tree, network, switching, or labelling.

    Total: never raises, never mutates.  An empty report means valid.
    """
    if isinstance(obj, PhyloTree):
        if obj.mode == ROOTED:
            v = _validate_rooted_graph(obj, allow_reticulations=False)
        else:
            v = _validate_unrooted_graph(obj, allow_cycles=False)
    elif isinstance(obj, RootedNetwork):
        v = _validate_rooted_graph(obj, allow_reticulations=True)
    elif isinstance(obj, UnrootedNetwork):
        v = _validate_unrooted_graph(obj, allow_cycles=True)
    elif isinstance(obj, Switching):
        v = _validate_switching(obj)
    elif isinstance(obj, ReticulationLabelling):
        v = _validate_labelling(obj)
    elif isinstance(obj, TreeSet):
        v = []
        if not obj.trees:
            v.append("t must be at least 1")
        else:
            from .canonical import canonical_code

            for T in obj.trees:
                if T.mode != obj.mode:
                    v.append("member mode mismatch")
                v.extend(validate(T).violations)
            if len({T.n for T in obj.trees}) != 1:
                v.append("members disagree on n")
            codes = [canonical_code(T).bytes for T in obj.trees]
            if len(set(codes)) != len(codes):
                v.append("members are not pairwise non-isomorphic")
    else:
        v = ["unknown object type"]
    return ValidationReport(tuple(v))


# ---------------------------------------------------------------------------
# suppression


def suppress(G: Graph) -> PhyloTree:
    """Contract a graph-theoretic tree down to a phylogenetic tree.

    Removes unlabelled pendant chains, then contracts degree-2 vertices
    (rooted: in-degree-1/out-degree-1 nodes and out-degree-1 roots).
    Inverse of edge subdivision.
    """
    return _suppress_raw(G.mode, set(range(G.num_nodes)), set(G.edges), dict(G.leaf_labels))


def _suppress_raw(mode: str, nodes: set[int], edges: set[Edge], labels: dict[int, int]) -> PhyloTree:
    if mode == ROOTED:
        return _suppress_rooted(nodes, edges, labels)
    return _suppress_unrooted(nodes, edges, labels)


def _suppress_rooted(nodes: set[int], edges: set[Edge], labels: dict[int, int]) -> PhyloTree:
    if _has_directed_cycle(max(nodes, default=0) + 1, edges):
        raise NotATree("input has a directed cycle")
    children = defaultdict(set)
    parent: dict[int, int] = {}
    for u, v in edges:
        children[u].add(v)
        if v in parent:
            raise NotATree("node with two parents")
        parent[v] = u
    changed = True
    while changed:
        changed = False
        for v in list(nodes):
            if v in labels:
                continue
            cs = children[v]
            if not cs:  # unlabelled childless node: prune
                nodes.remove(v)
                if v in parent:
                    children[parent[v]].discard(v)
                    del parent[v]
                changed = True
            elif len(cs) == 1:
                (c,) = cs
                if v in parent:  # in-1 out-1: contract
                    p = parent[v]
                    children[p].discard(v)
                    children[p].add(c)
                    parent[c] = p
                else:  # root with a single child: drop the root
                    del parent[c]
                nodes.remove(v)
                del children[v]
                changed = True
    new_edges = [(u, v) for u in nodes for v in children[u]]
    return make_graph(ROOTED, nodes, new_edges, {v: x for v, x in labels.items() if v in nodes})


def _suppress_unrooted(nodes: set[int], edges: set[Edge], labels: dict[int, int]) -> PhyloTree:
    if len(edges) != len(nodes) - 1 or not _is_connected_sets(nodes, edges):
        raise NotATree("input is not a tree")
    adj = defaultdict(set)
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    changed = True
    while changed:
        changed = False
        for v in list(nodes):
            if v in labels:
                continue
            nb = adj[v]
            if len(nb) <= 1:  # unlabelled pendant (or isolated) node: prune
                nodes.remove(v)
                for w in nb:
                    adj[w].discard(v)
                del adj[v]
                changed = True
            elif len(nb) == 2:  # degree-2 node: contract
                a, b = sorted(nb)
                nodes.remove(v)
                adj[a].discard(v)
                adj[b].discard(v)
                adj[a].add(b)
                adj[b].add(a)
                del adj[v]
                changed = True
    new_edges = set()
    for u in nodes:
        for w in adj[u]:
            new_edges.add(_norm_edge(UNROOTED, u, w))
    return make_graph(UNROOTED, nodes, new_edges, {v: x for v, x in labels.items() if v in nodes})


def _is_connected_sets(nodes: set[int], edges: set[Edge]) -> bool:
    if not nodes:
        return False
    adj = defaultdict(list)
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    start = next(iter(nodes))
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen == nodes


def subdivide(G: Graph, edge: Edge, times: int = 1) -> Graph:
    """Replace one edge of G by a path with `times` internal vertices."""
    edges = list(G.edges)
    edges.remove(edge)
    u, v = edge
    prev = u
    nid = G.num_nodes
    for _ in range(times):
        edges.append(_norm_edge(G.mode, prev, nid))
        prev = nid
        nid += 1
    edges.append(_norm_edge(G.mode, prev, v))
    cls = type(G)
    return make_graph(G.mode, range(nid), edges, dict(G.leaf_labels),
                      cls=cls if cls is not PhyloTree else PhyloTree)


# ---------------------------------------------------------------------------
# leaf-connecting restriction (unrooted)


def is_leaf_connecting(N: UnrootedNetwork) -> bool:
    """True iff every edge of N lies on a simple path between two leaves."""
    leaves = set(leaf_map(N))
    adj = undirected_adj(N)

    def paths_to_leaves(start: int, blocked: frozenset[int]):
        # all simple paths from start to any leaf, avoiding blocked vertices
        stack = [(start, (start,))]
        while stack:
            v, path = stack.pop()
            if v in leaves:
                yield path
                continue
            for w in adj[v]:
                if w not in blocked and w not in path:
                    stack.append((w, path + (w,)))

    for u, v in N.edges:
        found = False
        for pu in paths_to_leaves(u, frozenset({v})):
            for _ in paths_to_leaves(v, frozenset(pu)):
                found = True
                break
            if found:
                break
        if not found:
            return False
    return True


def restrict_to_embeddings(N: UnrootedNetwork, embeddings: Iterable[Iterable[Edge]]) -> UnrootedNetwork:
    """The subnetwork on the union of embedding edges, degree-2 vertices suppressed."""
    union: set[Edge] = set()
    for emb in embeddings:
        union.update(_norm_edge(UNROOTED, u, v) for u, v in emb)
    leaves = set(leaf_map(N))
    if not any(u in leaves or v in leaves for u, v in union):
        raise EmptyUnion("embedding union covers no leaf edge")
    nodes = {u for e in union for u in e}
    adj: dict[int, set[int]] = defaultdict(set)
    for u, v in union:
        adj[u].add(v)
        adj[v].add(u)
    # Suppress unlabelled degree-2 vertices.  Contractions that would
    # create a parallel edge or self-loop collapse it instead, which can
    # only lower the reticulation number.
    changed = True
    while changed:
        changed = False
        for v in list(nodes):
            if v in leaves:
                continue
            nb = adj[v]
            if len(nb) == 0:
                nodes.remove(v)
                del adj[v]
                changed = True
            elif len(nb) == 2:
                a, b = sorted(nb)
                nodes.remove(v)
                adj[a].discard(v)
                adj[b].discard(v)
                if a != b and b not in adj[a]:
                    adj[a].add(b)
                    adj[b].add(a)
                del adj[v]
                changed = True
    new_edges = {_norm_edge(UNROOTED, u, w) for u in nodes for w in adj[u]}
    labels = {v: x for v, x in N.leaf_labels if v in nodes}
    return make_graph(UNROOTED, nodes, new_edges, labels, cls=UnrootedNetwork)


def tree_set(trees: Iterable[PhyloTree]) -> TreeSet:
    """Build a TreeSet, dropping isomorphic duplicates, in canonical-code order."""
    from .canonical import canonical_code

    trees = list(trees)
    if not trees:
        raise ValueError("a tree set needs at least one tree")
    mode = trees[0].mode
    by_code = {}
    for T in trees:
        by_code.setdefault(canonical_code(T).bytes, T)
    ordered = tuple(by_code[c] for c in sorted(by_code))
    return TreeSet(mode, ordered)
