"""Exhaustive generation of trees, networks, switchings, and labellings.

Trees are generated by leaf insertion, which emits every isomorphism
class exactly once.  Networks are generated by decoding every tree on
n + 2r leaves through the pendant-pair codec and deduplicating the
underlying graphs by canonical code: every labelled network is the
decoding of its own encoding, so the sweep is complete.
"""

from __future__ import annotations

import itertools
import os
from functools import lru_cache
from typing import Iterator

from . import codec, model
from .canonical import canonical_code, canonical_positions
from .errors import BudgetExceeded, NotInImage, SwitchingMismatch
from .model import (Graph, PhyloTree, ReticulationLabelling, Switching,
                    ROOTED, UNROOTED)

DEFAULT_CAP = {ROOTED: 12, UNROOTED: 10}

BUDGET_ENV = "RETNET_BUDGET"


def _budget_cap(mode: str) -> int:
    env = os.environ.get(BUDGET_ENV)
    if env:
        return int(env)
    return DEFAULT_CAP[mode]


def _raw_trees(n: int, mode: str) -> Iterator[PhyloTree]:
    """All trees on leaf set [n], one per class, in leaf-insertion order."""
    if mode == ROOTED:
        yield from _raw_rooted(n)
    else:
        yield from _raw_unrooted(n)


def _raw_rooted(n: int) -> Iterator[PhyloTree]:
    def rec(k: int, nid: int, edges: tuple, root: int, labels: tuple) -> Iterator[PhyloTree]:
        if k > n:
            yield model.make_graph(ROOTED, range(nid), edges, dict(labels))
            return
        z, w = nid, nid + 1
        lab = labels + ((z, k),)
        for i, (u, v) in enumerate(edges):
            new_edges = edges[:i] + edges[i + 1:] + ((u, w), (w, v), (w, z))
            yield from rec(k + 1, nid + 2, new_edges, root, lab)
        # above the root
        yield from rec(k + 1, nid + 2, edges + ((w, root), (w, z)), w, lab)

    yield from rec(2, 1, (), 0, ((0, 1),))


def _raw_unrooted(n: int) -> Iterator[PhyloTree]:
    if n == 1:
        yield model.make_graph(UNROOTED, [0], [], {0: 1})
        return
    if n == 2:
        yield model.make_graph(UNROOTED, [0, 1], [(0, 1)], {0: 1, 1: 2})
        return

    def rec(k: int, nid: int, edges: tuple, labels: tuple) -> Iterator[PhyloTree]:
        if k > n:
            yield model.make_graph(UNROOTED, range(nid), edges, dict(labels))
            return
        z, w = nid, nid + 1
        lab = labels + ((z, k),)
        for i, (u, v) in enumerate(edges):
            new_edges = edges[:i] + edges[i + 1:] + ((u, w), (w, v), (w, z))
            yield from rec(k + 1, nid + 2, new_edges, lab)

    star = ((3, 0), (3, 1), (3, 2))
    yield from rec(4, 4, star, ((0, 1), (1, 2), (2, 3)))


@lru_cache(maxsize=32)
def _trees_sorted(n: int, mode: str) -> tuple[PhyloTree, ...]:
    return tuple(sorted(_raw_trees(n, mode), key=lambda T: canonical_code(T).bytes))


def enumerate_trees(n: int, mode: str = ROOTED) -> tuple[PhyloTree, ...]:
    """Every tree class on leaf set [n] exactly once, in canonical-code order."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return _trees_sorted(n, mode)


def enumerate_networks(n: int, r: int, mode: str = ROOTED, *,
                       leaf_connecting: bool = True, cap: int | None = None):
    """Every binary network class with n leaves and r reticulations, exactly once.

    Unrooted networks are restricted to the leaf-connecting class unless
    `leaf_connecting=False`.  Ordered by canonical code.
    """
    if cap is None:
        cap = _budget_cap(mode)
    if n + 2 * r > cap:
        raise BudgetExceeded(f"n + 2r = {n + 2 * r} exceeds cap {cap}")
    if r == 0:
        return enumerate_trees(n, mode)
    return _networks_cached(n, r, mode, leaf_connecting)


@lru_cache(maxsize=64)
def _networks_cached(n: int, r: int, mode: str, leaf_connecting: bool):
    seen: dict[bytes, Graph] = {}
    for T in _raw_trees(n + 2 * r, mode):
        try:
            net, _ = codec.decode_tau(T, n, r)
        except NotInImage:
            continue
        if mode == UNROOTED and leaf_connecting and not model.is_leaf_connecting(net):
            continue
        code = canonical_code(net).bytes
        if code not in seen:
            seen[code] = net
    return tuple(seen[c] for c in sorted(seen))


def enumerate_switchings(N: Graph) -> tuple[Switching, ...]:
    """All switchings of N: 2^r for rooted, one per spanning tree for unrooted."""
    if N.mode == ROOTED:
        rets = model.reticulations_of(N)
        in_edges = [sorted((u, v) for u, v in N.edges if v == ret) for ret in rets]
        out = []
        for off in itertools.product(*in_edges):
            out.append(Switching(N, frozenset(off)))
        return tuple(out)
    r = model.reticulation_count(N)
    out = []
    for off in itertools.combinations(sorted(N.edges), r):
        on = [e for e in N.edges if e not in set(off)]
        if model._is_connected(N.num_nodes, on) and len(on) == N.num_nodes - 1:
            out.append(Switching(N, frozenset(off)))
    return tuple(out)


def fixed_switching(N: Graph) -> Switching:
    """A deterministic switching per isomorphism class.

    The lexicographically least switching when edges are named by their
    canonical node positions; isomorphic networks get isomorphic fixed
    switchings.
    """
    options = enumerate_switchings(N)
    if len(options) == 1:
        return options[0]
    pos = canonical_positions(N)

    def key(s: Switching):
        return sorted(model._norm_edge(N.mode, pos[u], pos[v]) for u, v in s.off_edges)

    return min(options, key=key)


def reticulation_labellings(N: Graph, sigma: Switching) -> tuple[ReticulationLabelling, ...]:
    """All r! bijective number assignments extending the switching sigma."""
    if sigma.host != N:
        raise SwitchingMismatch("switching is not hosted by this network")
    report = model.validate(sigma)
    if not report.ok:
        raise SwitchingMismatch("; ".join(report.violations))
    off = sorted(sigma.off_edges)
    out = []
    for perm in itertools.permutations(range(1, len(off) + 1)):
        numbered = tuple(sorted(zip(off, perm), key=lambda eh: eh[1]))
        out.append(ReticulationLabelling(N, numbered))
    return tuple(out)


def all_reticulation_labellings(N: Graph) -> Iterator[ReticulationLabelling]:
    """Every reticulation labelling of N, over every switching."""
    for sigma in enumerate_switchings(N):
        yield from reticulation_labellings(N, sigma)
