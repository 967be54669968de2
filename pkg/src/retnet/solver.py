"""Brute-force ground truth: minimum reticulations, worst-case tree sets,
and the enumeration-vs-bounds verification harness."""

from __future__ import annotations

import itertools
import math
import random
from typing import Optional

from . import bounds, codec, display, generate, model
from .canonical import automorphism_count, canonical_code
from .errors import BudgetExceeded
from .model import Graph, TreeSet, ROOTED, UNROOTED


def _displayed_code_sets(n: int, r: int, mode: str):
    """(network, frozenset of displayed tree codes) for every class in N_{n,r}."""
    out = []
    for N in generate.enumerate_networks(n, r, mode):
        codes = frozenset(canonical_code(T).bytes for T in display.displayed_trees(N))
        out.append((N, codes))
    return out


def min_reticulations(ts: TreeSet, r_cap: Optional[int] = None) -> tuple[int, Graph]:
    """Least r such that some network with r reticulations displays every member.

    Searches r upward through the canonical enumeration order, so the
    witness is deterministic.  Bounded above by (t-1)n, the trivial
    network's reticulation count.
    """
    if r_cap is None:
        r_cap = (ts.t - 1) * ts.n
    target = frozenset(canonical_code(T).bytes for T in ts.trees)
    for r in range(r_cap + 1):
        for N, codes in _displayed_code_sets(ts.n, r, ts.mode):
            if target <= codes:
                return r, N
    raise BudgetExceeded(f"no displaying network found up to r = {r_cap}")


def worst_case_r(n: int, t: int, mode: str = ROOTED, *,
                 samples: Optional[int] = None, seed: int = 0) -> tuple[int, TreeSet]:
    """Maximum of min_reticulations over t-element tree sets on [n].

    Exhaustive for n <= 4 rooted / n <= 5 unrooted; beyond that a sample
    count must be given.
    """
    trees = generate.enumerate_trees(n, mode)
    if t > len(trees):
        raise ValueError(f"only {len(trees)} trees exist on {n} leaves")
    code_of = {canonical_code(T).bytes: T for T in trees}

    exhaustive_limit = 4 if mode == ROOTED else 5
    if samples is None and n > exhaustive_limit:
        raise BudgetExceeded(f"exhaustive search capped at n = {exhaustive_limit}; "
                             "pass a sample count beyond that")

    if samples is not None:
        rng = random.Random(seed)
        best_r, best_set = -1, None
        for _ in range(samples):
            subset = rng.sample(trees, t)
            ts = TreeSet(mode, tuple(sorted(subset, key=lambda T: canonical_code(T).bytes)))
            r, _ = min_reticulations(ts)
            if r > best_r:
                best_r, best_set = r, ts
        return best_r, best_set

    remaining = {frozenset(c): None for c in itertools.combinations(sorted(code_of), t)}
    r = 0
    last_removed: list[frozenset] = []
    while remaining:
        removed = []
        for _, codes in _displayed_code_sets(n, r, mode):
            if len(codes) < t:
                continue
            for sub in itertools.combinations(sorted(codes), t):
                key = frozenset(sub)
                if key in remaining:
                    del remaining[key]
                    removed.append(key)
        if removed:
            last_removed = removed
        if remaining:
            r += 1
        else:
            break
    witness_codes = min(sorted(tuple(sorted(s)) for s in last_removed))
    witness = TreeSet(mode, tuple(code_of[c] for c in witness_codes))
    return r, witness


def verify_counts(n_max: int, r_max: int, mode: str = ROOTED) -> list[bounds.BoundReport]:
    """Run every enumeration-vs-bound check over the (n, r) grid.

    Per point: the counting chain |N_{n,r}| * r! <= (2(n+2r)-3)!! (or the
    unrooted analogue), the tight and relaxed network-count bounds, the
    displayed-tree bounds, codec injectivity, and the unit-automorphism
    property of labelled networks.
    """
    reports: list[bounds.BoundReport] = []
    for n in range(1, n_max + 1):
        for r in range(1, r_max + 1):
            if mode == UNROOTED and n + 2 * r < 3:
                continue
            nets = generate.enumerate_networks(n, r, mode)
            params = {"n": n, "r": r, "mode": mode}
            nb = bounds.network_count_bound(n, r, mode)
            df_arg = 2 * (n + 2 * r) - (3 if mode == ROOTED else 5)
            chain = len(nets) * math.factorial(r) <= bounds.double_factorial(df_arg)
            reports.append(bounds.BoundReport(
                "counting-chain", params,
                lhs=len(nets) * math.factorial(r),
                rhs=bounds.double_factorial(df_arg), holds=chain))
            tight_ok = len(nets) <= nb.tight
            relaxed_ok = nb.relaxed is None or nb.tight <= nb.relaxed
            reports.append(bounds.BoundReport(
                "network-count-bound", params, lhs=len(nets),
                rhs=(nb.tight, nb.relaxed), holds=tight_ok and relaxed_ok))

            disp_ok = True
            codec_images: set[bytes] = set()
            labelled_codes: set[bytes] = set()
            autos_ok = True
            for N in nets:
                shown = display.displayed_trees(N)
                if mode == ROOTED:
                    if len(shown) > 2 ** r:
                        disp_ok = False
                else:
                    st = len(generate.enumerate_switchings(N))
                    if len(shown) > st or st > math.comb(n + 3 * r - 3, r):
                        disp_ok = False
                    if len(N.edges) != 2 * n + 3 * r - 3:
                        disp_ok = False
                for lab in generate.all_reticulation_labellings(N):
                    # distinct labelled networks must encode to distinct trees
                    labelled_codes.add(canonical_code(N, lab).bytes)
                    codec_images.add(canonical_code(codec.encode_tau(N, lab)).bytes)
                    if automorphism_count(lab) != 1:
                        autos_ok = False
            reports.append(bounds.BoundReport(
                "displayed-trees-bound", params, lhs=None, rhs=None, holds=disp_ok))
            reports.append(bounds.BoundReport(
                "codec-injective", params, lhs=len(codec_images),
                rhs=len(labelled_codes), holds=len(codec_images) == len(labelled_codes)))
            reports.append(bounds.BoundReport(
                "unit-automorphism", params, lhs=None, rhs=None, holds=autos_ok))
    return reports
