import math
from fractions import Fraction

import pytest

import retnet as rn
from retnet import bounds, canonical, generate, model
from retnet.errors import BudgetExceeded
from retnet.model import ROOTED, UNROOTED


def test_tree_counts_match_double_factorials():
    for n in range(1, 8):
        assert len(generate.enumerate_trees(n, ROOTED)) == bounds.tree_count(n, ROOTED)
    for n in range(1, 8):
        assert len(generate.enumerate_trees(n, UNROOTED)) == bounds.tree_count(n, UNROOTED)


def test_enumeration_is_deterministic():
    a = generate.enumerate_trees(5, ROOTED)
    b = generate.enumerate_trees(5, ROOTED)
    assert a == b
    codes = [canonical.canonical_code(T) for T in a]
    assert codes == sorted(codes)


def test_networks_pass_validation():
    for mode, n, r in [(ROOTED, 3, 1), (ROOTED, 2, 2), (UNROOTED, 3, 2)]:
        nets = generate.enumerate_networks(n, r, mode)
        assert nets
        for N in nets:
            assert model.validate(N).ok
            assert model.reticulation_count(N) == r


def test_networks_pairwise_nonisomorphic():
    for mode, n, r in [(ROOTED, 3, 1), (UNROOTED, 3, 2)]:
        nets = generate.enumerate_networks(n, r, mode)
        codes = {canonical.canonical_code(N).bytes for N in nets}
        assert len(codes) == len(nets)


def test_unrooted_filter_keeps_only_leaf_connecting():
    strict = generate.enumerate_networks(4, 1, UNROOTED)
    loose = generate.enumerate_networks(4, 1, UNROOTED, leaf_connecting=False)
    assert set(N.edges for N in strict) <= set(N.edges for N in loose)
    for N in strict:
        assert model.is_leaf_connecting(N)


def test_budget_cap_raises():
    with pytest.raises(BudgetExceeded):
        generate.enumerate_networks(10, 4, ROOTED)


def test_rooted_switching_count_is_two_to_the_r(n6r4):
    assert len(generate.enumerate_switchings(n6r4)) == 2 ** 4
    for N in generate.enumerate_networks(3, 2, ROOTED):
        assert len(generate.enumerate_switchings(N)) == 4


def _spanning_tree_count_matrix_tree(N) -> int:
    """Kirchhoff determinant oracle, exact over Fractions."""
    m = N.num_nodes
    L = [[Fraction(0)] * m for _ in range(m)]
    for u, v in N.edges:
        L[u][u] += 1
        L[v][v] += 1
        L[u][v] -= 1
        L[v][u] -= 1
    M = [row[1:] for row in L[1:]]
    k = m - 1
    det = Fraction(1)
    for col in range(k):
        piv = next((i for i in range(col, k) if M[i][col] != 0), None)
        if piv is None:
            return 0
        if piv != col:
            M[col], M[piv] = M[piv], M[col]
            det = -det
        det *= M[col][col]
        for i in range(col + 1, k):
            f = M[i][col] / M[col][col]
            for j in range(col, k):
                M[i][j] -= f * M[col][j]
    assert det.denominator == 1
    return abs(int(det))


def test_unrooted_switchings_match_matrix_tree_count():
    for n, r in [(3, 1), (3, 2), (2, 2)]:
        for N in generate.enumerate_networks(n, r, UNROOTED):
            sws = generate.enumerate_switchings(N)
            assert len(sws) == _spanning_tree_count_matrix_tree(N)
            # each switching's kept edges really form a spanning tree
            for s in sws:
                kept = set(N.edges) - s.off_edges
                assert len(kept) == N.num_nodes - 1
                assert model._is_connected(N.num_nodes, kept)


def test_labellings_per_switching_is_r_factorial(n6r4):
    sigma = generate.fixed_switching(n6r4)
    labs = generate.reticulation_labellings(n6r4, sigma)
    assert len(labs) == math.factorial(4)
    for lab in labs:
        assert lab.switching() == sigma
        assert model.validate(lab).ok


def test_fixed_switching_is_isomorphism_invariant():
    import random
    from test_canonical import permuted

    rng = random.Random(3)
    for N in generate.enumerate_networks(3, 1, ROOTED)[:10]:
        perm = list(range(N.num_nodes))
        rng.shuffle(perm)
        M = permuted(N, perm)
        sN = generate.fixed_switching(N)
        sM = generate.fixed_switching(M)
        pos_n = canonical.canonical_positions(N)
        pos_m = canonical.canonical_positions(M)
        canon = lambda G, s, pos: sorted(
            tuple(sorted((pos[u], pos[v]))) for u, v in s.off_edges)
        assert canon(N, sN, pos_n) == canon(M, sM, pos_m)


def test_all_labellings_count(n6r4):
    total = sum(1 for _ in generate.all_reticulation_labellings(n6r4))
    assert total == 2 ** 4 * math.factorial(4)


def test_fixed_switching_count_identity():
    # |networks| * r! distinct labelled graphs from fixed switchings
    for mode, n, r in [(ROOTED, 3, 1), (ROOTED, 2, 2), (UNROOTED, 3, 2)]:
        nets = generate.enumerate_networks(n, r, mode)
        codes = set()
        for N in nets:
            sigma = generate.fixed_switching(N)
            for lab in generate.reticulation_labellings(N, sigma):
                codes.add(canonical.canonical_code(N, lab).bytes)
        assert len(codes) == len(nets) * math.factorial(r)
