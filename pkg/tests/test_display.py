import random

import pytest

import retnet as rn
from retnet import display, generate, model, serialize
from retnet.errors import LeafsetMismatch, SwitchingMismatch
from retnet.model import ROOTED, UNROOTED


def test_each_switching_displays_one_tree(n6r4):
    for sigma in generate.enumerate_switchings(n6r4):
        T = display.displayed_tree(n6r4, sigma)
        assert model.validate(T).ok
        assert sorted(model.leaf_map(T).values()) == [1, 2, 3, 4, 5, 6]


def test_worked_example_displays_expected_tree(n6r4):
    want = serialize.newick_to_tree("(1,(2,(((4,5),3),6)));", ROOTED)
    ok, witness = display.displays(n6r4, want)
    assert ok
    assert display.displayed_tree(n6r4, witness) == model.as_phylo_tree(want) or \
        rn.are_isomorphic(display.displayed_tree(n6r4, witness), want)


def test_displayed_trees_bounded_by_switchings(n6r4):
    ts = display.displayed_trees(n6r4)
    assert 1 <= len(ts) <= 2 ** 4
    codes = {rn.canonical_code(T).bytes for T in ts}
    assert len(codes) == len(ts)


def test_displays_rejects_wrong_leafset(n6r4):
    T = generate.enumerate_trees(5, ROOTED)[0]
    with pytest.raises(LeafsetMismatch):
        display.displays(n6r4, T)


def test_switching_host_mismatch(n6r4):
    other = generate.enumerate_networks(3, 1, ROOTED)[0]
    sigma = generate.fixed_switching(other)
    with pytest.raises(SwitchingMismatch):
        display.displayed_tree(n6r4, sigma)


def test_unrooted_display_by_spanning_tree():
    for N in generate.enumerate_networks(3, 2, UNROOTED):
        ts = display.displayed_trees(N)
        assert ts
        for T in ts:
            ok, _ = display.displays(N, T)
            assert ok


def test_switching_and_subdivision_oracles_agree_sample():
    # exhaustive cross-check lives in the acceptance suite; spot-check here
    trees = generate.enumerate_trees(3, ROOTED)
    for N in generate.enumerate_networks(3, 1, ROOTED)[:8]:
        for T in trees:
            ok, _ = display.displays(N, T)
            assert ok == display.displays_by_subdivision(N, T)


def test_trivial_network_two_trees():
    trees = generate.enumerate_trees(4, ROOTED)
    ts = model.tree_set([trees[0], trees[7]])
    N = display.trivial_network(ts)
    assert model.validate(N).ok
    assert model.reticulation_count(N) == (2 - 1) * 4
    for T in ts.trees:
        ok, _ = display.displays(N, T)
        assert ok


def test_trivial_network_three_trees_seeded():
    rng = random.Random(11)
    pool = generate.enumerate_trees(5, ROOTED)
    ts = model.tree_set(rng.sample(pool, 3))
    N = display.trivial_network(ts)
    assert model.validate(N).ok
    assert model.reticulation_count(N) == (ts.t - 1) * 5
    for T in ts.trees:
        ok, _ = display.displays(N, T)
        assert ok


def test_trivial_network_single_tree_is_tree():
    T = generate.enumerate_trees(4, ROOTED)[0]
    N = display.trivial_network(model.tree_set([T]))
    assert model.reticulation_count(N) == 0
    assert rn.are_isomorphic(N, T)


def test_find_embedding_witnesses_display(n6r4):
    T = display.displayed_trees(n6r4)[0]
    emb = display.find_embedding(n6r4, T)
    assert emb is not None
