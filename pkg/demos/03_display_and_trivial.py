"""
Displayed trees and the trivial network
=======================================

Each switching of a rooted network (one "on" parent edge per
reticulation) certifies one displayed tree, so a network with r
reticulations displays at most 2^r trees.  Conversely, any t trees on
the same leaves are displayed by the trivial network, which glues the
disjoint trees under a caterpillar and merges like-labelled leaves
through (t-1)n reticulations.
"""

from retnet import ROOTED, displays, displayed_trees, trivial_network
from retnet.generate import enumerate_switchings
from retnet.model import reticulation_count, tree_set
from retnet.serialize import enewick_to_network, network_to_enewick, tree_to_newick

N = enewick_to_network("((1,((2)#H1,(3)#H2)),(#H1,#H2));")
print("network:", network_to_enewick(N))
print("switchings:", len(enumerate_switchings(N)))
for T in displayed_trees(N):
    print("  displays", tree_to_newick(T))

# trivial network for two specific trees on 4 leaves
from retnet.serialize import newick_to_tree

a = newick_to_tree("((1,2),(3,4));", ROOTED)
b = newick_to_tree("(1,(2,(3,4)));", ROOTED)
ts = tree_set([a, b])
M = trivial_network(ts)
print("\ntrivial network for 2 trees on 4 leaves:")
print(" ", network_to_enewick(M))
print("  reticulations:", reticulation_count(M), "(= (t-1)n =", (2 - 1) * 4, ")")
for T in ts.trees:
    shown, witness = displays(M, T)
    print("  displays", tree_to_newick(T), "->", shown)
    assert shown
