"""
Enumerating binary phylogenetic trees
=====================================

Rooted binary trees on n labelled leaves number (2n-3)!!, unrooted ones
(2n-5)!!.  The enumerator builds every tree by leaf insertion, so we can
check the closed forms directly.
"""

from retnet import ROOTED, UNROOTED, double_factorial, enumerate_trees
from retnet.serialize import tree_to_newick

print("n   rooted (2n-3)!!   unrooted (2n-5)!!")
for n in range(2, 8):
    r = len(enumerate_trees(n, ROOTED))
    u = len(enumerate_trees(n, UNROOTED))
    assert r == double_factorial(2 * n - 3)
    assert u == double_factorial(2 * n - 5)
    print(f"{n}   {r:>6} {double_factorial(2*n-3):>9}   {u:>8} {double_factorial(2*n-5):>9}")

# the n = 4 rooted trees, in canonical order
print()
for T in enumerate_trees(4, ROOTED):
    print(" ", tree_to_newick(T))
