"""
Exact and interval-certified counting bounds
============================================

Everything that can be compared as big integers is; what cannot (double
factorials of millions of terms) is compared through certified interval
enclosures of logarithms, with an exact fallback when an interval test
is inconclusive.  Nothing is ever decided by floating point alone.
"""

from fractions import Fraction

from retnet import (ROOTED, counting_lower_bound, formula_lower_bound,
                    network_count_bound, verify_math_lemmas)

# the supporting inequalities, checked across a parameter sweep
reports = verify_math_lemmas(64)
by_name = {}
for rep in reports:
    by_name.setdefault(rep.name, []).append(rep)
for name, reps in by_name.items():
    print(f"{name:28} {len(reps):>4} checks, all hold: {all(r.holds for r in reps)}")

# the two-sided network count bound at desk scale
b = network_count_bound(3, 2, ROOTED)
print("\n|N_{3,2}| <=", b.tight, "<=", b.relaxed)

# the closed-form reticulation lower bound, exact at powers of two
iv = formula_lower_bound(2 ** 16, 4, ROOTED)
print("\nformula_lower_bound(2^16, 4) =", iv.midpoint, "(exact:", iv.exact, ")")
assert iv.midpoint == Fraction(1572856, 22)

# the search-based bound dominates the formula wherever it is positive
for n in (2 ** 10, 2 ** 14, 2 ** 18):
    print(f"counting_lower_bound({n}, 4) = {counting_lower_bound(n, 4, ROOTED)}")
