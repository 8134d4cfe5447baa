"""
Monomials, grlex and staircases
===============================
"""

# %%
from fqclosure.monomials import (
    box_staircase,
    check_splus_growth,
    enumerate_monomials,
    grlex_compare,
    multiplicity_staircase,
    s_plus,
)

# Degree comes first, then the first differing exponent; x1 is the largest variable.
print(enumerate_monomials(2, 2))
print(grlex_compare((0, 2), (1, 1)))

# %%
# The box {0..q-1}^n are the standard monomials of the whole space.
# With multiplicity m the staircase has C(m+n-1, n) q^n elements.
for m in (1, 2, 3):
    S = multiplicity_staircase(2, 2, m)
    print(m, len(S), S.sorted()[:8], "...")
print(len(box_staircase(3, 2)))

# %%
# S+ adds every unit step. Its size grows at least as fast as a full simplex.
S = {(0, 0), (2, 0), (1, 1)}
print(sorted(s_plus(S)))
for d in range(4):
    r = check_splus_growth(S, d)
    print(d, r.lhs, "<=", r.rhs, r.holds)
