"""
Affine Hilbert functions of point sets
======================================

HF(Y, d) is the rank of the matrix that evaluates all monomials of degree
at most d on Y. With multiplicity m, Hasse derivatives of order below m are
evaluated as well.
"""

# %%
from math import comb

from fqclosure.fields import GF
from fqclosure.ideals import PointSet, hilbert_profile, ideal_slice, standard_monomials

F = GF(3)
diag = PointSet(F, 2, [(0, 0), (1, 1), (2, 2)])
print(hilbert_profile(diag, dmax=4).values)

# %%
# The kernel basis of I(Y) in degree <= 1 is the single line x1 - x2.
print(ideal_slice(diag, 1).basis)

# %%
# Counting standard monomials up to degree d gives the Hilbert function again.
S = standard_monomials(diag)
print(S.sorted(), [S.count_le(d) for d in range(5)])

# %%
# With multiplicity m the profile stabilises at C(m+n-1, n) |Y|.
Y = PointSet(GF(5), 2, [(0, 0), (1, 3)])
for m in (1, 2, 3):
    prof = hilbert_profile(Y, m=m, dmax=2 * 4 + (m - 1) * 5).values
    print(m, prof[-1], comb(m + 1, 2) * len(Y), prof)
