"""
Degree-d closures
=================

cl_d(Y) is the common zero set of all polynomials of degree at most d that
vanish on Y. The multiplicity version keeps the points where every
polynomial vanishing to order m on Y vanishes to order at least l.
"""

# %%
from fqclosure.closures import closure, closure_axioms_check, multiplicity_closure
from fqclosure.fields import GF
from fqclosure.generators import line
from fqclosure.ideals import PointSet

F = GF(5)
L = line(F, (0, 1), (1, 2))
two = PointSet(F, 2, L.points[:2])
for d in range(4):
    print(d, len(closure(two, d).output))

# %%
# d + 1 points on a line force the whole line into cl_d.
for d in range(5):
    pts = PointSet(F, 2, L.points[: d + 1])
    print(d, L <= closure(pts, d).output)

# %%
# Asking for vanishing to order 2 on three collinear points pushes the
# closure out to the whole line even at d = 5 >= 3.
three = PointSet(F, 2, L.points[:3])
print(len(multiplicity_closure(three, 5, 1, 2).output), len(closure(three, 5).output))

# %%
print(closure_axioms_check(two, three, 2))
