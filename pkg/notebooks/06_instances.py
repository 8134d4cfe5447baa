"""
Generated instances
===================
"""

# %%
from fqclosure.fields import GF
from fqclosure.generators import CurveSpec, curve_points, nikodym_instance, partial_lines_instance, product_set

F = GF(7)
parabola = CurveSpec(F, ((0, 1), (3, 0, 1)), 2)
print(curve_points(parabola).points)

# %%
b = partial_lines_instance(F, 2, count=5, tau=4, seed=3)
print(len(b.X), "points on", len(b.curves), "lines;", len(b.Y), "sampled")

# %%
# a Nikodym-style set: one random line through every point of the plane
nik = nikodym_instance(GF(5), 2, tau=3, seed=0)
print(len(nik.X), len(nik.Y))

# %%
print(product_set(GF(5), [[0, 1], [1, 2, 4]]).points)
