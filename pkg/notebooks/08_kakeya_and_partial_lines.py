"""
Statistical Kakeya and unions of partial lines
==============================================
"""

# %%
import math

from fqclosure.bounds import (
    verify_multiplicity_closure_bound,
    verify_partial_lines_corollaries,
    verify_schwartz_zippel_mult,
    verify_statistical_kakeya,
)
from fqclosure.fields import GF
from fqclosure.generators import CurveSpec, curve_points, nikodym_instance, partial_lines_instance
from fqclosure.ideals import PointSet
from fqclosure.reporting import report_emit

reports = []
for q in (3, 5, 7):
    b = nikodym_instance(GF(q), 2, math.ceil(q / 2), seed=q)
    reports.append(verify_statistical_kakeya(b))
print(report_emit(reports, "csv"))

# %%
b = partial_lines_instance(GF(7), 2, count=6, tau=4, seed=1)
print(report_emit(list(verify_partial_lines_corollaries(b)), "csv"))

# %%
# Schwartz-Zippel along a parabola: 3 points, order-2 vanishing, d = 2
F = GF(5)
spec = CurveSpec(F, ((0, 1), (0, 0, 1)), 2)
X = PointSet(F, 2, curve_points(spec).points[:3])
r = verify_schwartz_zippel_mult(X, spec, 2, 1, 2)
print("missing curve points:", r.lhs, "applicable:", r.applicable)

# %%
print(verify_multiplicity_closure_bound(X, 4, 1, 2).to_json()["checks"])
