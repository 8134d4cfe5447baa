"""
Verifying the size and closure bounds
=====================================
"""

# %%
from fqclosure.bounds import (
    exhaustive_sweep,
    fkg_check,
    size_bound_fkg_instance,
    verify_closure_bound,
    verify_product_closure_bound,
    verify_size_bound,
)
from fqclosure.fields import GF
from fqclosure.ideals import PointSet
from fqclosure.reporting import report_emit

F = GF(3)
Y = PointSet(F, 2, [(0, 0), (1, 1)])
print(report_emit([verify_size_bound(Y, d) for d in range(5)], "csv"))
print(report_emit([verify_closure_bound(Y, d) for d in range(5)], "csv"))

# %%
# The size bound comes from the FKG inequality applied to indicator functions on the box.
rep = fkg_check(size_bound_fkg_instance(Y, 1))
print(rep.to_json())

# %%
# Every subset of GF(3)^2, every d up to 4
s = exhaustive_sweep(F, 2, range(5), "closure-bound")
print(s.instances, "instances,", len(s.violations), "violations; tightest:", s.worst.witness)

# %%
# Product sets. Counting closure points inside E keeps the bound true.
# Counting the whole closure can break it.
r = verify_product_closure_bound([[0, 1], [0, 1]], Y, 1)
print(r.lhs, "<=", r.rhs, "| whole closure:", r.extras["full_closure_lhs"], "<=", r.rhs, r.extras["full_closure_holds"])
