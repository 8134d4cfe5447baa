"""
Arithmetic in GF(p^e)
=====================

Elements are plain ints. For an extension field the base-p digits of the
int are the coefficients of a polynomial modulo a fixed irreducible.
"""

# %%
import numpy as np

from fqclosure.fields import GF, field_from_order

F4 = GF(2, 2)
print(F4, "modulus (low to high):", F4.modulus)

# %% [markdown]
# Multiplication table of GF(4). The element 2 is x, and 3 is x + 1.

# %%
a, b = np.meshgrid(np.arange(4), np.arange(4), indexing="ij")
print(F4.mul(a, b))

# %%
# operations are vectorised over numpy arrays
F9 = field_from_order(9)
x = np.arange(9)
print("inverses in GF(9):", F9.inv(x[1:]))
print("Frobenius x -> x^3:", [int(F9.power(int(v), 3)) for v in x])

# %%
# FieldElement wraps an int for readable scalar code
u = F9(5)
print(u, u * u.inverse(), u**9 == u)
