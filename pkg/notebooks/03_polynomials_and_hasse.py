"""
Polynomials, Hasse derivatives and vanishing order
==================================================
"""

# %%
from fqclosure.fields import GF
from fqclosure.polynomials import Polynomial, hasse_derivative, order_at, substitute_curve

F = GF(3)
x = Polynomial.variable(F, 2, 0)
y = Polynomial.variable(F, 2, 1)
P = (x - y) ** 2 * (x + 1)
print("P =", P)

# %%
# Hasse derivatives survive in characteristic p: D^(3) x^3 = 1 although d^3/dx^3 x^3 = 6 = 0.
print(hasse_derivative(x**3, (3, 0)))
print([hasse_derivative(P, i) for i in [(1, 0), (0, 1), (1, 1)]])

# %%
# P vanishes to order 2 along the diagonal and to order 3 at (2, 2).
for pt in [(0, 0), (1, 1), (2, 2), (0, 1)]:
    print(pt, order_at(P, pt))

# %%
# restriction to the parabola t -> (t, t^2)
t = Polynomial.variable(F, 1, 0)
print(substitute_curve(P, [t, t * t]))
