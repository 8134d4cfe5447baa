"""Sparse multivariate polynomials over a finite field.

A :class:`Polynomial` maps exponent tuples to nonzero coefficient encodings.
Hasse derivatives are computed termwise:

    D^i x^a = prod_j C(a_j, i_j) x^(a - i)      (zero if some i_j > a_j)

with the binomials reduced mod p, so the Taylor identity
``P(x + t) = sum_i (D^i P)(x) t^i`` holds in every characteristic.
"""

from __future__ import annotations

import math
from math import comb
from typing import Iterable, Mapping, Sequence

import numpy as np

from .fields import FieldElement, FiniteField
from .monomials import Exponent, enumerate_monomials, grlex_key


class Polynomial:
    __slots__ = ("field", "n", "terms")

    def __init__(self, field: FiniteField, n: int, terms: Mapping[Sequence[int], int] | None = None):
        self.field = field
        self.n = n
        clean: dict[Exponent, int] = {}
        for a, c in (terms or {}).items():
            a = tuple(int(x) for x in a)
            if len(a) != n or min(a, default=0) < 0:
                raise ValueError(f"bad exponent {a} for n={n}")
            c = int(c.value if isinstance(c, FieldElement) else c)
            if not 0 <= c < field.q:
                raise ValueError(f"coefficient {c} out of range for {field}")
            if c:
                clean[a] = int(field.add(clean.get(a, 0), c))
                if clean[a] == 0:
                    del clean[a]
        self.terms = clean

    # construction helpers
    @classmethod
    def zero(cls, field: FiniteField, n: int) -> Polynomial:
        return cls(field, n)

    @classmethod
    def constant(cls, field: FiniteField, n: int, c: int) -> Polynomial:
        return cls(field, n, {(0,) * n: c})

    @classmethod
    def monomial(cls, field: FiniteField, a: Sequence[int], c: int = 1) -> Polynomial:
        return cls(field, len(a), {tuple(a): c})

    @classmethod
    def variable(cls, field: FiniteField, n: int, i: int) -> Polynomial:
        a = [0] * n
        a[i] = 1
        return cls.monomial(field, a)

    @classmethod
    def from_vector(cls, field: FiniteField, columns: Sequence[Exponent], vec) -> Polynomial:
        """Polynomial with coefficient ``vec[k]`` on monomial ``columns[k]``."""
        n = len(columns[0]) if columns else 0
        return cls(field, n, {a: int(c) for a, c in zip(columns, vec) if c})

    def to_vector(self, columns: Sequence[Exponent]) -> np.ndarray:
        index = {a: k for k, a in enumerate(columns)}
        v = np.zeros(len(columns), dtype=np.int64)
        for a, c in self.terms.items():
            if a not in index:
                raise ValueError(f"monomial {a} not among the columns")
            v[index[a]] = c
        return v

    # basic properties
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> float:
        """Total degree; ``-inf`` for the zero polynomial."""
        if not self.terms:
            return -math.inf
        return max(sum(a) for a in self.terms)

    @property
    def leading_exponent(self) -> Exponent | None:
        if not self.terms:
            return None
        return max(self.terms, key=grlex_key)

    def coefficient(self, a: Sequence[int]) -> int:
        return self.terms.get(tuple(a), 0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.field == other.field and self.n == other.n and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.field, self.n, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for a in sorted(self.terms, key=grlex_key, reverse=True):
            mono = "*".join(
                f"x{i + 1}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(a) if e
            )
            c = self.terms[a]
            parts.append(mono if c == 1 and mono else (f"{c}*{mono}" if mono else f"{c}"))
        return " + ".join(parts)

    # arithmetic
    def _check(self, other: Polynomial) -> None:
        if self.field != other.field or self.n != other.n:
            raise ValueError("polynomials over different rings")

    def _coerce(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, FieldElement):
            return Polynomial.constant(self.field, self.n, other.value)
        if isinstance(other, (int, np.integer)):
            return Polynomial.constant(self.field, self.n, self.field.scalar(int(other)))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        F = self.field
        for a, c in other.terms.items():
            terms[a] = int(F.add(terms.get(a, 0), c))
        return Polynomial(F, self.n, terms)

    __radd__ = __add__

    def __neg__(self):
        F = self.field
        return Polynomial(F, self.n, {a: int(F.neg(c)) for a, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        F = self.field
        terms: dict[Exponent, int] = {}
        for a, c in self.terms.items():
            for b, d in other.terms.items():
                ab = tuple(x + y for x, y in zip(a, b))
                terms[ab] = int(F.add(terms.get(ab, 0), F.mul(c, d)))
        return Polynomial(F, self.n, terms)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = Polynomial.constant(self.field, self.n, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __call__(self, point) -> FieldElement:
        return evaluate(self, point)

    def to_json(self) -> list:
        return [
            {"exp": list(a), "coef": self.terms[a]}
            for a in sorted(self.terms, key=grlex_key)
        ]

    @classmethod
    def from_json(cls, field: FiniteField, obj: list, n: int | None = None) -> Polynomial:
        if n is None:
            if not obj:
                raise ValueError("n is required for the zero polynomial")
            n = len(obj[0]["exp"])
        return cls(field, n, {tuple(t["exp"]): int(t["coef"]) for t in obj})


def _coords(P: Polynomial, point) -> list[int]:
    vals = [int(v.value if isinstance(v, FieldElement) else v) for v in point]
    if len(vals) != P.n:
        raise ValueError(f"point of dimension {len(vals)} for a polynomial in {P.n} variables")
    for v in point:
        if isinstance(v, FieldElement) and v.field != P.field:
            raise ValueError("point and polynomial live over different fields")
    if any(not 0 <= v < P.field.q for v in vals):
        raise ValueError("coordinate out of range")
    return vals


def evaluate(P: Polynomial, point) -> FieldElement:
    """Value of P at a point given as a sequence of encodings or FieldElements."""
    F = P.field
    x = _coords(P, point)
    total = 0
    for a, c in P.terms.items():
        term = c
        for xi, ai in zip(x, a):
            if ai:
                term = F.mul(term, F.power(xi, ai))
        total = F.add(total, term)
    return FieldElement(F, int(total))


def evaluate_many(P: Polynomial, points: np.ndarray) -> np.ndarray:
    """Vectorised evaluation at the rows of an integer array of points."""
    F = P.field
    points = np.asarray(points, dtype=np.int64).reshape(-1, P.n)
    out = np.zeros(len(points), dtype=np.int64)
    if not P.terms:
        return out
    maxdeg = max(max(a, default=0) for a in P.terms)
    pw = F.power_table(maxdeg)
    for a, c in P.terms.items():
        term = np.full(len(points), c, dtype=np.int64)
        for j, aj in enumerate(a):
            if aj:
                term = F.mul(term, pw[points[:, j], aj])
        out = F.add(out, term)
    return out


def hasse_coefficient(F: FiniteField, a: Sequence[int], i: Sequence[int]) -> int:
    """Encoding of ``prod_j C(a_j, i_j)`` in F (zero when some i_j > a_j)."""
    c = 1
    for aj, ij in zip(a, i):
        if ij > aj:
            return 0
        c = c * comb(aj, ij) % F.p
        if c == 0:
            return 0
    return c


def hasse_derivative(P: Polynomial, i: Sequence[int]) -> Polynomial:
    i = tuple(i)
    if len(i) != P.n:
        raise ValueError("multi-index dimension mismatch")
    F = P.field
    terms: dict[Exponent, int] = {}
    for a, c in P.terms.items():
        b = hasse_coefficient(F, a, i)
        if b:
            ai = tuple(x - y for x, y in zip(a, i))
            terms[ai] = int(F.add(terms.get(ai, 0), F.mul(c, b)))
    return Polynomial(F, P.n, terms)


def multi_indices(n: int, below: int) -> list[Exponent]:
    """Multi-indices i with ``|i| < below``, ascending in grlex."""
    return enumerate_monomials(n, below - 1)


def order_at(P: Polynomial, point, cap: int | None = None) -> float:
    """Order of vanishing of P at a point.

    Returns ``inf`` for the zero polynomial.  Derivatives of order ``< cap``
    are probed; a return value equal to ``cap`` means "at least cap".  The
    default cap, ``deg P + 1``, always yields the exact order.
    """
    if P.is_zero():
        return math.inf
    if cap is None:
        cap = int(P.degree) + 1
    if cap < 1:
        raise ValueError("cap must be >= 1")
    x = _coords(P, point)
    for i in multi_indices(P.n, cap):
        if evaluate(hasse_derivative(P, i), x).value:
            return sum(i)
    return cap


def vanishes_to_order(P: Polynomial, point, m: int) -> bool:
    """True iff every Hasse derivative of order < m vanishes at the point."""
    return order_at(P, point, cap=m) >= m


def substitute_curve(P: Polynomial, components: Sequence[Polynomial]) -> Polynomial:
    """Univariate polynomial ``P(C_1(t), ..., C_n(t))``."""
    if len(components) != P.n:
        raise ValueError("need one component per variable")
    F = P.field
    out = Polynomial.zero(F, 1)
    for a, c in P.terms.items():
        term = Polynomial.constant(F, 1, c)
        for Cj, aj in zip(components, a):
            if aj:
                term = term * Cj**aj
        out = out + term
    return out


def random_polynomial(F: FiniteField, n: int, d: int, rng: np.random.Generator, density: float = 0.5) -> Polynomial:
    cols = enumerate_monomials(n, d)
    terms = {}
    for a in cols:
        if rng.random() < density:
            terms[a] = int(rng.integers(1, F.q))
    return Polynomial(F, n, terms)


def polynomials_from_matrix(F: FiniteField, columns: Sequence[Exponent], rows: Iterable) -> list[Polynomial]:
    return [Polynomial.from_vector(F, columns, r) for r in rows]
