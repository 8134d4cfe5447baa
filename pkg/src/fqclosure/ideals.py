"""Vanishing ideals of finite point sets and their affine Hilbert functions.

Everything goes through the evaluation matrix with multiplicity: rows are
indexed by (point, multi-index i with |i| < m), columns by the monomials of
degree <= d in ascending grlex order, and the entry is ``(D^i x^a)(point)``.
Its kernel is ``I^m(Y)_{<=d}`` and its rank is ``HF^m(Y, d)``.

:func:`standard_monomials` is a separate Buchberger-Moller style route to the
same numbers: it walks N^n in grlex order and keeps each monomial whose
evaluation column is independent of the ones kept so far.
"""

from __future__ import annotations

import csv
import io
import itertools
from dataclasses import dataclass, field
from math import comb
from typing import Iterable, Sequence

import numpy as np

from . import linalg
from .fields import FiniteField, field_from_json, grid
from .monomials import Exponent, Staircase, enumerate_monomials, exponents_of_degree
from .polynomials import Polynomial, multi_indices


class PointSet:
    """A deduplicated finite subset of F^n, stored in lexicographic order."""

    __slots__ = ("field", "n", "points", "_set")

    def __init__(self, field: FiniteField, n: int, points: Iterable[Sequence[int]] = ()):
        pts = set()
        for p in points:
            p = tuple(int(getattr(x, "value", x)) for x in p)
            if len(p) != n:
                raise ValueError(f"point {p} is not in dimension {n}")
            if any(not 0 <= x < field.q for x in p):
                raise ValueError(f"point {p} has coordinates outside {field}")
            pts.add(p)
        self.field = field
        self.n = n
        self.points = tuple(sorted(pts))
        self._set = frozenset(pts)

    @classmethod
    def whole_space(cls, field: FiniteField, n: int) -> PointSet:
        return cls(field, n, map(tuple, grid(field, n)))

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, p) -> bool:
        return tuple(p) in self._set

    def __eq__(self, other) -> bool:
        if not isinstance(other, PointSet):
            return NotImplemented
        return self.field == other.field and self.n == other.n and self._set == other._set

    def __hash__(self) -> int:
        return hash((self.field, self.n, self._set))

    def __repr__(self) -> str:
        return f"PointSet({self.field!r}, n={self.n}, {list(self.points)})"

    def _compatible(self, other: PointSet) -> None:
        if self.field != other.field or self.n != other.n:
            raise ValueError("point sets live in different ambient spaces")

    def __or__(self, other: PointSet) -> PointSet:
        self._compatible(other)
        return PointSet(self.field, self.n, self._set | other._set)

    def __and__(self, other: PointSet) -> PointSet:
        self._compatible(other)
        return PointSet(self.field, self.n, self._set & other._set)

    def __sub__(self, other: PointSet) -> PointSet:
        self._compatible(other)
        return PointSet(self.field, self.n, self._set - other._set)

    def __le__(self, other: PointSet) -> bool:
        self._compatible(other)
        return self._set <= other._set

    def issubset(self, other: PointSet) -> bool:
        return self <= other

    def array(self) -> np.ndarray:
        return np.array(self.points, dtype=np.int64).reshape(len(self.points), self.n)

    def to_json(self) -> dict:
        return {"field": self.field.to_json(), "n": self.n, "points": [list(p) for p in self.points]}

    @classmethod
    def from_json(cls, obj: dict) -> PointSet:
        F = field_from_json(obj["field"])
        pts = obj.get("points", [])
        n = obj.get("n")
        if n is None:
            if not pts:
                raise ValueError("n is required for an empty point set")
            n = len(pts[0])
        return cls(F, int(n), pts)


def _union_all(parts: Sequence[PointSet]) -> PointSet:
    out = parts[0]
    for p in parts[1:]:
        out = out | p
    return out


# -- evaluation matrices ------------------------------------------------------

def hasse_evaluation(
    F: FiniteField,
    points: np.ndarray,
    derivs: Sequence[Exponent],
    columns: Sequence[Exponent],
) -> np.ndarray:
    """Matrix of ``(D^i x^a)(p)``; rows ordered point-major then by ``derivs``."""
    points = np.asarray(points, dtype=np.int64)
    npts = points.shape[0]
    n = points.shape[1] if points.ndim == 2 else len(columns[0])
    if npts == 0 or not derivs or not columns:
        return np.zeros((npts * len(derivs), len(columns)), dtype=np.int64)
    A = np.array(columns, dtype=np.int64).reshape(len(columns), n)
    I = np.array(derivs, dtype=np.int64).reshape(len(derivs), n)
    maxa = int(A.max()) if A.size else 0
    pw = F.power_table(maxa)
    binom = np.zeros((maxa + 1, maxa + 1), dtype=np.int64)
    for a in range(maxa + 1):
        for i in range(a + 1):
            binom[i, a] = comb(a, i) % F.p
    out = np.ones((npts, len(derivs), len(columns)), dtype=np.int64)
    for j in range(n):
        aj = A[:, j][None, :]  # (1, cols)
        ij = I[:, j][:, None]  # (derivs, 1)
        valid = ij <= aj
        diff = np.where(valid, aj - ij, 0)
        coef = np.where(valid, binom[np.minimum(ij, maxa), aj], 0)  # (derivs, cols)
        powers = pw[points[:, j]][:, diff]  # (pts, derivs, cols)
        out = F.mul(out, F.mul(powers, coef[None, :, :]))
    return out.reshape(npts * len(derivs), len(columns))


def evaluation_matrix(
    Y: PointSet,
    d: int,
    m: int = 1,
    columns: Sequence[Exponent] | None = None,
    matrix_cap: int | None = None,
) -> np.ndarray:
    """Evaluation matrix of the degree <= d monomials with multiplicity m on Y."""
    if d < 0 or m < 1:
        raise ValueError("need d >= 0 and m >= 1")
    if columns is None:
        columns = enumerate_monomials(Y.n, d)
    derivs = multi_indices(Y.n, m)
    linalg.check_size(len(Y) * len(derivs), len(columns), matrix_cap)
    return hasse_evaluation(Y.field, Y.array(), derivs, columns)


# -- kernels and Hilbert functions --------------------------------------------

@dataclass
class IdealSlice:
    """A canonical basis of ``I^m(Y)_{<=d}``."""

    source: PointSet
    d: int
    m: int
    columns: list[Exponent]
    matrix: np.ndarray  # kernel vectors as rows over `columns`
    rank: int

    @property
    def basis(self) -> list[Polynomial]:
        return [Polynomial.from_vector(self.source.field, self.columns, row) for row in self.matrix]

    @property
    def dimension(self) -> int:
        return self.matrix.shape[0]

    def leading_exponents(self) -> list[Exponent]:
        out = []
        for row in self.matrix:
            nz = np.nonzero(row)[0]
            out.append(self.columns[int(nz[-1])])
        return out

    def to_json(self) -> dict:
        return {
            "source": self.source.to_json(),
            "d": self.d,
            "m": self.m,
            "rank": self.rank,
            "columns": [list(a) for a in self.columns],
            "basis": [P.to_json() for P in self.basis],
        }


def ideal_slice(Y: PointSet, d: int, m: int = 1, matrix_cap: int | None = None) -> IdealSlice:
    columns = enumerate_monomials(Y.n, d)
    E = evaluation_matrix(Y, d, m, columns=columns, matrix_cap=matrix_cap)
    if E.shape[0] == 0:
        K = np.eye(len(columns), dtype=np.int64)
        r = 0
    else:
        R, pivots = linalg.rref(Y.field, E)
        r = len(pivots)
        K = linalg.nullspace(Y.field, E, len(columns))
    return IdealSlice(Y, d, m, columns, K, r)


def hilbert_function(Y: PointSet, d: int, m: int = 1, matrix_cap: int | None = None) -> int:
    """``HF^m(Y, d)``: the rank of the evaluation matrix."""
    if len(Y) == 0:
        return 0
    return linalg.rank(Y.field, evaluation_matrix(Y, d, m, matrix_cap=matrix_cap))


def quotient_dimension(n: int, m: int, size: int) -> int:
    """``C(m+n-1, n) |Y|``, the stable value of ``HF^m(Y, .)``."""
    return comb(m + n - 1, n) * size


def stabilization_degree(q: int, n: int, m: int = 1) -> int:
    """A degree from which ``HF^m(Y, .)`` is constant for every Y in GF(q)^n."""
    return n * (q - 1) + (m - 1) * q


def standard_monomials(Y: PointSet, m: int = 1) -> Staircase:
    """Complement of the grlex initial ideal of ``I^m(Y)``.

    Monomials are visited in ascending grlex order and a monomial is kept when
    its multiplicity-evaluation column is independent of the columns already
    kept; the walk stops once ``C(m+n-1, n) |Y|`` monomials are kept.
    """
    target = quotient_dimension(Y.n, m, len(Y))
    kept: list[Exponent] = []
    if target == 0:
        return Staircase.of(Y.n, kept)
    derivs = multi_indices(Y.n, m)
    pts = Y.array()
    basis = linalg.IncrementalBasis(Y.field, len(pts) * len(derivs))
    cap = stabilization_degree(Y.field.q, Y.n, m)
    for k in itertools.count():
        if k > cap:  # pragma: no cover - unreachable for finite point sets
            raise RuntimeError("standard monomial search exceeded the stabilization degree")
        layer = exponents_of_degree(Y.n, k)
        cols = hasse_evaluation(Y.field, pts, derivs, layer)
        for a, col in zip(layer, cols.T):
            if basis.add(col):
                kept.append(a)
                if len(kept) == target:
                    return Staircase.of(Y.n, kept)
    raise AssertionError("unreachable")  # pragma: no cover


@dataclass
class HilbertProfile:
    source: PointSet
    m: int
    values: list[int] = field(default_factory=list)

    def to_json(self) -> dict:
        return {"source": self.source.to_json(), "m": self.m, "values": list(self.values)}

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["d", "value"])
        for d, v in enumerate(self.values):
            w.writerow([d, v])
        return buf.getvalue()


def hilbert_profile(Y: PointSet, m: int = 1, dmax: int = 0, matrix_cap: int | None = None) -> HilbertProfile:
    if dmax < 0:
        raise ValueError("dmax must be >= 0")
    return HilbertProfile(Y, m, [hilbert_function(Y, d, m, matrix_cap) for d in range(dmax + 1)])


@dataclass(frozen=True)
class SubadditivityReport:
    d: int
    union_value: int
    part_values: tuple[int, ...]

    @property
    def lhs(self) -> int:
        return self.union_value

    @property
    def rhs(self) -> int:
        return sum(self.part_values)

    @property
    def holds(self) -> bool:
        return self.lhs <= self.rhs


def union_subadditivity_check(parts: Sequence[PointSet], d: int) -> SubadditivityReport:
    """``HF(X_1 u ... u X_k, d) <= sum_i HF(X_i, d)``."""
    if not parts:
        raise ValueError("need at least one part")
    U = _union_all(list(parts))
    return SubadditivityReport(
        d, hilbert_function(U, d), tuple(hilbert_function(X, d) for X in parts)
    )
