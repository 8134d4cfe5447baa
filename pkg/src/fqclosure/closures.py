"""Degree-d closures and multiplicity closures over GF(q)^n.

``closure(Y, d)`` is the common zero set of ``I(Y)_{<=d}``;
``multiplicity_closure(Y, d, l, m)`` is the set of points where every element
of ``I^m(Y)_{<=d}`` vanishes to order at least l.  Both are computed by
evaluating the canonical kernel basis (and its Hasse derivatives of order
< l) on every grid point; vanishing to a given order is linear in the
polynomial, so the basis suffices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

import numpy as np

from . import linalg
from .fields import grid
from .ideals import IdealSlice, PointSet, hasse_evaluation, hilbert_function, ideal_slice
from .polynomials import multi_indices

DEFAULT_GRID_CAP = 10**7
_CHUNK = 4096


class GridTooLarge(ValueError):
    pass


def check_grid(q: int, n: int, cap: int | None = None) -> None:
    cap = DEFAULT_GRID_CAP if cap is None else cap
    if q**n > cap:
        raise GridTooLarge(f"grid of {q}^{n} points exceeds the cap of {cap}")


@dataclass
class ClosureResult:
    input: PointSet
    d: int
    ell: int
    m: int
    output: PointSet
    kernel: IdealSlice

    def to_json(self) -> dict:
        return {
            "input": self.input.to_json(),
            "d": self.d,
            "ell": self.ell,
            "m": self.m,
            "output": [list(p) for p in self.output],
            "size": len(self.output),
            "kernel_rank": self.kernel.rank,
            "kernel_dimension": self.kernel.dimension,
        }


def vanishing_locus(kernel: IdealSlice, ell: int = 1, grid_cap: int | None = None) -> PointSet:
    """Grid points where every kernel vector vanishes to order >= ell."""
    Y = kernel.source
    F, n = Y.field, Y.n
    check_grid(F.q, n, grid_cap)
    pts = grid(F, n)
    if kernel.dimension == 0:
        return PointSet(F, n, map(tuple, pts))
    derivs = multi_indices(n, ell)
    KT = kernel.matrix.T
    keep = []
    for s in range(0, len(pts), _CHUNK):
        chunk = pts[s : s + _CHUNK]
        E = hasse_evaluation(F, chunk, derivs, kernel.columns)
        vals = linalg.matmul(F, E, KT).reshape(len(chunk), len(derivs) * KT.shape[1])
        keep.extend(map(tuple, chunk[~vals.any(axis=1)]))
    return PointSet(F, n, keep)


def closure(Y: PointSet, d: int, grid_cap: int | None = None, matrix_cap: int | None = None) -> ClosureResult:
    return multiplicity_closure(Y, d, 1, 1, grid_cap=grid_cap, matrix_cap=matrix_cap)


def multiplicity_closure(
    Y: PointSet,
    d: int,
    ell: int,
    m: int,
    grid_cap: int | None = None,
    matrix_cap: int | None = None,
) -> ClosureResult:
    if d < 0 or ell < 1 or m < 1:
        raise ValueError("need d >= 0, ell >= 1, m >= 1")
    check_grid(Y.field.q, Y.n, grid_cap)
    K = ideal_slice(Y, d, m, matrix_cap=matrix_cap)
    return ClosureResult(Y, d, ell, m, vanishing_locus(K, ell, grid_cap), K)


@dataclass
class AxiomsReport:
    d: int
    extensive: bool
    monotone: bool | None  # None when X is not a subset of Y
    idempotent: bool
    hilbert_agreement: bool
    details: dict = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return self.extensive and self.monotone is not False and self.idempotent and self.hilbert_agreement


def closure_axioms_check(X: PointSet, Y: PointSet, d: int) -> AxiomsReport:
    """Check the closure-operator laws for cl_d on X (and X <= Y), and that
    ``HF(cl_d(X), e) == HF(X, e)`` for every e <= d."""
    cX = closure(X, d).output
    extensive = X <= cX
    monotone = None
    if X <= Y:
        monotone = cX <= closure(Y, d).output
    idempotent = closure(cX, d).output == cX
    hx = [hilbert_function(X, e) for e in range(d + 1)]
    hc = [hilbert_function(cX, e) for e in range(d + 1)]
    return AxiomsReport(
        d, extensive, monotone, idempotent, hx == hc,
        {"closure_size": len(cX), "hf_input": hx, "hf_closure": hc},
    )


@dataclass(frozen=True)
class WholeSpaceReport:
    d: int
    whole_space: bool
    needed: int  # C(d+n, n)
    size: int  # |X|

    @property
    def holds(self) -> bool:
        return (not self.whole_space) or self.needed <= self.size


def whole_space_degree_check(X: PointSet, d: int) -> WholeSpaceReport:
    """If ``cl_d(X)`` is all of GF(q)^n (with d < q), then ``C(d+n, n) <= |X|``."""
    q, n = X.field.q, X.n
    if not d < q:
        raise ValueError("requires d < q")
    whole = len(closure(X, d).output) == q**n
    return WholeSpaceReport(d, whole, comb(d + n, n), len(X))
