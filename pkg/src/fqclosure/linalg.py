"""Gaussian elimination over GF(q) on integer-encoded numpy matrices.

Pivoting is deterministic: columns are scanned left to right and the first
row (from the current position down) with a nonzero entry is used.
"""

from __future__ import annotations

import numpy as np

from .fields import FiniteField

DEFAULT_MATRIX_CAP = 10**8


class MatrixTooLarge(ValueError):
    pass


def check_size(rows: int, cols: int, cap: int | None = None) -> None:
    cap = DEFAULT_MATRIX_CAP if cap is None else cap
    if rows * cols > cap:
        raise MatrixTooLarge(f"{rows} x {cols} matrix exceeds the cap of {cap} entries")


def rref(F: FiniteField, M) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and the list of pivot columns."""
    R = np.array(M, dtype=np.int64, copy=True)
    if R.ndim != 2:
        raise ValueError("expected a matrix")
    nrows, ncols = R.shape
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(R[r:, c])[0]
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            R[[r, k]] = R[[k, r]]
        R[r] = F.mul(R[r], F.inv(R[r, c]))
        col = R[:, c].copy()
        col[r] = 0
        rows = np.nonzero(col)[0]
        if rows.size:
            R[rows] = F.sub(R[rows], F.mul(col[rows, None], R[r][None, :]))
        pivots.append(c)
        r += 1
    return R, pivots


def rank(F: FiniteField, M) -> int:
    M = np.asarray(M)
    if M.size == 0:
        return 0
    # eliminate along the shorter side
    if M.shape[0] > M.shape[1]:
        M = M.T
    return _echelon_rank(F, M)


def _echelon_rank(F: FiniteField, M) -> int:
    R = np.array(M, dtype=np.int64, copy=True)
    nrows, ncols = R.shape
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(R[r:, c])[0]
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            R[[r, k]] = R[[k, r]]
        below = r + 1 + np.nonzero(R[r + 1 :, c])[0]
        if below.size:
            factor = F.div(R[below, c], R[r, c])
            R[below, c:] = F.sub(R[below, c:], F.mul(factor[:, None], R[r, c:][None, :]))
        r += 1
    return r


def nullspace(F: FiniteField, M, ncols: int | None = None) -> np.ndarray:
    """Canonical basis of ``{v : M v = 0}`` as the rows of a matrix.

    Each basis vector has a 1 in one non-pivot column f, zeros in every
    other non-pivot column, and support otherwise only on pivot columns
    left of f.  With columns sorted ascending in a monomial order this is
    the reduced (monic, leading-term-free) basis of the kernel.
    """
    M = np.asarray(M, dtype=np.int64)
    if ncols is None:
        ncols = M.shape[1]
    if M.size == 0:
        return np.eye(ncols, dtype=np.int64)
    R, pivots = rref(F, M)
    free = [c for c in range(ncols) if c not in set(pivots)]
    K = np.zeros((len(free), ncols), dtype=np.int64)
    for k, f in enumerate(free):
        K[k, f] = 1
        for r, pc in enumerate(pivots):
            if pc < f and R[r, f]:
                K[k, pc] = F.neg(R[r, f])
    return K


def matmul(F: FiniteField, A, B) -> np.ndarray:
    A = np.asarray(A, dtype=np.int64)
    B = np.asarray(B, dtype=np.int64)
    if A.shape[1] != B.shape[0]:
        raise ValueError("shape mismatch")
    if F.e == 1:
        p = F.p
        # chunk the inner dimension so partial sums stay inside int64
        step = max(1, (2**62) // max(1, (p - 1) ** 2))
        out = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
        for s in range(0, A.shape[1], step):
            out = (out + A[:, s : s + step] @ B[s : s + step]) % p
        return out
    out = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    for k in range(A.shape[1]):
        a = A[:, k]
        if not a.any():
            continue
        out = F.add(out, F.mul(a[:, None], B[k][None, :]))
    return out


class IncrementalBasis:
    """Fully reduced set of independent vectors, grown one vector at a time.

    Each stored vector has a pivot coordinate equal to 1 where every other
    stored vector is 0, so reducing a candidate is a single matrix product.
    """

    def __init__(self, F: FiniteField, length: int):
        self.F = F
        self.length = length
        self.rows = np.zeros((0, length), dtype=np.int64)
        self.pivots: list[int] = []

    def __len__(self) -> int:
        return len(self.pivots)

    def reduce(self, v) -> np.ndarray:
        v = np.asarray(v, dtype=np.int64)
        if not self.pivots:
            return v.copy()
        coeffs = v[self.pivots]
        return self.F.sub(v, matmul(self.F, coeffs[None, :], self.rows)[0])

    def add(self, v) -> bool:
        """Insert v if it is independent of the current span; report whether it was."""
        F = self.F
        w = self.reduce(v)
        nz = np.nonzero(w)[0]
        if nz.size == 0:
            return False
        piv = int(nz[0])
        w = F.mul(w, F.inv(w[piv]))
        if self.pivots:
            col = self.rows[:, piv].copy()
            hit = np.nonzero(col)[0]
            if hit.size:
                self.rows[hit] = F.sub(self.rows[hit], F.mul(col[hit, None], w[None, :]))
        self.rows = np.vstack([self.rows, w[None, :]])
        self.pivots.append(piv)
        return True
