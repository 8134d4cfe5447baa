"""Exponent vectors in N^n, graded lexicographic order and staircases.

Exponents are plain tuples of non-negative ints.  A staircase is a finite set
of exponents; the interesting ones are lower sets (standard-monomial
diagrams), e.g. the q-box ``{0..q-1}^n`` of GF(q)^n.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb
from typing import Iterable, Sequence

Exponent = tuple[int, ...]


def degree(a: Sequence[int]) -> int:
    return sum(a)


def grlex_key(a: Sequence[int]) -> tuple:
    """Sort key: total degree first, ties broken lexicographically.

    With this key ``x_1`` is the largest variable: among equal-degree
    exponents the one with the larger first differing entry sorts later.
    """
    return (sum(a), tuple(a))


def grlex_compare(a: Sequence[int], b: Sequence[int]) -> int:
    """Return -1, 0 or 1 as a is less than, equal to or greater than b."""
    if len(a) != len(b):
        raise ValueError(f"dimension mismatch: {len(a)} vs {len(b)}")
    ka, kb = grlex_key(a), grlex_key(b)
    return (ka > kb) - (ka < kb)


def exponents_of_degree(n: int, d: int) -> list[Exponent]:
    """All exponents of N^n with |a| == d, in ascending grlex order."""
    if n == 0:
        return [()] if d == 0 else []
    out = []
    # lexicographic ascending: first coordinate ascending
    for first in range(d + 1):
        for rest in exponents_of_degree(n - 1, d - first):
            out.append((first,) + rest)
    return out


def enumerate_monomials(n: int, d: int, box: Sequence[int] | None = None) -> list[Exponent]:
    """Exponents with ``|a| <= d`` (and ``a_i <= box[i]``), ascending in grlex."""
    if d < 0:
        return []
    out = []
    for k in range(d + 1):
        for a in exponents_of_degree(n, k):
            if box is None or all(ai <= bi for ai, bi in zip(a, box)):
                out.append(a)
    return out


def count_monomials(n: int, d: int) -> int:
    """Number of monomials in n variables of degree at most d."""
    return comb(d + n, n) if d >= 0 else 0


def iter_grlex(n: int) -> Iterable[Exponent]:
    """All of N^n in ascending grlex order (infinite)."""
    for k in itertools.count():
        yield from exponents_of_degree(n, k)


@dataclass(frozen=True)
class Staircase:
    n: int
    members: frozenset

    def __post_init__(self):
        for a in self.members:
            if len(a) != self.n or min(a, default=0) < 0:
                raise ValueError(f"bad exponent {a} for n={self.n}")

    @classmethod
    def of(cls, n: int, members: Iterable[Sequence[int]]) -> Staircase:
        return cls(n, frozenset(tuple(int(x) for x in a) for a in members))

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.sorted())

    def __contains__(self, a) -> bool:
        return tuple(a) in self.members

    def sorted(self) -> list[Exponent]:
        return sorted(self.members, key=grlex_key)

    def count_le(self, d: int) -> int:
        return staircase_count_le(self, d)

    def to_json(self) -> list:
        return [list(a) for a in self.sorted()]

    @classmethod
    def from_json(cls, obj: list, n: int | None = None) -> Staircase:
        if n is None:
            if not obj:
                raise ValueError("cannot infer n from an empty staircase")
            n = len(obj[0])
        return cls.of(n, obj)


def box_staircase(q: int, n: int) -> Staircase:
    """The lower set ``{0, ..., q-1}^n``."""
    if q < 2:
        raise ValueError("q must be >= 2")
    return Staircase.of(n, itertools.product(range(q), repeat=n))


def multiplicity_staircase(q: int, n: int, m: int) -> Staircase:
    """Exponents a with ``sum(a_j // q) <= m - 1``; there are C(m+n-1, n) q^n of them."""
    if q < 2 or m < 1:
        raise ValueError("need q >= 2 and m >= 1")
    members = []
    for blocks in itertools.product(range(m), repeat=n):
        if sum(blocks) > m - 1:
            continue
        for r in itertools.product(range(q), repeat=n):
            members.append(tuple(b * q + ri for b, ri in zip(blocks, r)))
    return Staircase.of(n, members)


def staircase_count_le(S: Staircase | Iterable[Sequence[int]], d: int) -> int:
    """``|S_{<=d}|``."""
    members = S.members if isinstance(S, Staircase) else S
    return sum(1 for a in members if sum(a) <= d)


def s_plus(S: Iterable[Sequence[int]]) -> set[Exponent]:
    """S together with its n unit-vector translates."""
    out = set()
    for a in S:
        a = tuple(a)
        out.add(a)
        for i in range(len(a)):
            out.add(a[:i] + (a[i] + 1,) + a[i + 1 :])
    return out


@dataclass(frozen=True)
class GrowthReport:
    n: int
    d: int
    lhs: int  # (n+d+1) |S_{<=d}|
    rhs: int  # (d+1) |(S+)_{<=d+1}|

    @property
    def holds(self) -> bool:
        return self.lhs <= self.rhs


def check_splus_growth(S: Iterable[Sequence[int]], d: int, n: int | None = None) -> GrowthReport:
    """Exact check of ``(d+1)|(S+)_{<=d+1}| >= (n+d+1)|S_{<=d}|``."""
    S = {tuple(a) for a in S}
    if n is None:
        if not S:
            raise ValueError("n is required for an empty set")
        n = len(next(iter(S)))
    small = staircase_count_le(S, d)
    grown = staircase_count_le(s_plus(S), d + 1)
    return GrowthReport(n=n, d=d, lhs=(n + d + 1) * small, rhs=(d + 1) * grown)


def is_lower_set(S: Staircase | Iterable[Sequence[int]]) -> bool:
    members = S.members if isinstance(S, Staircase) else {tuple(a) for a in S}
    for a in members:
        for i, ai in enumerate(a):
            if ai > 0 and a[:i] + (ai - 1,) + a[i + 1 :] not in members:
                return False
    return True


def is_upper_set(S: Staircase | Iterable[Sequence[int]], box: Sequence[int]) -> bool:
    """Upward closure of S inside the box ``prod {0..box_i}``."""
    members = S.members if isinstance(S, Staircase) else {tuple(a) for a in S}
    for a in members:
        for i, ai in enumerate(a):
            if ai < box[i] and a[:i] + (ai + 1,) + a[i + 1 :] not in members:
                return False
    return True


def lower_set_growth_holds(S: Staircase | Iterable[Sequence[int]], m1: int, m2: int, n: int) -> bool:
    """``|S_{<=m1}| C(n+m2, n) <= |S_{<=m2}| C(n+m1, n)`` for m1 >= m2."""
    return staircase_count_le(S, m1) * comb(n + m2, n) <= staircase_count_le(S, m2) * comb(n + m1, n)
