"""Instance builders: lines, low-degree curves, partial-line unions,
Nikodym-style sets and product sets.

Randomised builders take an explicit seed and draw from
``numpy.random.default_rng(seed)`` (PCG64), so equal parameters give equal
instances.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .closures import check_grid
from .fields import FiniteField, field_from_json, grid
from .ideals import PointSet


@dataclass(frozen=True)
class CurveSpec:
    """``lambda -> (C_1(lambda), ..., C_n(lambda))`` with every deg C_i <= degree.

    Components are little-endian coefficient tuples (encodings in the field).
    """

    field: FiniteField
    components: tuple[tuple[int, ...], ...]
    degree: int

    def __post_init__(self):
        if self.degree < 1:
            raise ValueError("curve degree bound must be >= 1")
        for c in self.components:
            if _poly_degree(c) > self.degree:
                raise ValueError(f"component {c} exceeds degree {self.degree}")

    @property
    def n(self) -> int:
        return len(self.components)

    def at(self, lam: int) -> tuple[int, ...]:
        F = self.field
        out = []
        for coeffs in self.components:
            v = 0
            for c in reversed(coeffs):  # Horner
                v = int(F.add(F.mul(v, lam), c))
            out.append(v)
        return tuple(out)

    def to_json(self) -> dict:
        return {"field": self.field.to_json(), "degree": self.degree, "components": [list(c) for c in self.components]}

    @classmethod
    def from_json(cls, obj: dict) -> CurveSpec:
        return cls(field_from_json(obj["field"]), tuple(tuple(c) for c in obj["components"]), int(obj["degree"]))


def _poly_degree(coeffs: Sequence[int]) -> int:
    deg = -1
    for k, c in enumerate(coeffs):
        if c:
            deg = k
    return deg


def line_spec(F: FiniteField, base: Sequence[int], direction: Sequence[int]) -> CurveSpec:
    if not any(direction):
        raise ValueError("line direction must be nonzero")
    return CurveSpec(F, tuple((int(b), int(v)) for b, v in zip(base, direction)), 1)


def curve_points(spec: CurveSpec) -> PointSet:
    return PointSet(spec.field, spec.n, (spec.at(lam) for lam in range(spec.field.q)))


def line(F: FiniteField, base: Sequence[int], direction: Sequence[int]) -> PointSet:
    """``{base + t * direction : t in F}``; exactly q points."""
    return curve_points(line_spec(F, base, direction))


def product_set(F: FiniteField, factors: Sequence[Sequence[int]]) -> PointSet:
    if any(len(E) == 0 for E in factors):
        raise ValueError("product factors must be nonempty")
    return PointSet(F, len(factors), itertools.product(*[sorted(set(E)) for E in factors]))


@dataclass
class InstanceBundle:
    """X (union of whole curves), Y (union of the sampled pieces), and a
    witness curve for every point of X."""

    X: PointSet
    Y: PointSet
    tau: int
    curves: list[CurveSpec]
    samples: list[PointSet]
    seed: int | None
    witnesses: dict = field(default_factory=dict)  # point of X -> index into curves

    def to_json(self) -> dict:
        return {
            "X": self.X.to_json(),
            "Y": self.Y.to_json(),
            "tau": self.tau,
            "seed": self.seed,
            "curves": [c.to_json() for c in self.curves],
            "samples": [[list(p) for p in s] for s in self.samples],
            "witnesses": [[list(x), k] for x, k in sorted(self.witnesses.items())],
        }

    @classmethod
    def from_json(cls, obj: dict) -> InstanceBundle:
        X = PointSet.from_json(obj["X"])
        Y = PointSet.from_json(obj["Y"])
        curves = [CurveSpec.from_json(c) for c in obj.get("curves", [])]
        samples = [PointSet(X.field, X.n, s) for s in obj.get("samples", [])]
        witnesses = {tuple(x): int(k) for x, k in obj.get("witnesses", [])}
        return cls(X, Y, int(obj["tau"]), curves, samples, obj.get("seed"), witnesses)


def _random_direction(F: FiniteField, n: int, rng: np.random.Generator) -> tuple[int, ...]:
    while True:
        v = tuple(int(x) for x in rng.integers(0, F.q, size=n))
        if any(v):
            return v


def _sample(points: Sequence[tuple], k: int, rng: np.random.Generator) -> list[tuple]:
    idx = rng.choice(len(points), size=k, replace=False)
    return [points[i] for i in sorted(idx)]


def partial_lines_instance(
    F: FiniteField, n: int, count: int, tau: int, seed: int | None = 0, max_tries: int = 10_000
) -> InstanceBundle:
    """``count`` distinct random lines, each with a uniform random tau-subset."""
    if tau > F.q:
        raise ValueError(f"tau={tau} exceeds the line size q={F.q}")
    if count < 1:
        raise ValueError("count must be >= 1")
    rng = np.random.default_rng(seed)
    curves: list[CurveSpec] = []
    lines: list[PointSet] = []
    seen = set()
    tries = 0
    while len(lines) < count:
        tries += 1
        if tries > max_tries:
            raise ValueError(f"could not find {count} distinct lines")
        base = tuple(int(x) for x in rng.integers(0, F.q, size=n))
        spec = line_spec(F, base, _random_direction(F, n, rng))
        L = curve_points(spec)
        if L in seen:
            continue
        seen.add(L)
        curves.append(spec)
        lines.append(L)
    samples = [PointSet(F, n, _sample(L.points, tau, rng)) for L in lines]
    X = PointSet(F, n, itertools.chain.from_iterable(lines))
    Y = PointSet(F, n, itertools.chain.from_iterable(samples))
    witnesses = {}
    for k, L in enumerate(lines):
        for x in L:
            witnesses.setdefault(x, k)
    return InstanceBundle(X, Y, tau, curves, samples, seed, witnesses)


def nikodym_instance(
    F: FiniteField, n: int, tau: int, seed: int | None = 0, grid_cap: int | None = None
) -> InstanceBundle:
    """Union N of tau-subsets of one random line through every grid point.

    The line through x is recorded as x's witness; x itself need not be in
    the sampled subset.
    """
    if tau > F.q:
        raise ValueError(f"tau={tau} exceeds the line size q={F.q}")
    check_grid(F.q, n, grid_cap)
    rng = np.random.default_rng(seed)
    curves, samples, witnesses = [], [], {}
    for x in (tuple(int(v) for v in row) for row in grid(F, n)):
        spec = line_spec(F, x, _random_direction(F, n, rng))
        L = curve_points(spec)
        witnesses[x] = len(curves)
        curves.append(spec)
        samples.append(PointSet(F, n, _sample(L.points, tau, rng)))
    X = PointSet.whole_space(F, n)
    Y = PointSet(F, n, itertools.chain.from_iterable(samples))
    return InstanceBundle(X, Y, tau, curves, samples, seed, witnesses)


def random_subset(ambient: Sequence, size: int, rng: np.random.Generator) -> list:
    return _sample(list(ambient), size, rng)
