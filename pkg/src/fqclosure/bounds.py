"""Verifiers for the closure and Hilbert-function inequalities.

Every verifier returns a :class:`BoundReport` whose ``lhs <= rhs`` is the
inequality being checked, written in cross-multiplied integer form.  Side
conditions and proof-chain steps that are re-checked along the way go into
``checks``.  No floating point is used anywhere on these paths.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial
from typing import Sequence

import numpy as np

from .closures import closure, multiplicity_closure
from .fields import grid
from .generators import CurveSpec, InstanceBundle, curve_points, product_set
from .ideals import PointSet, hilbert_function, quotient_dimension, standard_monomials, union_subadditivity_check
from .monomials import (
    box_staircase,
    check_splus_growth,
    enumerate_monomials,
    multiplicity_staircase,
    staircase_count_le,
)

THEOREM_IDS = (
    "size-bound",
    "closure-bound",
    "product-closure-bound",
    "mult-set-bound",
    "mult-closure-bound",
    "hilbert-growth",
    "schwartz-zippel-mult",
    "statistical-kakeya",
    "partial-lines",
    "splus-growth",
    "union-subadditivity",
    "closure-axioms",
)


class HypothesisError(ValueError):
    """A verifier's hypothesis does not hold on the supplied instance."""

    def __init__(self, message: str, offending=None):
        super().__init__(message)
        self.offending = offending or []


@dataclass
class BoundReport:
    theorem_id: str
    lhs: int
    rhs: int
    witness: dict = field(default_factory=dict)
    checks: dict = field(default_factory=dict)
    applicable: bool = True
    extras: dict = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return self.lhs <= self.rhs

    @property
    def ratio(self) -> Fraction | None:
        """rhs / lhs, or None when lhs is zero."""
        return Fraction(self.rhs, self.lhs) if self.lhs else None

    @property
    def ok(self) -> bool:
        """False only for an applicable report with a failed inequality or check."""
        if not self.applicable:
            return True
        return self.holds and all(v is not False for v in self.checks.values())

    def to_json(self) -> dict:
        return {
            "theorem_id": self.theorem_id,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "holds": self.holds,
            "ratio": fraction_str(self.ratio),
            "applicable": self.applicable,
            "witness": self.witness,
            "checks": self.checks,
            "extras": {k: fraction_str(v) if isinstance(v, Fraction) else v for k, v in self.extras.items()},
        }

    @classmethod
    def from_json(cls, obj: dict) -> BoundReport:
        extras = {}
        for k, v in obj.get("extras", {}).items():
            extras[k] = Fraction(v) if isinstance(v, str) and "/" in v else v
        return cls(
            obj["theorem_id"], int(obj["lhs"]), int(obj["rhs"]), obj.get("witness", {}),
            obj.get("checks", {}), obj.get("applicable", True), extras,
        )


def fraction_str(x: Fraction | None) -> str:
    if x is None:
        return "inf"
    return f"{x.numerator}/{x.denominator}"


def _space(Y: PointSet) -> dict:
    return {"q": Y.field.q, "n": Y.n}


def _points(Y: PointSet) -> list:
    return [list(p) for p in Y]


# -- FKG ----------------------------------------------------------------------

@dataclass
class LatticeFunctions:
    """Nonnegative functions on the box ``prod_i {0, ..., box_i}``.

    Tables are numpy object arrays of shape ``(box_1 + 1, ..., box_n + 1)``
    holding ints or Fractions.
    """

    box: tuple[int, ...]
    mu: np.ndarray
    f: np.ndarray
    g: np.ndarray

    def __post_init__(self):
        shape = tuple(b + 1 for b in self.box)
        for name in ("mu", "f", "g"):
            t = np.empty(shape, dtype=object)
            src = np.asarray(getattr(self, name), dtype=object)
            if src.shape != shape:
                raise ValueError(f"{name} has shape {src.shape}, expected {shape}")
            for idx in np.ndindex(shape):
                v = src[idx]
                v = Fraction(v) if not isinstance(v, Fraction) else v
                if v < 0:
                    raise ValueError(f"{name} is negative at {idx}")
                t[idx] = v
            setattr(self, name, t)

    @classmethod
    def from_json(cls, obj: dict) -> LatticeFunctions:
        return cls(tuple(obj["box"]), obj["mu"], obj["f"], obj["g"])

    def to_json(self) -> dict:
        def enc(t):
            return np.vectorize(lambda v: str(v) if v.denominator != 1 else int(v), otypes=[object])(t).tolist()
        return {"box": list(self.box), "mu": enc(self.mu), "f": enc(self.f), "g": enc(self.g)}


def _monotone_direction(t: np.ndarray) -> str | None:
    """'constant', 'increasing', 'decreasing' or None (not monotone)."""
    up = down = True
    for axis in range(t.ndim):
        lo = np.take(t, range(t.shape[axis] - 1), axis=axis)
        hi = np.take(t, range(1, t.shape[axis]), axis=axis)
        for a, b in zip(lo.ravel(), hi.ravel()):
            if a > b:
                up = False
            if a < b:
                down = False
    if up and down:
        return "constant"
    if up:
        return "increasing"
    if down:
        return "decreasing"
    return None


@dataclass
class FKGReport:
    log_supermodular: bool
    f_direction: str | None
    g_direction: str | None
    lhs: Fraction  # (sum mu f)(sum mu g)
    rhs: Fraction  # (sum mu)(sum mu f g)

    @property
    def comonotone(self) -> bool:
        dirs = {self.f_direction, self.g_direction} - {"constant"}
        return None not in dirs and len(dirs) <= 1

    @property
    def hypotheses_hold(self) -> bool:
        return self.log_supermodular and self.comonotone

    @property
    def inequality_holds(self) -> bool:
        return self.lhs <= self.rhs

    def to_json(self) -> dict:
        return {
            "hypotheses_hold": self.hypotheses_hold,
            "log_supermodular": self.log_supermodular,
            "f_direction": self.f_direction,
            "g_direction": self.g_direction,
            "inequality_holds": self.inequality_holds,
            "lhs": fraction_str(self.lhs),
            "rhs": fraction_str(self.rhs),
        }


def fkg_check(fn: LatticeFunctions, cap: int = 1 << 12) -> FKGReport:
    """Check the FKG hypotheses and the FKG inequality separately.

    The monotonicity hypothesis accepts f and g both increasing or both
    decreasing (the latter is FKG on the order-dual lattice).
    """
    mu, f, g = fn.mu, fn.f, fn.g
    cells = list(np.ndindex(mu.shape))
    if len(cells) > cap:
        raise ValueError(f"lattice of {len(cells)} elements exceeds the cap {cap}")
    lsm = True
    for x, y in itertools.combinations(cells, 2):
        join = tuple(max(a, b) for a, b in zip(x, y))
        meet = tuple(min(a, b) for a, b in zip(x, y))
        if mu[x] * mu[y] > mu[join] * mu[meet]:
            lsm = False
            break
    s_mu = sum(mu[c] for c in cells)
    s_f = sum(mu[c] * f[c] for c in cells)
    s_g = sum(mu[c] * g[c] for c in cells)
    s_fg = sum(mu[c] * f[c] * g[c] for c in cells)
    return FKGReport(lsm, _monotone_direction(f), _monotone_direction(g), Fraction(s_f * s_g), Fraction(s_mu * s_fg))


def indicator(box: Sequence[int], members) -> np.ndarray:
    t = np.zeros(tuple(b + 1 for b in box), dtype=object)
    t[...] = 0
    for a in members:
        if all(0 <= ai <= bi for ai, bi in zip(a, box)):
            t[tuple(a)] = 1
    return t


def size_bound_fkg_instance(Y: PointSet, d: int) -> LatticeFunctions:
    """The (mu, f, g) triple of the size-bound argument on the q-box:
    mu = 1 on the box, f = indicator of the standard monomials of I(Y),
    g = indicator of the monomials of degree <= d."""
    q, n = Y.field.q, Y.n
    box = (q - 1,) * n
    S = standard_monomials(Y).members
    M = [a for a in itertools.product(range(q), repeat=n) if sum(a) <= d]
    T = list(itertools.product(range(q), repeat=n))
    return LatticeFunctions(box, indicator(box, T), indicator(box, S), indicator(box, M))


# -- Hilbert-function bounds --------------------------------------------------

def hf_whole_space(q: int, n: int, d: int, m: int = 1) -> int:
    """``HF^m(GF(q)^n, d)`` by counting its standard monomials."""
    return staircase_count_le(multiplicity_staircase(q, n, m), d)


def verify_size_bound(Y: PointSet, d: int) -> BoundReport:
    q, n = Y.field.q, Y.n
    hf_space = staircase_count_le(box_staircase(q, n), d)
    hf_y = hilbert_function(Y, d)
    return BoundReport(
        "size-bound", hf_space * len(Y), hf_y * q**n,
        {**_space(Y), "d": d, "points": _points(Y)},
        extras={"hf_space": hf_space, "hf_y": hf_y},
    )


def verify_closure_bound(Y: PointSet, d: int) -> BoundReport:
    q, n = Y.field.q, Y.n
    C = closure(Y, d).output
    hf_space = staircase_count_le(box_staircase(q, n), d)
    hf_c = [hilbert_function(C, e) for e in range(d + 1)]
    hf_y = [hilbert_function(Y, e) for e in range(d + 1)]
    checks = {
        "size_bound_on_closure": hf_space * len(C) <= hf_c[d] * q**n,
        "hf_closure_equals_hf_input": hf_c == hf_y,
        "hf_at_most_size": hf_y[d] <= len(Y),
    }
    return BoundReport(
        "closure-bound", hf_space * len(C), q**n * len(Y),
        {**_space(Y), "d": d, "points": _points(Y)}, checks,
        extras={"closure_size": len(C), "hf_space": hf_space},
    )


def verify_product_closure_bound(factors: Sequence[Sequence[int]], Y: PointSet, d: int) -> BoundReport:
    """``HF(E, d) |cl_d(Y) & E| <= |E| |Y|`` for Y inside the product set E.

    The variant that counts the whole closure in GF(q)^n is reported in
    ``extras`` without being asserted; it fails on small examples.
    """
    F, n = Y.field, Y.n
    E = product_set(F, factors)
    if not Y <= E:
        raise HypothesisError("Y is not contained in the product set", list(map(list, (Y - E).points)))
    sides = [len(set(f)) for f in factors]
    hf_e = len(enumerate_monomials(n, d, box=[s - 1 for s in sides]))
    C = closure(Y, d).output
    CE = C & E
    return BoundReport(
        "product-closure-bound", hf_e * len(CE), len(E) * len(Y),
        {**_space(Y), "d": d, "factors": [sorted(set(f)) for f in factors], "points": _points(Y)},
        {"hf_product_matches_rank": hf_e == hilbert_function(E, d)},
        extras={
            "closure_in_product": len(CE),
            "closure_full": len(C),
            "full_closure_lhs": hf_e * len(C),
            "full_closure_holds": hf_e * len(C) <= len(E) * len(Y),
        },
    )


def verify_multiplicity_set_bound(Y: PointSet, d: int, m: int) -> BoundReport:
    q, n = Y.field.q, Y.n
    hf_space = hf_whole_space(q, n, d, m)
    hf_y = hilbert_function(Y, d, m)
    return BoundReport(
        "mult-set-bound", hf_space * len(Y), hf_y * q**n,
        {**_space(Y), "d": d, "m": m, "points": _points(Y)},
        extras={"hf_space": hf_space, "hf_y": hf_y},
    )


def verify_multiplicity_closure_bound(Y: PointSet, d: int, ell: int, m: int) -> BoundReport:
    q, n = Y.field.q, Y.n
    X = multiplicity_closure(Y, d, ell, m).output
    hf_space = hf_whole_space(q, n, d, ell)
    hf_x = hilbert_function(X, d, ell)
    hf_y = hilbert_function(Y, d, m)
    checks = {
        "set_bound_on_closure": hf_space * len(X) <= hf_x * q**n,
        "hf_transfer": hf_x <= hf_y,
        "hf_at_most_quotient": hf_y <= quotient_dimension(n, m, len(Y)),
    }
    return BoundReport(
        "mult-closure-bound", hf_space * len(X), q**n * comb(m + n - 1, n) * len(Y),
        {**_space(Y), "d": d, "ell": ell, "m": m, "points": _points(Y)}, checks,
        extras={"closure_size": len(X), "hf_space": hf_space},
    )


def verify_hilbert_growth(Y: PointSet, m1: int, m2: int, m: int = 1) -> BoundReport:
    """``HF^m(Y, m1) C(n+m2, n) <= HF^m(Y, m2) C(n+m1, n)`` for m1 >= m2."""
    if m1 < m2:
        raise ValueError("requires m1 >= m2")
    n = Y.n
    h1, h2 = hilbert_function(Y, m1, m), hilbert_function(Y, m2, m)
    return BoundReport(
        "hilbert-growth", h1 * comb(n + m2, n), h2 * comb(n + m1, n),
        {**_space(Y), "m1": m1, "m2": m2, "m": m, "points": _points(Y)},
    )


def verify_splus_growth(S, d: int, n: int) -> BoundReport:
    r = check_splus_growth(S, d, n)
    return BoundReport("splus-growth", r.lhs, r.rhs, {"n": n, "d": d, "set": sorted(map(list, S))})


def verify_union_subadditivity(parts: Sequence[PointSet], d: int) -> BoundReport:
    r = union_subadditivity_check(parts, d)
    return BoundReport(
        "union-subadditivity", r.lhs, r.rhs,
        {**_space(parts[0]), "d": d, "parts": [_points(p) for p in parts]},
        extras={"part_values": list(r.part_values)},
    )


def verify_closure_axioms(X: PointSet, Y: PointSet, d: int) -> BoundReport:
    from .closures import closure_axioms_check

    r = closure_axioms_check(X, Y, d)
    failed = sum(v is False for v in (r.extensive, r.monotone, r.idempotent, r.hilbert_agreement))
    return BoundReport(
        "closure-axioms", failed, 0,
        {**_space(X), "d": d, "X": _points(X), "Y": _points(Y)},
        {"extensive": r.extensive, "monotone": r.monotone, "idempotent": r.idempotent,
         "hilbert_agreement": r.hilbert_agreement},
    )


# -- curves and statistical Kakeya --------------------------------------------

def schwartz_zippel_hypothesis(curve_degree: int, size: int, d: int, ell: int, m: int) -> bool:
    return curve_degree * d < size * (m - ell + 1) + ell - 1


def verify_schwartz_zippel_mult(X: PointSet, spec: CurveSpec, d: int, ell: int, m: int) -> BoundReport:
    """Whole curve inside ``cl_d^{ell,m}(X)`` when ``deg(C) d < |X|(m-l+1) + l - 1``.

    lhs counts curve points missing from the closure; rhs is 0.  When the
    degree condition fails the report is marked not applicable.
    """
    C = curve_points(spec)
    if not X <= C:
        raise HypothesisError("X is not a subset of the curve", list(map(list, (X - C).points)))
    hyp = schwartz_zippel_hypothesis(spec.degree, len(X), d, ell, m)
    cl = multiplicity_closure(X, d, ell, m).output
    missing = C - cl
    return BoundReport(
        "schwartz-zippel-mult", len(missing), 0,
        {**_space(X), "d": d, "ell": ell, "m": m, "curve": spec.to_json(), "points": _points(X)},
        {"hypothesis": hyp}, applicable=hyp,
        extras={"curve_size": len(C), "closure_size": len(cl)},
    )


def check_witnesses(bundle: InstanceBundle, curve_degree: int, tau: int) -> list:
    """Points of X lacking a degree <= curve_degree witness curve through
    them that meets Y in at least tau points."""
    bad = []
    Y = bundle.Y
    cache = {}
    for x in bundle.X:
        k = bundle.witnesses.get(x)
        if k is None or not 0 <= k < len(bundle.curves):
            bad.append(list(x))
            continue
        spec = bundle.curves[k]
        if k not in cache:
            cache[k] = curve_points(spec)
        pts = cache[k]
        if spec.degree > curve_degree or x not in pts or len(pts & Y) < tau:
            bad.append(list(x))
    return bad


def verify_statistical_kakeya(bundle: InstanceBundle, curve_degree: int = 1, tau: int | None = None) -> BoundReport:
    """``|X| tau^n <= (tau + deg (q-1))^n |Y|`` after checking every witness."""
    X, Y = bundle.X, bundle.Y
    q, n = X.field.q, X.n
    tau = bundle.tau if tau is None else tau
    if tau < 1:
        raise HypothesisError("tau must be >= 1")
    if tau > q and X:
        raise HypothesisError(f"tau={tau} > q={q}: no curve meets Y in tau points", [list(x) for x in X])
    bad = check_witnesses(bundle, curve_degree, tau)
    if bad:
        raise HypothesisError(f"{len(bad)} point(s) of X lack a witness curve", bad)
    lhs = len(X) * tau**n
    rhs = (tau + curve_degree * (q - 1)) ** n * len(Y)
    return BoundReport(
        "statistical-kakeya", lhs, rhs,
        {**_space(X), "tau": tau, "curve_degree": curve_degree, "seed": bundle.seed},
        extras={
            "size_X": len(X),
            "size_Y": len(Y),
            "realized_ratio": Fraction(len(X), len(Y)) if len(Y) else None,
            "bound_constant": Fraction(tau + curve_degree * (q - 1), tau) ** n,
            "reference_constant": Fraction(3 * q - 2, q) ** n,
        },
    )


def kakeya_chain_diagnostic(
    bundle: InstanceBundle, curve_degree: int, tau: int, ell: int, m: int, d: int, check_containment: bool = False
) -> BoundReport:
    """Finite-l step ``C(l+n-1, n)|X| <= C(m+n-1, n)|Y|`` for admissible (l, m, d).

    Admissible means ``deg d < tau(m-l+1) + l - 1`` and ``d >= (l-1)q + n(q-1)``.
    With ``check_containment`` the inclusion ``X <= cl_d^{l,m}(Y)`` is also
    computed (expensive).
    """
    X, Y = bundle.X, bundle.Y
    q, n = X.field.q, X.n
    admissible = schwartz_zippel_hypothesis(curve_degree, tau, d, ell, m) and d >= (ell - 1) * q + n * (q - 1)
    checks = {"admissible": admissible}
    if check_containment:
        checks["contained"] = X <= multiplicity_closure(Y, d, ell, m).output
    return BoundReport(
        "statistical-kakeya", comb(ell + n - 1, n) * len(X), comb(m + n - 1, n) * len(Y),
        {**_space(X), "tau": tau, "curve_degree": curve_degree, "ell": ell, "m": m, "d": d},
        checks, applicable=admissible,
    )


def _check_partial_lines(bundle: InstanceBundle) -> int:
    """Re-check the bundle's structure; return the smallest sample size."""
    if len(bundle.samples) != len(bundle.curves) or not bundle.curves:
        raise HypothesisError("bundle needs one sample per line")
    for spec, gamma in zip(bundle.curves, bundle.samples):
        if spec.degree != 1:
            raise HypothesisError("partial-lines bundles consist of lines")
        if not gamma <= curve_points(spec):
            raise HypothesisError("a sample is not contained in its line", [list(p) for p in gamma])
    X = bundle.X
    union_lines = PointSet(X.field, X.n, itertools.chain.from_iterable(curve_points(s) for s in bundle.curves))
    union_samples = PointSet(X.field, X.n, itertools.chain.from_iterable(bundle.samples))
    if union_lines != X or union_samples != bundle.Y:
        raise HypothesisError("X / Y are not the unions of the lines / samples")
    return min(len(g) for g in bundle.samples)


def verify_partial_lines_corollaries(bundle: InstanceBundle) -> tuple[BoundReport, BoundReport]:
    """Both constants for unions of partial lines with samples of size >= q/2:
    ``|X| <= n! 2^n |Y|`` (degree-closure route) and
    ``|X| <= (3 - 2/q)^n |Y|`` (multiplicity route)."""
    X, Y = bundle.X, bundle.Y
    q, n = X.field.q, X.n
    tau = _check_partial_lines(bundle)
    if 2 * tau < q:
        raise HypothesisError(f"samples of size {tau} < q/2")
    c1 = factorial(n) * 2**n
    c2 = Fraction(3 * q - 2, q) ** n
    tighter = "multiplicity" if c2 < c1 else ("closure" if c1 < c2 else "equal")
    witness = {**_space(X), "tau": tau, "lines": len(bundle.curves), "seed": bundle.seed}
    extras = {"size_X": len(X), "size_Y": len(Y), "tighter": tighter,
              "realized_ratio": Fraction(len(X), len(Y))}
    r1 = BoundReport("partial-lines", len(X), c1 * len(Y), {**witness, "form": "closure"},
                     extras={**extras, "reference_constant": Fraction(c1)})
    r2 = BoundReport("partial-lines", q**n * len(X), (3 * q - 2) ** n * len(Y),
                     {**witness, "form": "multiplicity"}, extras={**extras, "reference_constant": c2})
    return r1, r2


def verify_partial_lines_alpha(bundle: InstanceBundle, alpha: Fraction) -> BoundReport:
    """``|X| <= (1 + (q-1)/q^alpha)^n |Y|`` for samples of size >= q^alpha.

    Certified through the smallest sample size tau >= q^alpha: the
    integer inequality ``|X| tau^n <= (tau + q - 1)^n |Y|`` implies it.
    """
    alpha = Fraction(alpha)
    X, Y = bundle.X, bundle.Y
    q, n = X.field.q, X.n
    tau = _check_partial_lines(bundle)
    a, b = alpha.numerator, alpha.denominator
    if not 0 < alpha < 1:
        raise ValueError("alpha must lie strictly between 0 and 1")
    if tau**b < q**a:
        raise HypothesisError(f"samples of size {tau} < q^{alpha}")
    return BoundReport(
        "partial-lines", len(X) * tau**n, (tau + q - 1) ** n * len(Y),
        {**_space(X), "tau": tau, "alpha": fraction_str(alpha), "form": "alpha", "seed": bundle.seed},
        extras={"realized_ratio": Fraction(len(X), len(Y)), "bound_constant": Fraction(tau + q - 1, tau) ** n},
    )


# -- sweeps -------------------------------------------------------------------

EXHAUSTIVE_LIMIT = 16


@dataclass
class SweepReport:
    q: int
    n: int
    mode: str
    exhaustive: bool
    instances: int
    violations: list[BoundReport]
    worst: BoundReport | None
    reports: list[BoundReport] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "q": self.q,
            "n": self.n,
            "mode": self.mode,
            "exhaustive": self.exhaustive,
            "instances": self.instances,
            "violations": [r.to_json() for r in self.violations],
            "worst": self.worst.to_json() if self.worst else None,
        }


def _tightness(r: BoundReport) -> tuple:
    # larger lhs/rhs is tighter; 0 <= 0 ranks below every nontrivial instance
    if r.rhs == 0:
        return (Fraction(0) if r.lhs == 0 else Fraction(10**18),)
    return (Fraction(r.lhs, r.rhs),)


def exhaustive_sweep(
    F, n: int, d_range: Sequence[int], mode: str = "closure-bound",
    samples: int | None = None, seed: int = 0, keep_reports: bool = False,
) -> SweepReport:
    """Run a verifier over every subset of GF(q)^n (q^n <= 16) or a seeded sample.

    Subsets are encoded as bitmasks over the lexicographic grid order; the
    worst instance is the one with the largest lhs/rhs, ties broken by
    (d, encoding).
    """
    verifier = {"closure-bound": verify_closure_bound, "size-bound": verify_size_bound}.get(mode)
    if verifier is None:
        raise ValueError(f"unknown sweep mode {mode!r}")
    pts = [tuple(p) for p in grid(F, n)]
    N = len(pts)
    exhaustive = samples is None
    if exhaustive:
        if N > EXHAUSTIVE_LIMIT:
            raise ValueError(f"{N} grid points is too many for exhaustive mode; pass samples=")
        masks = range(1 << N)
    else:
        rng = np.random.default_rng(seed)
        masks = [int(sum(1 << i for i in np.nonzero(rng.random(N) < 0.5)[0])) for _ in range(samples)]
    violations, kept = [], []
    worst, worst_key = None, None
    count = 0
    for mask in masks:
        Y = PointSet(F, n, [pts[i] for i in range(N) if mask >> i & 1])
        for d in d_range:
            r = verifier(Y, d)
            r.witness["subset"] = mask
            count += 1
            if not r.ok:
                violations.append(r)
            key = (_tightness(r), -d, -mask)
            if worst_key is None or key > worst_key:
                worst, worst_key = r, key
            if keep_reports:
                kept.append(r)
    kept.sort(key=lambda r: (r.witness["d"], r.witness["subset"]))
    return SweepReport(F.q, n, mode, exhaustive, count, violations, worst, kept)
