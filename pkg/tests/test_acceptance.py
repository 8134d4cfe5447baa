"""Acceptance checks, one test per criterion.

Each test prints a single ``criterion N: PASS|FAIL`` line (visible in
``pytest -v`` output) before asserting.
"""

import csv
import io
import itertools
import math
import time
from fractions import Fraction
from math import comb

import numpy as np
import pytest

from fqclosure.bounds import (
    LatticeFunctions,
    exhaustive_sweep,
    fkg_check,
    indicator,
    size_bound_fkg_instance,
    verify_closure_axioms,
    verify_hilbert_growth,
    verify_multiplicity_closure_bound,
    verify_multiplicity_set_bound,
    verify_schwartz_zippel_mult,
    verify_splus_growth,
    verify_statistical_kakeya,
    verify_union_subadditivity,
)
from fqclosure.closures import closure
from fqclosure.fields import GF, field_from_order
from fqclosure.generators import CurveSpec, curve_points, line_spec, nikodym_instance
from fqclosure.ideals import PointSet, hilbert_function, stabilization_degree, standard_monomials
from fqclosure.reporting import report_emit
from oracles import brute_closure_box01, ref_staircase_growth


@pytest.fixture
def say(capsys):
    def _say(k, ok, detail):
        with capsys.disabled():
            print(f"\ncriterion {k}: {'PASS' if ok else 'FAIL'} ({detail})")
    return _say


def _pts(q, n):
    return list(itertools.product(range(q), repeat=n))


def _rand_set(rng, q, n, lo, hi):
    pts = _pts(q, n)
    k = int(rng.integers(lo, min(hi, len(pts)) + 1))
    return [pts[i] for i in sorted(rng.choice(len(pts), size=k, replace=False))]


SWEEPS = [(2, [0, 1, 2]), (3, [0, 1, 2, 3, 4])]


def _sweep(mode):
    t0 = time.perf_counter()
    total, bad = 0, 0
    for q, ds in SWEEPS:
        s = exhaustive_sweep(GF(q), 2, ds, mode)
        assert s.exhaustive
        total += s.instances
        bad += len(s.violations)
    return total, bad, time.perf_counter() - t0


def test_criterion_01_exhaustive_closure_bound(say):
    total, bad, dt = _sweep("closure-bound")
    ok = bad == 0 and total == 16 * 3 + 512 * 5 and dt < 60
    say(1, ok, f"{total} instances, {bad} violations, {dt:.1f}s")
    assert ok


def test_criterion_02_exhaustive_size_bound(say):
    total, bad, dt = _sweep("size-bound")
    ok = bad == 0 and total == 16 * 3 + 512 * 5
    say(2, ok, f"{total} instances, {bad} violations, {dt:.1f}s")
    assert ok


def test_criterion_03_macaulay(say):
    rng = np.random.default_rng(2024)
    instances, mismatches = 0, 0
    combos = [(q, n, m) for q in (2, 3, 5) for n in (1, 2, 3) for m in (1, 2, 3)]
    while instances < 216:
        q, n, m = combos[instances % len(combos)]
        Y = PointSet(GF(q), n, _rand_set(rng, q, n, 1, 20))
        S = standard_monomials(Y, m)
        if len(S) != comb(m + n - 1, n) * len(Y):
            mismatches += 1
        for d in range(stabilization_degree(q, n, m) + 1):
            if S.count_le(d) != hilbert_function(Y, d, m):
                mismatches += 1
        instances += 1
    ok = mismatches == 0 and instances >= 200
    say(3, ok, f"{instances} instances over {len(combos)} (q,n,m) cells, {mismatches} mismatches")
    assert ok


def test_criterion_04_brute_force_closure(say):
    F = GF(2)
    pts = _pts(2, 2)
    checked, wrong = 0, 0
    for mask in range(16):
        Y = [pts[i] for i in range(4) if mask >> i & 1]
        for d in (0, 1, 2):
            checked += 1
            if set(closure(PointSet(F, 2, Y), d).output) != brute_closure_box01(Y, d):
                wrong += 1
    ok = wrong == 0 and checked == 48
    say(4, ok, f"{checked} (subset, d) pairs, {wrong} differences")
    assert ok


def test_criterion_05_stabilization(say):
    rng = np.random.default_rng(55)
    checked, wrong = 0, 0
    for q in (2, 3, 4, 5):
        for n in (1, 2, 3):
            for m in (1, 2, 3):
                for _ in range(2):
                    Y = PointSet(field_from_order(q), n, _rand_set(rng, q, n, 1, 6))
                    target = comb(m + n - 1, n) * len(Y)
                    if m == 1:
                        wrong += hilbert_function(Y, n * (q - 1)) != len(Y)
                    wrong += hilbert_function(Y, n * (q - 1) + (m - 1) * q, m) != target
                    wrong += hilbert_function(Y, 2 * m * len(Y) - m - len(Y), m) != target
                    checked += 1
    ok = wrong == 0
    say(5, ok, f"{checked} instances, {wrong} failures")
    assert ok


def test_criterion_06_collinear_points(say):
    rng = np.random.default_rng(6)
    checked, wrong = 0, 0
    for q in (3, 5, 7):
        F = GF(q)
        for n in (2, 3):
            for _ in range(3):
                base = tuple(int(x) for x in rng.integers(0, q, n))
                v = tuple(int(x) for x in rng.integers(0, q, n))
                if not any(v):
                    v = (1,) + v[1:]
                L = curve_points(line_spec(F, base, v))
                for d in range(q):
                    sub = [L.points[i] for i in rng.choice(q, size=d + 1, replace=False)]
                    checked += 1
                    wrong += not L <= closure(PointSet(F, n, sub), d).output
    ok = wrong == 0
    say(6, ok, f"{checked} (line, d) instances, {wrong} failures")
    assert ok


def _curves(F, n, rng):
    q = F.q
    base = tuple(int(x) for x in rng.integers(0, q, n))
    v = tuple(int(x) for x in rng.integers(0, q, n))
    if not any(v):
        v = (1,) + v[1:]
    yield line_spec(F, base, v)
    # parabola: first coordinate is the parameter, second quadratic
    comps = [(int(rng.integers(0, q)), 1)] + [
        (int(rng.integers(0, q)), int(rng.integers(0, q)), int(rng.integers(1, q))) for _ in range(n - 1)
    ]
    yield CurveSpec(F, tuple(comps), 2)


def test_criterion_07_schwartz_zippel_multiplicity(say):
    rng = np.random.default_rng(7)
    checked, wrong = 0, 0
    for q in (3, 5, 7):
        F = GF(q)
        for spec in itertools.chain(_curves(F, 2, rng), _curves(F, 3, rng)):
            C = curve_points(spec).points
            for m, ell, _ in itertools.product((1, 2, 3), (1, 2, 3), range(2)):
                if ell > m:
                    continue
                k = int(rng.integers(1, len(C) + 1))
                X = PointSet(F, spec.n, [C[i] for i in rng.choice(len(C), size=k, replace=False)])
                # largest admissible degree
                d = (k * (m - ell + 1) + ell - 2) // spec.degree
                if d < 0:
                    continue
                r = verify_schwartz_zippel_mult(X, spec, d, ell, m)
                assert r.applicable
                checked += 1
                wrong += r.lhs != 0
    ok = wrong == 0 and checked >= 50
    say(7, ok, f"{checked} admissible instances, {wrong} curves not contained")
    assert ok


def test_criterion_08_statistical_kakeya(say, tmp_path):
    reports = []
    for q in (3, 5, 7):
        for n in (2, 3):
            tau = math.ceil(q / 2)
            b = nikodym_instance(GF(q), n, tau, seed=q * 10 + n)
            reports.append(verify_statistical_kakeya(b))
    path = tmp_path / "kakeya.csv"
    report_emit(reports, "csv", path)
    rows = list(csv.DictReader(io.StringIO(path.read_text())))
    ok = all(r.ok for r in reports) and len(rows) == 6
    for r, row in zip(reports, rows):
        q, n = r.witness["q"], r.witness["n"]
        ok &= Fraction(row["reference_constant"]) == Fraction(3 * q - 2, q) ** n
        ok &= Fraction(row["realized_ratio"]) == Fraction(r.extras["size_X"], r.extras["size_Y"])
        ok &= r.lhs == q**n * r.witness["tau"] ** n
    detail = "; ".join(f"q={r.witness['q']} n={r.witness['n']} |X|/|Y|={row['realized_ratio']} vs {row['reference_constant']}"
                       for r, row in zip(reports, rows))
    say(8, ok, detail)
    assert ok


def test_criterion_09_multiplicity_bounds(say):
    rng = np.random.default_rng(9)
    instances, bad = 0, 0
    for q in (2, 3, 4, 5):
        F = field_from_order(q)
        for n in (1, 2):
            for m in (1, 2, 3):
                for ell in range(1, m + 1):
                    Y = PointSet(F, n, _rand_set(rng, q, n, 1, 5))
                    for d in range(n * (q - 1) + (m - 1) * q + 1):
                        instances += 1
                        bad += not verify_multiplicity_set_bound(Y, d, m).ok
                        bad += not verify_multiplicity_closure_bound(Y, d, ell, m).ok
    ok = bad == 0 and instances >= 100
    say(9, ok, f"{instances} (Y, d, l, m) instances, {bad} violations")
    assert ok


def test_criterion_10_combinatorial_lemmas(say):
    rng = np.random.default_rng(10)
    splus, bad = 0, 0
    for _ in range(600):
        n = int(rng.integers(1, 5))
        k = int(rng.integers(0, 15))
        S = {tuple(int(x) for x in rng.integers(0, 6, n)) for _ in range(k)}
        d = int(rng.integers(0, 10))
        r = verify_splus_growth(S, d, n)
        bad += not r.ok or (r.lhs, r.rhs) != ref_staircase_growth(S, d, n)
        splus += 1
    growth = 0
    for _ in range(120):
        q = int(rng.choice([2, 3, 4, 5]))
        n = int(rng.integers(1, 4))
        m = int(rng.integers(1, 3))
        Y = PointSet(field_from_order(q), n, _rand_set(rng, q, n, 1, 6))
        top = stabilization_degree(q, n, m) + 1
        m2 = int(rng.integers(0, top + 1))
        m1 = int(rng.integers(m2, top + 2))
        bad += not verify_hilbert_growth(Y, m1, m2, m).ok
        growth += 1
    union = 0
    for _ in range(120):
        q = int(rng.choice([2, 3, 5]))
        n = int(rng.integers(1, 3))
        F = field_from_order(q)
        parts = [PointSet(F, n, _rand_set(rng, q, n, 0, 4)) for _ in range(int(rng.integers(1, 4)))]
        bad += not verify_union_subadditivity(parts, int(rng.integers(0, n * (q - 1) + 1))).ok
        union += 1
    ok = bad == 0 and splus >= 500 and growth >= 100 and union >= 100
    say(10, ok, f"S+ {splus}, hilbert-growth {growth}, union {union}; {bad} violations")
    assert ok


def test_criterion_11_closure_axioms(say):
    rng = np.random.default_rng(11)
    checked, bad = 0, 0
    for _ in range(120):
        q = int(rng.choice([2, 3, 4, 5]))
        n = int(rng.integers(1, 3))
        F = field_from_order(q)
        Y = _rand_set(rng, q, n, 0, 6)
        X = [p for p in Y if rng.random() < 0.6]
        d = int(rng.integers(0, n * (q - 1) + 1))
        r = verify_closure_axioms(PointSet(F, n, X), PointSet(F, n, Y), d)
        checked += 1
        bad += not (r.ok and all(r.checks.values()))
    ok = bad == 0 and checked >= 100
    say(11, ok, f"{checked} instances, {bad} failures")
    assert ok


def test_criterion_12_fkg(say):
    checked, bad = 0, 0
    for q in (2, 3):
        F = GF(q)
        pts = _pts(q, 2)
        T = set(itertools.product(range(q), repeat=2))
        for mask in range(1 << len(pts)):
            Y = PointSet(F, 2, [pts[i] for i in range(len(pts)) if mask >> i & 1])
            S = set(standard_monomials(Y))
            for d in range(2 * (q - 1) + 1):
                M = {a for a in T if sum(a) <= d}
                rep = fkg_check(size_bound_fkg_instance(Y, d))
                checked += 1
                bad += not (rep.hypotheses_hold and rep.inequality_holds)
                bad += rep.lhs != len(S) * len(M & T) or rep.rhs != len(T) * len(S & M)
    box = (2, 2)
    ones = indicator(box, _pts(3, 2))
    g = np.array([[0, 1, 0], [1, 0, 1], [0, 1, 0]], dtype=object)
    flagged = fkg_check(LatticeFunctions(box, ones, ones, g))
    flag_ok = flagged.g_direction is None and not flagged.hypotheses_hold
    ok = bad == 0 and flag_ok
    say(12, ok, f"{checked} exhaustive instances, {bad} failures; non-monotone g flagged: {flag_ok}")
    assert ok
