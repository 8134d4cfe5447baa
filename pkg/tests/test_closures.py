import itertools

import numpy as np
import pytest

from fqclosure.closures import (
    GridTooLarge,
    closure,
    closure_axioms_check,
    multiplicity_closure,
    whole_space_degree_check,
)
from fqclosure.fields import GF, field_from_order
from fqclosure.generators import line
from fqclosure.ideals import PointSet, hilbert_function
from oracles import RefField, brute_closure_box01, ref_closure

PLANE2 = list(itertools.product((0, 1), repeat=2))


def _subsets(pts):
    for r in range(len(pts) + 1):
        yield from itertools.combinations(pts, r)


@pytest.mark.parametrize("d", [0, 1, 2])
def test_binary_plane_against_polynomial_enumeration(d):
    F = GF(2)
    for Y in _subsets(PLANE2):
        got = set(closure(PointSet(F, 2, Y), d).output)
        assert got == brute_closure_box01(Y, d)


@pytest.mark.parametrize("q", [3, 4])
def test_against_rank_characterisation(q):
    F = field_from_order(q)
    R = RefField(F.p, F.e, F.modulus)
    rng = np.random.default_rng(q)
    pts = list(itertools.product(range(q), repeat=2))
    for _ in range(6):
        Y = [pts[i] for i in rng.choice(len(pts), size=int(rng.integers(0, 5)), replace=False)]
        for d in range(0, 3):
            assert set(closure(PointSet(F, 2, Y), d).output) == ref_closure(R, 2, Y, d)


def test_multiplicity_closure_against_rank_characterisation():
    F = GF(3)
    R = RefField(3)
    rng = np.random.default_rng(11)
    pts = list(itertools.product(range(3), repeat=2))
    for _ in range(5):
        Y = [pts[i] for i in rng.choice(9, size=int(rng.integers(1, 4)), replace=False)]
        for m in (1, 2):
            for ell in range(1, m + 1):
                for d in (1, 3, 5):
                    got = set(multiplicity_closure(PointSet(F, 2, Y), d, ell, m).output)
                    assert got == ref_closure(R, 2, Y, d, ell, m)


def test_diagonal_closure():
    F = GF(3)
    res = closure(PointSet(F, 2, [(0, 0), (1, 1)]), 1)
    assert res.output.points == ((0, 0), (1, 1), (2, 2))
    assert res.to_json()["size"] == 3


def test_multiplicity_examples():
    F = GF(5)
    L = line(F, (0, 0), (1, 2))
    three = PointSet(F, 2, L.points[:3])
    assert multiplicity_closure(three, 5, 1, 2).output >= L
    F3 = GF(3)
    assert len(multiplicity_closure(PointSet(F3, 2, [(0, 0)]), 2, 2, 1).output) == 0


def test_d_zero_and_empty():
    F = GF(3)
    assert len(closure(PointSet(F, 2, [(1, 2)]), 0).output) == 9
    assert len(closure(PointSet(F, 2, []), 0).output) == 0


@pytest.mark.parametrize("q", [2, 3, 4])
def test_closure_laws(q):
    F = field_from_order(q)
    rng = np.random.default_rng(q + 100)
    pts = list(itertools.product(range(q), repeat=2))
    for _ in range(8):
        Y = PointSet(F, 2, [pts[i] for i in rng.choice(len(pts), size=min(len(pts), int(rng.integers(0, 6))), replace=False)])
        X = PointSet(F, 2, [p for p in Y if rng.random() < 0.5])
        for d in range(2 * (q - 1) + 1):
            rep = closure_axioms_check(X, Y, d)
            assert rep.extensive and rep.monotone and rep.idempotent and rep.hilbert_agreement
            # closure shrinks as d grows
            if d:
                assert closure(Y, d).output <= closure(Y, d - 1).output


def test_hilbert_transfer_beyond_d_can_fail():
    # agreement is only promised up to degree d
    F = GF(3)
    Y = PointSet(F, 2, [(0, 0), (1, 1)])
    c = closure(Y, 1).output
    assert hilbert_function(c, 1) == hilbert_function(Y, 1)
    assert hilbert_function(c, 2) != hilbert_function(Y, 2)


def test_whole_space_degree():
    F = GF(5)
    for d in range(5):
        X = PointSet.whole_space(F, 2)
        r = whole_space_degree_check(X, d)
        assert r.whole_space and r.holds
    with pytest.raises(ValueError):
        whole_space_degree_check(PointSet(F, 2, []), 5)


def test_grid_cap():
    F = GF(3)
    with pytest.raises(GridTooLarge):
        closure(PointSet(F, 5, []), 1, grid_cap=100)
