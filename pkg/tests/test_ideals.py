import itertools
from math import comb

import numpy as np
import pytest

from fqclosure.fields import GF, field_from_order
from fqclosure.ideals import (
    PointSet,
    evaluation_matrix,
    hilbert_function,
    hilbert_profile,
    ideal_slice,
    stabilization_degree,
    standard_monomials,
    union_subadditivity_check,
)
from fqclosure.linalg import MatrixTooLarge
from fqclosure.monomials import is_lower_set, multiplicity_staircase
from fqclosure.polynomials import evaluate, order_at
from oracles import RefField, ref_hf


def _random_set(F, n, k, rng):
    pts = list(itertools.product(range(F.q), repeat=n))
    idx = rng.choice(len(pts), size=min(k, len(pts)), replace=False)
    return PointSet(F, n, [pts[i] for i in idx])


def test_diagonal_pair_example():
    F = GF(3)
    Y = PointSet(F, 2, [(0, 0), (1, 1)])
    assert evaluation_matrix(Y, 1).tolist() == [[1, 0, 0], [1, 1, 1]]
    K = ideal_slice(Y, 1)
    assert K.rank == 2
    assert [P.terms for P in K.basis] == [{(1, 0): 1, (0, 1): 2}]


def test_collinear_profile():
    Y = PointSet(GF(3), 2, [(0, 0), (1, 1), (2, 2)])
    assert hilbert_profile(Y, dmax=2).values == [1, 2, 3]


def test_whole_plane_profile():
    Y = PointSet.whole_space(GF(2), 2)
    assert hilbert_profile(Y, dmax=2).values == [1, 3, 4]


def test_multiplicity_origin():
    Y = PointSet(GF(2), 2, [(0, 0)])
    assert hilbert_function(Y, 1, m=2) == 3


def test_standard_monomials_examples():
    F = GF(3)
    diag = PointSet(F, 2, [(0, 0), (1, 1), (2, 2)])
    # x1 is the largest variable, so x1 - x2 has leading term x1
    assert standard_monomials(diag).sorted() == [(0, 0), (0, 1), (0, 2)]
    assert set(standard_monomials(PointSet.whole_space(F, 2))) == set(itertools.product(range(3), repeat=2))
    for q, n, m in [(2, 2, 3), (3, 2, 2), (2, 2, 1)]:
        W = PointSet.whole_space(field_from_order(q), n)
        assert standard_monomials(W, m) == multiplicity_staircase(q, n, m)


def test_whole_space_kernel_generators():
    F = GF(3)
    K = ideal_slice(PointSet.whole_space(F, 2), 3)
    assert {frozenset(P.terms.items()) for P in K.basis} == {
        frozenset({(0, 3): 1, (0, 1): 2}.items()),
        frozenset({(3, 0): 1, (1, 0): 2}.items()),
    }


@pytest.mark.parametrize("q,n,m", [(2, 2, 1), (3, 2, 1), (4, 2, 1), (3, 2, 2), (2, 3, 2), (5, 1, 3)])
def test_rank_matches_oracle(q, n, m):
    F = field_from_order(q)
    R = RefField(F.p, F.e, F.modulus)
    rng = np.random.default_rng(q * 10 + n + m)
    for _ in range(4):
        Y = _random_set(F, n, int(rng.integers(1, 6)), rng)
        for d in range(stabilization_degree(q, n, m) + 1):
            assert hilbert_function(Y, d, m) == ref_hf(R, n, list(Y), d, m)


@pytest.mark.parametrize("q,n,m", [(2, 2, 1), (3, 2, 1), (3, 2, 2), (4, 2, 1), (2, 3, 2)])
def test_macaulay_counts(q, n, m):
    F = field_from_order(q)
    rng = np.random.default_rng(7 + q + n + m)
    for _ in range(5):
        Y = _random_set(F, n, int(rng.integers(1, 7)), rng)
        S = standard_monomials(Y, m)
        assert is_lower_set(S)
        assert len(S) == comb(m + n - 1, n) * len(Y)
        for d in range(stabilization_degree(q, n, m) + 1):
            assert S.count_le(d) == hilbert_function(Y, d, m)


def test_kernel_vanishes_with_multiplicity():
    F = GF(5)
    Y = PointSet(F, 2, [(0, 0), (1, 2), (3, 3)])
    K = ideal_slice(Y, 4, m=2)
    assert K.dimension == comb(6, 2) - K.rank
    for P in K.basis:
        for y in Y:
            assert order_at(P, y) >= 2
    # canonical: distinct leading exponents, none of them standard
    lead = K.leading_exponents()
    S = standard_monomials(Y, 2)
    assert len(set(lead)) == len(lead)
    assert not set(lead) & set(S)


def test_empty_set():
    Y = PointSet(GF(3), 2, [])
    assert hilbert_function(Y, 2) == 0
    assert ideal_slice(Y, 1).dimension == 3
    assert len(standard_monomials(Y)) == 0


def test_subadditivity():
    F = GF(3)
    A = PointSet(F, 2, [(0, 0), (1, 1)])
    B = PointSet(F, 2, [(1, 1), (2, 0)])
    r = union_subadditivity_check([A, B], 1)
    assert r.holds and r.lhs == 3 and r.rhs == 4


def test_pointset_behaviour():
    F = GF(3)
    Y = PointSet(F, 2, [(1, 1), (0, 0), (1, 1)])
    assert len(Y) == 2 and Y.points == ((0, 0), (1, 1))
    assert PointSet.from_json(Y.to_json()) == Y
    with pytest.raises(ValueError):
        PointSet(F, 2, [(0, 3)])
    with pytest.raises(ValueError):
        PointSet(F, 2, [(0,)])
    Z = PointSet(F, 2, [(0, 0)])
    assert Z <= Y and (Y - Z) == PointSet(F, 2, [(1, 1)])


def test_matrix_cap_enforced():
    Y = PointSet.whole_space(GF(3), 2)
    with pytest.raises(MatrixTooLarge):
        hilbert_function(Y, 4, matrix_cap=10)
