import itertools
import math
from math import comb

import numpy as np
import pytest

from fqclosure.fields import GF, field_from_order, grid
from fqclosure.monomials import enumerate_monomials
from fqclosure.polynomials import (
    Polynomial,
    evaluate,
    evaluate_many,
    hasse_derivative,
    multi_indices,
    order_at,
    random_polynomial,
    substitute_curve,
    vanishes_to_order,
)
from oracles import RefField, ref_poly_eval


@pytest.fixture(params=[3, 4, 5])
def F(request):
    return field_from_order(request.param)


def test_arithmetic_and_degree(F):
    x = Polynomial.variable(F, 2, 0)
    y = Polynomial.variable(F, 2, 1)
    P = x * x + y * 2 + 1
    assert P.degree == 2
    assert P.leading_exponent == (2, 0)
    assert (P - P).is_zero()
    assert Polynomial.zero(F, 2).degree == -math.inf
    assert (x + y) ** 2 == x * x + 2 * x * y + y * y


def test_coefficients_reduce_in_field():
    F = GF(3)
    x = Polynomial.variable(F, 1, 0)
    assert (x + x + x).is_zero()
    with pytest.raises(ValueError):
        Polynomial(F, 1, {(1,): 3})


def test_evaluate_matches_oracle(F):
    rng = np.random.default_rng(1)
    R = RefField(F.p, F.e, F.modulus)
    for _ in range(20):
        P = random_polynomial(F, 2, 4, rng)
        pts = grid(F, 2)
        vals = evaluate_many(P, pts)
        for y, v in zip(pts, vals):
            y = tuple(int(t) for t in y)
            assert int(v) == evaluate(P, y).value == ref_poly_eval(R, P.terms, y)


def test_taylor_identity(F):
    """P(y + t) = sum_i D^i P(y) t^i for all y and t."""
    rng = np.random.default_rng(2)
    n = 2
    for _ in range(5):
        P = random_polynomial(F, n, 4, rng)
        derivs = {i: hasse_derivative(P, i) for i in multi_indices(n, 5)}
        for y in itertools.product(range(F.q), repeat=n):
            for t in itertools.product(range(F.q), repeat=n):
                lhs = evaluate(P, [int(F.add(a, b)) for a, b in zip(y, t)]).value
                rhs = 0
                for i, D in derivs.items():
                    term = evaluate(D, y).value
                    for tj, ij in zip(t, i):
                        term = int(F.mul(term, F.power(tj, ij)))
                    rhs = int(F.add(rhs, term))
                assert lhs == rhs


def test_hasse_composition(F):
    """D^i D^j = C(i+j, i) D^{i+j} coordinatewise."""
    rng = np.random.default_rng(3)
    P = random_polynomial(F, 2, 6, rng, density=0.8)
    for i in multi_indices(2, 3):
        for j in multi_indices(2, 3):
            s = tuple(a + b for a, b in zip(i, j))
            c = 1
            for a, b in zip(i, s):
                c *= comb(b, a)
            assert hasse_derivative(hasse_derivative(P, j), i) == hasse_derivative(P, s) * (c % F.p)


def test_hasse_in_characteristic_p():
    # D^(2) x^2 = 1 even though the ordinary second derivative is 0 mod 2
    F = GF(2)
    x = Polynomial.variable(F, 1, 0)
    assert hasse_derivative(x * x, (2,)) == Polynomial.constant(F, 1, 1)
    assert hasse_derivative(x * x, (1,)).is_zero()


def test_order_multiplicative(F):
    rng = np.random.default_rng(4)
    for _ in range(15):
        P = random_polynomial(F, 2, 3, rng)
        Q = random_polynomial(F, 2, 3, rng)
        if P.is_zero() or Q.is_zero():
            continue
        for y in [(0, 0), (1, 2 % F.q)]:
            assert order_at(P * Q, y) == order_at(P, y) + order_at(Q, y)


def test_order_examples():
    F = GF(5)
    x = Polynomial.variable(F, 2, 0)
    y = Polynomial.variable(F, 2, 1)
    P = x * x * y
    assert order_at(P, (0, 0)) == 3
    assert order_at(P, (1, 0)) == 1
    assert order_at(P, (1, 1)) == 0
    assert order_at(Polynomial.zero(F, 2), (0, 0)) == math.inf
    assert order_at(P, (0, 0), cap=2) == 2  # capped: at least 2
    assert vanishes_to_order(P, (0, 0), 3)
    assert not vanishes_to_order(P, (0, 0), 4)


def test_substitute_curve_agrees_with_pointwise(F):
    rng = np.random.default_rng(5)
    P = random_polynomial(F, 2, 3, rng, density=0.9)
    C1 = Polynomial(F, 1, {(0,): 1, (1,): 2 % F.q})
    C2 = Polynomial(F, 1, {(2,): 1})
    comp = substitute_curve(P, [C1, C2])
    assert comp.degree <= 2 * 3
    for lam in range(F.q):
        pt = [evaluate(C1, [lam]).value, evaluate(C2, [lam]).value]
        assert evaluate(comp, [lam]) == evaluate(P, pt)


def test_vector_round_trip(F):
    cols = enumerate_monomials(2, 3)
    rng = np.random.default_rng(6)
    P = random_polynomial(F, 2, 3, rng)
    assert Polynomial.from_vector(F, cols, P.to_vector(cols)) == P
    assert Polynomial.from_json(F, P.to_json()) == P


def test_errors():
    F = GF(3)
    P = Polynomial.variable(F, 2, 0)
    with pytest.raises(ValueError):
        evaluate(P, (0,))
    with pytest.raises(ValueError):
        evaluate(P, (0, 3))
    with pytest.raises(ValueError):
        hasse_derivative(P, (1,))
    with pytest.raises(Exception):
        P + Polynomial.variable(GF(5), 2, 0)
