from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from confvand.poly import (
    NEG_INF,
    Polynomial,
    derivative,
    evaluate,
    series_reciprocal_at,
    taylor_coefficients_at,
)
from confvand.scalar import factorial

from conftest import rationals

X = Polynomial([0, 1])


def polys(max_degree=8):
    return st.lists(rationals(20), max_size=max_degree + 1).map(Polynomial)


def test_normalization():
    assert Polynomial([1, 2, 0, 0]).coeffs == (1, 2)
    assert Polynomial([0, 0]).coeffs == ()
    assert Polynomial().degree == NEG_INF
    assert Polynomial([5]).degree == 0


def test_difference_of_squares():
    assert (X - 1) * (X + 1) == Polynomial([-1, 0, 1])


def test_add_zero_identity():
    p = Polynomial([3, Fraction(1, 2), -1])
    assert p + Polynomial() == p


def test_quartic_expansion():
    p = (X - 1) ** 3 * (X - 2)
    assert p == Polynomial([2, -7, 9, -5, 1])
    # oracle: the factored form at a few points
    for x in range(4):
        assert evaluate(p, x) == (x - 1) ** 3 * (x - 2)


def test_eval_examples():
    assert evaluate(Polynomial([-1, 0, 1]), 3) == 8
    assert evaluate(Polynomial(), Fraction(7, 3)) == 0
    assert evaluate((X - 1) ** 3 * (X - 2), 5) == 4**3 * 3 == 192


def test_derivative_examples():
    assert derivative(X**3) == Polynomial([0, 0, 3])
    assert derivative(X, 2) == Polynomial()
    assert evaluate(derivative(X**3, 3), 0) == 6
    with pytest.raises(ValueError):
        derivative(X, -1)


def test_taylor_examples():
    assert taylor_coefficients_at(X**2, 1, 3) == [1, 2, 1]
    p = Polynomial([4, -3, 2, 7])
    assert taylor_coefficients_at(p, 0, 3) == [4, -3, 2]
    assert taylor_coefficients_at((X - 1) ** 3 * (X - 2), 1, 2) == [0, 0]
    # asking for more than deg+1 coefficients pads with zeros
    assert taylor_coefficients_at(X, 2, 4) == [2, 1, 0, 0]
    assert taylor_coefficients_at(Polynomial(), 2, 2) == [0, 0]


def test_reciprocal_examples():
    assert series_reciprocal_at(X - 1, 0, 3) == [-1, -1, -1]
    assert series_reciprocal_at(X + 1, 0, 3) == [1, -1, 1]
    assert series_reciprocal_at(Polynomial([1, 1, 1]), 0, 3) == [1, -1, 0]
    with pytest.raises(ZeroDivisionError):
        series_reciprocal_at(X - 2, 2, 3)


@given(polys(), rationals())
def test_taylor_recombines(p, alpha):
    order = max(len(p.coeffs), 1)
    tc = taylor_coefficients_at(p, alpha, order)
    assert Polynomial.from_shifted(tc, alpha) == p


@given(polys(), rationals(), st.integers(1, 9))
def test_taylor_matches_derivatives(p, alpha, order):
    # independent route: symbolic differentiation then evaluation
    tc = taylor_coefficients_at(p, alpha, order)
    for i, c in enumerate(tc):
        assert c == evaluate(derivative(p, i), alpha) / factorial(i)


@given(polys(), rationals(), st.integers(1, 8))
def test_reciprocal_inverts_series(p, alpha, order):
    if evaluate(p, alpha) == 0:
        return
    shifted = taylor_coefficients_at(p, alpha, order)
    g = series_reciprocal_at(p, alpha, order)
    prod = [sum(shifted[t] * g[i - t] for t in range(i + 1)) for i in range(order)]
    assert prod == [1] + [0] * (order - 1)


@given(polys(5), polys(5))
def test_leibniz(p, q):
    assert derivative(p * q) == derivative(p) * q + p * derivative(q)


@given(polys(5), polys(5), rationals())
def test_eval_is_ring_homomorphism(p, q, x):
    assert evaluate(p * q, x) == evaluate(p, x) * evaluate(q, x)
    assert evaluate(p + q, x) == evaluate(p, x) + evaluate(q, x)


def test_float_coefficients_stay_float():
    p = Polynomial([0.5, 1.0])
    assert isinstance(evaluate(p, 2.0), float)
    assert series_reciprocal_at(p, 0.0, 2) == [2.0, -4.0]
