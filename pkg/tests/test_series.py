import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from geomstir import Series, XPolynomial, binom, falling, gff, rising
from geomstir.series import (
    binomial_series,
    lift_to_poly,
    series_exp,
    series_geom_inverse,
    series_int_pow,
    series_one,
)

Q = Fraction
small_q = st.fractions(min_value=-3, max_value=3, max_denominator=3)


def test_gff_basics():
    assert gff(Q(5), Q(1), 3) == 5 * 4 * 3
    assert gff(Q(5), Q(0), 3) == 125
    assert gff(Q(5), Q(2), 2) == 5 * 3
    assert gff(Q(5), Q(1), 0) == 1
    assert falling(Q(4), 2) == 12
    assert rising(Q(4), 2) == 20
    with pytest.raises(ValueError):
        gff(Q(1), Q(1), -1)


def test_gff_polynomial_argument():
    x = XPolynomial.x()
    assert gff(x, Q(1), 2) == XPolynomial([0, -1, 1])  # x(x-1)


def test_binom_rational_argument():
    assert binom(Q(1, 2), 2) == Q(-1, 8)
    assert binom(Q(5), 2) == 10
    assert binom(Q(3), 5) == 0


def test_series_round_trips():
    s = Series.from_egf([Q(1), Q(1), Q(2), Q(6)])
    assert s.egf_values() == [1, 1, 2, 6]
    assert s.coefficient(3) == Q(1)  # 6 / 3!
    assert s.order == 3
    assert Series.from_ordinary(s.coeffs) == s


def test_series_requires_matching_orders():
    with pytest.raises(ValueError):
        series_one(3) + series_one(4)


def test_cauchy_product_against_naive_loop():
    f = Series.from_ordinary([Q(1), Q(2), Q(3), Q(4)])
    g = Series.from_ordinary([Q(5), Q(6), Q(7), Q(8)])
    prod = f * g
    for n in range(4):
        naive = sum(f.coefficient(i) * g.coefficient(n - i) for i in range(n + 1))
        assert prod.coefficient(n) == naive


def test_geom_inverse_round_trip():
    f = Series.from_ordinary([Q(1), Q(-2), Q(1, 3), Q(5)])
    assert f * series_geom_inverse(f) == series_one(3)


def test_geom_inverse_needs_unit_constant():
    with pytest.raises(ValueError):
        series_geom_inverse(Series.from_ordinary([Q(0), Q(1)]))


def test_int_pow_matches_repeated_product():
    f = Series.from_ordinary([Q(1), Q(1), Q(1, 2)])
    assert series_int_pow(f, 3) == f * f * f
    assert series_int_pow(f, 0) == series_one(2)
    assert series_int_pow(f, -2) * f * f == series_one(2)


def test_series_exp_of_t():
    t = Series.from_ordinary([Q(0), Q(1), Q(0), Q(0), Q(0)])
    e = series_exp(t)
    for n in range(5):
        assert e.coefficient(n) == Q(1, math.factorial(n))


def test_series_exp_rejects_nonzero_constant():
    with pytest.raises(ValueError):
        series_exp(series_one(2))


def test_binomial_series_values_are_gff():
    # (1 + alpha t)^(beta/alpha) carries EGF values (beta | alpha)_n
    a, b = Q(2), Q(3)
    s = binomial_series(a, b, 5)
    for n in range(6):
        assert s.egf_value(n) == gff(b, a, n)


def test_binomial_series_alpha_zero_is_exp():
    s = binomial_series(Q(0), Q(2), 4)
    for n in range(5):
        assert s.egf_value(n) == Q(2) ** n


@settings(max_examples=60)
@given(small_q, small_q, small_q)
def test_binomial_exponent_additivity(a, b1, b2):
    order = 5
    lhs = binomial_series(a, b1, order) * binomial_series(a, b2, order)
    assert lhs == binomial_series(a, b1 + b2, order)


@settings(max_examples=40)
@given(st.lists(small_q, min_size=1, max_size=5))
def test_inverse_round_trip_property(tail):
    f = Series.from_ordinary([Q(1)] + tail)
    assert f * series_geom_inverse(f) == series_one(f.order)


def test_lift_to_poly_promotes_coefficients():
    f = lift_to_poly(series_one(2))
    assert isinstance(f.coefficient(0), XPolynomial)
    scaled = f.scale(XPolynomial.x())
    assert scaled.coefficient(0) == XPolynomial.x()
