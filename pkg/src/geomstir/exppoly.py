"""Generalized exponential (Bell-type) polynomials over a Stirling triangle.

S_n(x) = sum_k S(n, k; alpha, beta, r) x^k.  The classical Bell polynomials
are the (0, 1, 0) instance and the shifted variant is (0, 1, r).

Includes the addition formula of Spivey type, the shifted generating
series, and the weighted-integral route from S_n to the geometric family
(the one deliberately floating-point computation in the package).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from scipy.special import roots_genlaguerre

from .geom import PolyParams, a_eval
from .series import Series, binomial_series, gff, series_exp
from .stirling import StirlingParams, stirling_rec
from .xpoly import XPolynomial

Rational = Fraction


def _q(v) -> Fraction:
    return v if isinstance(v, Fraction) else Fraction(v)


@dataclass(frozen=True)
class ExpPolyParams:
    alpha: Fraction
    beta: Fraction
    r: Fraction

    def __post_init__(self):
        object.__setattr__(self, "alpha", _q(self.alpha))
        object.__setattr__(self, "beta", _q(self.beta))
        object.__setattr__(self, "r", _q(self.r))

    def stirling(self) -> StirlingParams:
        return StirlingParams(self.alpha, self.beta, self.r)


def s_exp_explicit(p: ExpPolyParams, n: int) -> XPolynomial:
    """S_n as a polynomial in x, straight from the triangle rows."""
    sp = p.stirling()
    return XPolynomial([stirling_rec(sp, n, k) for k in range(n + 1)])


def s_exp_eval(p: ExpPolyParams, n: int, x) -> Fraction:
    return s_exp_explicit(p, n)(_q(x))


def s_exp_egf(p: ExpPolyParams, x, order: int) -> Series:
    """Truncated generating series with EGF values S_n(x):

    (1 + alpha t)^(r/alpha) * exp( x/beta * ((1 + alpha t)^(beta/alpha) - 1) )

    beta == 0 has no closed bracket of this shape; use the explicit route.
    """
    if p.beta == 0:
        raise ValueError("generating-series route needs beta != 0")
    x = _q(x)
    bracket = binomial_series(p.alpha, p.beta, order).add_const(-1)
    return binomial_series(p.alpha, p.r, order) * series_exp(
        bracket.scale(x / p.beta)
    )


class SpiveyCheck(NamedTuple):
    printed: bool    # inner triangle read with the outer (n, k) indices
    classical: bool  # inner triangle read with the (m, j) indices


def check_spivey(p: ExpPolyParams, x, n: int, m: int) -> SpiveyCheck:
    """Addition formula S_{n+m}(x) = sum_j sum_k C(n,k) S(m,j) *
    (j beta - m alpha | alpha)_{n-k} S_k(x) x^j, plus the printed index
    variant that reuses (n, k) inside the triangle factor."""
    x = _q(x)
    lhs = s_exp_eval(p, n + m, x)
    sp = p.stirling()

    def rhs(use_outer: bool) -> Fraction:
        acc = Fraction(0)
        for k in range(n + 1):
            for j in range(m + 1):
                tri = stirling_rec(sp, n, k) if use_outer else stirling_rec(sp, m, j)
                if not tri:
                    continue
                acc += (
                    math.comb(n, k)
                    * tri
                    * gff(j * p.beta - m * p.alpha, p.alpha, n - k)
                    * s_exp_eval(p, k, x)
                    * x ** j
                )
        return acc

    return SpiveyCheck(printed=lhs == rhs(True), classical=lhs == rhs(False))


def lemma34_sides(p: ExpPolyParams, x, m: int, order: int) -> tuple[Series, Series]:
    """Both sides of the shifted generating series:

    sum_n S_{n+m}(x) t^n/n! = (1+alpha t)^((r - m alpha)/alpha)
        * exp(x/beta ((1+alpha t)^(beta/alpha) - 1))
        * S_m(x (1+alpha t)^(beta/alpha))

    where the last factor evaluates the degree-m polynomial at a series
    argument.  Truncated at `order`.
    """
    if p.beta == 0:
        raise ValueError("generating-series route needs beta != 0")
    x = _q(x)
    lhs = Series.from_egf(
        [s_exp_eval(p, n + m, x) for n in range(order + 1)]
    )
    grow = binomial_series(p.alpha, p.beta, order)
    shifted = binomial_series(p.alpha, p.r - m * p.alpha, order)
    expo = series_exp(
        binomial_series(p.alpha, p.beta, order).add_const(-1).scale(x / p.beta)
    )
    poly_at_series = _poly_of_series(s_exp_explicit(p, m), grow.scale(x))
    return lhs, shifted * expo * poly_at_series


def check_lemma34(p: ExpPolyParams, x, m: int, order: int) -> bool:
    lhs, rhs = lemma34_sides(p, x, m, order)
    return lhs == rhs


def _poly_of_series(poly: XPolynomial, arg: Series) -> Series:
    """Horner evaluation of a polynomial at a series argument."""
    order = arg.order
    acc = Series((Fraction(0),) * (order + 1))
    for c in reversed(poly.coeffs):
        acc = (acc * arg).add_const(c)
    return acc


def check_integral_rep(params: PolyParams, x: float, n: int) -> tuple[float, float]:
    """Weighted-integral route to the geometric family:

    A_n(x) = (-1)^n / (lam-1)! * integral_0^inf z^(lam-1) e^-z
             S_n(-beta x z; alpha, -beta, -gamma) dz

    evaluated with generalized Gauss-Laguerre nodes (weight z^(lam-1) e^-z),
    max(n+2, 16) of them, so the degree-n integrand is integrated exactly up
    to roundoff.  Returns (quadrature value, exact value as float).
    """
    if params.lam < 1:
        raise ValueError("integral route needs lam >= 1")
    nodes, weights = roots_genlaguerre(max(n + 2, 16), params.lam - 1)
    inner = ExpPolyParams(params.alpha, -params.beta, -params.gamma)
    sn = s_exp_explicit(inner, n)
    scale = -float(params.beta) * x
    total = 0.0
    for z, w in zip(nodes, weights):
        total += w * sn(scale * z)
    quad = (-1.0) ** n * total / math.factorial(params.lam - 1)
    exact = float(a_eval(params, n, _q_from_float(x)))
    return quad, exact


def _q_from_float(x) -> Fraction:
    # exact binary value of the float; keeps the comparison honest
    return Fraction(x) if not isinstance(x, Fraction) else x
