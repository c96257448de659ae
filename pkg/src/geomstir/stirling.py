"""Three-parameter generalized Stirling triangles over exact rationals.

For rational parameters (alpha, beta, gamma) the triangle S(n, k) is fixed
by the boundary

    S(0, 0) = 1,   S(n, 0) = (gamma | alpha)_n,   S(n, n) = 1,
    S(n, k) = 0 for k > n or k < 0,

and the recurrence

    S(n+1, k) = S(n, k-1) + (k*beta - n*alpha + gamma) * S(n, k).

Specializations: (0, 1, 0) gives the partition-count triangle, (1, 0, 0)
the signed factorial-expansion triangle, (0, 1, r) and (1, 0, r) their
shifted variants.  The triangle with parameters (beta, alpha, -gamma) is
the two-sided inverse, which is what stirling_dual computes.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction

from .series import Series, binom, binomial_series, gff, series_int_pow

Rational = Fraction


def _q(v) -> Fraction:
    return v if isinstance(v, Fraction) else Fraction(v)


@dataclass(frozen=True)
class StirlingParams:
    alpha: Fraction
    beta: Fraction
    gamma: Fraction

    def __post_init__(self):
        object.__setattr__(self, "alpha", _q(self.alpha))
        object.__setattr__(self, "beta", _q(self.beta))
        object.__setattr__(self, "gamma", _q(self.gamma))

    def dual(self) -> "StirlingParams":
        return StirlingParams(self.beta, self.alpha, -self.gamma)


class StirlingTable:
    """Row-by-row memoized triangle for one parameter triple."""

    def __init__(self, params: StirlingParams):
        self.params = params
        self._rows = [[Fraction(1)]]
        self._lock = threading.Lock()

    def _extend(self, n: int):
        a, b, g = self.params.alpha, self.params.beta, self.params.gamma
        while len(self._rows) <= n:
            m = len(self._rows) - 1  # previous row index
            prev = self._rows[-1]
            row = [prev[0] * (g - m * a)]
            for k in range(1, m + 1):
                row.append(prev[k - 1] + (k * b - m * a + g) * prev[k])
            row.append(Fraction(1))
            self._rows.append(row)

    def value(self, n: int, k: int) -> Fraction:
        if n < 0:
            raise ValueError("need n >= 0")
        if k < 0 or k > n:
            return Fraction(0)
        if len(self._rows) <= n:
            with self._lock:
                self._extend(n)
        return self._rows[n][k]


_tables: dict[StirlingParams, StirlingTable] = {}
_tables_lock = threading.Lock()


def _table(params: StirlingParams) -> StirlingTable:
    try:
        return _tables[params]
    except KeyError:
        with _tables_lock:
            return _tables.setdefault(params, StirlingTable(params))


def stirling_rec(params: StirlingParams, n: int, k: int) -> Fraction:
    """S(n, k) from the memoized recurrence; works for every rational triple."""
    return _table(params).value(n, k)


def stirling_explicit(params: StirlingParams, n: int, k: int) -> Fraction:
    """Finite-difference form, valid only when beta != 0:

    S(n, k) = 1/(beta^k k!) * sum_{s=0}^{k} (-1)^(k-s) C(k,s) (beta*s + gamma | alpha)_n
    """
    if params.beta == 0:
        raise ValueError("explicit form needs beta != 0; use stirling_rec")
    if n < 0 or k < 0:
        raise ValueError("need n, k >= 0")
    if k > n:
        return Fraction(0)
    a, b, g = params.alpha, params.beta, params.gamma
    acc = Fraction(0)
    sign = (-1) ** k
    for s in range(k + 1):
        acc += sign * math.comb(k, s) * gff(b * s + g, a, n)
        sign = -sign
    return acc / (b ** k * math.factorial(k))


def stirling_dual(params: StirlingParams, n: int, k: int) -> Fraction:
    """The inverse triangle: the (beta, alpha, -gamma) instance.

    Summing stirling_dual(p, n, k) * stirling_rec(p, k, m) over k gives
    delta(n, m), and the product in the other order does too.
    """
    return stirling_rec(params.dual(), n, k)


def stirling_egf_check(params: StirlingParams, k: int, order: int) -> Series:
    """Column generating series whose EGF value at n is k! * S(n, k):

    (1 + alpha t)^(gamma/alpha) * [((1 + alpha t)^(beta/alpha) - 1)/beta]^k
    """
    if params.beta == 0:
        raise ValueError("column series needs beta != 0")
    base = binomial_series(params.alpha, params.beta, order).add_const(-1)
    bracket = base.scale(1 / params.beta)
    return binomial_series(params.alpha, params.gamma, order) * series_int_pow(bracket, k)


def param_swap_rhs(params: StirlingParams, n: int, k: int) -> Fraction:
    """The binomial transform sum_{s=k}^{n} C(n,s) (gamma | alpha)_{n-s} S(s, k).

    Returned on its own so callers can compare it against candidate left
    sides; see the conformance harness for the readings that are tracked.
    """
    a, g = params.alpha, params.gamma
    acc = Fraction(0)
    for s in range(k, n + 1):
        acc += math.comb(n, s) * gff(g, a, n - s) * stirling_rec(params, s, k)
    return acc


def binom_rational(a, k: int) -> Fraction:
    """Re-export of the rational binomial for callers living at this level."""
    return binom(a, k)
