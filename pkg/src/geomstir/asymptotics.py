"""Large-order asymptotics for the geometric family.

For psi(t) = sum a_n t^n with a_0 = 1, the coefficient of t^n in psi^lam
admits the expansion

    [t^n] psi^lam / (lam)_n  =  sum_{j=0}^{s} W(n,j) / (lam-n+j)_j + o(...)

with falling factorials (lam)_j = lam(lam-1)...(lam-j+1) and

    W(n,j) = sum over partitions of n into n-j parts of
             prod a_i^(k_i) / k_i!.

Taking psi to be the order-1 geometric generating series makes the left
side A_n^(lam,x)(alpha, beta, lam*gamma) / (lam)_n / n!, which is what
hsu_expansion predicts.  At full depth (s = n) the expansion is a finite
exact identity for integer lam >= n; for s < n the truncation error decays
like lam^-(s+1).

Everything is exact rational arithmetic; callers format floats for display.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .geom import PolyParams, a_eval
from .oracle import partitions_with_parts
from .series import falling, gff

Rational = Fraction


def _q(v) -> Fraction:
    return v if isinstance(v, Fraction) else Fraction(v)


def w_coefficient(a: Sequence[Fraction], n: int, j: int) -> Fraction:
    """W(n, j) from the coefficient list a = [a_1, ..., a_n].

    j = n is the empty partition set for n >= 1 (value 0); W(0, 0) = 1.
    """
    if not 0 <= j <= n:
        raise IndexError(f"need 0 <= j <= n, got j={j}, n={n}")
    if len(a) < n:
        raise IndexError(f"need at least {n} coefficients, got {len(a)}")
    total = Fraction(0)
    for part in partitions_with_parts(n, n - j):
        term = Fraction(1)
        for size, mult in part.multiplicities().items():
            term *= _q(a[size - 1]) ** mult / math.factorial(mult)
        total += term
    return total


def a_coefficients(alpha, beta, gamma, x, n: int) -> list[Fraction]:
    """a_1 .. a_n of the order-1 generating series, a_j = A_j(x) / j!."""
    x = _q(x)
    base = PolyParams(1, _q(alpha), _q(beta), _q(gamma))
    return [
        a_eval(base, j, x) / math.factorial(j) for j in range(1, n + 1)
    ]


@dataclass(frozen=True)
class ExpansionInput:
    a: tuple[Fraction, ...]  # a_1 .. a_n; a_0 = 1 is implicit
    n: int
    s: int
    lam: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(_q(v) for v in self.a))
        object.__setattr__(self, "lam", _q(self.lam))
        if not 0 <= self.s <= self.n:
            raise ValueError("need 0 <= s <= n")


@dataclass(frozen=True)
class ExpansionResult:
    terms: tuple[Fraction, ...]  # W(n,j) / (lam-n+j)_j for j = 0..s
    total: Fraction
    predicted: Fraction          # (lam)_n * n! * total, the A-scale value


def hsu_expansion(inp: ExpansionInput) -> ExpansionResult:
    n, s, lam = inp.n, inp.s, inp.lam
    terms = []
    for j in range(s + 1):
        denom = falling(lam - n + j, j)
        if denom == 0:
            raise ValueError(f"vanishing denominator (lam-n+j)_j at j={j}")
        terms.append(w_coefficient(inp.a, n, j) / denom)
    total = sum(terms, Fraction(0))
    predicted = falling(lam, n) * math.factorial(n) * total
    return ExpansionResult(tuple(terms), total, predicted)


def predict_a(alpha, beta, gamma, x, n: int, s: int, lam) -> Fraction:
    """s-term prediction of A_n^(lam,x)(alpha, beta, lam*gamma)."""
    a = a_coefficients(alpha, beta, gamma, x, n)
    return hsu_expansion(ExpansionInput(tuple(a), n, s, _q(lam))).predicted


def closed_form_w_check(alpha, beta, gamma, x, n: int) -> bool:
    """Compare w_coefficient against the hand-expanded W(n,0..2) forms.

    Needs n >= 4 so none of the closed forms degenerate.  When gamma = 0
    the shorter gamma-free instantiations are checked as well.
    """
    if n < 4:
        raise ValueError("closed forms need n >= 4")
    al, b, g, x = _q(alpha), _q(beta), _q(gamma), _q(x)
    a = a_coefficients(al, b, g, x, n)

    a1 = g + b * x
    a2 = (gff(g, -al, 2) + b * (b + 2 * g + al) * x + 2 * b**2 * x**2) / 2
    a3 = (
        gff(g, -al, 3)
        + b * (gff(-g, al, 2) + (b + g + 2 * al) * (b + 2 * g + al)) * x
        + 6 * b**2 * (b + al + g) * x**2
        + 6 * b**3 * x**3
    ) / 6
    w0 = a1**n / math.factorial(n)
    w1 = a1 ** (n - 2) * a2 / math.factorial(n - 2)
    w2 = (
        a1 ** (n - 3) * a3 / math.factorial(n - 3)
        + a1 ** (n - 4) * a2**2 / (2 * math.factorial(n - 4))
    )
    ok = (
        w_coefficient(a, n, 0) == w0
        and w_coefficient(a, n, 1) == w1
        and w_coefficient(a, n, 2) == w2
    )

    if ok and g == 0:
        a1z = b * x
        a2z = b * (b + al) * x / 2 + b**2 * x**2
        a3z = (
            b * (b + al) * (b + 2 * al) * x
            + 6 * b**2 * (b + al) * x**2
            + 6 * b**3 * x**3
        ) / 6
        ok = (
            w_coefficient(a, n, 0) == a1z**n / math.factorial(n)
            and w_coefficient(a, n, 1)
            == a1z ** (n - 2) * a2z / math.factorial(n - 2)
            and w_coefficient(a, n, 2)
            == a1z ** (n - 3) * a3z / math.factorial(n - 3)
            + a1z ** (n - 4) * a2z**2 / (2 * math.factorial(n - 4))
        )
    return ok


@dataclass(frozen=True)
class DecayRow:
    lam: int
    exact: Fraction
    predicted: Fraction

    @property
    def rel_error(self) -> Fraction:
        if self.exact == 0:
            return abs(self.predicted)
        return abs(self.exact - self.predicted) / abs(self.exact)


@dataclass(frozen=True)
class DecayReport:
    alpha: Fraction
    beta: Fraction
    gamma: Fraction
    x: Fraction
    n: int
    s: int
    rows: tuple[DecayRow, ...]

    def ratios(self) -> list[Fraction | None]:
        """Consecutive rel-error ratios; None where undefined."""
        out: list[Fraction | None] = [None]
        for prev, cur in zip(self.rows, self.rows[1:]):
            pe, ce = prev.rel_error, cur.rel_error
            out.append(ce / pe if pe != 0 else None)
        return out


def error_decay_report(alpha, beta, gamma, x, n: int, s: int,
                       lambdas: Sequence[int]) -> DecayReport:
    """Exact vs predicted A_n^(lam,x)(alpha, beta, lam*gamma) per lam.

    lam values must be integers (the exact route needs an integer order)
    and must exceed n - 1 so the expansion denominators are nonzero.
    """
    al, b, g, x = _q(alpha), _q(beta), _q(gamma), _q(x)
    a = a_coefficients(al, b, g, x, n)
    rows = []
    for lam in lambdas:
        if not isinstance(lam, int) or lam <= n - 1:
            raise ValueError(f"lam={lam} must be an integer > n-1 = {n - 1}")
        exact = a_eval(PolyParams(lam, al, b, lam * g), n, x)
        res = hsu_expansion(ExpansionInput(tuple(a), n, s, Fraction(lam)))
        rows.append(DecayRow(lam, exact, res.predicted))
    return DecayReport(al, b, g, x, n, s, tuple(rows))


def format_sig(value: Fraction | float, digits: int = 12) -> str:
    """Fixed significant-digit rendering used by reports."""
    return f"{float(value):.{digits}g}"
