"""Conformance harness: every identity in the library, run over a grid.

Each registry entry owns an id, a kind, an anchor (a plain rendering of the
statement being tested), a point generator, and an evaluator that returns
both sides of the identity for every reading of it.  A reading passes at a
point when its two sides are exactly equal.

Kinds:
  * hard      -- identities that hold for all parameters; any failure is an
                 implementation bug and should fail the build.
  * recorded  -- circulating displays with known defects, tracked alongside
                 their repaired readings; failures are reported, not fatal.

Reports are deterministic: same GridSpec, byte-identical output.
"""

from __future__ import annotations

import json
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from fractions import Fraction
from itertools import product
from typing import Callable

from .euler import EulerParams, HALF, _ev as euler_value
from .exppoly import ExpPolyParams, lemma34_sides, s_exp_eval, s_exp_egf
from .geom import (
    PolyParams,
    _stirling_a,
    a_egf,
    a_eval,
    a_explicit,
    a_recurrence,
    lam_binom,
)
from .oracle import MAX_ORACLE_N, BPAConfig, count_bpa
from .series import Series, gff, rising
from .stirling import (
    StirlingParams,
    param_swap_rhs,
    stirling_explicit,
    stirling_rec,
)
from .xpoly import XPolynomial

SCHEMA = "geomstir-conformance/1"


def _q(v) -> Fraction:
    return v if isinstance(v, Fraction) else Fraction(v)


# ---------------------------------------------------------------------------
# grid


@dataclass(frozen=True)
class GridSpec:
    """Declarative parameter grid.  All rationals, finite, deterministic.

    select = None runs every identity; an explicit tuple runs that subset
    (empty tuple: nothing).
    """

    n_max: int = 8
    oracle_n_max: int = 5
    shift_ms: tuple[int, ...] = (0, 1, 2)
    poly_points: tuple[tuple, ...] = ()    # (lam, alpha, beta, gamma)
    pair_points: tuple[tuple, ...] = ()    # (lam1, g1, lam2, g2, alpha, beta)
    exp_points: tuple[tuple, ...] = ()     # (alpha, beta, r)
    euler_points: tuple[tuple, ...] = ()   # (lam, alpha, beta, gamma)
    x_values: tuple[Fraction, ...] = ()
    select: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.n_max < 0 or self.oracle_n_max < 0:
            raise ValueError("grid needs nonnegative n ranges")
        object.__setattr__(
            self,
            "poly_points",
            tuple((int(l), _q(a), _q(b), _q(g)) for l, a, b, g in self.poly_points),
        )
        object.__setattr__(
            self,
            "pair_points",
            tuple(
                (int(l1), _q(g1), int(l2), _q(g2), _q(a), _q(b))
                for l1, g1, l2, g2, a, b in self.pair_points
            ),
        )
        object.__setattr__(
            self, "exp_points",
            tuple((_q(a), _q(b), _q(r)) for a, b, r in self.exp_points),
        )
        object.__setattr__(
            self,
            "euler_points",
            tuple((int(l), _q(a), _q(b), _q(g)) for l, a, b, g in self.euler_points),
        )
        object.__setattr__(self, "x_values", tuple(_q(x) for x in self.x_values))
        object.__setattr__(self, "shift_ms", tuple(int(m) for m in self.shift_ms))
        if self.select is not None:
            object.__setattr__(self, "select", tuple(str(s) for s in self.select))

    def stirling_triples(self) -> tuple[tuple, ...]:
        seen, out = set(), []
        for _, a, b, g in self.poly_points:
            if (a, b, g) not in seen:
                seen.add((a, b, g))
                out.append((a, b, g))
        return tuple(out)

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2)

    def as_dict(self) -> dict:
        return {
            "n_max": self.n_max,
            "oracle_n_max": self.oracle_n_max,
            "shift_ms": list(self.shift_ms),
            "poly_points": [[p[0], str(p[1]), str(p[2]), str(p[3])]
                            for p in self.poly_points],
            "pair_points": [[p[0], str(p[1]), p[2], str(p[3]), str(p[4]), str(p[5])]
                            for p in self.pair_points],
            "exp_points": [[str(a), str(b), str(r)] for a, b, r in self.exp_points],
            "euler_points": [[p[0], str(p[1]), str(p[2]), str(p[3])]
                             for p in self.euler_points],
            "x_values": [str(x) for x in self.x_values],
            "select": None if self.select is None else list(self.select),
        }

    @classmethod
    def from_json(cls, text: str) -> "GridSpec":
        # keys left out of the file keep their shipped defaults, so a file
        # like {"n_max": 10} widens the standard grid instead of emptying it
        raw = json.loads(text)
        base = default_grid()
        return cls(
            n_max=raw.get("n_max", base.n_max),
            oracle_n_max=raw.get("oracle_n_max", base.oracle_n_max),
            shift_ms=tuple(raw.get("shift_ms", base.shift_ms)),
            poly_points=tuple(
                (p[0], Fraction(p[1]), Fraction(p[2]), Fraction(p[3]))
                for p in raw["poly_points"]
            ) if "poly_points" in raw else base.poly_points,
            pair_points=tuple(
                (p[0], Fraction(p[1]), p[2], Fraction(p[3]),
                 Fraction(p[4]), Fraction(p[5]))
                for p in raw["pair_points"]
            ) if "pair_points" in raw else base.pair_points,
            exp_points=tuple(
                (Fraction(a), Fraction(b), Fraction(r))
                for a, b, r in raw["exp_points"]
            ) if "exp_points" in raw else base.exp_points,
            euler_points=tuple(
                (p[0], Fraction(p[1]), Fraction(p[2]), Fraction(p[3]))
                for p in raw["euler_points"]
            ) if "euler_points" in raw else base.euler_points,
            x_values=tuple(
                Fraction(x) for x in raw["x_values"]
            ) if "x_values" in raw else base.x_values,
            select=None if raw.get("select") is None else tuple(raw["select"]),
        )


def default_grid() -> GridSpec:
    q = Fraction
    return GridSpec(
        n_max=8,
        oracle_n_max=5,
        shift_ms=(0, 1, 2),
        poly_points=(
            (1, q(0), q(1), q(0)),
            (1, q(1), q(1), q(1)),
            (2, q(1), q(2), q(-1)),
            (2, q(1, 2), q(1), q(3, 2)),
            (3, q(-1), q(1), q(2)),
            (0, q(1), q(2), q(1)),
        ),
        pair_points=(
            (1, q(0), 1, q(0), q(0), q(1)),
            (1, q(1), 2, q(-1), q(1), q(1)),
            (2, q(3, 2), 1, q(1, 2), q(1), q(2)),
            (0, q(1), 2, q(0), q(1), q(1)),
        ),
        exp_points=(
            (q(0), q(1), q(0)),
            (q(1), q(1), q(1)),
            (q(1), q(2), q(-1)),
            (q(1, 2), q(1), q(3, 2)),
        ),
        euler_points=(
            (1, q(0), q(1), q(0)),
            (1, q(1), q(1), q(1)),
            (2, q(1), q(2), q(-1)),
            (3, q(1, 2), q(1), q(3, 2)),
        ),
        x_values=(q(1), q(2), q(-1, 2)),
    )


# ---------------------------------------------------------------------------
# identity registry

Sides = "tuple[object, object]"
Point = dict


def _params(pt: Point) -> PolyParams:
    return PolyParams(pt["lam"], pt["alpha"], pt["beta"], pt["gamma"])


def _poly_pts(grid: GridSpec, min_lam=0, need_beta=False, ms=None):
    pts = []
    for lam, a, b, g in grid.poly_points:
        if lam < min_lam or (need_beta and b == 0):
            continue
        for n in range(grid.n_max + 1):
            if ms is None:
                pts.append({"lam": lam, "alpha": a, "beta": b, "gamma": g, "n": n})
            else:
                for m in ms:
                    pts.append({"lam": lam, "alpha": a, "beta": b, "gamma": g,
                                "n": n, "m": m})
    return pts


def _stirling_pts(grid: GridSpec, need_beta=False):
    return [
        {"alpha": a, "beta": b, "gamma": g, "n": n}
        for a, b, g in grid.stirling_triples()
        if not (need_beta and b == 0)
        for n in range(grid.n_max + 1)
    ]


def _pair_pts(grid: GridSpec):
    return [
        {"lam1": l1, "gamma1": g1, "lam2": l2, "gamma2": g2,
         "alpha": a, "beta": b, "n": n}
        for l1, g1, l2, g2, a, b in grid.pair_points
        for n in range(grid.n_max + 1)
    ]


def _ev_routes_a(pt: Point) -> dict:
    p, n = _params(pt), pt["n"]
    e = a_explicit(p, n)
    return {
        "explicit-vs-series": (e, a_egf(p, n).values[n]),
        "explicit-vs-recurrence": (e, a_recurrence(p, n)),
    }


def _ev_routes_stirling(pt: Point) -> dict:
    sp = StirlingParams(pt["alpha"], pt["beta"], pt["gamma"])
    n = pt["n"]
    exp_row = tuple(stirling_explicit(sp, n, k) for k in range(n + 1))
    rec_row = tuple(stirling_rec(sp, n, k) for k in range(n + 1))
    return {"explicit-vs-recurrence": (exp_row, rec_row)}


def _ev_orthogonality(pt: Point) -> dict:
    sp = StirlingParams(pt["alpha"], pt["beta"], pt["gamma"])
    dp = sp.dual()
    n = pt["n"]
    unit = tuple(Fraction(int(m == n)) for m in range(n + 1))
    fwd = tuple(
        sum((stirling_rec(sp, n, k) * stirling_rec(dp, k, m)
             for k in range(n + 1)), Fraction(0))
        for m in range(n + 1)
    )
    bwd = tuple(
        sum((stirling_rec(dp, n, k) * stirling_rec(sp, k, m)
             for k in range(n + 1)), Fraction(0))
        for m in range(n + 1)
    )
    return {"forward": (fwd, unit), "backward": (bwd, unit)}


def _oracle_pts(grid: GridSpec):
    cap = min(grid.oracle_n_max, MAX_ORACLE_N)
    pts = []
    for lam, a, b, g, x in product((0, 1, 2), (0, 1), (1, 2), (0, 1), (1, 2)):
        for n in range(cap + 1):
            pts.append({"lam": lam, "alpha": a, "beta": b, "gamma": g,
                        "x": x, "n": n})
    return pts


def _ev_oracle(pt: Point) -> dict:
    cfg = BPAConfig(pt["n"], pt["lam"], pt["alpha"], pt["beta"],
                    pt["gamma"], pt["x"])
    counted = Fraction(count_bpa(cfg))
    p = PolyParams(pt["lam"], Fraction(pt["alpha"]), Fraction(pt["beta"]),
                   Fraction(pt["gamma"]))
    return {"count-vs-explicit": (counted, a_eval(p, pt["n"], Fraction(pt["x"])))}


def _ev_thm6(pt: Point) -> dict:
    p, n = _params(pt), pt["n"]
    rhs = p.gamma * a_explicit(replace(p, gamma=p.gamma + p.alpha), n)
    rhs = rhs + (p.lam * p.beta * a_explicit(
        replace(p, lam=p.lam + 1, gamma=p.gamma + p.beta + p.alpha), n
    )).times_x()
    return {"main": (a_explicit(p, n + 1), rhs)}


def _ev_thm2(pt: Point) -> dict:
    p, n = _params(pt), pt["n"]
    lhs = a_explicit(p, n + 1)
    head = p.gamma * a_explicit(replace(p, gamma=p.gamma + p.alpha), n)
    zero_gamma = replace(p, gamma=Fraction(0))

    def tail(factor):
        acc = XPolynomial.zero()
        for k in range(n + 1):
            acc = acc + (math.comb(n, k) * a_explicit(factor, k)
                         * a_explicit(zero_gamma, n - k + 1))
        return acc

    return {
        "statement": (lhs, head + tail(replace(p, lam=0))),
        "proof": (lhs, head + tail(replace(p, beta=Fraction(0)))),
    }


def _ev_thm4(pt: Point) -> dict:
    p, n = _params(pt), pt["n"]
    rhs = p.gamma * a_explicit(replace(p, gamma=p.gamma + p.alpha), n)
    one_sec = replace(p, lam=1, gamma=p.gamma + p.beta + p.alpha)
    zero_gamma = replace(p, gamma=Fraction(0))
    conv = XPolynomial.zero()
    for k in range(n + 1):
        conv = conv + (math.comb(n, k) * a_explicit(one_sec, k)
                       * a_explicit(zero_gamma, n - k))
    rhs = rhs + (p.lam * p.beta * conv).times_x()
    return {"main": (a_explicit(p, n + 1), rhs)}


def _eq6_sides(pt: Point, removal_sign: int):
    p, n = _params(pt), pt["n"]
    lhs = a_explicit(replace(p, gamma=Fraction(0)), n)
    acc = XPolynomial.zero()
    for k in range(n + 1):
        acc = acc + (math.comb(n, k) * (-1) ** k
                     * gff(p.gamma, -removal_sign * p.alpha, k)
                     * a_explicit(p, n - k))
    return lhs, acc


def _ev_eq6(pt: Point) -> dict:
    return {"reflected": _eq6_sides(pt, -1)}


def _ev_eq6_printed(pt: Point) -> dict:
    # repaired reading included for side-by-side comparison
    return {"printed": _eq6_sides(pt, 1), "reflected": _eq6_sides(pt, -1)}


def _ev_eq7(pt: Point) -> dict:
    p, n = _params(pt), pt["n"]
    sp0 = StirlingParams(p.alpha, -p.beta, Fraction(0))
    rhs = XPolynomial.zero()
    for k in range(n + 1):
        c = lam_binom(p.lam, k)
        if not c:
            continue
        for i in range(n + 1):
            s = stirling_rec(sp0, i, k)
            if not s:
                continue
            rhs = rhs + XPolynomial.constant(
                c * math.comb(n, i) * (-1) ** (k + i) * p.beta ** k
                * math.factorial(k) * s * gff(p.gamma, -p.alpha, n - i)
            ).times_x(k)
    return {"main": (a_explicit(p, n), rhs)}


def _ev_eq8(pt: Point) -> dict:
    sp = StirlingParams(pt["alpha"], pt["beta"], pt["gamma"])
    n = pt["n"]
    swapped = StirlingParams(sp.alpha, sp.gamma, sp.beta)
    doubled = StirlingParams(sp.alpha, sp.beta, 2 * sp.gamma)
    rhs = tuple(param_swap_rhs(sp, n, k) for k in range(n + 1))
    return {
        "printed": (tuple(stirling_rec(swapped, n, k) for k in range(n + 1)), rhs),
        "gamma-doubled": (tuple(stirling_rec(doubled, n, k) for k in range(n + 1)), rhs),
    }


def _ev_eq31(pt: Point) -> dict:
    p, n = _params(pt), pt["n"]
    lifted = replace(p, lam=p.lam + 1)
    lhs = XPolynomial.x() * a_explicit(replace(lifted, gamma=p.gamma + p.beta), n)
    rhs = XPolynomial((1, 1)) * a_explicit(lifted, n) - a_explicit(p, n)
    return {"main": (lhs, rhs)}


def _ev_eq32(pt: Point) -> dict:
    p, n = _params(pt), pt["n"]
    lifted = replace(p, lam=p.lam + 1)
    lhs = a_explicit(replace(p, gamma=p.gamma - p.alpha), n + 1) \
        - p.lam * p.beta * XPolynomial((1, 1)) * a_explicit(lifted, n)
    rhs = (p.gamma - p.alpha - p.lam * p.beta) * a_explicit(p, n)
    return {"main": (lhs, rhs)}


def _sub_neg(poly: XPolynomial) -> XPolynomial:
    return poly(XPolynomial((-1, -1)))


def _ev_eq37(pt: Point) -> dict:
    p, n = _params(pt), pt["n"]
    t1 = a_explicit(replace(p, gamma=p.gamma + p.beta * p.lam), n)
    t2 = _sub_neg(a_explicit(replace(p, beta=-p.beta), n))
    t3r = (-1) ** n * _sub_neg(
        a_explicit(replace(p, alpha=-p.alpha, gamma=-p.gamma), n)
    )
    return {"pair": (t1, t2), "third-reflected": (t1, t3r)}


def _ev_eq37_printed(pt: Point) -> dict:
    p, n = _params(pt), pt["n"]
    t1 = a_explicit(replace(p, gamma=p.gamma + p.beta * p.lam), n)
    t3p = (-1) ** n * _sub_neg(a_explicit(replace(p, gamma=-p.gamma), n))
    t3r = (-1) ** n * _sub_neg(
        a_explicit(replace(p, alpha=-p.alpha, gamma=-p.gamma), n)
    )
    return {"third-printed": (t1, t3p), "third-reflected": (t1, t3r)}


def _ev_eq38(pt: Point) -> dict:
    p, n = _params(pt), pt["n"]
    sp = StirlingParams(p.alpha, p.beta, p.beta * p.lam - p.gamma)
    xp1 = XPolynomial((1, 1))
    rhs = XPolynomial.zero()
    for k in range(n + 1):
        c = lam_binom(p.lam, k)
        if not c:
            continue
        rhs = rhs + (c * (-p.beta) ** k * math.factorial(k)
                     * stirling_rec(sp, n, k)) * xp1 ** k
    return {"main": (a_explicit(p, n), (-1) ** n * rhs)}


def _pair_conv(pt: Point, second_lam: int) -> XPolynomial:
    a, b = pt["alpha"], pt["beta"]
    first = PolyParams(pt["lam1"], a, b, a + b + pt["gamma1"])
    second = PolyParams(second_lam, a, b, pt["gamma2"])
    acc = XPolynomial.zero()
    for k in range(pt["n"] + 1):
        acc = acc + (math.comb(pt["n"], k) * a_explicit(first, k)
                     * a_explicit(second, pt["n"] - k))
    return acc


def _ev_teo2(pt: Point) -> dict:
    a, b, n = pt["alpha"], pt["beta"], pt["n"]
    lam = pt["lam1"] + pt["lam2"]
    rhs = a_explicit(PolyParams(lam, a, b, a + b + pt["gamma1"] + pt["gamma2"]), n)
    return {"main": (_pair_conv(pt, pt["lam2"]), rhs)}


def _ev_teo1(pt: Point) -> dict:
    a, b, n = pt["alpha"], pt["beta"], pt["n"]
    lam = pt["lam1"] + pt["lam2"]
    gsum = pt["gamma1"] + pt["gamma2"]
    rhs = a_explicit(PolyParams(lam, a, b, gsum), n + 1) \
        - gsum * a_explicit(PolyParams(lam, a, b, gsum + a), n)
    return {
        "printed": ((b * lam * _pair_conv(pt, pt["lam2"])).times_x(), rhs),
        "shifted": ((b * lam * _pair_conv(pt, pt["lam2"] + 1)).times_x(), rhs),
    }


def _ev_shift_raise(pt: Point) -> dict:
    p, n, m = _params(pt), pt["n"], pt["m"]
    sp = _stirling_a(p)
    rhs = XPolynomial.zero()
    for k in range(m + 1):
        term = (stirling_rec(sp, m, k) * lam_binom(p.lam, k)
                * math.factorial(k) * (-p.beta) ** k
                * a_explicit(
                    PolyParams(p.lam + k, p.alpha, p.beta,
                               p.gamma + m * p.alpha + k * p.beta), n))
        rhs = rhs + term.times_x(k)
    return {"main": ((-1) ** m * a_explicit(p, n + m), rhs)}


_SHIFT_MARKERS = (Fraction(1), Fraction(2), Fraction(-3, 2))


def _shift_inverse_sides(pt: Point, arg_shift) -> tuple:
    p, n, m = _params(pt), pt["n"], pt["m"]
    lam, a, b, g = p.lam, p.alpha, p.beta, p.gamma
    dual = StirlingParams(a, -b, -g + m * a - lam * b).dual()
    lhs_vals, rhs_vals = [], []
    for x0 in _SHIFT_MARKERS:
        lhs_vals.append(a_explicit(PolyParams(lam + m, a, -b, g), n)(-x0 - 1))
        acc = Fraction(0)
        for k in range(m + 1):
            acc += ((-1) ** k * stirling_rec(dual, m, k)
                    * a_eval(PolyParams(lam, a, b, g - arg_shift(k) * a + lam * b),
                             n + k, x0))
        rhs_vals.append((-1) ** m * acc / (rising(Fraction(lam), m) * (b * x0) ** m))
    return tuple(lhs_vals), tuple(rhs_vals)


def _ev_shift_inverse(pt: Point) -> dict:
    m = pt["m"]
    return {
        "printed": _shift_inverse_sides(pt, lambda k: m),
        "rowwise": _shift_inverse_sides(pt, lambda k: k),
    }


def _spivey_pts(grid: GridSpec):
    return [
        {"alpha": a, "beta": b, "r": r, "x": x, "n": n, "m": m}
        for a, b, r in grid.exp_points
        for x in grid.x_values
        for n in range(grid.n_max + 1)
        for m in range(min(3, grid.n_max) + 1)
        if n + m <= grid.n_max
    ]


def _ev_spivey(pt: Point) -> dict:
    p = ExpPolyParams(pt["alpha"], pt["beta"], pt["r"])
    x, n, m = pt["x"], pt["n"], pt["m"]
    lhs = s_exp_eval(p, n + m, x)
    sp = p.stirling()

    def rhs(use_outer: bool) -> Fraction:
        acc = Fraction(0)
        for k in range(n + 1):
            for j in range(m + 1):
                tri = stirling_rec(sp, n, k) if use_outer else stirling_rec(sp, m, j)
                if not tri:
                    continue
                acc += (math.comb(n, k) * tri
                        * gff(j * p.beta - m * p.alpha, p.alpha, n - k)
                        * s_exp_eval(p, k, x) * x ** j)
        return acc

    return {"printed": (lhs, rhs(True)), "classical": (lhs, rhs(False))}


def _lemma34_pts(grid: GridSpec):
    return [
        {"alpha": a, "beta": b, "r": r, "x": x, "m": m, "order": grid.n_max}
        for a, b, r in grid.exp_points
        if b != 0
        for x in grid.x_values
        for m in range(min(3, grid.n_max) + 1)
    ]


def _ev_lemma34(pt: Point) -> dict:
    p = ExpPolyParams(pt["alpha"], pt["beta"], pt["r"])
    lhs, rhs = lemma34_sides(p, pt["x"], pt["m"], pt["order"])
    return {"main": (lhs, rhs)}


def _exp_route_pts(grid: GridSpec):
    return [
        {"alpha": a, "beta": b, "r": r, "x": x, "n": n}
        for a, b, r in grid.exp_points
        if b != 0
        for x in grid.x_values
        for n in range(grid.n_max + 1)
    ]


def _ev_routes_exp(pt: Point) -> dict:
    p = ExpPolyParams(pt["alpha"], pt["beta"], pt["r"])
    lhs = s_exp_eval(p, pt["n"], pt["x"])
    rhs = s_exp_egf(p, pt["x"], pt["n"]).egf_value(pt["n"])
    return {"explicit-vs-series": (lhs, rhs)}


def _euler_pts(grid: GridSpec, min_lam=0, need_beta=False, ms=None):
    pts = []
    for lam, a, b, g in grid.euler_points:
        if lam < min_lam or (need_beta and b == 0):
            continue
        for n in range(grid.n_max + 1):
            if ms is None:
                pts.append({"lam": lam, "alpha": a, "beta": b, "gamma": g, "n": n})
            else:
                for m in ms:
                    pts.append({"lam": lam, "alpha": a, "beta": b, "gamma": g,
                                "n": n, "m": m})
    return pts


def _ev_routes_euler(pt: Point) -> dict:
    from .euler import euler_egf, euler_explicit, euler_polynomial, euler_via_a

    p = EulerParams(pt["lam"], pt["alpha"], pt["beta"])
    g, n = pt["gamma"], pt["n"]
    v = euler_via_a(p, g, n)
    e1, e2 = euler_explicit(p, g, n)
    return {
        "a-vs-series": (v, euler_egf(p, g, n).egf_value(n)),
        "a-vs-explicit-plus": (v, e1),
        "a-vs-explicit-minus": (v, e2),
        "a-vs-polynomial": (v, euler_polynomial(p, n)(g)),
    }


def _ev_euler_rec(pt: Point) -> dict:
    lam, a, b = pt["lam"], pt["alpha"], pt["beta"]
    g, n, m = pt["gamma"], pt["n"], pt["m"]

    def ev(lam_, gamma_, n_, beta=b):
        return euler_value(lam_, a, beta, gamma_, n_)

    out = {}
    lhs1 = ev(lam + 1, g, n)
    out["rec1-printed"] = (lhs1, 2 * ev(lam, g, n) - ev(lam, g + b, n))
    out["rec1-lifted"] = (lhs1, 2 * ev(lam, g, n) - ev(lam + 1, g + b, n))

    lhs2 = ev(lam, g, n + 1)
    out["rec2-printed"] = (lhs2, (g - lam * b) * ev(lam, g - a, n)
                           + lam * b * ev(lam, g - a, n)
                           - lam * b * HALF * ev(lam, g + b - a, n))
    out["rec2-lifted"] = (lhs2, g * ev(lam, g - a, n)
                          - lam * b * HALF * ev(lam + 1, g + b - a, n))
    out["rec2-derived"] = (lhs2, (g - lam * b) * ev(lam, g - a, n)
                           + lam * b * HALF * ev(lam + 1, g - a, n))

    shifted = m * a - lam * b - g
    tri = StirlingParams(a, -b, shifted)
    acc = sum((stirling_rec(tri, m, k) * ev(lam, shifted, n + k, beta=-b)
               for k in range(m + 1)), Fraction(0))
    lhs3 = ev(lam + m, -g, n)
    out["rec3-printed"] = (
        lhs3, Fraction(2) ** m / (rising(Fraction(lam), m) * b ** m) * acc
    )

    def lowered(lam_, steps, theta, n_):
        if steps == 0:
            return ev(lam_, theta, n_)
        prev = lam_ + steps - 1
        return (2 / (prev * b)) * (
            (theta + a - b) * lowered(lam_, steps - 1, theta - b, n_)
            - lowered(lam_, steps - 1, theta - b + a, n_ + 1)
        )

    out["rec3-derived"] = (lhs3, lowered(lam, m, -g, n))
    return out


def _ev_euler_conv(pt: Point) -> dict:
    a, b, n = pt["alpha"], pt["beta"], pt["n"]
    l1, l2 = pt["lam1"], pt["lam2"]
    g1, g2 = pt["gamma1"], pt["gamma2"]
    lam = l1 + l2

    def ev(lam_, gamma_, n_):
        return euler_value(lam_, a, b, gamma_, n_)

    def ev_neg(lam_, gamma_, n_):
        return euler_value(lam_, -a, b, gamma_, n_)

    def conv(first_gamma, second_lam, second_gamma):
        return sum((math.comb(n, k) * ev(l1, first_gamma, k)
                    * ev(second_lam, second_gamma, n - k)
                    for k in range(n + 1)), Fraction(0))

    def alt_conv(order_reading):
        return sum((math.comb(n, k) * (-1) ** (n - k)
                    * ev_neg(l1, a + b - g1, k)
                    * ev(l2, g2 + b * order_reading, n - k)
                    for k in range(n + 1)), Fraction(0))

    rhs1 = 2 * (g1 + g2) * ev(lam, g1 + g2 - a, n) - 2 * ev(lam, g1 + g2, n + 1)
    alt_rhs = ev_neg(lam, a + b - g1 - g2, n)
    return {
        "conv1-printed": (b * lam * conv(a + g1 - b, l2, g2), rhs1),
        "conv1-shifted": (b * lam * conv(b + g1 - a, l2 + 1, g2), rhs1),
        "conv2": (conv(a + g1 - b, l2, g2), ev(lam, a + g1 + g2 - b, n)),
        "conv3-lam2": (alt_conv(l2), alt_rhs),
        "conv3-lam1": (alt_conv(l1), alt_rhs),
    }


@dataclass(frozen=True)
class Identity:
    id: str
    kind: str
    anchor: str
    points: Callable[[GridSpec], list]
    evaluate: Callable[[Point], dict]


REGISTRY: tuple[Identity, ...] = (
    Identity(
        "routes-stirling", "hard",
        "S(n,k;a,b,g) = sum_s (-1)^(k-s) C(k,s) (b s + g | a)_n / (b^k k!)",
        lambda g: _stirling_pts(g, need_beta=True), _ev_routes_stirling),
    Identity(
        "orthogonality", "hard",
        "sum_k S(n,k;a,b,g) S(k,m;b,a,-g) = [n == m], both orders",
        _stirling_pts, _ev_orthogonality),
    Identity(
        "routes-a", "hard",
        "A_n by explicit column sum == generating series == raising recurrence",
        _poly_pts, _ev_routes_a),
    Identity(
        "oracle", "hard",
        "A_n(x) at integer parameters counts barred preferential arrangements",
        _oracle_pts, _ev_oracle),
    Identity(
        "thm6", "hard",
        "A_{n+1}(g) = g A_n(g+a) + x l b A^{l+1}_n(g+a+b)",
        lambda g: _poly_pts(g), _ev_thm6),
    Identity(
        "thm2", "recorded",
        "A_{n+1}(g) = g A_n(g+a) + sum_k C(n,k) F_k A_{n-k+1}(0); "
        "F read at order 0 (statement) or with b = 0 (proof)",
        lambda g: _poly_pts(g), _ev_thm2),
    Identity(
        "thm4", "hard",
        "A_{n+1}(g) = g A_n(g+a) + x l b sum_k C(n,k) A^1_k(g+a+b) A_{n-k}(0)",
        lambda g: _poly_pts(g), _ev_thm4),
    Identity(
        "eq6", "hard",
        "A_n(0) = sum_k C(n,k) (-1)^k (g|a)_k A_{n-k}(g)  [removal at -a]",
        lambda g: _poly_pts(g), _ev_eq6),
    Identity(
        "eq6-printed", "recorded",
        "A_n(0) = sum_k C(n,k) (-1)^k (g|-a)_k A_{n-k}(g)  [removal at +a]",
        lambda g: _poly_pts(g), _ev_eq6_printed),
    Identity(
        "eq7", "hard",
        "A_n(g) = sum_k sum_i c_lk C(n,i) (-1)^(k+i) b^k k! S(i,k;a,-b,0) "
        "(g|-a)_{n-i} x^k",
        lambda g: _poly_pts(g), _ev_eq7),
    Identity(
        "eq8", "recorded",
        "sum_s C(n,s) (g|a)_{n-s} S(s,k;a,b,g) vs S(n,k;a,g,b) [printed] "
        "or S(n,k;a,b,2g) [gamma-doubled]",
        _stirling_pts, _ev_eq8),
    Identity(
        "eq31", "hard",
        "x A^{l+1}_n(g+b) = (x+1) A^{l+1}_n(g) - A^l_n(g)",
        lambda g: _poly_pts(g), _ev_eq31),
    Identity(
        "eq32", "hard",
        "A_{n+1}(g-a) - l b (x+1) A^{l+1}_n(g) = (g - a - l b) A_n(g)",
        lambda g: _poly_pts(g), _ev_eq32),
    Identity(
        "eq37", "hard",
        "A^{l,x}_n(a,b,g+bl) == A^{l,-x-1}_n(a,-b,g) "
        "== (-1)^n A^{l,-x-1}_n(-a,b,-g)",
        lambda g: _poly_pts(g), _ev_eq37),
    Identity(
        "eq37-printed", "recorded",
        "A^{l,x}_n(a,b,g+bl) == (-1)^n A^{l,-x-1}_n(a,b,-g)",
        lambda g: _poly_pts(g), _ev_eq37_printed),
    Identity(
        "eq38", "hard",
        "A_n(g) = (-1)^n sum_k c_lk (-b)^k k! S(n,k;a,b,bl-g) (x+1)^k",
        lambda g: _poly_pts(g), _ev_eq38),
    Identity(
        "teo2", "hard",
        "sum_k C(n,k) A^{l1}_k(a+b+g1) A^{l2}_{n-k}(g2) "
        "= A^{l1+l2}_n(a+b+g1+g2)",
        _pair_pts, _ev_teo2),
    Identity(
        "teo1", "recorded",
        "x b (l1+l2) sum_k C(n,k) A^{l1}_k(a+b+g1) A^{l2'}_{n-k}(g2) = "
        "A^{l1+l2}_{n+1}(g1+g2) - (g1+g2) A^{l1+l2}_n(g1+g2+a); "
        "l2' read as l2 (printed) or l2+1 (shifted)",
        _pair_pts, _ev_teo1),
    Identity(
        "shift-raise", "hard",
        "(-1)^m A_{n+m}(g) = sum_k S(m,k;a,-b,-g) c_lk k! (-b)^k "
        "A^{l+k}_n(g+ma+kb) x^k",
        lambda g: _poly_pts(g, min_lam=1, need_beta=True, ms=g.shift_ms),
        _ev_shift_raise),
    Identity(
        "shift-inverse", "recorded",
        "A^{l+m}_n(a,-b,g) at -x-1 = (-1)^m sum_k (-1)^k S(m,k;-b,a,g-ma+lb) "
        "A^l_{n+k}(g-sa+lb)(x) / ((l)^(m) (bx)^m); s read as m (printed) "
        "or k (rowwise)",
        lambda g: _poly_pts(g, min_lam=1, need_beta=True, ms=g.shift_ms),
        _ev_shift_inverse),
    Identity(
        "spivey", "recorded",
        "S_{n+m}(x) = sum_j sum_k C(n,k) S(M,J) (j b - m a | a)_{n-k} S_k(x) "
        "x^j; (M,J) read as (n,k) [printed] or (m,j) [classical]",
        _spivey_pts, _ev_spivey),
    Identity(
        "lemma34", "hard",
        "sum_n S_{n+m}(x) t^n/n! = (1+at)^((r-ma)/a) exp((x/b) u) "
        "S_m(x (1+at)^(b/a)), u = (1+at)^(b/a) - 1",
        _lemma34_pts, _ev_lemma34),
    Identity(
        "routes-exp", "hard",
        "S_n(x) from triangle rows == generating series coefficients",
        _exp_route_pts, _ev_routes_exp),
    Identity(
        "routes-euler", "hard",
        "E_n by A-specialization == generating series == both explicit sums "
        "== gamma polynomial",
        _euler_pts, _ev_routes_euler),
    Identity(
        "euler-rec", "recorded",
        "order raising, argument raising, and order lowering for E_n; "
        "printed forms plus repaired readings",
        lambda g: _euler_pts(g, min_lam=1, need_beta=True, ms=g.shift_ms),
        _ev_euler_rec),
    Identity(
        "euler-conv", "recorded",
        "binomial convolutions for E_n: weighted, plain, alternating; "
        "printed forms plus repaired readings",
        _pair_pts, _ev_euler_conv),
)

_BY_ID = {ident.id: ident for ident in REGISTRY}


# ---------------------------------------------------------------------------
# report


@dataclass(frozen=True)
class ReadingReport:
    name: str
    passed: int
    failed: int
    first_counterexample: dict | None


@dataclass(frozen=True)
class IdentityReport:
    id: str
    kind: str
    anchor: str
    points: int
    readings: tuple[ReadingReport, ...]


@dataclass(frozen=True)
class ConformanceReport:
    grid: GridSpec
    identities: tuple[IdentityReport, ...]
    schema: str = SCHEMA

    def hard_failures(self) -> list[tuple[str, str]]:
        return [
            (ident.id, r.name)
            for ident in self.identities
            if ident.kind == "hard"
            for r in ident.readings
            if r.failed
        ]

    def to_dict(self) -> dict:
        return {
            "schema": self.schema,
            "grid": self.grid.as_dict(),
            "hard_pass": not self.hard_failures(),
            "identities": [
                {
                    "id": i.id,
                    "kind": i.kind,
                    "anchor": i.anchor,
                    "points": i.points,
                    "readings": [
                        {
                            "name": r.name,
                            "pass": r.passed,
                            "fail": r.failed,
                            "first_counterexample": r.first_counterexample,
                        }
                        for r in i.readings
                    ],
                }
                for i in self.identities
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_text(self) -> str:
        lines = [f"conformance report ({self.schema})"]
        for i in self.identities:
            lines.append(f"{i.kind:8s} {i.id}  [{i.points} points]")
            for r in i.readings:
                status = "ok" if not r.failed else "FAIL"
                lines.append(
                    f"    {r.name:24s} pass {r.passed:5d}  fail {r.failed:5d}  {status}"
                )
                if r.first_counterexample:
                    cex = r.first_counterexample
                    pt = " ".join(f"{k}={v}" for k, v in cex["point"].items())
                    lines.append(f"        first fail: {pt}")
                    lines.append(f"        lhs: {cex['lhs']}")
                    lines.append(f"        rhs: {cex['rhs']}")
        verdict = "PASS" if not self.hard_failures() else "FAIL"
        lines.append(f"hard identities: {verdict}")
        return "\n".join(lines) + "\n"


def _render(v) -> str:
    if isinstance(v, tuple):
        return "[" + ", ".join(_render(c) for c in v) + "]"
    if isinstance(v, Series):
        return "egf" + _render(tuple(v.egf_values()))
    return str(v)


def _ser_point(pt: Point) -> dict:
    return {k: pt[k] if isinstance(pt[k], int) else str(pt[k])
            for k in sorted(pt)}


def run_suite(spec: GridSpec) -> ConformanceReport:
    if spec.select is None:
        chosen = REGISTRY
    else:
        unknown = [s for s in spec.select if s not in _BY_ID]
        if unknown:
            raise ValueError(f"unknown identity ids: {unknown}")
        chosen = tuple(i for i in REGISTRY if i.id in spec.select)

    threads = max(1, int(os.environ.get("GEOMSTIR_THREADS", "1")))
    entries = []
    for ident in chosen:
        pts = ident.points(spec)
        if threads > 1 and len(pts) > 1:
            with ThreadPoolExecutor(max_workers=threads) as ex:
                results = list(ex.map(ident.evaluate, pts))
        else:
            results = [ident.evaluate(pt) for pt in pts]

        tally: dict[str, list] = {}
        for pt, res in zip(pts, results):
            for name, (lhs, rhs) in res.items():
                slot = tally.setdefault(name, [0, 0, None])
                if lhs == rhs:
                    slot[0] += 1
                else:
                    slot[1] += 1
                    if slot[2] is None:
                        slot[2] = {
                            "point": _ser_point(pt),
                            "lhs": _render(lhs),
                            "rhs": _render(rhs),
                        }
        readings = tuple(
            ReadingReport(name, p, f, cex) for name, (p, f, cex) in tally.items()
        )
        entries.append(
            IdentityReport(ident.id, ident.kind, ident.anchor, len(pts), readings)
        )
    return ConformanceReport(spec, tuple(entries))


# ---------------------------------------------------------------------------
# counterexample shrinking


_INT_KEYS = ("n", "m", "lam", "lam1", "lam2", "x")


def _point_rank(pt: Point) -> int:
    total = 0
    for v in pt.values():
        if isinstance(v, int):
            total += abs(v)
        else:
            total += abs(v.numerator) + v.denominator
    return total


def counterexample_minimize(identity_id: str, reading: str, point: Point) -> Point:
    """Shrink a failing point: n and m first, then parameter magnitudes.

    Raises ValueError when the starting point does not fail the reading.
    """
    ident = _BY_ID.get(identity_id)
    if ident is None:
        raise ValueError(f"unknown identity id: {identity_id}")

    def fails(pt: Point) -> bool:
        try:
            res = ident.evaluate(pt)
        except (ValueError, ZeroDivisionError):
            return False
        if reading not in res:
            raise ValueError(f"unknown reading {reading!r} for {identity_id}")
        lhs, rhs = res[reading]
        return lhs != rhs

    if not fails(point):
        raise ValueError("point does not fail the given reading")

    pt = dict(point)
    for key in ("n", "m"):
        while key in pt and pt[key] > 0:
            cand = {**pt, key: pt[key] - 1}
            if fails(cand):
                pt = cand
            else:
                break

    changed = True
    while changed:
        changed = False
        for key in sorted(pt):
            cur = pt[key]
            if isinstance(cur, int):
                candidates = [0, 1, cur - 1] if key in _INT_KEYS else []
            else:
                candidates = [Fraction(0), Fraction(1), Fraction(-1), cur / 2]
            for cand_val in candidates:
                if cand_val == cur:
                    continue
                cand = {**pt, key: cand_val}
                if _point_rank(cand) < _point_rank(pt) and fails(cand):
                    pt = cand
                    changed = True
                    break
    return pt
