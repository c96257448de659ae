"""Brute-force counting of barred preferential arrangements.

Everything here counts by direct construction, never through the Stirling
or polynomial machinery, so agreement with those routes is meaningful.

Model: n labeled elements are placed one at a time.  A gamma-cell starts
with gamma compartments and each landing splits its compartment, leaving
alpha extra ones, so placing j elements there admits
gamma (gamma+alpha) ... (gamma+(j-1)alpha) histories.  A section holds an
ordered row of k cells, each starting with beta compartments and growing
the same way, with every cell required to catch at least one element; each
cell is weighted by the marker x.  A barred arrangement with lam bars has
one gamma-cell followed by lam sections.

Enumeration is hard-capped at n <= 8; the counts grow fast enough that
anything larger stops being a useful cross-check anyway.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

MAX_ORACLE_N = 8


def _check_divisibility(alpha: int, value: int, what: str):
    if alpha > 0 and value % alpha:
        raise ValueError(f"alpha must divide {what} when alpha > 0")


def count_gamma_cell(n: int, alpha: int, gamma: int) -> int:
    """Histories of dropping n elements into one gamma-cell.

    Element i+1 sees gamma + i*alpha compartments, so the count is the pure
    product over i.
    """
    if n < 0 or alpha < 0 or gamma < 0:
        raise ValueError("count_gamma_cell needs n, alpha, gamma >= 0")
    _check_divisibility(alpha, gamma, "gamma")
    out = 1
    for i in range(n):
        out *= gamma + i * alpha
    return out


def count_m_sections(n: int, k: int, alpha: int, beta: int) -> int:
    """Distributions of n elements over one section of exactly k cells.

    Tracks the compartment-splitting process directly: states are per-cell
    occupancy vectors, and dropping an element into cell c multiplies the
    running weight by beta + (current occupancy of c) * alpha.  Only states
    with every cell hit survive at the end.
    """
    if n < 0 or k < 0 or alpha < 0 or beta < 0:
        raise ValueError("count_m_sections needs nonnegative arguments")
    _check_divisibility(alpha, beta, "beta")
    if n > MAX_ORACLE_N:
        raise ValueError(f"enumeration capped at n <= {MAX_ORACLE_N}")
    if k == 0:
        return 1 if n == 0 else 0
    states = {(0,) * k: 1}
    for _ in range(n):
        nxt: dict[tuple[int, ...], int] = {}
        for occ, weight in states.items():
            for c in range(k):
                w = weight * (beta + occ[c] * alpha)
                if not w:
                    continue
                key = occ[:c] + (occ[c] + 1,) + occ[c + 1:]
                nxt[key] = nxt.get(key, 0) + w
        states = nxt
    return sum(w for occ, w in states.items() if all(occ))


def section_poly_value(n: int, alpha: int, beta: int, x: int) -> int:
    """Weight of one section over all cell counts: sum_k count * x^k."""
    return sum(
        count_m_sections(n, k, alpha, beta) * x ** k for k in range(n + 1)
    )


@dataclass(frozen=True)
class BPAConfig:
    n: int
    lam: int
    alpha: int
    beta: int
    gamma: int
    x: int

    def __post_init__(self):
        for name in ("n", "lam", "alpha", "beta", "gamma", "x"):
            v = getattr(self, name)
            if not isinstance(v, int) or v < 0:
                raise ValueError(f"{name} must be an integer >= 0")
        if self.n > MAX_ORACLE_N:
            raise ValueError(f"enumeration capped at n <= {MAX_ORACLE_N}")
        _check_divisibility(self.alpha, self.beta, "beta")
        _check_divisibility(self.alpha, self.gamma, "gamma")
        if (self.alpha, self.beta, self.gamma, self.x) == (0, 0, 0, 0):
            raise ValueError("alpha, beta, gamma, x cannot all be zero")


def count_bpa(cfg: BPAConfig) -> int:
    """Barred arrangements of cfg.n elements with cfg.lam bars.

    Exhausts ordered splits of the element set into the gamma-cell part and
    one part per section, multiplying the independent counts.
    """
    sections = cfg.lam
    section_cache = {
        j: section_poly_value(j, cfg.alpha, cfg.beta, cfg.x)
        for j in range(cfg.n + 1)
    }
    total = 0
    for split in _compositions(cfg.n, sections + 1):
        ways = _multinomial(cfg.n, split)
        ways *= count_gamma_cell(split[0], cfg.alpha, cfg.gamma)
        for j in split[1:]:
            ways *= section_cache[j]
        total += ways
    return total


def _compositions(n: int, parts: int):
    """All ordered tuples of `parts` nonnegative integers summing to n."""
    if parts == 0:
        if n == 0:
            yield ()
        return
    if parts == 1:
        yield (n,)
        return
    for first in range(n + 1):
        for rest in _compositions(n - first, parts - 1):
            yield (first,) + rest


def _multinomial(n: int, split) -> int:
    out = math.factorial(n)
    for j in split:
        out //= math.factorial(j)
    return out


@dataclass(frozen=True)
class Partition:
    """Integer partition in weakly decreasing order."""

    parts: tuple[int, ...]

    def __post_init__(self):
        if any(p <= 0 for p in self.parts):
            raise ValueError("partition parts must be positive")
        if any(a < b for a, b in zip(self.parts, self.parts[1:])):
            raise ValueError("partition parts must be weakly decreasing")

    @property
    def n(self) -> int:
        return sum(self.parts)

    def multiplicities(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for p in self.parts:
            out[p] = out.get(p, 0) + 1
        return out


def partitions_with_parts(n: int, p: int) -> list[Partition]:
    """All partitions of n into exactly p positive parts, lexicographically
    decreasing."""
    if n < 0 or p < 0:
        raise ValueError("need n, p >= 0")
    out: list[Partition] = []

    def rec(remaining: int, parts_left: int, cap: int, acc: list[int]):
        if parts_left == 0:
            if remaining == 0:
                out.append(Partition(tuple(acc)))
            return
        # each remaining part is >= 1, and <= cap
        hi = min(cap, remaining - (parts_left - 1))
        for first in range(hi, 0, -1):
            acc.append(first)
            rec(remaining - first, parts_left - 1, first, acc)
            acc.pop()

    rec(n, p, n, [])
    return out
