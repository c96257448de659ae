#!/usr/bin/env python3
"""Measure how fast the truncated large-order expansion converges.

For each truncation depth s the leading neglected term scales like
lambda^-(s+1), so doubling lambda should divide the relative error by
about 2^(s+1).  The script tabulates exact errors over a geometric
lambda ladder and reports the observed order next to that prediction.

Example:
    python3 scripts/error_decay_study.py --n 5 --depths 1,2,3 \
        --lambda-start 32 --doublings 5
"""

import argparse
import math
from fractions import Fraction

from geomstir.asymptotics import error_decay_report, format_sig
from geomstir.cli import parse_lambda_list, parse_rational


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--alpha", type=parse_rational, default=Fraction(1))
    ap.add_argument("--beta", type=parse_rational, default=Fraction(1))
    ap.add_argument("--gamma", type=parse_rational, default=Fraction(0))
    ap.add_argument("--x", type=parse_rational, default=Fraction(1))
    ap.add_argument("--n", type=int, default=4)
    ap.add_argument("--depths", type=parse_lambda_list, default=[1, 2, 3],
                    help="comma list of truncation depths s")
    ap.add_argument("--lambda-start", type=int, default=32)
    ap.add_argument("--doublings", type=int, default=5)
    args = ap.parse_args()

    lams = [args.lambda_start * 2**i for i in range(args.doublings + 1)]
    print(f"n={args.n}  alpha={args.alpha} beta={args.beta} "
          f"gamma={args.gamma} x={args.x}")
    print(f"lambda ladder: {', '.join(map(str, lams))}\n")

    summary = []
    for s in args.depths:
        if s > args.n:
            print(f"s={s}: skipped (depth cannot exceed n={args.n})")
            continue
        report = error_decay_report(args.alpha, args.beta, args.gamma,
                                    args.x, args.n, s, lams)
        print(f"s={s}")
        print(f"  {'lambda':>8s} {'rel_error':>16s} {'ratio':>14s} "
              f"{'order':>7s}")
        orders = []
        for row, ratio in zip(report.rows, report.ratios()):
            if ratio is None or ratio == 0:
                ratio_cell, order_cell = "-", "-"
            else:
                order = -math.log2(float(ratio))
                orders.append(order)
                ratio_cell = format_sig(ratio, 6)
                order_cell = f"{order:.3f}"
            print(f"  {row.lam:>8d} {format_sig(row.rel_error, 6):>16s} "
                  f"{ratio_cell:>14s} {order_cell:>7s}")
        if orders:
            summary.append((s, orders[-1]))
        print()

    if summary:
        print("observed order at the largest lambda vs s+1:")
        for s, order in summary:
            print(f"  s={s}: {order:.3f} (predicted {s + 1})")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
