#!/usr/bin/env python3
"""Run the identity conformance suite and summarize what the grid saw.

Beyond `geomstir verify` this script can widen or narrow the default grid
from the command line, shrink the first counterexample of every failing
reading to a minimal one, and rank recorded readings by failure share.

Examples:
    python3 scripts/run_conformance.py
    python3 scripts/run_conformance.py --n-max 10 --threads 4
    python3 scripts/run_conformance.py --select euler-rec spivey --minimize
"""

import argparse
import json
import os
import sys
from dataclasses import replace
from fractions import Fraction

from geomstir.harness import counterexample_minimize, default_grid, run_suite


def _revive_point(serialized: dict) -> dict:
    return {
        key: value if isinstance(value, int) else Fraction(value)
        for key, value in serialized.items()
    }


def _show(point: dict) -> str:
    return ", ".join(f"{k}={point[k]}" for k in sorted(point))


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n-max", type=int, default=None,
                    help="override the grid's maximum index")
    ap.add_argument("--oracle-n-max", type=int, default=None,
                    help="override the brute-force oracle cutoff")
    ap.add_argument("--select", nargs="*", default=None,
                    help="identity ids to run (default: all)")
    ap.add_argument("--threads", type=int, default=None,
                    help="evaluate identities in a thread pool")
    ap.add_argument("--json", default=None, metavar="PATH",
                    help="also dump the full report as JSON")
    ap.add_argument("--minimize", action="store_true",
                    help="shrink the first counterexample of each failing "
                         "reading")
    args = ap.parse_args()

    grid = default_grid()
    if args.n_max is not None:
        grid = replace(grid, n_max=args.n_max)
    if args.oracle_n_max is not None:
        grid = replace(grid, oracle_n_max=args.oracle_n_max)
    if args.select is not None:
        grid = replace(grid, select=tuple(args.select))
    if args.threads is not None:
        os.environ["GEOMSTIR_THREADS"] = str(args.threads)

    report = run_suite(grid)
    sys.stdout.write(report.to_text())

    if args.json is not None:
        with open(args.json, "w") as fh:
            fh.write(report.to_json() + "\n")
        print(f"\nreport written to {args.json}")

    failing = [
        (ident, reading)
        for ident in report.identities
        for reading in ident.readings
        if reading.failed
    ]
    if failing:
        print("\nfailure share by reading:")
        ranked = sorted(
            failing, key=lambda pair: -pair[1].failed / pair[0].points
        )
        for ident, reading in ranked:
            share = reading.failed / ident.points
            print(f"  {ident.id:>14s} / {reading.name:<16s} "
                  f"{reading.failed:4d}/{ident.points:<4d} ({share:.0%})")

    if args.minimize and failing:
        print("\nminimal counterexamples:")
        for ident, reading in failing:
            seed = _revive_point(reading.first_counterexample["point"])
            small = counterexample_minimize(ident.id, reading.name, seed)
            print(f"  {ident.id} / {reading.name}: {_show(small)}")

    return 0 if not report.hard_failures() else 1


if __name__ == "__main__":
    raise SystemExit(main())
