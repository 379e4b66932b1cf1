#!/usr/bin/env python3
"""Run the standard verification sweeps over an integer parameter grid.

Prints one summary line per sweep and full reports for any counterexample.
Exit status 1 signals that a counterexample was found.
"""

import argparse
import sys
import time
from dataclasses import dataclass

from hankelrev import report_to_json, sweep


@dataclass(frozen=True)
class SweepJob:
    conjecture_id: str
    needs_beta: bool


JOBS = (
    SweepJob("4", True),
    SweepJob("6", True),
    SweepJob("8", False),
    SweepJob("prop9", False),
    SweepJob("alpha_shift", True),
)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--lo", type=int, default=-5, help="grid lower bound")
    parser.add_argument("--hi", type=int, default=5, help="grid upper bound")
    parser.add_argument("--depth", type=int, default=6)
    args = parser.parse_args()

    bounds = (args.lo, args.hi)
    failed = False
    for job in JOBS:
        started = time.perf_counter()
        result = sweep(
            job.conjecture_id,
            bounds,
            bounds if job.needs_beta else None,
            depth=args.depth,
        )
        elapsed = time.perf_counter() - started
        print(
            f"{job.conjecture_id:>11}: grid={len(result.grid)}"
            f" checked={len(result.reports)} skipped={len(result.skipped)}"
            f" counterexamples={len(result.counterexamples)} ({elapsed:.2f}s)"
        )
        for report in result.counterexamples:
            failed = True
            print(report_to_json(report))
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
