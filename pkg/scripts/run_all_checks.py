#!/usr/bin/env python3
"""Run the whole verification catalog and print a one-line-per-check summary.

Default budgets reproduce every identity the library implements in about ten
seconds; pass --max-n to clamp all checks to a smaller bound for a quick tour.
"""

import argparse
import sys

from permlab.verify import CHECKS, list_checks, run_check


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=None,
                        help="clamp every check to this bound")
    args = parser.parse_args()

    failed = 0
    for name, description, default in list_checks():
        bound = default
        if args.max_n is not None:
            bound = max(CHECKS[name].min_n, min(args.max_n, default))
        report = run_check(name, max_n=bound)
        mark = "ok  " if report.status == "pass" else "FAIL"
        print(f"{mark} {name:18s} max_n={report.max_n:2d} cells={report.cells_checked:7d} "
              f"{report.wall_time_ms:9.1f} ms  {description}")
        for ce in report.counterexamples[:4]:
            print(f"       {ce['params']}  lhs={ce['lhs']}  rhs={ce['rhs']}")
        if report.status != "pass":
            failed += 1
            extra = len(report.counterexamples) - 4
            if extra > 0:
                print(f"       ... and {extra} more counterexamples")
    print(f"\n{18 - failed}/18 checks pass at these budgets")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
