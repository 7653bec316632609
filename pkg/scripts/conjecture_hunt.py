#!/usr/bin/env python3
"""Search for counterexamples to the two open equidistribution statements.

Runs the conjecture checks at the largest budget you are willing to wait for
and prints any violated cells.  Exit code 1 means a counterexample was found,
which would be a publishable event; 0 means the conjectures survive.
"""

import argparse
import sys

from permlab.verify import run_check


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=9,
                        help="bound for conj_spiro (conj_refined uses one less)")
    parser.add_argument("--budget-override", type=int, default=None,
                        help="admit budgets past the recommended caps")
    args = parser.parse_args()

    found = False
    for name, bound in (("conj_spiro", args.max_n), ("conj_refined", max(3, args.max_n - 1))):
        report = run_check(name, max_n=bound, budget_override=args.budget_override)
        print(f"{name}: {report.status} at max_n={report.max_n} "
              f"({report.cells_checked} cells, {report.wall_time_ms:.0f} ms)")
        for ce in report.counterexamples:
            print(f"  counterexample: {ce['params']} lhs={ce['lhs']} rhs={ce['rhs']}")
            found = True
    return 1 if found else 0


if __name__ == "__main__":
    sys.exit(main())
