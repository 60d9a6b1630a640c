"""Rerun the three published weightings on the Kerala fixture and diff against the tables."""

import sys

from disaster_games.allocation import report
from disaster_games.cases import CASES, compare, run_case


def main():
    failed = 0
    for number, case in CASES.items():
        a = case.alphas
        print(f"=== case {number}: alphas ({a.alpha_t}, {a.alpha_c}, {a.alpha_l}) ===")
        plan = run_case(number)
        print(report(plan, "table"))
        diffs = compare(number, plan)
        for d in diffs:
            print(f"MISMATCH {d}")
        failed += bool(diffs)
    print(f"{len(CASES) - failed}/{len(CASES)} cases match")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
