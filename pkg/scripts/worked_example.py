#!/usr/bin/env python3
"""Walk through the trivial-scoring flow example end to end.

Builds the three-district instance (0, 1, and 4 resident candidates; winner
bound 3; the fixed 3x3 price table), then decides it at a sweep of budgets
with the b-matching solver and prints each verdict, the optimal placement,
and its verified cost.  The optimum costs 14, so budgets below that flip the
answer to NO.

    python3 scripts/worked_example.py
    python3 scripts/worked_example.py --budgets 12 13 14 15 16 20
"""

import argparse
import sys

from recamp import (
    AtMost,
    District,
    Pricing,
    RecampaignInstance,
    TrivialScoring,
    solve_trivial_scoring,
    verify,
)

PRICES = {
    (1, "a1"): 5, (1, "a2"): 8, (1, "a3"): 10,
    (2, "a1"): 3, (2, "a2"): 1, (2, "a3"): 16,
    (3, "a1"): 0, (3, "a2"): 0, (3, "a3"): 0,
}


def build(budget: int) -> RecampaignInstance:
    districts = (
        District([]),
        District(["c1"]),
        District(["c2", "c3", "c4", "c5"]),
    )
    return RecampaignInstance(
        TrivialScoring(),
        districts,
        frozenset({"a1", "a2", "a3"}),
        AtMost(3),
        Pricing(PRICES, budget),
    )


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--budgets", type=int, nargs="+",
                        default=[16, 15, 14, 13, 12])
    args = parser.parse_args(argv)

    print("price table (district, candidate) -> cost:")
    for i in (1, 2, 3):
        row = "  ".join(f"{a}={PRICES[i, a]:>2}" for a in ("a1", "a2", "a3"))
        print(f"  district {i}: {row}")
    print()

    for budget in args.budgets:
        inst = build(budget)
        result = solve_trivial_scoring(inst)
        if result.answer:
            placement = dict(sorted(result.assignment.placement.items()))
            report = verify(inst, result.assignment)
            assert report.valid and report.total_cost == result.cost
            print(f"budget {budget:>3}: YES  cost={result.cost}  placement={placement}")
        else:
            print(f"budget {budget:>3}: NO   (no placement fits)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
