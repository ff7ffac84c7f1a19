#!/usr/bin/env python3
"""Cross-validate the routed solvers against the brute-force scan.

Draws seeded random instances for every built-in rule across all variants
(winner bounds 1/2/3/unbounded, priced and unpriced), decides each instance
twice — once through `solve_auto`, once through `solve_brute` — and reports
per-rule agreement, yes-rates, and which specialized routes fired.  Exits
nonzero on the first disagreement, so the script doubles as a soak test.

    python3 scripts/cross_validate.py --trials 400 --seed 7
"""

import argparse
import collections
import sys
import time

from recamp import (
    UNBOUNDED,
    AtMost,
    Borda,
    Condorcet,
    E1,
    E2,
    RandomInstanceParams,
    TApproval,
    TVeto,
    TrivialScoring,
    random_instance,
    solve_auto,
    solve_brute,
)

RULES = {
    "1-approval": TApproval(1),
    "2-approval": TApproval(2),
    "1-veto": TVeto(1),
    "2-veto": TVeto(2),
    "borda": Borda(),
    "trivial": TrivialScoring(),
    "condorcet": Condorcet(),
    "e1": E1(),
    "e2": E2(),
}

BOUNDS = [AtMost(1), AtMost(2), AtMost(3), UNBOUNDED]


def run(args: argparse.Namespace) -> int:
    import random

    rng = random.Random(args.seed)
    print(f"{'rule':<12} {'trials':>6} {'yes':>5} {'disagree':>8} "
          f"{'auto ms':>8} {'brute ms':>9}  routes")
    failures = 0
    for name, rule in RULES.items():
        routes: collections.Counter[str] = collections.Counter()
        yes = disagree = 0
        auto_time = brute_time = 0.0
        for trial in range(args.trials):
            params = RandomInstanceParams(
                districts=rng.randint(1, args.max_districts),
                additional=rng.randint(0, args.max_additional),
                rule=rule,
                bound=rng.choice(BOUNDS),
                priced=rng.random() < 0.5,
            )
            inst = random_instance(params, seed=args.seed * 100_000 + trial)
            t0 = time.perf_counter()
            fast = solve_auto(inst, node_budget=args.node_budget)
            t1 = time.perf_counter()
            slow = solve_brute(inst, node_budget=args.node_budget)
            t2 = time.perf_counter()
            auto_time += t1 - t0
            brute_time += t2 - t1
            routes[fast.algorithm] += 1
            yes += fast.answer
            if fast.answer != slow.answer:
                disagree += 1
                failures += 1
                print(f"  DISAGREEMENT under {name}: auto={fast.answer} "
                      f"brute={slow.answer} seed={args.seed * 100_000 + trial}",
                      file=sys.stderr)
        route_note = " ".join(f"{r}:{c}" for r, c in sorted(routes.items()))
        print(f"{name:<12} {args.trials:>6} {yes:>5} {disagree:>8} "
              f"{auto_time / args.trials * 1000:>8.2f} "
              f"{brute_time / args.trials * 1000:>9.2f}  {route_note}")
    if failures:
        print(f"\n{failures} disagreement(s) found", file=sys.stderr)
        return 1
    print("\nall routed answers agree with brute force")
    return 0


def parse_args() -> argparse.Namespace:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--trials", type=int, default=200,
                        help="instances per rule (default 200)")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--max-districts", type=int, default=3)
    parser.add_argument("--max-additional", type=int, default=5)
    parser.add_argument("--node-budget", type=int, default=10**8)
    return parser.parse_args()


if __name__ == "__main__":
    sys.exit(run(parse_args()))
