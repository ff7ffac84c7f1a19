"""Command-line interface.

Subcommands: solve, verify, reduce, oracle, gen, winners.  Exit codes are
uniform across commands: 0 for yes/ok, 1 for no/invalid, 2 for usage, parse,
or precondition problems, 3 when an enumeration refuses to start because it
would exceed the node budget (RECAMP_NODE_BUDGET overrides the default).
"""

from __future__ import annotations

import argparse
import sys
import time
from typing import Any, Callable, Sequence

from . import formats
from .core import winners
from .errors import RecampaignError, ResourceBudgetError
from .gadgets import (
    Exactly3ThreeDMInstance,
    e33dm_to_1approval,
    e33dm_to_scoring,
    r3dm_to_exactly3,
    sat_to_approval_unbounded,
    x3c_to_approval,
    x3c_to_e1_priced,
    x3c_to_veto,
)
from .model import (
    AtMost,
    RandomInstanceParams,
    UNBOUNDED,
    WinnerBound,
    random_instance,
    verify,
)
from .solvers import (
    SolveResult,
    solve_auto,
    solve_brute,
    solve_crc1,
    solve_e1_bound3,
    solve_e2_unbounded,
    solve_fpt,
    solve_trivial_scoring,
)

_SOLVERS: dict[str, Callable[..., SolveResult]] = {
    "auto": solve_auto,
    "crc1": solve_crc1,
    "bmatch": solve_trivial_scoring,
    "fpt": solve_fpt,
    "e1": solve_e1_bound3,
    "e2": solve_e2_unbounded,
    "brute": solve_brute,
}

_BUDGETED = {"auto", "brute"}


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        raise RecampaignError(f"cannot read {path}: {exc}") from exc


def _write(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)
    except OSError as exc:
        raise RecampaignError(f"cannot write {path}: {exc}") from exc


def _parse_bound_arg(text: str) -> WinnerBound:
    if text == "unbounded":
        return UNBOUNDED
    try:
        return AtMost(int(text))
    except ValueError as exc:
        raise RecampaignError(
            f"--bound takes an integer or 'unbounded', got {text!r}"
        ) from exc


def _report(result: SolveResult, elapsed: float) -> dict[str, Any]:
    doc: dict[str, Any] = {
        "answer": "YES" if result.answer else "NO",
        "algorithm": result.algorithm,
        "statistics": dict(result.statistics),
        "wallTime": round(elapsed, 6),
    }
    if result.assignment is not None:
        doc["assignment"] = {
            "placement": dict(sorted(result.assignment.placement.items()))
        }
    if result.cost is not None:
        doc["cost"] = result.cost
    return doc


def _run_solver(args: argparse.Namespace, name: str) -> int:
    inst = formats.parse_instance(_read(args.instance))
    solver = _SOLVERS[name]
    start = time.perf_counter()
    if name in _BUDGETED:
        result = solver(inst, args.node_budget)
    else:
        result = solver(inst)
    elapsed = time.perf_counter() - start
    sys.stdout.write(formats.dumps(_report(result, elapsed)))
    if result.answer and getattr(args, "assignment_out", None):
        _write(args.assignment_out, formats.render_assignment(result.assignment))
    return 0 if result.answer else 1


def _cmd_solve(args: argparse.Namespace) -> int:
    return _run_solver(args, args.algorithm)


def _cmd_oracle(args: argparse.Namespace) -> int:
    return _run_solver(args, "brute")


def _cmd_verify(args: argparse.Namespace) -> int:
    inst = formats.parse_instance(_read(args.instance))
    assignment = formats.parse_assignment(_read(args.assignment))
    report = verify(inst, assignment)
    doc: dict[str, Any] = {
        "valid": report.valid,
        "violations": [
            {
                "kind": v.kind,
                "district": v.district,
                "candidate": v.candidate,
                "detail": v.detail,
            }
            for v in report.violations
        ],
    }
    if report.total_cost is not None:
        doc["totalCost"] = report.total_cost
    sys.stdout.write(formats.dumps(doc))
    return 0 if report.valid else 1


def _reduce_target(args: argparse.Namespace) -> tuple[str, str]:
    """Run the requested reduction; returns (rendered document, kind)."""
    pair = (args.source_kind, args.target)
    if pair == ("x3c", "e1priced"):
        src = formats.parse_x3c(_read(args.source))
        return formats.render_instance(x3c_to_e1_priced(src)), "instance"
    if pair == ("x3c", "approvalL"):
        src = formats.parse_x3c(_read(args.source))
        inst = x3c_to_approval(src, args.t, _parse_bound_arg(args.bound))
        return formats.render_instance(inst), "instance"
    if pair == ("x3c", "vetoL"):
        src = formats.parse_x3c(_read(args.source))
        inst = x3c_to_veto(src, args.t, _parse_bound_arg(args.bound))
        return formats.render_instance(inst), "instance"
    if pair == ("r3dm", "e33dm"):
        src = formats.parse_3dm(_read(args.source))
        out = r3dm_to_exactly3(src)
        return (
            formats.render_3dm(out),
            "3dm",
        )
    if args.source_kind in ("r3dm", "e33dm") and args.target in (
        "approval2",
        "scoring2",
    ):
        parsed = formats.parse_3dm(_read(args.source))
        if args.source_kind == "e33dm":
            exact = Exactly3ThreeDMInstance(
                parsed.w_side, parsed.x_side, parsed.y_side, parsed.triples
            )
        else:
            exact = r3dm_to_exactly3(parsed)
        if args.target == "approval2":
            return formats.render_instance(e33dm_to_1approval(exact)), "instance"
        if args.rule is None:
            raise RecampaignError("--rule is required for the scoring2 target")
        rule = formats.parse_rule_name(args.rule)
        return formats.render_instance(e33dm_to_scoring(exact, rule)), "instance"
    if pair == ("e3sat", "sat2districts"):
        src = formats.parse_sat(_read(args.source))
        inst = sat_to_approval_unbounded(src, args.t)
        return formats.render_instance(inst), "instance"
    raise RecampaignError(
        f"unsupported reduction {args.source_kind} -> {args.target}"
    )


def _cmd_reduce(args: argparse.Namespace) -> int:
    rendered, _ = _reduce_target(args)
    _write(args.output, rendered)
    return 0


def _cmd_gen(args: argparse.Namespace) -> int:
    rule = formats.parse_rule_name(args.rule)
    params = RandomInstanceParams(
        districts=args.districts,
        additional=args.additional,
        rule=rule,
        max_district_candidates=args.max_candidates,
        max_votes=args.max_votes,
        bound=_parse_bound_arg(args.bound),
        priced=args.priced,
    )
    inst = random_instance(params, args.seed)
    _write(args.output, formats.render_instance(inst))
    return 0


def _cmd_winners(args: argparse.Namespace) -> int:
    election = formats.parse_election(_read(args.election))
    rule = formats.parse_rule_name(args.rule)
    for name in sorted(winners(rule, election)):
        sys.stdout.write(name + "\n")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="recamp",
        description="Decide recampaigning problems over multi-district elections.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="decide an instance file")
    solve.add_argument("instance")
    solve.add_argument(
        "--algorithm", choices=sorted(_SOLVERS), default="auto"
    )
    solve.add_argument("--node-budget", type=int, default=None)
    solve.add_argument("--assignment-out", default=None)
    solve.set_defaults(func=_cmd_solve)

    oracle = sub.add_parser("oracle", help="brute-force an instance file")
    oracle.add_argument("instance")
    oracle.add_argument("--node-budget", type=int, default=None)
    oracle.add_argument("--assignment-out", default=None)
    oracle.set_defaults(func=_cmd_oracle)

    chk = sub.add_parser("verify", help="check an assignment against an instance")
    chk.add_argument("instance")
    chk.add_argument("assignment")
    chk.set_defaults(func=_cmd_verify)

    reduce_ = sub.add_parser("reduce", help="translate a source problem")
    reduce_.add_argument("source")
    reduce_.add_argument(
        "--from",
        dest="source_kind",
        required=True,
        choices=["x3c", "r3dm", "e33dm", "e3sat"],
    )
    reduce_.add_argument(
        "--to",
        dest="target",
        required=True,
        choices=[
            "e1priced",
            "approval2",
            "scoring2",
            "approvalL",
            "vetoL",
            "sat2districts",
            "e33dm",
        ],
    )
    reduce_.add_argument("--rule", default=None, help="target rule for scoring2")
    reduce_.add_argument("--t", type=int, default=1)
    reduce_.add_argument("--bound", default="unbounded")
    reduce_.add_argument("-o", "--output", required=True)
    reduce_.set_defaults(func=_cmd_reduce)

    gen = sub.add_parser("gen", help="write a seeded random instance")
    gen.add_argument("--districts", "-k", type=int, required=True)
    gen.add_argument("--additional", "-n", type=int, required=True)
    gen.add_argument("--rule", required=True)
    gen.add_argument("--bound", default="unbounded")
    gen.add_argument("--priced", action="store_true")
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--max-candidates", type=int, default=3)
    gen.add_argument("--max-votes", type=int, default=4)
    gen.add_argument("-o", "--output", required=True)
    gen.set_defaults(func=_cmd_gen)

    win = sub.add_parser("winners", help="print an election's winner set")
    win.add_argument("election")
    win.add_argument("--rule", required=True)
    win.set_defaults(func=_cmd_winners)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ResourceBudgetError as exc:
        print(f"recamp: {exc}", file=sys.stderr)
        return 3
    except RecampaignError as exc:
        print(f"recamp: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
