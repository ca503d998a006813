"""Command line entry points: solve, check, explain, serve."""
from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from typing import Any

from . import jsonio
from .errors import BudgetExceededError
from .explain import ExplanationReport, explain_schedule
from .scheduling import compute_metrics
from .solvers import exact_optimal, lpt_schedule


def _load_doc(path: str) -> Any:
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise ValueError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise ValueError(f"{path} is not valid JSON: {exc}") from None


def _cmd_solve(args: argparse.Namespace) -> int:
    inst = jsonio.instance_from_doc(_load_doc(args.instance))
    if args.exact:
        schedule, cmax = exact_optimal(inst)
        solver = "exact"
    else:
        schedule = lpt_schedule(inst)
        cmax = compute_metrics(inst, schedule).cmax
        solver = "lpt"
    # Bare schedule JSON on stdout so the output pipes into `check`.
    print(json.dumps(jsonio.schedule_to_doc(schedule), indent=2))
    print(f"makespan {cmax} ({solver})", file=sys.stderr)
    return 0


def _evaluate(args: argparse.Namespace) -> ExplanationReport:
    inst = jsonio.instance_from_doc(_load_doc(args.instance))
    schedule = jsonio.schedule_from_doc(_load_doc(args.schedule))
    decisions = None
    if args.decisions is not None:
        decisions = jsonio.decisions_from_doc(_load_doc(args.decisions))
    return explain_schedule(inst, schedule, decisions)


def _first_per_dimension(report: ExplanationReport) -> ExplanationReport:
    keep = []
    seen = set()
    for x in report.explanations:
        if x.dimension not in seen:
            seen.add(x.dimension)
            keep.append(x)
    return dataclasses.replace(report, explanations=tuple(keep))


def _cmd_check(args: argparse.Namespace) -> int:
    report = _evaluate(args)
    shown = _first_per_dimension(report) if args.first else report
    print(json.dumps(jsonio.report_to_doc(shown), indent=2))
    return 0 if report.all_good() else 1


def _cmd_explain(args: argparse.Namespace) -> int:
    report = _evaluate(args)
    shown = _first_per_dimension(report) if args.first else report
    print(f"feasible: {'yes' if report.feasible else 'no'}")
    print(f"efficient: {'yes' if report.efficient else 'no'}")
    if report.fixed_ok is not None:
        print(f"fixed decisions: {'satisfied' if report.fixed_ok else 'violated'}")
    for cert in report.certificates:
        print(cert.text)
    for x in shown.explanations:
        print(x.text)
    return 0 if report.all_good() else 1


def _cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .server import create_app

    uvicorn.run(create_app(args.data), host=args.host, port=args.port)
    return 0


def _add_report_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("instance", help="instance JSON file")
    parser.add_argument("schedule", help="schedule JSON file")
    parser.add_argument("--decisions", default=None, help="fixed decisions JSON file")
    parser.add_argument("--first", action="store_true",
                        help="keep only the first explanation per dimension")


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="argsched",
        description="Check makespan schedules and explain their defects via argumentation.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="compute a schedule for an instance")
    p.add_argument("instance", help="instance JSON file")
    p.add_argument("--exact", action="store_true",
                   help="budgeted exhaustive minimum-makespan search instead of LPT")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("check", help="evaluate a schedule and print the report as JSON")
    _add_report_args(p)
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("explain", help="evaluate a schedule and print the full text report")
    _add_report_args(p)
    p.set_defaults(func=_cmd_explain)

    p = sub.add_parser("serve", help="run the what-if HTTP service")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--data", default=None,
                   help="directory for session persistence (default: in-memory only)")
    p.set_defaults(func=_cmd_serve)

    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, BudgetExceededError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
