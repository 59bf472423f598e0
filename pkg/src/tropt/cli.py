"""Command line front end.

Subcommands:

  solve       closed-form minimum of a span objective problem
  schedule    project schedule with flow-time guarantee
  solve-ineq  two-sided inequality systems (lower fixpoint, upper bound)
  eig         spectral radius of a matrix
  star        closure (truncated power sum) of a matrix
  verify      closed form against an exhaustive grid scan

Results go to stdout as JSON (or to --output); the schedule command adds
a human summary on stderr.  Exit codes: 0 success, 2 a named feasibility
or degeneracy condition failed, 1 anything wrong with the input.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path
from typing import Optional

from . import serialize
from .errors import (
    DegenerateProblem,
    InfeasibleConstraints,
    InfeasibleSchedule,
    NoFeasiblePoint,
    NoRegularSolution,
    TroptError,
    ZeroSpectralRadius,
)
from .linalg import Vector
from .linsolve import solve_combined, solve_fixpoint_lower, solve_upper_bounded
from .optimize import Problem, solve_problem
from .oracle import GridSpec, default_step, grid_minimize
from .schedule import collapse_solution_line, solve_schedule_detailed
from .semifield import MAXPLUS, MaxPlus

_DOMAIN_ERRORS = (
    NoRegularSolution,
    InfeasibleConstraints,
    InfeasibleSchedule,
    ZeroSpectralRadius,
    DegenerateProblem,
    NoFeasiblePoint,
)


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _mode(args) -> tuple[bool, MaxPlus]:
    epsilon = getattr(args, "epsilon", None)
    if epsilon is not None:
        return False, MaxPlus(eps=epsilon)
    return not getattr(args, "approx", False), MAXPLUS


def _emit(doc, args) -> None:
    text = serialize.dumps(doc)
    if getattr(args, "output", None):
        Path(args.output).write_text(text + "\n")
    else:
        print(text)


def _matrix_payload(data):
    if isinstance(data, dict) and "A" in data:
        return data["A"]
    return data


def _cmd_solve(args) -> int:
    exact, sf = _mode(args)
    data = serialize.loads(_read_text(args.problem), exact)
    problem = serialize.parse_problem(data, sf, exact)
    result = solve_problem(problem)
    _emit(serialize.encode_opt_result(result), args)
    return 0


def _format_cell(value) -> str:
    return str(serialize.encode_scalar(value))


def _schedule_summary(result) -> str:
    sf = result.initiation.sf
    names = result.activities
    width = max(8, max(len(n) for n in names) + 2)
    lines = [f"largest flow time: {_format_cell(result.theta)}"]
    header = (
        f"{'activity':<{width}}{'start':>10}{'finish':>10}{'flow':>10}"
    )
    lines.append(header)
    for i, name in enumerate(names):
        flag = "  *" if sf.eq(result.flow_times[i], result.theta) else ""
        lines.append(
            f"{name:<{width}}"
            f"{_format_cell(result.adjusted_start.entries[i]):>10}"
            f"{_format_cell(result.adjusted_finish.entries[i]):>10}"
            f"{_format_cell(result.flow_times[i]):>10}{flag}"
        )
    lines.append("(* attains the largest flow time)")
    return "\n".join(lines)


def _cmd_schedule(args) -> int:
    exact, sf = _mode(args)
    data = serialize.loads(_read_text(args.spec), exact)
    spec = serialize.parse_schedule(data, sf, exact)
    result, intermediates = solve_schedule_detailed(spec)
    collapse = collapse_solution_line(result.solutions)
    doc = serialize.encode_schedule_result(result, collapse)
    if args.emit_intermediates:
        doc["intermediates"] = serialize.encode_value(intermediates)
    _emit(doc, args)
    print(_schedule_summary(result), file=sys.stderr)
    return 0


def _cmd_solve_ineq(args) -> int:
    exact, sf = _mode(args)
    data = serialize.loads(_read_text(args.system), exact)
    if not isinstance(data, dict) or "A" not in data:
        raise ValueError("inequality system needs a matrix 'A'")
    a = serialize.parse_matrix(data["A"], sf, exact)
    b = d = None
    if data.get("b") is not None:
        b = serialize.parse_vector(data["b"], sf, exact)
    if data.get("d") is not None:
        d = serialize.parse_vector(data["d"], sf, exact)
    if b is not None and d is not None:
        sol = solve_combined(a, b, d)
        doc = {
            "generator": serialize.encode_matrix(sol.generator),
            "lower": serialize.encode_vector(sol.lower),
            "upper": serialize.encode_vector(sol.upper),
        }
    elif b is not None:
        sol = solve_fixpoint_lower(a, b)
        doc = {
            "generator": serialize.encode_matrix(sol.generator),
            "lower": serialize.encode_vector(sol.lower),
        }
    elif d is not None:
        greatest = solve_upper_bounded(a, d)
        doc = {"greatest": serialize.encode_vector(greatest)}
    else:
        raise ValueError("inequality system needs 'b' or 'd' (or both)")
    _emit(doc, args)
    return 0


def _cmd_eig(args) -> int:
    exact, sf = _mode(args)
    data = serialize.loads(_read_text(args.matrix), exact)
    a = serialize.parse_matrix(_matrix_payload(data), sf, exact)
    doc = {"spectralRadius": serialize.encode_scalar(a.spectral_radius())}
    _emit(doc, args)
    return 0


def _cmd_star(args) -> int:
    exact, sf = _mode(args)
    data = serialize.loads(_read_text(args.matrix), exact)
    a = serialize.parse_matrix(_matrix_payload(data), sf, exact)
    doc = {
        "star": serialize.encode_matrix(a.star()),
        "traceSum": serialize.encode_scalar(a.trace_sum()),
    }
    _emit(doc, args)
    return 0


def _verify_window(problem: Problem, window: int, center: Optional[Vector]) -> GridSpec:
    sf = problem.A.sf
    n = problem.dim
    if center is not None:
        low = [Fraction(v) - window for v in center.entries]
        high = [Fraction(v) + window for v in center.entries]
    else:
        low = [Fraction(-window)] * n
        high = [Fraction(window)] * n
        for i in range(n):
            if problem.g is not None and not sf.is_zero(problem.g.entries[i]):
                low[i] = min(low[i], Fraction(problem.g.entries[i]))
            if problem.h is not None and not sf.is_zero(problem.h.entries[i]):
                high[i] = max(high[i], Fraction(problem.h.entries[i]))
    return GridSpec(
        Vector(tuple(low), sf), Vector(tuple(high), sf), default_step(n)
    )


def _cmd_verify(args) -> int:
    data = serialize.loads(_read_text(args.problem), exact=True)
    problem = serialize.parse_problem(data, MAXPLUS, exact=True)
    step = default_step(problem.dim)
    if args.step is not None:
        step = Fraction(args.step)
    try:
        closed = solve_problem(problem)
    except (NoRegularSolution, InfeasibleConstraints) as exc:
        grid = _verify_window(problem, args.window, None)
        if args.step is not None:
            grid = GridSpec(grid.lower, grid.upper, step)
        try:
            grid_minimize(problem, grid)
        except NoFeasiblePoint:
            doc = {
                "closedForm": {"infeasible": str(exc)},
                "grid": "noFeasiblePoint",
                "agree": True,
            }
            _emit(doc, args)
            return 2
        doc = {
            "closedForm": {"infeasible": str(exc)},
            "grid": "feasiblePointFound",
            "agree": False,
        }
        _emit(doc, args)
        return 1
    grid = _verify_window(problem, args.window, closed.canonical)
    grid = GridSpec(grid.lower, grid.upper, step)
    best, argmin = grid_minimize(problem, grid)
    sf = problem.A.sf
    minima_match = sf.eq(best, closed.minimum)
    member = closed.solutions.contains(argmin)
    doc = {
        "closedForm": {
            "minimum": serialize.encode_scalar(closed.minimum),
            "canonical": serialize.encode_vector(closed.canonical),
        },
        "grid": {
            "minimum": serialize.encode_scalar(best),
            "argmin": serialize.encode_vector(argmin),
            "argminInFamily": member,
        },
        "agree": bool(minima_match and member),
    }
    _emit(doc, args)
    return 0 if doc["agree"] else 1


def _add_mode_flags(sub) -> None:
    group = sub.add_mutually_exclusive_group()
    group.add_argument(
        "--exact",
        action="store_true",
        help="exact rational arithmetic (the default)",
    )
    group.add_argument(
        "--float",
        dest="approx",
        action="store_true",
        help="floating point arithmetic with tolerant comparisons",
    )
    sub.add_argument(
        "--epsilon",
        type=float,
        default=None,
        help="comparison tolerance, implies --float (default 1e-9)",
    )
    sub.add_argument("--output", help="write the JSON result to a file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tropt",
        description="closed-form tropical optimization and scheduling",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    sub = subs.add_parser("solve", help="minimize a span objective")
    sub.add_argument("problem", help="problem JSON file ('-' for stdin)")
    _add_mode_flags(sub)
    sub.set_defaults(func=_cmd_solve)

    sub = subs.add_parser("schedule", help="solve a project schedule")
    sub.add_argument("spec", help="schedule JSON file ('-' for stdin)")
    sub.add_argument(
        "--emit-intermediates",
        action="store_true",
        help="include every intermediate quantity in the JSON result",
    )
    _add_mode_flags(sub)
    sub.set_defaults(func=_cmd_schedule)

    sub = subs.add_parser(
        "solve-ineq", help="solve A x <= x style inequality systems"
    )
    sub.add_argument("system", help="JSON file with A and b and/or d")
    _add_mode_flags(sub)
    sub.set_defaults(func=_cmd_solve_ineq)

    sub = subs.add_parser("eig", help="spectral radius")
    sub.add_argument("matrix", help="matrix JSON file")
    _add_mode_flags(sub)
    sub.set_defaults(func=_cmd_eig)

    sub = subs.add_parser("star", help="matrix closure")
    sub.add_argument("matrix", help="matrix JSON file")
    _add_mode_flags(sub)
    sub.set_defaults(func=_cmd_star)

    sub = subs.add_parser(
        "verify", help="check the closed form against a grid scan"
    )
    sub.add_argument("problem", help="problem JSON file")
    sub.add_argument(
        "--window",
        type=int,
        default=2,
        help="half-width of the scan box around the canonical solution",
    )
    sub.add_argument(
        "--step", default=None, help="grid step as a fraction, e.g. 1/12"
    )
    sub.add_argument("--output", help="write the JSON result to a file")
    sub.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _DOMAIN_ERRORS as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return 2
    except (TroptError, ValueError, TypeError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
