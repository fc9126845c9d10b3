"""Command line front end.

Exit codes: 0 optimal, 1 infeasible, 2 unbounded, 3 stopped by a
safeguard (cycle detection or the iteration budget), 64 usage errors
(including unreadable files), 65 malformed LP input.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional

from .generate import Shape, generate_lp
from .harness import Method, compare, solve
from .jsonout import (
    emit_oracle_json,
    emit_outcome_json,
    emit_report_json,
    write_json,
)
from .lpformat import ParseError, format_lp, parse_lp
from .model import EmptyProblem, GeneralProblem, UnsupportedFreeVariable, standardize
from .numeric import EXACT, FloatMode, NumericMode
from .oracle import TooLarge, enumerate_vertices
from .trace import SolveConfig, Status, TieBreak

EX_OK = 0
EX_INFEASIBLE = 1
EX_UNBOUNDED = 2
EX_SAFEGUARD = 3
EX_USAGE = 64
EX_DATA = 65


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse that raises instead of calling sys.exit(2)."""

    def error(self, message: str):
        raise _UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="afsimplex", description="Two-method LP solver.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_numeric(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--numeric",
            choices=["rational", "float"],
            default="rational",
            help="arithmetic backend (default: rational)",
        )
        p.add_argument(
            "--eps",
            type=float,
            default=1e-9,
            help="sign tolerance for --numeric float (default: 1e-9)",
        )

    def add_solve_knobs(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--tie",
            choices=[t.value for t in TieBreak],
            default=TieBreak.SMALLEST_LABEL.value,
            help="ratio-test tie rule (default: smallest-label)",
        )
        p.add_argument(
            "--max-iters",
            type=int,
            default=None,
            metavar="N",
            help="override the pivot budget",
        )

    p_solve = sub.add_parser("solve", help="solve one LP file")
    p_solve.add_argument("file", help="LP input file")
    p_solve.add_argument(
        "--method",
        choices=[m.value for m in Method],
        default=Method.ARTIFICIAL_FREE.value,
        help="phase 1 variant (default: af)",
    )
    p_solve.add_argument("--trick", action="store_true",
                         help="let the traditional method shortcut zero artificials")
    p_solve.add_argument("--trace", metavar="OUT.json",
                         help="write the full pivot trace to a JSON file")
    p_solve.add_argument("--quiet", action="store_true",
                         help="suppress stdout, keep the exit code")
    add_solve_knobs(p_solve)
    add_numeric(p_solve)

    p_cmp = sub.add_parser("compare", help="run both phase 1 methods side by side")
    p_cmp.add_argument("file", help="LP input file")
    p_cmp.add_argument("--report", metavar="OUT.json",
                       help="write the comparison report to a JSON file")
    p_cmp.add_argument("--quiet", action="store_true",
                       help="suppress stdout, keep the exit code")
    add_solve_knobs(p_cmp)
    add_numeric(p_cmp)

    p_gen = sub.add_parser("gen", help="generate a random LP file")
    p_gen.add_argument("--seed", type=int, required=True)
    p_gen.add_argument("--rows", type=int, required=True)
    p_gen.add_argument("--cols", type=int, required=True)
    p_gen.add_argument(
        "--shape",
        choices=[s.value for s in Shape],
        default=Shape.FEASIBLE_BIASED.value,
        help="instance family (default: feasible-biased)",
    )
    p_gen.add_argument("--coeff-lo", type=int, default=-9, metavar="LO")
    p_gen.add_argument("--coeff-hi", type=int, default=9, metavar="HI")
    p_gen.add_argument("--out", metavar="FILE", help="write here instead of stdout")

    p_oracle = sub.add_parser("oracle", help="brute-force check a small LP file")
    p_oracle.add_argument("file", help="LP input file")
    p_oracle.add_argument("--guard", type=int, default=10**6,
                          help="refuse instances with more basis subsets than this")

    return parser


def _make_mode(args) -> NumericMode:
    if args.numeric == "float":
        return FloatMode(eps=args.eps)
    return EXACT


def _make_config(args) -> SolveConfig:
    return SolveConfig(
        tie_break=TieBreak(args.tie),
        max_iterations=args.max_iters,
        use_trick=getattr(args, "trick", False),
    )


def _read_problem(path: str, mode: NumericMode) -> GeneralProblem:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise _UsageError(f"cannot read {path}: {exc.strerror or exc}") from exc
    return parse_lp(text, mode)


def _status_code(status: Status) -> int:
    if status in (Status.OPTIMAL, Status.FEASIBLE):
        return EX_OK
    if status is Status.INFEASIBLE:
        return EX_INFEASIBLE
    if status is Status.UNBOUNDED:
        return EX_UNBOUNDED
    return EX_SAFEGUARD


def _cmd_solve(args) -> int:
    mode = _make_mode(args)
    gp = _read_problem(args.file, mode)
    sp = standardize(gp)
    outcome = solve(sp, Method(args.method), _make_config(args))
    text = emit_outcome_json(outcome)
    if args.trace:
        write_json(args.trace, text)
    if not args.quiet:
        sys.stdout.write(text)
    return _status_code(outcome.status)


def _cmd_compare(args) -> int:
    mode = _make_mode(args)
    gp = _read_problem(args.file, mode)
    sp = standardize(gp)
    report = compare(sp, _make_config(args))
    text = emit_report_json(report)
    if args.report:
        write_json(args.report, text)
    if not args.quiet:
        sys.stdout.write(text)
    return _status_code(report.verdict)


def _cmd_gen(args) -> int:
    if args.rows < 1 or args.cols < 1:
        raise _UsageError("--rows and --cols must be at least 1")
    if args.coeff_lo > args.coeff_hi:
        raise _UsageError("--coeff-lo must not exceed --coeff-hi")
    gp = generate_lp(
        seed=args.seed,
        rows=args.rows,
        cols=args.cols,
        coeff_range=(args.coeff_lo, args.coeff_hi),
        shape=Shape(args.shape),
    )
    text = format_lp(gp)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EX_OK


def _cmd_oracle(args) -> int:
    gp = _read_problem(args.file, EXACT)
    sp = standardize(gp)
    try:
        result = enumerate_vertices(sp, guard=args.guard)
    except TooLarge as exc:
        raise _UsageError(str(exc)) from exc
    sys.stdout.write(emit_oracle_json(result))
    if not result.feasible:
        return EX_INFEASIBLE
    if result.unbounded:
        return EX_UNBOUNDED
    return EX_OK


_COMMANDS = {
    "solve": _cmd_solve,
    "compare": _cmd_compare,
    "gen": _cmd_gen,
    "oracle": _cmd_oracle,
}


def main(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except _UsageError as exc:
        print(f"afsimplex: {exc}", file=sys.stderr)
        return EX_USAGE
    except (ParseError, EmptyProblem, UnsupportedFreeVariable) as exc:
        print(f"afsimplex: {exc}", file=sys.stderr)
        return EX_DATA


def console_main() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    console_main()
