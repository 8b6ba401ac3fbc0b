"""Command-line front end: solve, count, check, and sieve subcommands.

Results go to stdout, diagnostics to stderr.  Exit codes: 0 for success
with at least one solution (or a valid grid, or a finished sieve), 1 for
zero solutions or an invalid grid, 2 for parse or usage errors.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

from .grid import PuzzleFormatError, is_sudoku_matrix, parse, render
from .sieve import primes_up_to
from .solver import ConflictError, SolveReport, solve


@dataclass
class RunConfig:
    subcommand: str
    input_path: str | None = None
    limit: int | None = None
    cap: int = 1
    format: str = "generic"
    stats: bool = False
    sieve_bound: int = 0


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _count_field(report: SolveReport) -> str:
    return str(report.solution_count) + ("+" if report.truncated else "")


def _stats_line(report: SolveReport) -> str:
    return (f"solutions={_count_field(report)} "
            f"trials={report.trials} passes={report.propagation_passes}")


def run(config: RunConfig) -> int:
    """Execute one subcommand and return the process exit code."""
    if config.subcommand == "sieve":
        for p in primes_up_to(config.sieve_bound):
            print(p)
        return 0

    try:
        doc = parse(_read_text(config.input_path))
    except (PuzzleFormatError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    g = doc.to_grid()
    if config.format == "classic" and g.order != 3:
        print("error: classic format requires an order-3 board",
              file=sys.stderr)
        return 2

    if config.subcommand == "check":
        if doc.blank_count() > 0:
            print("error: check requires a complete grid (no blanks)",
                  file=sys.stderr)
            return 2
        ok = is_sudoku_matrix(g)
        print("VALID" if ok else "INVALID")
        return 0 if ok else 1

    if config.subcommand == "solve":
        try:
            report = solve(g, cap=max(1, config.cap), limit=1)
        except ConflictError as exc:
            print(f"conflicting clues: {exc}", file=sys.stderr)
            print("UNSOLVABLE")
            return 1
        if report.solution_count == 0:
            print("UNSOLVABLE")
            if config.stats:
                print(_stats_line(report))
            return 1
        sys.stdout.write(render(report.solutions[0], config.format))
        if config.stats:
            print(_stats_line(report))
        return 0

    if config.subcommand == "count":
        try:
            report = solve(g, cap=config.cap, limit=config.limit)
        except ConflictError as exc:
            print(f"conflicting clues: {exc}", file=sys.stderr)
            print("solutions=0 trials=0 passes=0" if config.stats
                  else "solutions=0")
            return 1
        if config.stats:
            print(_stats_line(report))
        else:
            print(f"solutions={_count_field(report)}")
        return 0 if report.solution_count > 0 else 1

    raise ValueError(f"unknown subcommand {config.subcommand!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bitsudoku",
        description="Solve, count, and check n^2 x n^2 Sudoku puzzles; "
                    "list primes with a bit-array sieve.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("generic", "classic"),
                        default="generic",
                        help="output rendering (classic is order-3 only)")
    common.add_argument("--stats", action="store_true",
                        help="emit a 'solutions= trials= passes=' line")
    common.add_argument("--cap", type=int, default=1, metavar="N",
                        help="retain at most N solutions (default 1)")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("solve", parents=[common],
                       help="print the first solution or UNSOLVABLE")
    p.add_argument("input", metavar="path|-", help="puzzle file or - for stdin")

    p = sub.add_parser("count", parents=[common],
                       help="count every solution")
    p.add_argument("input", metavar="path|-", help="puzzle file or - for stdin")
    p.add_argument("--limit", type=int, metavar="N",
                   help="stop after counting N solutions")

    p = sub.add_parser("check", parents=[common],
                       help="validate a complete grid (VALID/INVALID)")
    p.add_argument("input", metavar="path|-", help="puzzle file or - for stdin")

    p = sub.add_parser("sieve", parents=[common],
                       help="print all primes up to N, one per line")
    p.add_argument("bound", type=int, metavar="N")

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.cap < 0:
        parser.error("--cap must be >= 0")
    limit = getattr(args, "limit", None)
    if limit is not None and limit < 1:
        parser.error("--limit must be >= 1")
    if args.subcommand == "sieve" and args.bound < 0:
        parser.error("N must be >= 0")
    config = RunConfig(
        subcommand=args.subcommand,
        input_path=getattr(args, "input", None),
        limit=limit,
        cap=args.cap,
        format=args.format,
        stats=args.stats,
        sieve_bound=getattr(args, "bound", 0),
    )
    return run(config)
