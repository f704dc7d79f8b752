"""Command line entry point: ``solve``, ``bench`` and ``fixtures``."""

from __future__ import annotations

import argparse
import sys

from .core import EASY_PUZZLE_TEXT, EASY_SOLUTION_TEXT
from .harness import (
    SOLVERS,
    ConfigError,
    RunConfig,
    read_config_file,
    run_batch,
    run_single,
    solver_entry,
)

EXIT_SOLVED = 0
EXIT_CONFIG = 1
EXIT_UNSOLVED = 2


def _parse_override(text: str) -> tuple:
    if "=" not in text:
        raise argparse.ArgumentTypeError(f"expected key=value, got {text!r}")
    key, value = text.split("=", 1)
    return key.strip().replace("-", "_"), value.strip()


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--solver", required=True, help=f"one of {', '.join(SOLVERS)}")
    p.add_argument("--puzzle", required=True, help="81-character puzzle file")
    p.add_argument("--config", help="key=value file of solver parameter overrides")
    p.add_argument(
        "--param",
        "-p",
        action="append",
        default=[],
        type=_parse_override,
        metavar="KEY=VALUE",
        help="solver parameter override (repeatable; wins over --config)",
    )
    p.add_argument(
        "--max-iters",
        type=int,
        help="iteration budget (generations, proposals or Monte Carlo steps)",
    )


class _Parser(argparse.ArgumentParser):
    # Usage errors are configuration errors; exit code 2 means "unsolved".
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_CONFIG, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="stochastic-sudoku",
        description="Stochastic Sudoku solvers and benchmark harness.",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    solve = sub.add_parser("solve", help="run one seeded solve")
    _add_common(solve)
    solve.add_argument("--seed", type=int, default=0)
    solve.add_argument("--trace", help="write iteration,best_fitness CSV here")

    bench = sub.add_parser("bench", help="run a batch of seeded solves")
    _add_common(bench)
    bench.add_argument("--runs", type=int, default=20)
    bench.add_argument("--seed-base", type=int, default=0)
    bench.add_argument("--workers", type=int, default=1)
    bench.add_argument("--out", help="per-run CSV: seed,solved,iterations,wall_ms")

    sub.add_parser("fixtures", help="print the bundled puzzle and its solution")
    return parser


def _overrides(args) -> dict:
    out = read_config_file(args.config) if args.config else {}
    out.update(dict(args.param))
    if args.max_iters is not None:
        out[solver_entry(args.solver).budget_field] = args.max_iters
    return out


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)

    if args.command == "fixtures":
        print(EASY_PUZZLE_TEXT)
        print(EASY_SOLUTION_TEXT)
        return EXIT_SOLVED

    try:
        if args.command == "solve":
            config = RunConfig(
                args.solver, args.puzzle, args.seed, _overrides(args), args.trace
            )
            report = run_single(config)
            print(report.summary_line())
            return EXIT_SOLVED if report.solved else EXIT_UNSOLVED

        config = RunConfig(args.solver, args.puzzle, 0, _overrides(args))
        stats = run_batch(config, args.runs, args.seed_base, workers=args.workers)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG

    print(stats.table())
    if args.out:
        stats.write_csv(args.out)
    return EXIT_SOLVED


if __name__ == "__main__":
    sys.exit(main())
