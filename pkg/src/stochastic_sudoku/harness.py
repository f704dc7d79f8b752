"""Seeded single runs, batch statistics and trace CSV files."""

from __future__ import annotations

import csv
import dataclasses
import os
import random
import statistics
import typing
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable, Mapping, NamedTuple

import numpy as np

from .cga import Cga1Params, Cga2Params, cga1_run, cga2_run
from .core import PuzzleError, PuzzleSpec, load_puzzle
from .hgasa import HgasaParams, hgasa_run
from .qsa import QsaParams, qsa_run
from .report import SolveReport
from .rpso import RpsoParams, rpso_run


class ConfigError(ValueError):
    """Raised for bad solver ids, unreadable puzzles or invalid parameters."""


class SolverEntry(NamedTuple):
    params_cls: type
    run: Callable
    make_rng: Callable[[int], Any]
    budget_field: str


SOLVERS: dict[str, SolverEntry] = {
    "cga1": SolverEntry(Cga1Params, cga1_run, random.Random, "max_generations"),
    "cga2": SolverEntry(Cga2Params, cga2_run, random.Random, "max_generations"),
    "rpso": SolverEntry(RpsoParams, rpso_run, np.random.default_rng, "max_iterations"),
    "qsa": SolverEntry(QsaParams, qsa_run, random.Random, "max_proposals"),
    "hgasa": SolverEntry(HgasaParams, hgasa_run, random.Random, "max_mc_iterations"),
}


def _coerce(value: Any, hint: Any, name: str) -> Any:
    if not isinstance(value, str):
        return value
    options = typing.get_args(hint) or (hint,)
    if type(None) in options and value.strip().lower() in ("none", ""):
        return None
    for kind in options:
        if kind is type(None):
            continue
        try:
            if kind is bool:
                return value.strip().lower() in ("1", "true", "yes", "on")
            if kind is int:
                return int(value.replace("_", ""))
            return kind(value)
        except (TypeError, ValueError):
            continue
    raise ConfigError(f"cannot interpret {name}={value!r}")


def build_params(solver_id: str, overrides: Mapping[str, Any] | None = None):
    """Instantiate the solver's parameter record, applying string overrides."""
    entry = solver_entry(solver_id)
    overrides = dict(overrides or {})
    hints = typing.get_type_hints(entry.params_cls)
    names = {f.name for f in dataclasses.fields(entry.params_cls)}
    unknown = set(overrides) - names
    if unknown:
        raise ConfigError(
            f"unknown parameter(s) for {solver_id}: {', '.join(sorted(unknown))}"
        )
    kwargs = {k: _coerce(v, hints[k], k) for k, v in overrides.items()}
    try:
        return entry.params_cls(**kwargs)
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"invalid {solver_id} parameters: {exc}") from exc


def solver_entry(solver_id: str) -> SolverEntry:
    try:
        return SOLVERS[solver_id]
    except KeyError:
        raise ConfigError(
            f"unknown solver {solver_id!r}; choose from {', '.join(SOLVERS)}"
        ) from None


@dataclass(frozen=True)
class RunConfig:
    solver_id: str
    puzzle_path: str | os.PathLike
    seed: int = 0
    solver_params: Mapping[str, Any] = field(default_factory=dict)
    trace_path: str | os.PathLike | None = None

    def __post_init__(self):
        solver_entry(self.solver_id)

    def load_spec(self) -> PuzzleSpec:
        try:
            return load_puzzle(self.puzzle_path)
        except OSError as exc:
            raise ConfigError(f"cannot read puzzle {self.puzzle_path}: {exc}") from exc
        except PuzzleError as exc:
            raise ConfigError(f"bad puzzle {self.puzzle_path}: {exc}") from exc

    def params(self):
        return build_params(self.solver_id, self.solver_params)


def run_single(config: RunConfig) -> SolveReport:
    """Validate the configuration, then run one seeded solve.

    All randomness is drawn from one generator seeded with ``config.seed``.
    """
    entry = solver_entry(config.solver_id)
    spec = config.load_spec()
    params = config.params()
    report = entry.run(spec, params, rng=entry.make_rng(config.seed), seed=config.seed)
    if config.trace_path is not None:
        write_trace(report, config.trace_path)
    return report


def write_trace(report: SolveReport, sink) -> None:
    """Write ``iteration,best_fitness`` rows to a path or an open text stream."""
    if isinstance(sink, (str, os.PathLike)):
        try:
            with open(sink, "w", encoding="utf-8", newline="") as fh:
                _write_trace_rows(report.best_fitness_trace, fh)
        except OSError as exc:
            raise OSError(f"cannot write trace to {sink}: {exc}") from exc
    else:
        _write_trace_rows(report.best_fitness_trace, sink)


def _write_trace_rows(points, fh) -> None:
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(["iteration", "best_fitness"])
    writer.writerows(sorted(points))


def read_trace(source) -> tuple:
    if isinstance(source, (str, os.PathLike)):
        with open(source, encoding="utf-8", newline="") as fh:
            return read_trace(fh)
    reader = csv.DictReader(source)
    return tuple((int(r["iteration"]), int(r["best_fitness"])) for r in reader)


class Spread(NamedTuple):
    min: float
    median: float
    max: float

    @classmethod
    def of(cls, values) -> "Spread":
        values = list(values)
        return cls(min(values), statistics.median(values), max(values))


class RunRecord(NamedTuple):
    seed: int
    solved: bool
    iterations: int
    wall_ms: float
    best_fitness: int


@dataclass(frozen=True)
class BatchStats:
    solver_id: str
    runs: int
    successes: int
    wall_times: Spread
    iterations: Spread
    records: tuple = ()

    @property
    def success_rate(self) -> float:
        return self.successes / self.runs

    def table(self) -> str:
        w, it = self.wall_times, self.iterations
        lines = [
            f"solver        {self.solver_id}",
            f"runs          {self.runs}",
            f"successes     {self.successes}",
            f"success_rate  {self.success_rate:.3f}",
            f"wall_s        min={w.min:.3f} median={w.median:.3f} max={w.max:.3f}",
            f"iterations    min={it.min} median={it.median} max={it.max}",
        ]
        return "\n".join(lines)

    def write_csv(self, path) -> None:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(["seed", "solved", "iterations", "wall_ms"])
            for r in self.records:
                writer.writerow([r.seed, int(r.solved), r.iterations, f"{r.wall_ms:.3f}"])


def _record(config: RunConfig) -> RunRecord:
    report = run_single(config)
    return RunRecord(
        config.seed,
        report.solved,
        report.iterations,
        report.wall_time * 1000.0,
        report.best_fitness,
    )


def run_batch(
    config: RunConfig, n: int, seed_base: int = 0, workers: int = 1
) -> BatchStats:
    """Run seeds ``seed_base .. seed_base + n - 1`` and aggregate.

    Non-convergence is counted, not raised. With ``workers > 1`` the runs
    execute in separate processes; each still times itself.
    """
    if n < 1:
        raise ConfigError("a batch needs at least one run")
    # Fail fast on configuration problems before launching anything.
    config.load_spec()
    config.params()
    configs = [
        dataclasses.replace(config, seed=seed_base + i, trace_path=None)
        for i in range(n)
    ]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(_record, configs))
    else:
        records = [_record(c) for c in configs]
    return BatchStats(
        solver_id=config.solver_id,
        runs=n,
        successes=sum(r.solved for r in records),
        wall_times=Spread.of(r.wall_ms / 1000.0 for r in records),
        iterations=Spread.of(r.iterations for r in records),
        records=tuple(records),
    )


def read_config_file(path) -> dict[str, str]:
    """Parse ``key = value`` lines; blank lines and ``#`` comments are skipped."""
    out = {}
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.readlines()
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    for lineno, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{lineno}: expected key=value")
        key, value = (part.strip() for part in line.split("=", 1))
        out[key.replace("-", "_")] = value
    return out
