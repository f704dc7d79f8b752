"""Outcome record shared by every solver."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .core import Grid, render_grid


@dataclass(frozen=True)
class SolveReport:
    """Result of one solver run.

    ``iterations`` counts generations for the population solvers, proposals
    for the annealer and generations plus Monte Carlo steps for the hybrid.
    ``best_fitness_trace`` holds ``(iteration, best_fitness)`` pairs in
    ascending iteration order. Solver-specific diagnostics go in
    ``details``; they are deterministic under a fixed seed like the rest.
    """

    solver: str
    solved: bool
    iterations: int
    best_fitness_trace: tuple
    final_grid: Grid
    wall_time: float = field(compare=False)
    seed: int | None = None
    details: dict[str, Any] = field(default_factory=dict)

    @property
    def best_fitness(self) -> int:
        return self.best_fitness_trace[-1][1] if self.best_fitness_trace else -1

    def summary_line(self) -> str:
        if self.solved:
            return render_grid(self.final_grid)
        return f"UNSOLVED best_fitness={self.best_fitness}"


class TraceRecorder:
    """Accumulates ``(iteration, best)`` points; same-iteration points overwrite."""

    def __init__(self):
        self.points: list[tuple[int, int]] = []

    def add(self, iteration: int, best: int) -> None:
        if self.points and self.points[-1][0] == iteration:
            self.points[-1] = (iteration, best)
        else:
            self.points.append((iteration, best))

    def freeze(self) -> tuple:
        return tuple(self.points)
