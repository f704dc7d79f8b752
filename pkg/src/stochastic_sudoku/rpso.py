"""Repulsive particle swarm over the empty-cell gene encoding.

Each particle is a 47-dimensional integer position (one digit per empty
cell). Velocities follow the repulsive update

    v' = w*v + w*c1*r1*(x_best - x) + w*c2*r2*(x_br - x) + w*c3*r3*z

where ``x_br`` is another particle's personal best and ``z`` another
particle's velocity, both taken in the same dimension. ``c2`` is negative,
so the second term pushes particles apart. The swarm is vectorized with
numpy: one iteration updates every dimension of every particle at once.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .core import UNITS, Grid, PuzzleSpec
from .report import SolveReport, TraceRecorder
from .representation import decode_cells

TRACE_EVERY = 100

# (9, 27): member k of every unit, so the OR-reduction runs over axis 1.
_UNIT_MEMBERS = np.array(UNITS, dtype=np.intp).T.copy()
_DIGIT_BIT = (1 << np.arange(10)).astype(np.int32)
_POPCOUNT = np.array([bin(m).count("1") for m in range(1 << 10)], dtype=np.int32)


@dataclass(frozen=True)
class RpsoParams:
    swarm_size: int = 50
    omega: float = 0.1
    c1: float = 2.0
    c2: float = -2.0
    c3: float = 2.0
    max_iterations: int = 100_000
    init: str = "uniform"

    def __post_init__(self):
        if self.swarm_size < 2:
            raise ValueError("swarm_size must be >= 2 so peers exist")
        if not 0.01 <= self.omega <= 0.7:
            raise ValueError("omega must lie in [0.01, 0.7]")
        if self.c2 >= 0:
            raise ValueError("c2 must be negative (it is the repulsion weight)")
        if self.max_iterations < 0:
            raise ValueError("max_iterations must be >= 0")
        if self.init not in ("uniform", "candidates"):
            raise ValueError("init must be 'uniform' or 'candidates'")


def velocity_update(x, v, x_best, x_br, z, params: RpsoParams, r1, r2, r3):
    """Next velocity for one dimension (broadcasts over numpy arrays)."""
    w = params.omega
    return (
        w * v
        + w * params.c1 * r1 * (x_best - x)
        + w * params.c2 * r2 * (x_br - x)
        + w * params.c3 * r3 * z
    )


def round_half_away(y):
    y = np.asarray(y, dtype=float)
    return np.where(y >= 0, np.floor(y + 0.5), np.ceil(y - 0.5))


def position_update(x, v_next):
    """Move, round half away from zero and clamp into 1..9."""
    out = np.clip(round_half_away(np.add(x, v_next)), 1, 9).astype(np.int64)
    return int(out) if out.ndim == 0 else out


def batch_fitness_all_units(grids: np.ndarray) -> np.ndarray:
    """Missing-digit count over all 27 units for each row of an (n, 81) array."""
    bits = _DIGIT_BIT[grids][:, _UNIT_MEMBERS]
    present = np.bitwise_or.reduce(bits, axis=1)
    return 243 - _POPCOUNT[present].sum(axis=1)


def _other(rows: np.ndarray, u: np.ndarray, n: int) -> np.ndarray:
    """Map uniforms in [0, 1) to a uniformly chosen index other than ``rows``."""
    return (rows + 1 + (u * (n - 1)).astype(np.intp)) % n


def _initial_positions(spec: PuzzleSpec, params: RpsoParams, rng, n: int, d: int):
    if params.init == "uniform":
        return rng.integers(1, 10, size=(n, d))
    cols = [rng.choice(np.array(c), size=n) for c in spec.candidates]
    return np.stack(cols, axis=1) if cols else np.zeros((n, 0), dtype=np.int64)


def rpso_run(
    spec: PuzzleSpec,
    params: RpsoParams = RpsoParams(),
    rng: Optional[np.random.Generator] = None,
    seed: int | None = None,
    observer: Optional[Callable] = None,
) -> SolveReport:
    """Run the swarm until some personal best solves the puzzle.

    ``observer``, if given, is called after every iteration as
    ``observer(iteration, positions, velocities, pbest_fitness)``.
    """
    rng = rng if rng is not None else np.random.default_rng(seed)
    start = time.perf_counter()
    trace = TraceRecorder()

    n, d = params.swarm_size, len(spec.empty_indices)
    empty = np.array(spec.empty_indices, dtype=np.intp)
    canvas = np.tile(np.array(decode_cells(spec, [0] * d)), (n, 1))

    def evaluate(x):
        canvas[:, empty] = x
        return batch_fitness_all_units(canvas)

    x = _initial_positions(spec, params, rng, n, d).astype(np.int64)
    v = np.zeros((n, d))
    pbest = x.copy()
    pbest_fit = evaluate(x)
    g = int(np.argmin(pbest_fit))
    gbest, gbest_fit = pbest[g].copy(), int(pbest_fit[g])
    trace.add(0, gbest_fit)

    rows = np.arange(n)[:, None]
    dims = np.arange(d)[None, :]
    iteration = 0
    while gbest_fit > 0 and iteration < params.max_iterations:
        iteration += 1
        r1, r2, r3, u_br, u_z = rng.random((5, n, d))
        # Independent peers per (particle, dimension), never the particle itself.
        x_br = pbest[_other(rows, u_br, n), dims]
        z = v[_other(rows, u_z, n), dims]
        v = velocity_update(x, v, pbest, x_br, z, params, r1, r2, r3)
        x = np.clip(round_half_away(x + v), 1, 9).astype(np.int64)

        fit = evaluate(x)
        improved = fit < pbest_fit
        pbest[improved] = x[improved]
        pbest_fit[improved] = fit[improved]
        g = int(np.argmin(pbest_fit))
        if pbest_fit[g] < gbest_fit:
            gbest, gbest_fit = pbest[g].copy(), int(pbest_fit[g])
            trace.add(iteration, gbest_fit)
        elif iteration % TRACE_EVERY == 0:
            trace.add(iteration, gbest_fit)
        if observer is not None:
            observer(iteration, x, v, pbest_fit)
    trace.add(iteration, gbest_fit)

    return SolveReport(
        solver="rpso",
        solved=gbest_fit == 0,
        iterations=iteration,
        best_fitness_trace=trace.freeze(),
        final_grid=Grid(decode_cells(spec, gbest.tolist())),
        wall_time=time.perf_counter() - start,
        seed=seed,
    )
