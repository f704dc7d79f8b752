"""Quantum-style simulated annealing over block-valid grids.

The tunnelling strength plays the part of the temperature in the Metropolis
test and also sets how many block swaps make up one proposal: many early on,
a single swap once the strength has decayed.
"""

from __future__ import annotations

import math
import random
import statistics
import time
from dataclasses import dataclass
from typing import Optional

from .core import Grid, PuzzleSpec, fitness_rows_cols
from .report import SolveReport, TraceRecorder
from .representation import block_fill_cells, swap_cells

TRACE_EVERY = 100


@dataclass(frozen=True)
class QsaParams:
    outer_iterations: int = 20
    chain_length: int = 47 * 47
    cooling_factor: float = 0.8
    strength_samples: int = 100
    max_swaps: int = 10
    max_proposals: Optional[int] = None

    def __post_init__(self):
        if not 0.0 < self.cooling_factor < 1.0:
            raise ValueError("cooling_factor must lie in (0, 1)")
        if self.chain_length < 1:
            raise ValueError("chain_length must be >= 1")
        if self.outer_iterations < 0:
            raise ValueError("outer_iterations must be >= 0")
        if self.strength_samples < 2:
            raise ValueError("strength_samples must be >= 2")
        if self.max_swaps < 1:
            raise ValueError("max_swaps must be >= 1")
        if self.max_proposals is not None and self.max_proposals < 0:
            raise ValueError("max_proposals must be >= 0")


def sample_std(values) -> float:
    """Standard deviation with the n-1 denominator."""
    return statistics.stdev(values)


def init_tunnelling_strength(
    spec: PuzzleSpec, rng: random.Random, samples: int = 100
) -> float:
    """Sample std of the energies of ``samples`` random block-valid states."""
    if samples < 2:
        raise ValueError("need at least two samples for a standard deviation")
    energies = [fitness_rows_cols(block_fill_cells(spec, rng)) for _ in range(samples)]
    return sample_std(energies)


def swaps_for_strength(t: float, t_initial: float, max_swaps: int = 10) -> int:
    """Neighbourhood radius: linear in the strength, never below one swap."""
    if t_initial <= 0:
        return 1
    return max(1, round(max_swaps * t / t_initial))


def acceptance_probability(e: float, e_next: float, t: float) -> float:
    """``exp(-(e_next - e) / t)``; values above 1 mean certain acceptance."""
    if t <= 0:
        raise ValueError("tunnelling strength must be positive")
    return math.exp(-(e_next - e) / t)


def qsa_run(
    spec: PuzzleSpec,
    params: QsaParams = QsaParams(),
    rng: random.Random | None = None,
    seed: int | None = None,
) -> SolveReport:
    rng = rng if rng is not None else random.Random(seed)
    start = time.perf_counter()
    trace = TraceRecorder()

    t0 = init_tunnelling_strength(spec, rng, params.strength_samples)
    current = block_fill_cells(spec, rng)
    energy = fitness_rows_cols(current)
    best, best_energy = current, energy
    current_trace = [(0, energy)]
    accepted_per_chain = []
    strengths = []
    trace.add(0, best_energy)

    proposals = 0
    t = t0
    # A zero spread (e.g. a fully given grid) leaves nothing to anneal.
    can_move = bool(spec.swappable_blocks) and t0 > 0
    budget = params.outer_iterations * params.chain_length
    if params.max_proposals is not None:
        budget = min(budget, params.max_proposals)
    for _ in range(params.outer_iterations if can_move else 0):
        if best_energy == 0 or proposals >= budget:
            break
        n_swaps = swaps_for_strength(t, t0, params.max_swaps)
        strengths.append(t)
        accepted = 0
        for _ in range(params.chain_length):
            proposals += 1
            proposal = current[:]
            for _ in range(n_swaps):
                swap_cells(proposal, spec, rng)
            e_next = fitness_rows_cols(proposal)
            if e_next <= energy or rng.random() < acceptance_probability(
                energy, e_next, t
            ):
                current, energy = proposal, e_next
                accepted += 1
                if energy < best_energy:
                    best, best_energy = current, energy
            if proposals % TRACE_EVERY == 0:
                trace.add(proposals, best_energy)
                current_trace.append((proposals, energy))
            if best_energy == 0 or proposals >= budget:
                break
        accepted_per_chain.append(accepted)
        t *= params.cooling_factor
    trace.add(proposals, best_energy)

    return SolveReport(
        solver="qsa",
        solved=best_energy == 0,
        iterations=proposals,
        best_fitness_trace=trace.freeze(),
        final_grid=Grid(best),
        wall_time=time.perf_counter() - start,
        seed=seed,
        details={
            "initial_strength": t0,
            "strengths": strengths,
            "accepted_per_chain": accepted_per_chain,
            "current_energy_trace": current_trace,
        },
    )
