"""Hybrid GA + Monte Carlo solver.

A small block-state population is evolved exactly like ``cga2_run`` until
its best member reaches ``switch_fitness``; that member then performs a
temperature-free walk that keeps any single swap not raising its energy.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass

from .cga import evolve_block_population, greedy_swaps
from .core import Grid, PuzzleSpec, fitness_rows_cols
from .report import SolveReport, TraceRecorder
from .representation import BlockState, apply_swap, block_fill_cells, random_swap_pair


@dataclass(frozen=True)
class HgasaParams:
    population_size: int = 10
    switch_fitness: int = 2
    max_ga_generations: int = 5000
    max_mc_iterations: int = 200_000
    restarts: int = 3

    def __post_init__(self):
        if self.population_size < 1:
            raise ValueError("population_size must be >= 1")
        if self.switch_fitness < 0:
            raise ValueError("switch_fitness must be >= 0")
        if self.max_ga_generations < 0 or self.max_mc_iterations < 0:
            raise ValueError("iteration budgets must be >= 0")
        if self.restarts < 0:
            raise ValueError("restarts must be >= 0")


def monte_carlo_step(state: BlockState, energy: int, rng: random.Random) -> tuple:
    """Propose one swap; keep it when the energy does not go up."""
    proposal = apply_swap(state, random_swap_pair(state.spec, rng))
    e = fitness_rows_cols(proposal.grid)
    if e <= energy:
        return proposal, e
    return state, energy


def hgasa_run(
    spec: PuzzleSpec,
    params: HgasaParams = HgasaParams(),
    rng: random.Random | None = None,
    seed: int | None = None,
) -> SolveReport:
    rng = rng if rng is not None else random.Random(seed)
    start = time.perf_counter()
    trace = TraceRecorder()
    iterations = 0
    attempts = []
    best_cells, best_energy = None, None

    for attempt in range(params.restarts + 1):
        population = [
            block_fill_cells(spec, rng) for _ in range(params.population_size)
        ]
        fitness = [fitness_rows_cols(c) for c in population]
        if attempt == 0:
            trace.add(0, min(fitness))
        generations = evolve_block_population(
            spec,
            population,
            fitness,
            rng,
            params.max_ga_generations,
            params.switch_fitness,
            trace,
            first_generation=iterations,
        )
        iterations += generations
        k = min(range(len(fitness)), key=fitness.__getitem__)
        cells, energy = population[k], fitness[k]

        mc_steps = 0
        if energy <= params.switch_fitness:
            # Single-swap greedy walk; the in-place form of monte_carlo_step.
            while energy > 0 and mc_steps < params.max_mc_iterations:
                mc_steps += 1
                previous = energy
                energy = greedy_swaps(cells, energy, 1, spec, rng)
                if energy != previous or mc_steps % 100 == 0:
                    trace.add(iterations + mc_steps, energy)
            trace.add(iterations + mc_steps, energy)
        iterations += mc_steps
        attempts.append(
            {"ga_generations": generations, "mc_steps": mc_steps, "energy": energy}
        )

        if best_energy is None or energy < best_energy:
            best_cells, best_energy = cells, energy
        if energy == 0:
            break

    return SolveReport(
        solver="hgasa",
        solved=best_energy == 0,
        iterations=iterations,
        best_fitness_trace=_running_min(trace.freeze()),
        final_grid=Grid(best_cells),
        wall_time=time.perf_counter() - start,
        seed=seed,
        details={"attempts": attempts},
    )


def _running_min(points: tuple) -> tuple:
    out, best = [], None
    for it, f in points:
        best = f if best is None else min(best, f)
        out.append((it, best))
    return tuple(out)
