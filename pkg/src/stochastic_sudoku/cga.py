"""Cultural genetic algorithms.

``cga1_run`` evolves 47-gene vectors with tournament selection, single-point
crossover and candidate-respecting mutation. ``cga2_run`` evolves block-valid
grids with swap mutation only; the number of swaps per individual shrinks as
the best fitness improves.
"""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass
from typing import Sequence

from .core import Grid, PuzzleSpec, fitness_all_units, fitness_rows_cols
from .report import SolveReport, TraceRecorder
from .representation import (
    GeneVector,
    block_fill_cells,
    decode_cells,
    random_genes,
    swap_cells,
)


@dataclass(frozen=True)
class Cga1Params:
    population_size: int = 50
    subpopulation_size: int = 25
    tournament_size: int = 3
    mutated_genes: int = 3
    max_generations: int = 10_000

    def __post_init__(self):
        if self.population_size < 1:
            raise ValueError("population_size must be >= 1")
        if not 1 <= self.subpopulation_size <= self.population_size:
            raise ValueError("subpopulation_size must be in 1..population_size")
        if self.tournament_size < 1:
            raise ValueError("tournament_size must be >= 1")
        if self.mutated_genes < 0:
            raise ValueError("mutated_genes must be >= 0")
        if self.max_generations < 0:
            raise ValueError("max_generations must be >= 0")


@dataclass(frozen=True)
class Cga2Params:
    population_size: int = 100
    max_generations: int = 5000

    def __post_init__(self):
        if self.population_size < 1:
            raise ValueError("population_size must be >= 1")
        if self.max_generations < 0:
            raise ValueError("max_generations must be >= 0")


def tournament_select(population: Sequence[tuple], k: int, rng: random.Random):
    """Sample ``k`` members with replacement and return the fittest individual.

    ``population`` holds ``(individual, fitness)`` pairs; lower fitness wins
    and ties go to the member sampled first.
    """
    if not population:
        raise ValueError("cannot select from an empty population")
    if k < 1:
        raise ValueError("tournament size must be >= 1")
    n = len(population)
    best = population[rng.randrange(n)]
    for _ in range(k - 1):
        challenger = population[rng.randrange(n)]
        if challenger[1] < best[1]:
            best = challenger
    return best[0]


def crossover_at(a: Sequence[int], b: Sequence[int], point: int) -> list:
    """Genes ``1..point`` from ``a`` and the rest from ``b``."""
    return list(a[:point]) + list(b[point:])


def single_point_crossover(a, b, rng: random.Random) -> GeneVector:
    if len(a) != len(b):
        raise ValueError("parents must have the same number of genes")
    point = rng.randint(1, len(a))
    return GeneVector(crossover_at(a, b, point))


def mutate_genes(genes: list, spec: PuzzleSpec, rng: random.Random, count: int = 3) -> list:
    """Reassign ``count`` distinct positions in place from their candidate sets."""
    candidates = spec.candidates
    for pos in rng.sample(range(len(genes)), min(count, len(genes))):
        genes[pos] = rng.choice(candidates[pos])
    return genes


def gene_mutation(child, spec: PuzzleSpec, rng: random.Random, count: int = 3) -> GeneVector:
    return GeneVector(mutate_genes(list(child), spec, rng, count))


def mutation_count(best_fitness: int) -> int:
    """Swaps applied per individual: half the best fitness, rounded up.

    >>> mutation_count(25)
    13
    """
    if best_fitness < 0:
        raise ValueError("fitness is never negative")
    return max(1, math.ceil(best_fitness / 2))


def _report(solver, solved, iterations, trace, cells, start, seed, **details):
    return SolveReport(
        solver=solver,
        solved=solved,
        iterations=iterations,
        best_fitness_trace=trace.freeze(),
        final_grid=Grid(cells),
        wall_time=time.perf_counter() - start,
        seed=seed,
        details=details,
    )


def cga1_run(
    spec: PuzzleSpec,
    params: Cga1Params = Cga1Params(),
    rng: random.Random | None = None,
    seed: int | None = None,
) -> SolveReport:
    """Gene-vector CGA.

    Each generation keeps the ``subpopulation_size`` fittest individuals,
    breeds the same number of children from them (tournament, crossover,
    mutation) and lets the children take the places of the worst members.
    Fitness counts missing digits over rows, columns and blocks.
    """
    rng = rng if rng is not None else random.Random(seed)
    start = time.perf_counter()
    trace = TraceRecorder()

    def evaluate(genes):
        return fitness_all_units(decode_cells(spec, genes))

    population = []
    for _ in range(params.population_size):
        genes = random_genes(spec, rng)
        population.append((genes, evaluate(genes)))
    population.sort(key=lambda p: p[1])

    generation = 0
    trace.add(0, population[0][1])
    n_children = min(params.subpopulation_size, params.population_size)
    while population[0][1] > 0 and generation < params.max_generations:
        generation += 1
        parents = population[: params.subpopulation_size]
        children = []
        for _ in range(n_children):
            a = tournament_select(parents, params.tournament_size, rng)
            b = tournament_select(parents, params.tournament_size, rng)
            genes = crossover_at(a, b, rng.randint(1, len(a)))
            mutate_genes(genes, spec, rng, params.mutated_genes)
            children.append((genes, evaluate(genes)))
        population = population[: params.population_size - n_children] + children
        population.sort(key=lambda p: p[1])
        trace.add(generation, population[0][1])

    best_genes, best_fit = population[0]
    return _report(
        "cga1",
        best_fit == 0,
        generation,
        trace,
        decode_cells(spec, best_genes),
        start,
        seed,
    )


def greedy_swaps(
    cells: list, energy: int, n_swaps: int, spec: PuzzleSpec, rng: random.Random
) -> int:
    """Apply ``n_swaps`` block swaps in place, undoing any that raise the energy.

    Returns the energy of ``cells`` afterwards. Equal-energy swaps are kept.
    """
    for _ in range(n_swaps):
        i, j = swap_cells(cells, spec, rng)
        trial = fitness_rows_cols(cells)
        if trial <= energy:
            energy = trial
        else:
            cells[i], cells[j] = cells[j], cells[i]
    return energy


def evolve_block_population(
    spec: PuzzleSpec,
    population: list,
    fitness: list,
    rng: random.Random,
    max_generations: int,
    stop_at: int,
    trace: TraceRecorder,
    first_generation: int = 0,
) -> int:
    """Run swap-mutation generations until the best fitness is <= ``stop_at``.

    ``population`` (cell lists) and ``fitness`` are updated in place. Every
    individual receives ``mutation_count(best)`` swaps per generation, each
    kept only if it does not make that individual worse, so no individual
    (and in particular not the best) ever regresses.

    Returns the number of generations run.
    """
    best = min(fitness)
    generation = 0
    while best > stop_at and generation < max_generations:
        generation += 1
        n_swaps = mutation_count(best)
        for k, cells in enumerate(population):
            fitness[k] = greedy_swaps(cells, fitness[k], n_swaps, spec, rng)
        best = min(fitness)
        trace.add(first_generation + generation, best)
    return generation


def cga2_run(
    spec: PuzzleSpec,
    params: Cga2Params = Cga2Params(),
    rng: random.Random | None = None,
    seed: int | None = None,
) -> SolveReport:
    """Block-state CGA: mutation only, row/column fitness, elitist acceptance."""
    rng = rng if rng is not None else random.Random(seed)
    start = time.perf_counter()
    trace = TraceRecorder()
    population = [block_fill_cells(spec, rng) for _ in range(params.population_size)]
    fitness = [fitness_rows_cols(c) for c in population]
    trace.add(0, min(fitness))
    generations = evolve_block_population(
        spec, population, fitness, rng, params.max_generations, 0, trace
    )
    best = min(range(len(fitness)), key=fitness.__getitem__)
    return _report(
        "cga2", fitness[best] == 0, generations, trace, population[best], start, seed
    )
