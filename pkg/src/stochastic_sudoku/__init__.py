"""Stochastic optimisers for Sudoku and a seeded benchmark harness.

Solvers:

* ``cga1_run`` -- cultural GA over empty-cell gene vectors
* ``cga2_run`` -- cultural GA over block-valid grids (mutation only)
* ``rpso_run`` -- repulsive particle swarm over gene vectors
* ``qsa_run`` -- quantum-style annealing over block-valid grids
* ``hgasa_run`` -- block GA followed by a greedy Monte Carlo walk
"""

from .cga import Cga1Params, Cga2Params, cga1_run, cga2_run, mutation_count
from .core import (
    Grid,
    PuzzleConflictError,
    PuzzleError,
    PuzzleFormatError,
    PuzzleSpec,
    easy_puzzle,
    easy_solution,
    fixture_path,
    fitness_all_units,
    fitness_rows_cols,
    is_solution,
    missing_digit_count,
    parse_puzzle,
    render_grid,
)
from .harness import BatchStats, ConfigError, RunConfig, run_batch, run_single, write_trace
from .hgasa import HgasaParams, hgasa_run
from .qsa import QsaParams, qsa_run
from .report import SolveReport
from .representation import BlockState, GeneVector, init_block_state, init_gene_vector
from .rpso import RpsoParams, rpso_run

__version__ = "0.1.0"
