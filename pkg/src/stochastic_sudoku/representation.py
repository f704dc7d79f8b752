"""Solution encodings and their belief-space-respecting initializers.

Two encodings are supported:

* :class:`GeneVector` -- one digit per empty cell, in row-major order of the
  empty cells. Used by the crossover GA and the particle swarm.
* :class:`BlockState` -- a full grid in which every 3x3 block is already a
  permutation of 1..9. Used by the block-mutation GA, the annealer and the
  hybrid.

All randomness comes from an explicit :class:`random.Random` argument.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from .core import BLOCKS, Grid, InfeasiblePuzzleError, PuzzleSpec


class MutationImpossibleError(ValueError):
    """No block has two movable cells to exchange."""


@dataclass(frozen=True)
class GeneVector:
    genes: tuple

    def __post_init__(self):
        object.__setattr__(self, "genes", tuple(int(g) for g in self.genes))

    def __len__(self) -> int:
        return len(self.genes)

    def __getitem__(self, index):
        return self.genes[index]

    def __iter__(self):
        return iter(self.genes)


@dataclass(frozen=True)
class BlockState:
    grid: Grid
    spec: PuzzleSpec

    @property
    def cells(self) -> tuple:
        return self.grid.cells


def _check_feasible(spec: PuzzleSpec) -> None:
    for i, cand in zip(spec.empty_indices, spec.candidates):
        if not cand:
            r, c = divmod(i, 9)
            raise InfeasiblePuzzleError(
                f"cell (row {r + 1}, col {c + 1}) has no digit left by its givens"
            )


def random_genes(spec: PuzzleSpec, rng: random.Random) -> list:
    """Draw one candidate per empty cell (mutable list, for solver loops)."""
    _check_feasible(spec)
    return [rng.choice(cand) for cand in spec.candidates]


def init_gene_vector(spec: PuzzleSpec, rng: random.Random) -> GeneVector:
    """Random gene vector respecting range, integrality and given-peer exclusion.

    Each gene is drawn uniformly from the digits not already used by a
    given in the same row, column or block. Genes are not checked against
    one another.
    """
    return GeneVector(random_genes(spec, rng))


def decode_cells(spec: PuzzleSpec, genes: Sequence[int]) -> list:
    cells = [0 if v is None else v for v in spec.cells]
    for i, g in zip(spec.empty_indices, genes):
        cells[i] = g
    return cells


def decode(spec: PuzzleSpec, v: GeneVector | Sequence[int]) -> Grid:
    if len(v) != len(spec.empty_indices):
        raise ValueError(
            f"expected {len(spec.empty_indices)} genes for this puzzle, got {len(v)}"
        )
    return Grid(decode_cells(spec, v))


def encode(spec: PuzzleSpec, grid: Grid | Sequence[int]) -> GeneVector:
    """Read the empty-cell values back out of a full grid."""
    return GeneVector(grid[i] for i in spec.empty_indices)


def block_fill_cells(spec: PuzzleSpec, rng: random.Random) -> list:
    cells = [0 if v is None else v for v in spec.cells]
    for block, free in zip(BLOCKS, spec.block_free_cells):
        if not free:
            continue
        present = {spec.cells[i] for i in block}
        missing = [d for d in range(1, 10) if d not in present]
        rng.shuffle(missing)
        for i, d in zip(free, missing):
            cells[i] = d
    return cells


def init_block_state(spec: PuzzleSpec, rng: random.Random) -> BlockState:
    """Fill every block with a random permutation of its missing digits."""
    return BlockState(Grid(block_fill_cells(spec, rng)), spec)


def random_swap_pair(spec: PuzzleSpec, rng: random.Random) -> tuple:
    """Pick an eligible block uniformly, then two distinct free cells in it."""
    blocks = spec.swappable_blocks
    if not blocks:
        raise MutationImpossibleError("no block has two unfixed cells")
    free = blocks[rng.randrange(len(blocks))]
    n = len(free)
    a = rng.randrange(n)
    b = rng.randrange(n - 1)
    if b >= a:
        b += 1
    return free[a], free[b]


def swap_cells(cells: list, spec: PuzzleSpec, rng: random.Random) -> tuple:
    """In-place random block swap on a mutable cell list; returns the pair."""
    i, j = random_swap_pair(spec, rng)
    cells[i], cells[j] = cells[j], cells[i]
    return i, j


def apply_swap(state: BlockState, pair: tuple) -> BlockState:
    i, j = pair
    cells = list(state.grid.cells)
    cells[i], cells[j] = cells[j], cells[i]
    return BlockState(Grid(cells), state.spec)


def swap_mutation(state: BlockState, rng: random.Random) -> BlockState:
    return apply_swap(state, random_swap_pair(state.spec, rng))


def is_block_valid(cells: Sequence[int]) -> bool:
    return all(sorted(cells[i] for i in b) == list(range(1, 10)) for b in BLOCKS)
