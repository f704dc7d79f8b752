"""Puzzle model, parsing/rendering, validation and the missing-digit fitness."""

from __future__ import annotations

import operator
from dataclasses import dataclass, field
from functools import cached_property
from importlib import resources
from typing import Iterable, Sequence, Union

DIGITS = frozenset(range(1, 10))
EMPTY_MARKERS = frozenset(".0")

# Unit membership as flat row-major indices.
ROWS = tuple(tuple(r * 9 + c for c in range(9)) for r in range(9))
COLS = tuple(tuple(r * 9 + c for r in range(9)) for c in range(9))
BLOCKS = tuple(
    tuple((br * 3 + r) * 9 + bc * 3 + c for r in range(3) for c in range(3))
    for br in range(3)
    for bc in range(3)
)
UNITS = ROWS + COLS + BLOCKS

_BLOCK_GETTERS = tuple(operator.itemgetter(*b) for b in BLOCKS)


def block_of(index: int) -> int:
    row, col = divmod(index, 9)
    return (row // 3) * 3 + col // 3


def _peers(index: int) -> frozenset:
    row, col = divmod(index, 9)
    return frozenset(ROWS[row] + COLS[col] + BLOCKS[block_of(index)]) - {index}


PEERS = tuple(_peers(i) for i in range(81))


class PuzzleError(ValueError):
    """Base class for malformed or inconsistent puzzles."""


class PuzzleFormatError(PuzzleError):
    pass


class PuzzleConflictError(PuzzleError):
    def __init__(self, unit: str, digit: int):
        super().__init__(f"given digit {digit} appears more than once in {unit}")
        self.unit = unit
        self.digit = digit


class InfeasiblePuzzleError(PuzzleError):
    """Some empty cell has every digit excluded by its given peers."""


def _unit_name(k: int) -> str:
    kind = ("row", "column", "block")[k // 9]
    return f"{kind} {k % 9 + 1}"


@dataclass(frozen=True)
class Grid:
    """A completely filled 9x9 assignment, stored row-major."""

    cells: tuple

    def __post_init__(self):
        cells = tuple(int(v) for v in self.cells)
        if len(cells) != 81:
            raise ValueError(f"a grid has 81 cells, got {len(cells)}")
        if not all(1 <= v <= 9 for v in cells):
            raise ValueError("grid cells must be digits 1..9")
        object.__setattr__(self, "cells", cells)

    def __len__(self) -> int:
        return 81

    def __getitem__(self, index):
        return self.cells[index]

    def __iter__(self):
        return iter(self.cells)

    def row(self, r: int) -> tuple:
        return self.cells[r * 9 : r * 9 + 9]

    def col(self, c: int) -> tuple:
        return self.cells[c::9]

    def block(self, b: int) -> tuple:
        return _BLOCK_GETTERS[b](self.cells)

    def __str__(self) -> str:
        return render_grid(self)


@dataclass(frozen=True)
class PuzzleSpec:
    """Immutable puzzle definition: the givens and where the holes are.

    ``cells`` holds a digit for every given and ``None`` for every empty
    cell. Construct through :func:`parse_puzzle` to get input validation.
    """

    cells: tuple
    given_mask: tuple = field(init=False, repr=False)
    empty_indices: tuple = field(init=False, repr=False)

    def __post_init__(self):
        cells = tuple(None if v in (None, 0) else int(v) for v in self.cells)
        if len(cells) != 81:
            raise PuzzleFormatError(f"a puzzle has 81 cells, got {len(cells)}")
        if any(v is not None and not 1 <= v <= 9 for v in cells):
            raise PuzzleFormatError("given cells must be digits 1..9")
        for k, unit in enumerate(UNITS):
            seen = set()
            for i in unit:
                v = cells[i]
                if v is None:
                    continue
                if v in seen:
                    raise PuzzleConflictError(_unit_name(k), v)
                seen.add(v)
        object.__setattr__(self, "cells", cells)
        object.__setattr__(self, "given_mask", tuple(v is not None for v in cells))
        object.__setattr__(
            self, "empty_indices", tuple(i for i, v in enumerate(cells) if v is None)
        )

    @property
    def n_givens(self) -> int:
        return 81 - len(self.empty_indices)

    @cached_property
    def candidates(self) -> tuple:
        """Digits allowed in each empty cell, ordered like ``empty_indices``.

        A digit is excluded when a *given* in the same row, column or block
        already holds it; other empty cells are ignored.
        """
        out = []
        for i in self.empty_indices:
            taken = {self.cells[p] for p in PEERS[i]}
            out.append(tuple(d for d in range(1, 10) if d not in taken))
        return tuple(out)

    @cached_property
    def block_free_cells(self) -> tuple:
        """Per block, the non-given indices in row-major order."""
        return tuple(tuple(i for i in b if self.cells[i] is None) for b in BLOCKS)

    @cached_property
    def swappable_blocks(self) -> tuple:
        """Free-cell lists of blocks that have at least two movable cells."""
        return tuple(free for free in self.block_free_cells if len(free) >= 2)

    def agrees_with(self, grid: Union[Grid, Sequence[int]]) -> bool:
        return all(v is None or grid[i] == v for i, v in enumerate(self.cells))

    def __str__(self) -> str:
        return render_puzzle(self)


def _significant(text: str) -> str:
    return "".join(text.split())


def parse_puzzle(text: str) -> PuzzleSpec:
    """Parse an 81-character puzzle string; whitespace is ignored.

    Digits are givens, ``.`` or ``0`` mark empty cells.

    >>> parse_puzzle("." * 81).n_givens
    0
    """
    chars = _significant(text)
    if len(chars) != 81:
        raise PuzzleFormatError(
            f"expected 81 significant characters, got {len(chars)}"
        )
    cells = []
    for pos, ch in enumerate(chars):
        if ch in EMPTY_MARKERS:
            cells.append(None)
        elif ch in "123456789":
            cells.append(int(ch))
        else:
            raise PuzzleFormatError(f"invalid character {ch!r} at position {pos}")
    return PuzzleSpec(tuple(cells))


def load_puzzle(path) -> PuzzleSpec:
    with open(path, encoding="utf-8") as fh:
        return parse_puzzle(fh.read())


def parse_grid(text: str) -> Grid:
    """Parse 81 digits into a Grid; repeated digits are allowed."""
    chars = _significant(text)
    if len(chars) != 81:
        raise PuzzleFormatError(
            f"expected 81 significant characters, got {len(chars)}"
        )
    bad = next((ch for ch in chars if ch not in "123456789"), None)
    if bad is not None:
        raise PuzzleFormatError(f"a grid holds digits 1-9 only, found {bad!r}")
    return Grid(int(ch) for ch in chars)


def render_grid(grid: Union[Grid, Sequence[int]]) -> str:
    return "".join(str(v) for v in grid)


def render_puzzle(spec: PuzzleSpec) -> str:
    return "".join("." if v is None else str(v) for v in spec.cells)


def missing_digit_count(unit: Iterable[int]) -> int:
    """Number of digits 1..9 that do not occur in ``unit``.

    For a nine-cell unit this equals the number of surplus duplicates, so
    one count covers both repeated and absent digits.
    """
    return len(DIGITS.difference(unit))


def _cells(grid) -> Sequence[int]:
    return grid.cells if isinstance(grid, Grid) else grid


def fitness_rows_cols(grid: Union[Grid, Sequence[int]]) -> int:
    """Missing digits summed over the 9 rows and 9 columns."""
    g = _cells(grid)
    total = 162
    for r in range(0, 81, 9):
        total -= len(set(g[r : r + 9]))
    for c in range(9):
        total -= len(set(g[c::9]))
    return total


def fitness_blocks(grid: Union[Grid, Sequence[int]]) -> int:
    g = _cells(grid)
    return 81 - sum(len(set(get(g))) for get in _BLOCK_GETTERS)


def fitness_all_units(grid: Union[Grid, Sequence[int]]) -> int:
    """Missing digits summed over all 27 rows, columns and blocks."""
    return fitness_rows_cols(grid) + fitness_blocks(grid)


def is_solution(spec: PuzzleSpec, grid: Union[Grid, Sequence[int]]) -> bool:
    g = _cells(grid)
    if len(g) != 81 or not all(1 <= v <= 9 for v in g):
        return False
    return spec.agrees_with(g) and fitness_all_units(g) == 0


def _read_fixture(name: str) -> str:
    return _significant(
        (resources.files(__package__) / "data" / name).read_text("utf-8")
    )


EASY_PUZZLE_TEXT = _read_fixture("easy_puzzle.txt")
EASY_SOLUTION_TEXT = _read_fixture("easy_solution.txt")


def easy_puzzle() -> PuzzleSpec:
    """The bundled 34-given easy puzzle (47 empty cells)."""
    return parse_puzzle(EASY_PUZZLE_TEXT)


def easy_solution() -> Grid:
    return parse_grid(EASY_SOLUTION_TEXT)


def fixture_path(name: str = "easy_puzzle.txt"):
    return resources.files(__package__) / "data" / name
