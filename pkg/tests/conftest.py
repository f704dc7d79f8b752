import random
from collections import deque

import pytest

from stochastic_sudoku.core import easy_puzzle, easy_solution, fixture_path


class ScriptedRandom(random.Random):
    """A Random whose randrange/choice/sample/random answers can be scripted.

    Unscripted calls fall through to the seeded generator.
    """

    def __init__(self, randrange=(), choice=(), uniform=(), sample=(), seed=0):
        super().__init__(seed)
        self._sample = deque(sample)
        self._randrange = deque(randrange)
        self._choice = deque(choice)
        self._uniform = deque(uniform)

    def randrange(self, *args, **kwargs):
        if self._randrange:
            return self._randrange.popleft()
        return super().randrange(*args, **kwargs)

    def choice(self, seq):
        if self._choice:
            scripted = self._choice.popleft()
            return scripted(seq) if callable(scripted) else scripted
        return super().choice(seq)

    def sample(self, population, k, **kwargs):
        if self._sample:
            return self._sample.popleft()
        return super().sample(population, k, **kwargs)

    def random(self):
        if self._uniform:
            return self._uniform.popleft()
        return super().random()


@pytest.fixture
def spec():
    return easy_puzzle()


@pytest.fixture
def solution():
    return easy_solution()


@pytest.fixture
def puzzle_file():
    return str(fixture_path("easy_puzzle.txt"))


def brute_force_is_valid(cells):
    """Independent validator: every one of the 27 units, as a set, is 1..9."""
    grid = [[cells[r * 9 + c] for c in range(9)] for r in range(9)]
    want = set(range(1, 10))
    for r in range(9):
        if set(grid[r]) != want:
            return False
    for c in range(9):
        if {grid[r][c] for r in range(9)} != want:
            return False
    for br in (0, 3, 6):
        for bc in (0, 3, 6):
            if {grid[br + i][bc + j] for i in range(3) for j in range(3)} != want:
                return False
    return True


def brute_force_missing(cells, include_blocks):
    """Count absent digits unit by unit using 2-D indexing."""
    grid = [[cells[r * 9 + c] for c in range(9)] for r in range(9)]
    units = [grid[r] for r in range(9)]
    units += [[grid[r][c] for r in range(9)] for c in range(9)]
    if include_blocks:
        units += [
            [grid[br + i][bc + j] for i in range(3) for j in range(3)]
            for br in (0, 3, 6)
            for bc in (0, 3, 6)
        ]
    return sum(1 for u in units for d in range(1, 10) if d not in u)
