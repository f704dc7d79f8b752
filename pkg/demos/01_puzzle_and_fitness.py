# %% [markdown]
# # Puzzles, grids and the shared fitness
#
# Every solver scores a complete 81-cell grid by counting, in each scored
# unit, the digits 1..9 that do not appear. Zero means solved.

# %%
import random

from stochastic_sudoku import (
    easy_puzzle,
    easy_solution,
    fitness_all_units,
    fitness_rows_cols,
    is_solution,
    render_grid,
)
from stochastic_sudoku.representation import init_block_state, init_gene_vector, decode

spec = easy_puzzle()
print(f"{spec.n_givens} givens, {len(spec.empty_indices)} empty cells")
print(spec)

# %%
solution = easy_solution()
print(render_grid(solution))
print("all units:", fitness_all_units(solution), "solved:", is_solution(spec, solution))

# %% [markdown]
# Two ways of filling the holes at random. The gene vector picks each empty
# cell from the digits its given peers allow; the block state makes every
# 3x3 block a permutation, so only rows and columns need scoring.

# %%
rng = random.Random(0)
genes = init_gene_vector(spec, rng)
print("gene vector, all units:", fitness_all_units(decode(spec, genes)))

state = init_block_state(spec, rng)
print("block state, rows+cols:", fitness_rows_cols(state.grid))

# %%
# A single swap of two free cells inside one block changes at most two rows
# and two columns, so the score moves by a few points at a time.
from stochastic_sudoku.representation import swap_mutation

for _ in range(5):
    state = swap_mutation(state, rng)
    print(fitness_rows_cols(state.grid), end=" ")
print()
