# %% [markdown]
# # Cultural genetic algorithms
#
# `cga1_run` evolves gene vectors with tournament selection, single-point
# crossover and candidate-restricted mutation. It tends to stall a few
# points short of a solution. `cga2_run` works on block-valid grids and
# mutates with block swaps, the number of swaps shrinking with the best
# fitness; it solves the bundled puzzle reliably.

# %%
from stochastic_sudoku import Cga1Params, cga1_run, cga2_run, easy_puzzle, is_solution

spec = easy_puzzle()

report = cga1_run(spec, Cga1Params(max_generations=500), seed=0)
print("cga1:", report.summary_line(), f"after {report.iterations} generations")

# %%
report = cga2_run(spec, seed=0)
print("cga2 solved:", report.solved, "in", report.iterations, "generations")
print("valid:", is_solution(spec, report.final_grid))

# %%
# The best-fitness trace drops fast and then crawls: most of the run is
# spent removing the last few conflicts.
for it, f in report.best_fitness_trace[:: max(1, len(report.best_fitness_trace) // 12)]:
    print(f"{it:5d} {f:3d} " + "#" * f)
