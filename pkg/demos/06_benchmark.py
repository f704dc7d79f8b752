# %% [markdown]
# # Seeded batches and traces
#
# The harness runs seeds `seed_base .. seed_base + n - 1`, counts successes
# and summarises wall time and iterations. The same runs are available from
# the command line:
#
#     stochastic-sudoku bench --solver hgasa --puzzle puzzle.txt --runs 20
#     stochastic-sudoku solve --solver cga2 --puzzle puzzle.txt --seed 4 --trace t.csv

# %%
import io

from stochastic_sudoku import RunConfig, fixture_path, run_batch, run_single, write_trace

puzzle = fixture_path("easy_puzzle.txt")
for solver in ("hgasa", "cga2"):
    print(run_batch(RunConfig(solver, puzzle), 5).table())
    print()

# %%
# Budgets and other parameters are plain string overrides. A QSA run cut
# to 5000 proposals stops long before the strength has cooled enough.
stats = run_batch(RunConfig("qsa", puzzle, solver_params={"max_proposals": "5000"}), 5)
print(stats.table())

# %%
buf = io.StringIO()
write_trace(run_single(RunConfig("cga2", puzzle, seed=4)), buf)
print("\n".join(buf.getvalue().splitlines()[:8]))
