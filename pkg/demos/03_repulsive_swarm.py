# %% [markdown]
# # Repulsive particle swarm
#
# Particles live in 47-dimensional integer space, one coordinate per empty
# cell. The negative coefficient pushes each particle away from a random
# peer's best position. With the standard settings the swarm keeps the
# positions legal but does not converge to a solution.

# %%
import numpy as np

from stochastic_sudoku import RpsoParams, easy_puzzle, rpso_run
from stochastic_sudoku.rpso import position_update, velocity_update

params = RpsoParams()
v = velocity_update(x=3, v=0.0, x_best=5, x_br=7, z=1.0, params=params, r1=0.5, r2=0.5, r3=0.5)
print("one velocity step:", v, "-> position", position_update(3, v))

# %%
spec = easy_puzzle()
lows, highs = [], []


def watch(iteration, x, v, pbest_fitness):
    lows.append(x.min())
    highs.append(x.max())


report = rpso_run(spec, RpsoParams(max_iterations=2000), np.random.default_rng(1), observer=watch)
print(report.summary_line(), "after", report.iterations, "iterations")
print("positions stayed within", min(lows), "..", max(highs))
