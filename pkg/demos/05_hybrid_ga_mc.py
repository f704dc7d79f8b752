# %% [markdown]
# # Hybrid GA with a Monte Carlo finish
#
# A population of ten block states evolves until its best member is within
# two conflicts of a solution. That member then takes single swaps that
# never raise its energy.

# %%
from stochastic_sudoku import HgasaParams, easy_puzzle, hgasa_run, is_solution

spec = easy_puzzle()
for seed in range(5):
    report = hgasa_run(spec, HgasaParams(), seed=seed)
    phases = ", ".join(
        f"ga={a['ga_generations']} mc={a['mc_steps']}" for a in report.details["attempts"]
    )
    print(f"seed {seed}: solved={is_solution(spec, report.final_grid)} "
          f"{report.wall_time * 1000:.0f} ms  [{phases}]")
