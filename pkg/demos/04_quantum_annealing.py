# %% [markdown]
# # Quantum-style annealing
#
# The tunnelling strength starts at the spread of random block-state
# energies and is multiplied by 0.8 after each chain of 47*47 proposals.
# It controls both the Metropolis test and the number of swaps in a
# proposal.

# %%
from stochastic_sudoku import QsaParams, easy_puzzle, qsa_run
from stochastic_sudoku.qsa import acceptance_probability, swaps_for_strength

print("p(10 -> 12 at t=4) =", acceptance_probability(10, 12, 4))
print("swaps at t0, t0/2, t0/20:", [swaps_for_strength(t, 1.0) for t in (1.0, 0.5, 0.05)])

# %%
spec = easy_puzzle()
report = qsa_run(spec, QsaParams(), seed=3)
d = report.details
print(report.summary_line())
print(f"initial strength {d['initial_strength']:.2f}, proposals {report.iterations}")
for k, (t, acc) in enumerate(zip(d["strengths"], d["accepted_per_chain"])):
    print(f"chain {k:2d}  t={t:6.3f}  swaps={swaps_for_strength(t, d['initial_strength'])}  accepted={acc}")
