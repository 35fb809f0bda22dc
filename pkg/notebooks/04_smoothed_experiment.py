# %% [markdown]
# # Pivots under Gaussian noise
#
# The parabola base has a long phase-2 shadow: its rows satisfy
# `y_i = <a_i, z>**2`.  Noise breaks that arrangement, so pivot counts fall
# as sigma grows.  The bounds are printed alongside for scale.

# %%
import statistics

from shadowlp import BoundInputs, bound_D, bound_total
from shadowlp.cli import run_experiment
from shadowlp.instances import parabola_instance

base = parabola_instance(30)
sigmas = [0.01, 0.03, 0.1, 0.3, 0.5]
records = run_experiment(base, sigmas, trials=60, seed=7)

for sigma in sigmas:
    rows = [r for r in records if float(r["sigma"]) == sigma and r["status"] != "ERROR"]
    totals = [r["phase1_pivots"] + r["phase2_pivots"] for r in rows]
    b = BoundInputs(base.n, base.d, sigma)
    print(
        f"sigma={sigma:<5} mean={statistics.fmean(totals):5.2f} "
        f"median={statistics.median(totals):4.1f}  bound_D={bound_D(b):.2e}  bound_total={bound_total(b):.2e}"
    )

# %% [markdown]
# The same run from the shell, CSV on stdout and a JSON summary on stderr:
#
# ```
# shadowlp experiment base.txt --sigma 0.01 --sigma 0.5 --trials 200 --seed 7
# ```
