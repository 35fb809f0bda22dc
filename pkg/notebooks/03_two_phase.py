# %% [markdown]
# # The two-phase method on small programs
#
# Phase 1 relaxes the right-hand sides so a well-conditioned random basis
# is a known optimal vertex, and walks to the relaxed optimum.  Phase 2
# adds a coordinate `x0` that slides from the relaxed program (`x0 = -1`)
# to the real one (`x0 = 1`).

# %%
import json

import numpy as np

from shadowlp import RngStream, brute_force_solve, two_phase_solve
from shadowlp.instances import contradictory_instance, random_instance, simplex_instance

result, trace = two_phase_solve(simplex_instance(), RngStream(1))
print(result.to_dict())
print(json.dumps({k: trace.to_dict()[k] for k in ("chosen_I", "kappa", "M", "zeta", "K", "x0")}))

# %% [markdown]
# `x0` stays below 1 when the program is empty.

# %%
result, trace = two_phase_solve(contradictory_instance(), RngStream(1))
print(result.status, "x0 =", trace.x0)

# %% [markdown]
# Against the enumeration oracle on random programs:

# %%
gen = np.random.default_rng(0)
agree, statuses = 0, {}
for k in range(200):
    lp = random_instance(gen, 9, 3)
    ours, tr = two_phase_solve(lp, RngStream(k))
    truth = brute_force_solve(lp)
    agree += ours.status == truth.status
    statuses[truth.status] = statuses.get(truth.status, 0) + 1
print(agree, "of 200 agree", statuses)
