# %% [markdown]
# # Counting shadows two ways
#
# `exact_shadow` tests each facet's cone against the plane; the
# discretized count scans a grid of `m` objectives around the circle.
# Grid counts only grow as `m` doubles, and reach the exact count once the
# spacing is finer than the narrowest facet window.

# %%
import numpy as np

from shadowlp import discretized_shadow, exact_shadow, stabilized_count

gen = np.random.default_rng(4)
a = gen.standard_normal((8, 3))
y = 0.2 + np.abs(gen.standard_normal(8))
t, z = gen.standard_normal((2, 3))

exact = exact_shadow(a, y, t, z)
print("exact:", len(exact), exact.sorted_bases())

# %%
count, history = stabilized_count(a, y, t, z, m_max=1 << 16)
for m, bases in history:
    print(f"m = {m:6d}  count = {len(bases)}  subset of exact: {bases <= exact.bases}")
print("limit:", count)

# %% [markdown]
# The exact count does not care how the plane is parametrized.

# %%
print(exact_shadow(a, y, 5.0 * t, 0.1 * z).bases == exact.bases)
print(exact_shadow(a, y, -t, z).bases == exact.bases)

# %% [markdown]
# A coarse grid can miss facets entirely.

# %%
print(len(discretized_shadow(a, y, t, z, 4)), "facets seen with m = 4")
