# %% [markdown]
# # Following a shadow-vertex walk
#
# The walk keeps the optimal basis for the objective
# `q(lam) = (1 - lam) t + lam z` while `lam` runs from 0 to 1.
# We start on the 3-cube, where every vertex is easy to read.

# %%
import numpy as np

from shadowlp import exact_shadow, is_opt_simp, polar_shadow_vertex
from shadowlp.instances import cube_instance

lp = cube_instance(3, z=np.array([1.0, 2.0, 3.0]))
print(lp.a)

# %% [markdown]
# Rows 0..2 are `x_i <= 1`, rows 3..5 are `-x_i <= 1`.  The vertex
# `(-1, -1, -1)` has basis (3, 4, 5) and is optimal for `t = (-1, -1, -1)`.

# %%
t = -np.ones(3)
start = (3, 4, 5)
print("start basis optimal for t:", is_opt_simp(lp, t, start))

result, path = polar_shadow_vertex(lp, start, t)
for (basis, lo, hi), x in zip(path.segments, path.vertices):
    print(f"{basis}  lam in [{lo:.3f}, {hi:.3f}]  x = {x}")
print(result.status, result.objective, "pivots:", path.pivots)

# %% [markdown]
# Every basis on the path lies on the shadow of the plane `Span(t, z)`.

# %%
shadow = exact_shadow(lp.a, lp.y, t, lp.z)
print(len(shadow), "shadow facets")
print(set(path.bases) <= shadow.bases)

# %% [markdown]
# Flip the objective to a direction with no bounded optimum: the walk leaves
# through an edge that never meets another constraint.

# %%
from shadowlp import LinearProgram

open_box = LinearProgram(lp.a[:3], lp.y[:3], [-1.0, 0.5, 0.5])
result, path = polar_shadow_vertex(open_box, (0, 1, 2), np.ones(3))
print(result.status, "after", path.pivots, "pivots")
