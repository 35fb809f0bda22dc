"""Ground truth by enumeration: exact and discretized shadows, and a brute-force LP solver.

All routines enumerate every d-subset of the rows, so they are guarded by
``lp.ENUMERATION_LIMIT``.
"""

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateCone, UnresolvedDegenerate
from .lp import INFEASIBLE, OPTIMAL, UNBOUNDED, LinearProgram, SolveResult, all_dsets, subset_vertices
from .shadow_vertex import FEAS_RTOL, InterpolationObjective
from .two_phase import OFFSET, build_lp_plus, build_lp_prime

CONE_TOL = 1e-10


@dataclass
class ShadowSet:
    bases: set
    plane: InterpolationObjective

    def __len__(self):
        return len(self.bases)

    def sorted_bases(self):
        return sorted(self.bases)


def _facets(points, y):
    """d-sets whose simplex is a facet of the polar, with their ``A_I``."""
    points = np.asarray(points, dtype=float)
    y = np.asarray(y, dtype=float)
    if not np.all(y > 0):
        raise ValueError("shadow census needs every y_i > 0")
    n, d = points.shape
    sets = all_dsets(n, d)
    scale = float(np.max(np.sqrt(y**2 + np.sum(points**2, axis=1))))
    x, ok, _ = subset_vertices(points, y, sets, 1e-12 * scale)
    sets, x = sets[ok], x[ok]
    lhs = x @ points.T
    tol = FEAS_RTOL * (np.abs(y)[None, :] + np.linalg.norm(points, axis=1)[None, :] * np.linalg.norm(x, axis=1)[:, None])
    feasible = np.all(lhs <= y[None, :] + tol, axis=1)
    sets = sets[feasible]
    return sets, points[sets]


def _plane_cone_nontrivial(u, v):
    """Is ``{c != 0 : c[0] u + c[1] v >= 0}`` more than the origin?

    Each coordinate gives a closed half-plane through the origin; a
    nontrivial intersection has a boundary ray of one of them, so only the
    2d boundary directions need checking.
    """
    normals = np.stack([u, v], axis=1)
    lengths = np.linalg.norm(normals, axis=1)
    if np.any(lengths <= CONE_TOL * max(np.max(lengths), 1e-300)):
        raise DegenerateCone("the plane lies in a lower-dimensional face of the cone")
    normals = normals / lengths[:, None]
    for k in range(len(normals)):
        edge = np.array([-normals[k, 1], normals[k, 0]])
        for ray in (edge, -edge):
            s = normals @ ray
            if np.min(s) >= -CONE_TOL:
                others = np.abs(np.delete(s, k))
                if others.size and np.min(others) <= CONE_TOL:
                    raise DegenerateCone("two cone boundaries coincide within tolerance")
                return True
    return False


def exact_shadow(points, y, t, z):
    """Every d-set that is optimal for some objective in ``Span(t, z)``.

    A facet ``I`` qualifies when some nonzero ``c_t t + c_z z`` lies in the
    cone of its rows, i.e. ``c_t u + c_z v >= 0`` with ``u = A_I^-T t`` and
    ``v = A_I^-T z``.
    """
    t = np.asarray(t, dtype=float)
    z = np.asarray(z, dtype=float)
    sets, mats = _facets(points, y)
    bases = set()
    if len(sets):
        cols = np.transpose(mats, (0, 2, 1))
        u = np.linalg.solve(cols, np.broadcast_to(t, (len(sets), len(t)))[..., None])[..., 0]
        v = np.linalg.solve(cols, np.broadcast_to(z, (len(sets), len(z)))[..., None])[..., 0]
        for s, ui, vi in zip(sets, u, v):
            if _plane_cone_nontrivial(ui, vi):
                bases.add(tuple(int(i) for i in s))
    return ShadowSet(bases, InterpolationObjective(t, z))


def discretized_shadow(points, y, t, z, m, chunk=1 << 14):
    """Union of the optimal d-sets for ``q = z sin(theta) + t cos(theta)`` on the grid ``2 pi k / m``, k = 1..m."""
    if m < 4:
        raise ValueError("m must be at least 4")
    t = np.asarray(t, dtype=float)
    z = np.asarray(z, dtype=float)
    sets, mats = _facets(points, y)
    found = set()
    if not len(sets):
        return found
    inv_t = np.linalg.inv(np.transpose(mats, (0, 2, 1)))
    smins = np.linalg.svd(mats, compute_uv=False)[:, -1]
    # beta(theta) = A_I^-T q_theta is linear in (sin, cos): precompute both images
    u = inv_t @ t
    v = inv_t @ z
    hits = np.zeros(len(sets), dtype=bool)
    for start in range(1, m + 1, chunk):
        k = np.arange(start, min(start + chunk, m + 1))
        theta = 2.0 * np.pi * k / m
        sin, cos = np.sin(theta), np.cos(theta)
        q_norm = np.linalg.norm(np.outer(sin, z) + np.outer(cos, t), axis=1)
        neg_tol = (-1e-9 / smins)[:, None] * q_norm[None, :]
        member = np.ones((len(sets), len(k)), dtype=bool)
        for i in range(u.shape[1]):
            member &= np.outer(v[:, i], sin) + np.outer(u[:, i], cos) >= neg_tol
        if np.any(member.sum(axis=0) > 1):
            raise DegenerateCone("two facets are optimal for the same grid objective")
        hits |= member.any(axis=1)
    for s in sets[hits]:
        found.add(tuple(int(i) for i in s))
    return found


def stabilized_count(points, y, t, z, m0=16, m_max=1 << 20, repeats=3):
    """Discretized shadows for ``m = m0, 2 m0, ..., m_max`` and their limiting count.

    Returns ``(count, history)`` where `history` lists ``(m, bases)`` for
    every grid.  ``count`` is the count at `m_max` when it is unchanged over
    the last `repeats` doublings, else None.  The grid only ever doubles up
    to a fixed cap: stopping at the first plateau misses facets whose
    angular window is narrower than the current spacing.
    """
    history = []
    m = m0
    while m <= m_max:
        history.append((m, discretized_shadow(points, y, t, z, m)))
        m *= 2
    tail = {len(b) for _, b in history[-repeats - 1 :]}
    count = tail.pop() if len(tail) == 1 and len(history) > repeats else None
    return count, history


def brute_force_solve(lp):
    """Solve by enumerating every vertex.

    Feasible iff some d-set vertex is feasible (valid when ``A`` has full
    column rank); unbounded iff feasible and no feasible vertex has ``z`` in
    the cone of its rows; otherwise the best feasible vertex.
    """
    sets = all_dsets(lp.n, lp.d)
    scale = lp.scale
    x, ok, _ = subset_vertices(lp.a, lp.y, sets, 1e-12 * scale)
    sets, x = sets[ok], x[ok]
    if len(sets):
        lhs = x @ lp.a.T
        tol = FEAS_RTOL * (np.abs(lp.y)[None, :] + np.linalg.norm(lp.a, axis=1)[None, :] * np.linalg.norm(x, axis=1)[:, None])
        feasible = np.all(lhs <= lp.y[None, :] + tol, axis=1)
        sets, x = sets[feasible], x[feasible]
    if not len(sets):
        s = np.linalg.svd(lp.a, compute_uv=False)
        if lp.n < lp.d or s[-1] <= 1e-12 * s[0]:
            raise UnresolvedDegenerate("no vertex is feasible and A is rank deficient")
        return SolveResult(INFEASIBLE)

    cols = np.transpose(lp.a[sets], (0, 2, 1))
    dual = np.linalg.solve(cols, np.broadcast_to(lp.z, (len(sets), lp.d))[..., None])[..., 0]
    dual_tol = 1e-9 * np.linalg.norm(lp.z) / np.linalg.svd(cols, compute_uv=False)[:, -1]
    if not np.any(np.all(dual >= -dual_tol[:, None], axis=1)):
        return SolveResult(UNBOUNDED)
    values = x @ lp.z
    best = int(np.argmax(values))
    return SolveResult(OPTIMAL, x[best], tuple(int(i) for i in sets[best]), float(values[best]))


def lp_plus_census_lp(lp_plus):
    """The original rows of ``LP+`` (without the two ``x0`` bounds) as a program with rhs ``y+``."""
    return LinearProgram(lp_plus.rows[OFFSET:], lp_plus.y_plus[OFFSET:], lp_plus.z_plus)


def phase2_census_size(lp, trace):
    """Exact shadow size of the lifted program on the plane ``((0, target), e_0)``.

    ``target`` is ``z``, or ``t0`` when phase 1 ended on a ray.  Phase 2
    takes at most two more pivots than this count.
    """
    lp_prime, _, _ = build_lp_prime(lp, trace.chosen_I)
    census = lp_plus_census_lp(build_lp_plus(lp, lp_prime))
    target = trace.t0 if trace.lp_prime_unbounded else lp.z
    return len(exact_shadow(census.a, census.y, np.concatenate(([0.0], target)), census.z))
