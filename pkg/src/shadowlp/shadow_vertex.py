"""Polar shadow-vertex simplex method.

The walk follows the objectives ``q(lam) = (1 - lam) t + lam z`` for lam
running from 0 to 1.  At every moment the current basis ``I`` is the d-set
whose polar facet's cone contains ``q(lam)``; its primal vertex
``A_I^-1 y_I`` is then optimal for ``q(lam)``.
"""

import math
from dataclasses import dataclass, field

import numpy as np
import scipy.linalg

from .errors import CycleGuard, DegeneratePivot, NotOptimalStart, SingularSystem
from .linalg import cone_membership, lu_factor, smin
from .lp import OPTIMAL, UNBOUNDED, SolveResult, make_basis

CONE_EXIT_RTOL = 1e-10
RATIO_ADMIT_RTOL = 1e-12
TIE_RTOL = 1e-12
FEAS_RTOL = 1e-9


@dataclass(frozen=True)
class InterpolationObjective:
    t: np.ndarray
    z: np.ndarray

    def at(self, lam):
        return (1.0 - lam) * self.t + lam * self.z


@dataclass
class ShadowPath:
    """Bases visited by the walk with their lam-intervals.

    ``segments[i] = (basis, lam_lo, lam_hi)``; ``vertices[i]`` is the primal
    vertex of ``segments[i]``'s basis.
    """

    segments: list = field(default_factory=list)
    vertices: list = field(default_factory=list)
    terminal: str = None

    @property
    def pivots(self):
        return max(len(self.segments) - 1, 0)

    @property
    def bases(self):
        return [seg[0] for seg in self.segments]


def _require_positive_y(lp):
    if not np.all(lp.y > 0):
        raise ValueError("the polar method needs every y_i > 0")


def vertex_is_feasible(lp, x, rtol=FEAS_RTOL):
    """``<a_j, x> <= y_j`` for all j, up to ``rtol * (|y_j| + |a_j| |x|)``."""
    lhs = lp.a @ x
    tol = rtol * (np.abs(lp.y) + np.linalg.norm(lp.a, axis=1) * np.linalg.norm(x))
    return bool(np.all(lhs <= lp.y + tol))


def is_opt_simp(lp, q, basis):
    """True iff `basis` indexes the polar facet whose cone contains `q`.

    Equivalently the vertex ``A_I^-1 y_I`` is feasible and ``q`` is a
    nonnegative combination of the rows in the basis.  A singular basis
    matrix gives False.
    """
    _require_positive_y(lp)
    idx = list(basis)
    a_i = lp.a[idx]
    if smin(a_i) <= 1e-12 * lp.scale:
        return False
    try:
        x = np.linalg.solve(a_i, lp.y[idx])
        if not vertex_is_feasible(lp, x):
            return False
        return cone_membership(a_i.T, np.asarray(q, dtype=float)) is not None
    except SingularSystem:
        return False


def _factor(a_i):
    lu, piv = lu_factor(a_i)
    scale = np.max(np.abs(a_i))
    if scale == 0.0 or np.min(np.abs(np.diag(lu))) <= 1e-13 * scale * a_i.shape[0]:
        raise SingularSystem("singular basis matrix")
    return lu, piv


def polar_shadow_vertex(lp, start_basis, t, check_start=True, max_pivots=None):
    """Run the polar shadow-vertex walk from objective `t` to ``lp.z``.

    `start_basis` must satisfy ``is_opt_simp(lp, t, start_basis)``.  Returns
    ``(SolveResult, ShadowPath)``.

    Each pivot leaves the basis row whose cone coordinate first reaches
    zero as lam grows and enters the row picked by the primal ratio test
    along the edge that frees the leaving row.  Ties go to the smallest
    index.
    """
    _require_positive_y(lp)
    n, d = lp.n, lp.d
    t = np.asarray(t, dtype=float)
    z = lp.z
    basis = make_basis(start_basis, n, d)
    if check_start and not is_opt_simp(lp, t, basis):
        raise NotOptimalStart(f"basis {basis} is not optimal for the start objective")
    if max_pivots is None:
        max_pivots = math.comb(n, d) + 1

    row_norms = np.linalg.norm(lp.a, axis=1)
    path = ShadowPath()
    lam = 0.0
    while True:
        idx = list(basis)
        a_i = lp.a[idx]
        try:
            lu = _factor(a_i)
        except SingularSystem:
            raise DegeneratePivot(f"basis {basis} is numerically singular") from None
        x = scipy.linalg.lu_solve(lu, lp.y[idx], check_finite=False)
        beta_t = scipy.linalg.lu_solve(lu, t, trans=1, check_finite=False)
        beta_z = scipy.linalg.lu_solve(lu, z, trans=1, check_finite=False)

        beta = (1.0 - lam) * beta_t + lam * beta_z
        if np.min(beta) < -CONE_EXIT_RTOL * np.linalg.norm(beta):
            raise DegeneratePivot(f"objective left the cone of basis {basis} at lam={lam!r}")

        # beta is affine in lam, so each decreasing coordinate has a closed-form root
        falling = beta_z < beta_t
        leave_pos = None
        lam_next = math.inf
        for pos in np.flatnonzero(falling):
            root = max(lam, beta_t[pos] / (beta_t[pos] - beta_z[pos]))
            if root < lam_next - TIE_RTOL:
                lam_next, leave_pos = root, pos
            elif abs(root - lam_next) <= TIE_RTOL and basis[pos] < basis[leave_pos]:
                leave_pos = pos

        if leave_pos is None or lam_next >= 1.0:
            path.segments.append((basis, lam, 1.0))
            path.vertices.append(x)
            path.terminal = OPTIMAL
            return SolveResult(OPTIMAL, x, basis, float(z @ x)), path

        path.segments.append((basis, lam, lam_next))
        path.vertices.append(x)
        if len(path.segments) > max_pivots:
            raise CycleGuard(f"more than {max_pivots} pivots")

        # edge direction w: stays on the other basis rows, moves off the leaving one
        rhs = np.zeros(d)
        rhs[leave_pos] = -1.0
        w = scipy.linalg.lu_solve(lu, rhs, check_finite=False)
        rate = lp.a @ w
        slack = np.maximum(lp.y - lp.a @ x, 0.0)
        admissible = rate > RATIO_ADMIT_RTOL * row_norms * np.linalg.norm(w)
        admissible[idx] = False
        if not np.any(admissible):
            path.terminal = UNBOUNDED
            return SolveResult(UNBOUNDED), path

        cand = np.flatnonzero(admissible)
        ratios = slack[cand] / rate[cand]
        best = np.min(ratios)
        near = cand[ratios <= best + TIE_RTOL * max(abs(best), 1.0)]
        enter = int(near[0])

        basis = tuple(sorted(basis[:leave_pos] + basis[leave_pos + 1 :] + (enter,)))
        lam = lam_next
