"""Two-phase shadow-vertex method for ``max <z, x> s.t. <a_i, x> <= y_i``.

Phase 1 relaxes the right-hand sides to a program ``LP'`` whose feasible
vertex is known (the best-conditioned basis among a random shortlist) and
walks to its optimum.  Phase 2 solves the (d+1)-dimensional program ``LP+``
whose extra coordinate ``x0`` interpolates between ``LP'`` (``x0 = -1``) and
the original program (``x0 = 1``).

Row layout of ``LP+``: row 0 is ``-x0 <= 1``, row 1 is ``x0 <= 1`` and row
``i + 2`` is the lifted original row ``i``.
"""

import math
from dataclasses import asdict, dataclass, field

import numpy as np

from .errors import AllSingular, NonPositiveYPlus, ShadowLPError, ZetaSearchFailed
from .linalg import smin_batch
from .lp import INFEASIBLE, OPTIMAL, UNBOUNDED, LinearProgram, SolveResult
from .rng import sample_alpha, sample_dsets
from .shadow_vertex import is_opt_simp, polar_shadow_vertex

FEASIBLE_X0 = 1.0 - 1e-9
ZETA_DOUBLINGS = 60
LOWER_ROW = 0
UPPER_ROW = 1
OFFSET = 2


@dataclass
class TwoPhaseTrace:
    """Everything the two-phase method decided on one run.

    ``J`` is a basis of ``LP'``; ``K`` is a basis of ``LP+`` in its row
    layout (see the module docstring).  ``lp_prime_unbounded`` records
    whether phase 1 stopped on an unbounded ray, in which case phase 2 was
    run with objective ``t0`` only to decide feasibility.
    """

    shortlist: list = field(default_factory=list)
    chosen_I: tuple = None
    kappa: float = None
    M: float = None
    alpha: np.ndarray = None
    t0: np.ndarray = None
    y_prime: np.ndarray = None
    J: tuple = None
    zeta: float = None
    K: tuple = None
    x0: float = None
    phase1_pivots: int = 0
    phase2_pivots: int = 0
    lp_prime_unbounded: bool = False

    def to_dict(self):
        out = {}
        for key, value in asdict(self).items():
            if isinstance(value, np.ndarray):
                value = [float(v) for v in value]
            elif isinstance(value, tuple):
                value = [int(v) for v in value]
            elif key == "shortlist":
                value = [[int(i) for i in s] for s in value]
            elif isinstance(value, (np.floating, np.integer)):
                value = value.item()
            out[key] = value
        return out


@dataclass(frozen=True, eq=False)
class LpPlus:
    """The interpolating program: rows ``a_plus`` (n+2, d+1), rhs ``y_plus``, objective ``e_0``."""

    rows: np.ndarray
    y_plus: np.ndarray
    z_plus: np.ndarray

    def normalized(self):
        """Rows divided by their right-hand sides, so every rhs is 1."""
        return LinearProgram(self.rows / self.y_plus[:, None], np.ones(len(self.y_plus)), self.z_plus)

    def with_objective(self, z):
        """Same rows, objective replaced: used to evaluate slices of the program."""
        return LinearProgram(self.rows, self.y_plus, z)


def shortlist_size(n, d):
    return math.ceil(3 * n * d * math.log(n))


def choose_basis(lp, stream):
    """Draw the random shortlist of d-sets and return ``(shortlist, best)``.

    ``best`` maximizes the smallest singular value of ``A_I``; ties go to the
    first occurrence.
    """
    n, d = lp.n, lp.d
    shortlist = sample_dsets(stream, n, d, shortlist_size(n, d))
    smins = smin_batch(lp.a[np.array(shortlist, dtype=np.intp)])
    best = int(np.argmax(smins))
    if smins[best] <= 1e-13 * lp.scale:
        raise AllSingular("every shortlisted basis matrix is singular")
    return shortlist, shortlist[best]


def power_of_two_floor(v):
    return 2.0 ** math.floor(math.log2(v))


def power_of_two_ceil(v):
    return 2.0 ** math.ceil(math.log2(v))


def build_lp_prime(lp, basis):
    """Return ``(lp_prime, kappa, M)``.

    ``M = 4 * 2**ceil(lg scale)`` and ``kappa = 2**floor(lg smin(A_I))``; the
    basis rows get rhs ``M`` and every other row ``sqrt(d) M**2 / (4 kappa)``,
    which makes ``basis`` a feasible vertex of the relaxed program.
    """
    d = lp.d
    idx = list(basis)
    s = float(np.linalg.svd(lp.a[idx], compute_uv=False)[-1])
    if not s > 0:
        raise AllSingular(f"basis {basis} is singular")
    kappa = power_of_two_floor(s)
    M = 4.0 * power_of_two_ceil(lp.scale)
    y_prime = np.full(lp.n, math.sqrt(d) * M * M / (4.0 * kappa))
    y_prime[idx] = M
    return lp.with_y(y_prime), kappa, M


def build_lp_plus(lp, lp_prime):
    """Lift to d+1 dimensions with ``a+_i = ((y'_i - y_i)/2, a_i)``, ``y+_i = (y'_i + y_i)/2``."""
    n, d = lp.n, lp.d
    rows = np.zeros((n + OFFSET, d + 1))
    rows[LOWER_ROW, 0] = -1.0
    rows[UPPER_ROW, 0] = 1.0
    rows[OFFSET:, 0] = (lp_prime.y - lp.y) / 2.0
    rows[OFFSET:, 1:] = lp.a
    y_plus = np.ones(n + OFFSET)
    y_plus[OFFSET:] = (lp_prime.y + lp.y) / 2.0
    if not np.all(y_plus > 0):
        bad = [int(i) - OFFSET for i in np.flatnonzero(y_plus <= 0)]
        raise NonPositiveYPlus(f"non-positive lifted rhs for rows {bad}")
    z_plus = np.zeros(d + 1)
    z_plus[0] = 1.0
    return LpPlus(rows, y_plus, z_plus)


def lift_basis(basis):
    """``{-1} ∪ J`` in the ``LP+`` row layout."""
    return tuple([LOWER_ROW] + [i + OFFSET for i in basis])


def find_zeta(lp_plus, basis, z):
    """Smallest tried ``zeta > 0`` with ``{-1} ∪ J`` optimal for ``(-zeta, z)`` in ``LP+``.

    Starts from the constructive value: write ``z = sum alpha_i a_i`` over
    the basis, let ``-zeta0`` be the first coordinate of ``sum alpha_i a+_i``
    and try ``max(2 zeta0, 1)``, doubling on failure.
    """
    lifted_rows = lp_plus.rows[[i + OFFSET for i in basis]]
    coeffs = np.linalg.solve(lifted_rows[:, 1:].T, z)
    zeta0 = -float(coeffs @ lifted_rows[:, 0])
    zeta = max(2.0 * zeta0, 1.0)
    normalized = lp_plus.normalized()
    lifted = lift_basis(basis)
    for _ in range(ZETA_DOUBLINGS):
        if is_opt_simp(normalized, np.concatenate(([-zeta], z)), lifted):
            return zeta
        zeta *= 2.0
    raise ZetaSearchFailed(f"no zeta up to {zeta:g} makes the lifted basis optimal")


def _attach(exc, trace):
    exc.trace = trace
    return exc


def two_phase_solve(lp, stream):
    """Solve `lp` with the two-phase shadow-vertex method.

    Returns ``(SolveResult, TwoPhaseTrace)``.  Solver errors propagate with
    the partial trace attached as ``exc.trace``.
    """
    n, d = lp.n, lp.d
    if n < d:
        raise ValueError(f"need n >= d, got n={n}, d={d}")
    trace = TwoPhaseTrace()
    try:
        return _solve(lp, stream, trace)
    except ShadowLPError as exc:
        raise _attach(exc, trace)


def _solve(lp, stream, trace):
    d = lp.d
    trace.shortlist, basis = choose_basis(lp, stream)
    trace.chosen_I = basis
    lp_prime, trace.kappa, trace.M = build_lp_prime(lp, basis)
    trace.y_prime = lp_prime.y
    if not math.sqrt(d) * trace.M / (4.0 * trace.kappa) >= 1.0:
        raise ShadowLPError("sqrt(d) M / (4 kappa) < 1")

    trace.alpha = sample_alpha(stream, d)
    trace.t0 = lp.a[list(basis)].T @ trace.alpha
    # polar_shadow_vertex checks that the chosen basis is optimal for t0 in LP'
    phase1, path1 = polar_shadow_vertex(lp_prime, basis, trace.t0)
    trace.phase1_pivots = path1.pivots

    if phase1.status == UNBOUNDED:
        # an ascent ray exists; phase 2 with the bounded objective t0 tells
        # an unbounded program apart from an infeasible one
        trace.lp_prime_unbounded = True
        trace.J = basis
        target = trace.t0
    else:
        trace.J = phase1.basis
        target = lp.z

    lp_plus = build_lp_plus(lp, lp_prime)
    trace.zeta = find_zeta(lp_plus, trace.J, target)
    lifted = lp_plus.normalized()
    start = np.concatenate(([-trace.zeta], target))
    phase2, path2 = polar_shadow_vertex(lifted, lift_basis(trace.J), start, check_start=False)
    trace.phase2_pivots = path2.pivots
    if phase2.status == UNBOUNDED:
        return SolveResult(UNBOUNDED), trace

    trace.K = phase2.basis
    trace.x0 = float(phase2.x[0])
    if trace.x0 < FEASIBLE_X0:
        return SolveResult(INFEASIBLE), trace
    if trace.lp_prime_unbounded:
        return SolveResult(UNBOUNDED), trace
    return _extract(lp, phase2), trace


def _extract(lp, phase2):
    """Read the optimum of the original program off the final ``LP+`` basis."""
    x = phase2.x[1:]
    rows = [k - OFFSET for k in phase2.basis if k >= OFFSET]
    if len(rows) > lp.d:
        slack = np.abs(lp.y[rows] - lp.a[rows] @ x)
        rows = [rows[i] for i in np.argsort(slack, kind="stable")[: lp.d]]
    basis = tuple(sorted(rows))
    if len(basis) == lp.d:
        try:
            x = np.linalg.solve(lp.a[list(basis)], lp.y[list(basis)])
        except np.linalg.LinAlgError:
            pass
    return SolveResult(OPTIMAL, x, basis, float(lp.z @ x))
