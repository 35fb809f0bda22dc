"""Shadow-vertex simplex method, two-phase LP solver and smoothed-analysis tools."""

from .bounds import BoundInputs, bound_D, bound_lp_plus, bound_lp_prime, bound_total, kappa0
from .census import (
    ShadowSet,
    brute_force_solve,
    discretized_shadow,
    exact_shadow,
    phase2_census_size,
    stabilized_count,
)
from .errors import *  # noqa: F401,F403
from .linalg import cone_membership, mat_norm, smin, solve_square, vec_norm, vec_norm1, vec_norm_inf
from .lp import (
    INFEASIBLE,
    OPTIMAL,
    UNBOUNDED,
    GeneralPositionReport,
    LinearProgram,
    SolveResult,
    check_general_position,
    read_lp,
    write_lp,
)
from .rng import PerturbationSpec, RngStream, gaussian, gaussian_vec, perturb, sample_alpha, sample_dsets
from .shadow_vertex import InterpolationObjective, ShadowPath, is_opt_simp, polar_shadow_vertex
from .two_phase import LpPlus, TwoPhaseTrace, build_lp_plus, build_lp_prime, choose_basis, find_zeta, two_phase_solve

__version__ = "0.1.0"
