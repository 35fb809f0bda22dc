"""Dense small-dimension linear algebra.

Everything here works on plain ``numpy`` arrays.  Matrices are at most a
few dozen rows, so clarity wins over speed; the heavy lifting is delegated
to LAPACK through numpy/scipy.
"""

import warnings

import numpy as np
import scipy.linalg

from .errors import SingularSystem

PIVOT_RTOL = 1e-13
SMIN_RTOL = 1e-12


def as_vec(v):
    """Return `v` as a finite 1-d float array."""
    v = np.asarray(v, dtype=float)
    if v.ndim != 1:
        raise ValueError(f"expected a vector, got shape {v.shape}")
    if not np.all(np.isfinite(v)):
        raise ValueError("vector has non-finite entries")
    return v


def as_mat(a):
    """Return `a` as a finite 2-d float array with at least one row and column."""
    a = np.asarray(a, dtype=float)
    if a.ndim != 2 or a.shape[0] < 1 or a.shape[1] < 1:
        raise ValueError(f"expected a non-empty matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix has non-finite entries")
    return a


def vec_norm(v):
    v = np.asarray(v, dtype=float)
    big = vec_norm_inf(v)
    if big == 0.0:
        return 0.0
    # scale first so tiny or huge entries do not under/overflow when squared
    return float(big * np.sqrt(np.sum((v / big) ** 2)))


def vec_norm1(v):
    return float(np.sum(np.abs(v)))


def vec_norm_inf(v):
    v = np.asarray(v, dtype=float)
    return float(np.max(np.abs(v))) if v.size else 0.0


def mat_norm(a):
    """Operator 2-norm, i.e. the largest singular value."""
    return float(np.linalg.norm(np.asarray(a, dtype=float), 2))


def smin(a):
    """Smallest singular value of a square matrix, ``1 / ||A^-1||``.

    Singular input is not an error: values below ``SMIN_RTOL * ||A||`` are
    reported as exactly zero.
    """
    a = np.asarray(a, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"smin needs a square matrix, got shape {a.shape}")
    s = np.linalg.svd(a, compute_uv=False)
    if s[-1] <= SMIN_RTOL * s[0]:
        return 0.0
    return float(s[-1])


def smin_batch(mats):
    """Smallest singular values of a stack of square matrices, shape (k, d, d)."""
    mats = np.asarray(mats, dtype=float)
    if mats.shape[0] == 0:
        return np.zeros(0)
    s = np.linalg.svd(mats, compute_uv=False)
    out = s[:, -1].copy()
    out[out <= SMIN_RTOL * s[:, 0]] = 0.0
    return out


def lu_factor(a):
    """scipy's LU without its warning on exactly singular input; callers check the pivots."""
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", scipy.linalg.LinAlgWarning)
        return scipy.linalg.lu_factor(a, check_finite=False)


def solve_square(a, b):
    """Solve ``A x = b`` by LU with partial pivoting.

    Raises SingularSystem when a pivot falls below ``1e-13 * ||A||``.
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"solve_square needs a square matrix, got shape {a.shape}")
    if b.shape[0] != a.shape[0]:
        raise ValueError("right-hand side does not match the matrix")
    lu, piv = lu_factor(a)
    scale = np.max(np.abs(a))
    if scale == 0.0 or np.min(np.abs(np.diag(lu))) <= PIVOT_RTOL * scale * a.shape[0]:
        raise SingularSystem("pivot below tolerance in LU factorization")
    return scipy.linalg.lu_solve((lu, piv), b, check_finite=False)


def cone_membership(columns, q):
    """Coefficients ``lam >= 0`` with ``columns @ lam = q``, or None.

    `columns` is a square matrix whose columns generate the cone.  Slightly
    negative coefficients (within a conditioning-scaled tolerance) are
    clamped to zero so that the cone is treated as closed.
    """
    columns = np.asarray(columns, dtype=float)
    q = np.asarray(q, dtype=float)
    lam = solve_square(columns, q)
    tol = 1e-9 * vec_norm(q) / max(smin(columns), np.finfo(float).eps)
    if np.any(lam < -tol):
        return None
    return np.maximum(lam, 0.0)
