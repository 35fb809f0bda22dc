"""LP instances of the form ``maximize <z, x> subject to <a_i, x> <= y_i``.

Row indices are 0-based throughout the package; a basis is a sorted tuple
of ``d`` distinct row indices.
"""

import itertools
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DimensionMismatch, ParseError, TooLarge
from .linalg import smin_batch

ENUMERATION_LIMIT = 10**6

OPTIMAL = "Optimal"
UNBOUNDED = "Unbounded"
INFEASIBLE = "Infeasible"


@dataclass(frozen=True, eq=False)
class LinearProgram:
    """Constraint normals ``a`` (n x d), right-hand sides ``y`` (n,) and objective ``z`` (d,)."""

    a: np.ndarray
    y: np.ndarray
    z: np.ndarray

    def __post_init__(self):
        a = np.array(self.a, dtype=float)
        y = np.array(self.y, dtype=float)
        z = np.array(self.z, dtype=float)
        if a.ndim != 2:
            raise DimensionMismatch(f"constraint matrix must be 2-d, got shape {a.shape}")
        n, d = a.shape
        if n < 1 or d < 2:
            raise DimensionMismatch(f"need n >= 1 and d >= 2, got n={n}, d={d}")
        if y.shape != (n,):
            raise DimensionMismatch(f"y has shape {y.shape}, expected ({n},)")
        if z.shape != (d,):
            raise DimensionMismatch(f"z has shape {z.shape}, expected ({d},)")
        for name, arr in (("a", a), ("y", y), ("z", z)):
            if not np.all(np.isfinite(arr)):
                raise ValueError(f"{name} has non-finite entries")
        if not np.any(z != 0.0):
            raise ValueError("objective z must be nonzero")
        for arr in (a, y, z):
            arr.flags.writeable = False
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "y", y)
        object.__setattr__(self, "z", z)

    @property
    def n(self):
        return self.a.shape[0]

    @property
    def d(self):
        return self.a.shape[1]

    @property
    def scale(self):
        """``max_i ||(y_i, a_i)||``, the magnitude that sets perturbation and tolerances."""
        return float(np.max(np.sqrt(self.y**2 + np.sum(self.a**2, axis=1))))

    def with_y(self, y):
        return LinearProgram(self.a, y, self.z)

    def with_z(self, z):
        return LinearProgram(self.a, self.y, z)

    def __eq__(self, other):
        if not isinstance(other, LinearProgram):
            return NotImplemented
        return (
            self.a.shape == other.a.shape
            and np.array_equal(self.a, other.a)
            and np.array_equal(self.y, other.y)
            and np.array_equal(self.z, other.z)
        )

    __hash__ = None


def make_basis(indices, n, d):
    """Validate and normalise a basis to a sorted tuple of ints."""
    basis = tuple(sorted(int(i) for i in indices))
    if len(basis) != d or len(set(basis)) != d:
        raise ValueError(f"basis must have {d} distinct indices, got {indices!r}")
    if basis[0] < 0 or basis[-1] >= n:
        raise ValueError(f"basis indices out of range [0, {n}): {indices!r}")
    return basis


@dataclass
class SolveResult:
    status: str
    x: np.ndarray = None
    basis: tuple = None
    objective: float = None

    def to_dict(self):
        out = {"status": self.status}
        if self.status == OPTIMAL:
            out["x"] = [float(v) for v in self.x]
            out["basis"] = list(self.basis)
            out["objective"] = float(self.objective)
        return out


@dataclass
class GeneralPositionReport:
    min_subset_smin: float
    min_slack_gap: float
    min_objective_gap: float
    degenerate_flags: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.degenerate_flags


def check_enumerable(n, d, limit=ENUMERATION_LIMIT):
    count = math.comb(n, d)
    if count > limit:
        raise TooLarge(f"C({n}, {d}) = {count} exceeds the enumeration limit {limit}")
    return count


def all_dsets(n, d):
    """Every d-subset of range(n) in lexicographic order, as an int array (k, d)."""
    check_enumerable(n, d)
    if d > n:
        return np.zeros((0, d), dtype=np.intp)
    return np.array(list(itertools.combinations(range(n), d)), dtype=np.intp).reshape(-1, d)


def subset_vertices(a, y, sets, smin_tol):
    """Vertices ``A_I^-1 y_I`` for each row of `sets`.

    Returns ``(x, nonsingular, smins)``; rows of ``x`` for singular sets are NaN.
    """
    mats = a[sets]
    smins = smin_batch(mats)
    ok = smins > smin_tol
    x = np.full((len(sets), a.shape[1]), np.nan)
    if np.any(ok):
        x[ok] = np.linalg.solve(mats[ok], y[sets[ok]][..., None])[..., 0]
    return x, ok, smins


def check_general_position(lp, tol=1e-9):
    """Report near-violations of general position.

    Flags d-sets whose matrix is numerically singular, d-sets whose vertex
    makes an off-basis constraint tight within ``tol * scale * max(1, |x|)``,
    and (d-1)-sets whose span nearly contains the objective.
    """
    n, d = lp.n, lp.d
    scale = lp.scale
    smin_tol = 1e-12 * scale
    flags = []

    sets = all_dsets(n, d)
    min_smin = math.inf
    min_gap = math.inf
    if len(sets):
        x, ok, smins = subset_vertices(lp.a, lp.y, sets, smin_tol)
        min_smin = float(np.min(smins))
        flags.extend(tuple(int(i) for i in s) for s in sets[~ok])
        if np.any(ok):
            xs = x[ok]
            slack = lp.y[None, :] - xs @ lp.a.T
            member = np.zeros_like(slack, dtype=bool)
            np.put_along_axis(member, sets[ok], True, axis=1)
            rel = np.abs(slack) / (scale * np.maximum(1.0, np.linalg.norm(xs, axis=1)))[:, None]
            rel[member] = np.inf
            if n > d:
                per_set = np.min(rel, axis=1)
                min_gap = float(np.min(per_set))
                for s, g in zip(sets[ok], per_set):
                    if g <= tol:
                        flags.append(tuple(int(i) for i in s))

    min_obj_gap = math.inf
    if d >= 2:
        zhat = lp.z / np.linalg.norm(lp.z)
        norms = np.linalg.norm(lp.a, axis=1)
        unit = lp.a / np.where(norms > 0, norms, 1.0)[:, None]
        subs = all_dsets(n, d - 1)
        if len(subs):
            mats = np.concatenate([unit[subs], np.broadcast_to(zhat, (len(subs), 1, d))], axis=1)
            gaps = smin_batch(mats)
            min_obj_gap = float(np.min(gaps))
            for s, g in zip(subs, gaps):
                if g <= 1e-10:
                    flags.append(tuple(int(i) for i in s))

    return GeneralPositionReport(min_smin, min_gap, min_obj_gap, flags)


def _fmt(v):
    return format(float(v), ".17g")


def write_lp(lp):
    """Serialise to the text format read by :func:`read_lp`."""
    lines = [f"{lp.n} {lp.d}"]
    for row, yi in zip(lp.a, lp.y):
        lines.append(" ".join(_fmt(v) for v in row) + " " + _fmt(yi))
    lines.append(" ".join(_fmt(v) for v in lp.z))
    return "\n".join(lines) + "\n"


def read_lp(text):
    """Parse an LP from text.

    Format: a header line ``n d``; then n lines with the d entries of a_i
    followed by y_i; then one line with the d entries of z.  Lines starting
    with ``#`` and blank lines are skipped.
    """
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        rows.append((lineno, line.split()))
    if not rows:
        raise ParseError("empty input", 1)

    lineno, header = rows[0]
    if len(header) != 2:
        raise ParseError("header must be 'n d'", lineno)
    try:
        n, d = int(header[0]), int(header[1])
    except ValueError:
        raise ParseError("header must contain two integers", lineno) from None
    if n < 1 or d < 2:
        raise ParseError(f"need n >= 1 and d >= 2, got n={n}, d={d}", lineno)
    if len(rows) != n + 2:
        raise DimensionMismatch(f"expected {n} constraint lines and one objective line, got {len(rows) - 1} lines")

    def floats(lineno, tokens, width):
        if len(tokens) != width:
            raise ParseError(f"expected {width} numbers, got {len(tokens)}", lineno)
        try:
            return [float(t) for t in tokens]
        except ValueError as exc:
            raise ParseError(str(exc), lineno) from None

    a = np.empty((n, d))
    y = np.empty(n)
    for i, (lineno, tokens) in enumerate(rows[1 : n + 1]):
        vals = floats(lineno, tokens, d + 1)
        a[i] = vals[:d]
        y[i] = vals[d]
    lineno, tokens = rows[n + 1]
    z = np.array(floats(lineno, tokens, d))
    try:
        return LinearProgram(a, y, z)
    except ValueError as exc:
        raise ParseError(str(exc), lineno) from None
