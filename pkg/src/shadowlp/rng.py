"""Seeded random streams, Gaussian perturbations and the samplers used by the solver."""

from dataclasses import dataclass, field

import numpy as np

from .lp import LinearProgram

MASK64 = (1 << 64) - 1


def mix64(master_seed, index):
    """SplitMix64-style avalanche of ``(master_seed, index)`` into a 64-bit stream id."""
    z = (int(master_seed) + 0x9E3779B97F4A7C15 * (int(index) + 1)) & MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def parse_seed(text):
    """Parse a decimal or ``0x`` hexadecimal 64-bit seed."""
    text = str(text).strip().lower()
    value = int(text, 16) if text.startswith("0x") else int(text, 10)
    if not 0 <= value <= MASK64:
        raise ValueError(f"seed {text!r} is not a 64-bit unsigned integer")
    return value


@dataclass
class RngStream:
    """A single-owner random stream identified by ``(master_seed, stream_id)``."""

    master_seed: int
    stream_id: int = 0
    generator: np.random.Generator = field(init=False, repr=False)

    def __post_init__(self):
        self.master_seed = int(self.master_seed) & MASK64
        self.stream_id = int(self.stream_id) & MASK64
        seq = np.random.SeedSequence([self.master_seed, self.stream_id])
        self.generator = np.random.Generator(np.random.PCG64(seq))

    @classmethod
    def for_trial(cls, master_seed, trial_index):
        return cls(master_seed, mix64(master_seed, trial_index))


def gaussian(stream, mean=0.0, sd=1.0):
    if sd < 0:
        raise ValueError("sd must be nonnegative")
    return float(mean + sd * stream.generator.standard_normal())


def gaussian_vec(stream, center, sd):
    """Independent Gaussians about `center`; ``sd == 0`` returns the center unchanged."""
    if sd < 0:
        raise ValueError("sd must be nonnegative")
    center = np.asarray(center, dtype=float)
    noise = stream.generator.standard_normal(center.shape)
    if sd == 0:
        return center.copy()
    return center + sd * noise


@dataclass(frozen=True)
class PerturbationSpec:
    """Relative noise level ``sigma``; the absolute sd is ``sigma * scale``."""

    sigma: float
    scale: float

    def __post_init__(self):
        if not self.sigma >= 0:
            raise ValueError("sigma must be nonnegative")
        if not self.scale > 0:
            raise ValueError("scale must be positive")

    @classmethod
    def for_lp(cls, lp, sigma):
        return cls(float(sigma), lp.scale)

    @property
    def sd(self):
        return self.sigma * self.scale


def perturb(lp, spec, stream):
    """Replace every entry of ``a`` and ``y`` by a Gaussian of sd ``spec.sd`` about it."""
    sd = spec.sd
    a = gaussian_vec(stream, lp.a, sd)
    y = gaussian_vec(stream, lp.y, sd)
    return LinearProgram(a, y, lp.z)


def sample_alpha(stream, d):
    """Uniform sample from ``{alpha : sum(alpha) = 1, alpha_i >= 1/d**2}``.

    Uniform spacings of sorted uniforms give a point uniform on the standard
    simplex, which an affine map carries onto the shrunken simplex.
    """
    if d < 2:
        raise ValueError("d must be at least 2")
    cuts = np.sort(stream.generator.random(d - 1))
    u = np.diff(np.concatenate(([0.0], cuts, [1.0])))
    return 1.0 / d**2 + (1.0 - 1.0 / d) * u


def sample_dsets(stream, n, d, count):
    """`count` independent uniform d-subsets of range(n), each a sorted tuple."""
    if not n >= d:
        raise ValueError("need n >= d")
    if count == 0:
        return []
    # the first d positions of a uniform random permutation form a uniform d-subset
    picks = np.sort(np.argsort(stream.generator.random((count, n)), axis=1)[:, :d], axis=1)
    return [tuple(int(i) for i in row) for row in picks]
