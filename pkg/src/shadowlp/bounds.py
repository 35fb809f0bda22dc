"""Closed-form bounds on expected shadow size and two-phase pivot counts.

``lg`` is log base 2 and ``ln`` the natural log.  Values are binary64 and may
overflow to ``inf``; that is reported rather than treated as an error.
"""

import math
from dataclasses import dataclass

from .errors import DomainError

SHADOW_CONSTANT = 58_888_678


@dataclass(frozen=True)
class BoundInputs:
    n: int
    d: int
    sigma: float

    def __post_init__(self):
        if self.d < 3:
            raise DomainError(f"bounds need d >= 3, got d={self.d}")
        if self.n <= self.d:
            raise DomainError(f"bounds need n > d, got n={self.n}, d={self.d}")
        if not self.sigma > 0:
            raise DomainError(f"sigma must be positive, got {self.sigma}")


def _shadow(n, d, sigma):
    cap = 1.0 / (3.0 * math.sqrt(d * math.log(n)))
    try:
        return SHADOW_CONSTANT * n * d**3 / min(sigma, cap) ** 6
    except (OverflowError, ZeroDivisionError):
        return math.inf


def bound_D(b):
    """Expected shadow size bound ``58888678 n d^3 / min(sigma, 1/(3 sqrt(d ln n)))^6``."""
    return _shadow(b.n, b.d, b.sigma)


def kappa0(b):
    """``sigma min(1, sigma) / (12 d^2 n^7 sqrt(ln n))``."""
    n, d, sigma = b.n, b.d, b.sigma
    return sigma * min(1.0, sigma) / (12.0 * d**2 * n**7 * math.sqrt(math.log(n)))


def bound_lp_prime(b):
    """Expected phase-1 shadow size bound."""
    n, d, sigma = b.n, b.d, b.sigma
    ln = math.log(n)
    inner = min(1.0, sigma**4) / (12960.0 * d**8.5 * n**14 * ln**2.5)
    return 326.0 * n * d * ln * math.log2(d * n / min(1.0, sigma)) * _shadow(n, d, inner)


def bound_lp_plus(b):
    """Expected phase-2 shadow size bound."""
    n, d, sigma = b.n, b.d, b.sigma
    ln = math.log(n)
    inner = min(1.0, sigma**5) / (2.0**23 * (d + 1) ** 5.5 * n**14 * ln**2.5)
    return 49.0 * math.log2(n * d / min(sigma, 1.0)) * _shadow(n, d, inner) + n


def bound_total(b):
    """Bound on expected total two-phase pivots: phase 1 + phase 2 + 2."""
    return bound_lp_prime(b) + bound_lp_plus(b) + 2.0
