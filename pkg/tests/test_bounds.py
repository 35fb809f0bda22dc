import math

import mpmath
import numpy as np
import pytest

from shadowlp.bounds import BoundInputs, bound_D, bound_lp_plus, bound_lp_prime, bound_total, kappa0
from shadowlp.errors import DomainError

mpmath.mp.dps = 50


def mp_D(n, d, sigma):
    n, d, sigma = mpmath.mpf(n), mpmath.mpf(d), mpmath.mpf(sigma)
    cap = 1 / (3 * mpmath.sqrt(d * mpmath.log(n)))
    return 58888678 * n * d**3 / mpmath.power(min(sigma, cap), 6)


def mp_kappa0(n, d, sigma):
    n, d, sigma = mpmath.mpf(n), mpmath.mpf(d), mpmath.mpf(sigma)
    return sigma * min(1, sigma) / (12 * d**2 * n**7 * mpmath.sqrt(mpmath.log(n)))


def mp_lp_prime(n, d, sigma):
    n, d, sigma = mpmath.mpf(n), mpmath.mpf(d), mpmath.mpf(sigma)
    ln = mpmath.log(n)
    inner = min(1, sigma**4) / (12960 * d ** mpmath.mpf("8.5") * n**14 * ln ** mpmath.mpf("2.5"))
    return 326 * n * d * ln * mpmath.log(d * n / min(1, sigma), 2) * mp_D(n, d, inner)


def mp_lp_plus(n, d, sigma):
    n, d, sigma = mpmath.mpf(n), mpmath.mpf(d), mpmath.mpf(sigma)
    ln = mpmath.log(n)
    inner = min(1, sigma**5) / (2**23 * (d + 1) ** mpmath.mpf("5.5") * n**14 * ln ** mpmath.mpf("2.5"))
    return 49 * mpmath.log(n * d / min(sigma, 1), 2) * mp_D(n, d, inner) + n


def rel(a, b):
    return abs(mpmath.mpf(a) - b) / abs(b)


class TestValues:
    def test_D_examples(self):
        assert bound_D(BoundInputs(10, 3, 0.1)) == pytest.approx(1.590e16, rel=1e-3)
        assert 1 / (3 * math.sqrt(3 * math.log(10))) == pytest.approx(0.12684, abs=2e-5)
        assert bound_D(BoundInputs(10, 3, 1.0)) == pytest.approx(3.82e15, rel=1e-2)
        assert bound_D(BoundInputs(10, 3, 1.0)) == bound_D(BoundInputs(10, 3, 0.5))

    def test_kappa0_examples(self):
        k1 = kappa0(BoundInputs(10, 3, 1.0))
        assert k1 == pytest.approx(1 / (12 * 9 * 1e7 * math.sqrt(math.log(10))))
        assert k1 == pytest.approx(6.10e-10, rel=1e-3)
        assert kappa0(BoundInputs(10, 3, 0.5)) == pytest.approx(0.25 * k1)

    @pytest.mark.parametrize("n,d,sigma", [(10, 3, 0.1), (10, 3, 1.0), (30, 3, 0.01), (12, 5, 2.0), (50, 4, 0.3)])
    def test_against_mpmath(self, n, d, sigma):
        b = BoundInputs(n, d, sigma)
        assert rel(bound_D(b), mp_D(n, d, sigma)) < 1e-12
        assert rel(kappa0(b), mp_kappa0(n, d, sigma)) < 1e-12
        for ours, ref in ((bound_lp_prime(b), mp_lp_prime(n, d, sigma)), (bound_lp_plus(b), mp_lp_plus(n, d, sigma))):
            if ref > mpmath.mpf(np.finfo(float).max):
                assert ours == math.inf
            else:
                assert rel(ours, ref) < 1e-10

    def test_lp_prime_ratio(self):
        ours = bound_lp_prime(BoundInputs(10, 3, 1.0)) / bound_lp_prime(BoundInputs(10, 3, 0.1))
        ref = mp_lp_prime(10, 3, 1) / mp_lp_prime(10, 3, mpmath.mpf("0.1"))
        assert rel(ours, ref) < 1e-10

    def test_finite_positive(self):
        b = BoundInputs(10, 3, 0.1)
        for v in (bound_lp_prime(b), bound_lp_plus(b), bound_total(b)):
            assert 0 < v < math.inf
        assert bound_total(b) == bound_lp_prime(b) + bound_lp_plus(b) + 2

    def test_overflow_is_inf(self):
        assert bound_lp_prime(BoundInputs(10**6, 50, 1e-3)) == math.inf


class TestShape:
    def test_D_nonincreasing_in_sigma(self):
        values = [bound_D(BoundInputs(10, 3, s)) for s in np.logspace(-3, 1, 20)]
        assert all(b <= a for a, b in zip(values, values[1:]))

    def test_D_increasing_in_n_and_d(self):
        assert bound_D(BoundInputs(11, 3, 0.01)) > bound_D(BoundInputs(10, 3, 0.01))
        assert bound_D(BoundInputs(10, 4, 0.01)) > bound_D(BoundInputs(10, 3, 0.01))

    def test_kappa0_below_sigma(self):
        for n, d, s in [(4, 3, 1.0), (10, 3, 5.0), (8, 6, 0.01)]:
            assert kappa0(BoundInputs(n, d, s)) < s


class TestDomain:
    @pytest.mark.parametrize("n,d,sigma", [(10, 2, 0.1), (3, 3, 0.1), (10, 3, 0.0), (10, 3, -1.0)])
    def test_rejected(self, n, d, sigma):
        with pytest.raises(DomainError):
            BoundInputs(n, d, sigma)

    def test_is_value_error(self):
        with pytest.raises(ValueError):
            BoundInputs(2, 3, 1.0)
