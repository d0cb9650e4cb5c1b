import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dirichlet_l1.arith import EULER_GAMMA
from dirichlet_l1.specfun import digamma, digamma_row, digamma_row_errors, gauss_identity_residual


def psi_series(z, dps=30):
    """psi(z) = -gamma - sum_{n>=0} (1-z)/((n+z)(n+1)), summed at high precision."""
    with mpmath.workdps(dps):
        z = mpmath.mpf(z)
        return -mpmath.euler - mpmath.nsum(lambda n: (1 - z) / ((n + z) * (n + 1)), [0, mpmath.inf])


class TestDigamma:
    def test_one(self):
        assert digamma(1).value == pytest.approx(-0.5772156649015329, abs=1e-15)

    def test_half(self):
        frozen = -1.9635100260214235  # psi_series(0.5)
        assert float(psi_series(0.5)) == frozen
        assert digamma(0.5).value == pytest.approx(frozen, abs=1e-14)

    def test_two(self):
        assert digamma(2).value == pytest.approx(1 - EULER_GAMMA, abs=1e-15)

    @pytest.mark.parametrize("z", [0.0, -1.0, -0.5, float("nan")])
    def test_rejects_nonpositive(self, z):
        with pytest.raises(ValueError):
            digamma(z)

    @pytest.mark.parametrize("z", [1e-6, 1e-3, 0.1, 1 / 3, 0.75, 1.5, 7.25, 15.9, 16.0, 40.0, 1e3, 1e5, 1e7])
    def test_error_bound_is_honest(self, z):
        d = digamma(z)
        ref = mpmath.digamma(mpmath.mpf(z))
        assert abs(d.value - ref) <= d.abs_error

    @pytest.mark.parametrize("z", [1e-6, 1e-4, 1e-2, 0.5, 3.0, 100.0, 1e7])
    def test_error_bound_size(self, z):
        d = digamma(z)
        # absolute 1e-12 wherever |psi| permits it, relative otherwise
        assert d.abs_error <= 1e-12 * max(1.0, abs(d.value))

    @pytest.mark.parametrize("z", [0.125, 0.2, 1 / 3, 0.9, 1.75])
    def test_against_series(self, z):
        d = digamma(z)
        assert abs(d.value - float(psi_series(z))) <= d.abs_error + 1e-15

    @settings(max_examples=300)
    @given(st.floats(min_value=1e-3, max_value=1e6))
    def test_against_mpmath(self, z):
        d = digamma(z)
        assert abs(d.value - float(mpmath.digamma(z))) <= d.abs_error + 1e-15


class TestRow:
    def test_unit(self):
        assert digamma_row(1) == pytest.approx([-EULER_GAMMA], abs=1e-16)

    def test_two(self):
        assert digamma_row(2) == pytest.approx([-EULER_GAMMA - 2 * math.log(2), -EULER_GAMMA], abs=1e-14)

    def test_four_sum(self):
        assert math.fsum(digamma_row(4)) == pytest.approx(-4 * (EULER_GAMMA + math.log(4)), abs=1e-13)

    def test_readonly(self):
        with pytest.raises(ValueError):
            digamma_row(5)[0] = 0.0

    @pytest.mark.parametrize("q", [3, 17, 100, 499])
    def test_matches_pointwise(self, q):
        row = digamma_row(q)
        errs = digamma_row_errors(q)
        for k in (1, 2, q // 2, q - 1, q):
            ref = mpmath.digamma(mpmath.mpf(k) / q)
            assert abs(row[k - 1] - ref) <= errs[k - 1]

    @pytest.mark.parametrize("q", [2, 10, 97, 1000])
    def test_positivity(self, q):
        assert np.all(-digamma_row(q)[:-1] - EULER_GAMMA > 0)

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            digamma_row(0)


def test_gauss_identity():
    worst = max(abs(gauss_identity_residual(m)) for m in range(1, 501))
    assert worst < 1e-9


def test_reflection():
    rng = np.random.default_rng(20261016)
    for z in rng.uniform(0, 1, size=1000):
        lhs = digamma(1 - z).value - digamma(z).value
        assert abs(lhs - math.pi / math.tan(math.pi * z)) < 1e-9


def test_recurrence():
    rng = np.random.default_rng(7)
    for z in rng.uniform(0, 100, size=1000):
        assert abs(digamma(z + 1).value - digamma(z).value - 1 / z) < 1e-12
