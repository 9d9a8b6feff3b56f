import math

import mpmath as mp
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy.special import gamma as _gamma

from kskit.errors import AccuracyError, DomainError
from kskit.ksfun import (
    KSParams,
    asym_minus_infinity,
    frechet_type_upper_bound,
    generalized_ml_bounds,
    is_cm,
    ks_deriv,
    ks_eval,
    le_roy,
    le_roy_asym,
    mittag_leffler,
    weibull_type_bounds,
)


class TestKSParams:
    def test_domain(self):
        with pytest.raises(DomainError):
            KSParams(-0.1, 1.0, 0.0)
        with pytest.raises(DomainError):
            KSParams(0.5, 0.0, 0.0)
        with pytest.raises(DomainError):
            KSParams(0.5, 1.0, -2.5)  # l <= -1/alpha

    def test_boundary_flag(self):
        assert KSParams(0.5, 1.0, -1.0).is_boundary
        assert not KSParams(0.5, 1.0, 0.0).is_boundary


class TestKsEval:
    def test_exponential_special_case(self):
        p = KSParams(1.0, 1.0, 0.0)
        for x in (-5.0, -1.0, 0.0, 1.0, 5.0):
            assert ks_eval(p, x) == pytest.approx(math.exp(x), rel=1e-12)

    def test_zero_index_is_geometric(self):
        p = KSParams(0.0, 2.0, 1.0)
        assert ks_eval(p, 0.5) == pytest.approx(2.0, rel=1e-14)
        with pytest.raises(DomainError):
            ks_eval(p, 1.5)

    def test_at_origin(self):
        assert ks_eval(KSParams(0.5, 2.0, 1.0), 0.0) == 1.0

    def test_heavy_cancellation_reference(self):
        # high-precision reference for a strongly cancelled alternating sum
        p = KSParams(0.9, 1.0, 3.0)
        got = ks_eval(p, -40.0)
        with mp.workprec(1200):
            term = mp.mpf(1)
            total = mp.mpf(1)
            for n in range(2000):
                y = 1 + mp.mpf("0.9") * (n + 3)
                term *= mp.exp(mp.loggamma(y) - mp.loggamma(y + mp.mpf("0.9"))) * -40
                total += term
            want = float(total)
        assert got == pytest.approx(want, rel=1e-10)

    def test_fast_path_matches_high_precision(self):
        p = KSParams(0.6, 2.0, 1.0)
        for x in (-8.0, -2.0, 0.5, 3.0):
            assert ks_eval(p, x) == pytest.approx(
                ks_eval(p, x, precision_bits=120), rel=5e-12
            )

    def test_precision_request_domain(self):
        with pytest.raises(DomainError):
            ks_eval(KSParams(0.5, 1.0, 0.0), 1.0, precision_bits=20)

    @given(
        st.floats(min_value=0.2, max_value=1.0),
        st.floats(min_value=0.4, max_value=3.0),
        st.floats(min_value=0.0, max_value=3.0),
        st.floats(min_value=0.01, max_value=100.0),
    )
    @settings(max_examples=30, deadline=None)
    def test_cm_values_in_unit_interval(self, a, m, dl, c):
        # on the negative axis a completely monotone profile stays in (0, 1];
        # x = (c m)^alpha caps the series cancellation at ~1.44 c bits
        p = KSParams(a, m, m - 1.0 / a + dl)
        v = ks_eval(p, -((c * m) ** a))
        assert 0.0 < v <= 1.0

    @given(st.floats(min_value=-3.0, max_value=3.0))
    @settings(max_examples=25, deadline=None)
    def test_derivative_consistency(self, x):
        p = KSParams(0.5, 2.0, 1.0)
        h = 1e-6
        fd = (ks_eval(p, x + h) - ks_eval(p, x - h)) / (2 * h)
        assert ks_deriv(p, x) == pytest.approx(fd, rel=1e-4, abs=1e-8)

    def test_deriv_positive_for_cm(self):
        p = KSParams(0.6, 1.5, 1.0)
        assert ks_deriv(p, -4.0) > 0.0


class TestMittagLeffler:
    def test_classical_exponential(self):
        assert mittag_leffler(1.0, 1.0, 2.0) == pytest.approx(math.exp(2.0), rel=1e-12)

    def test_half_index_erfcx(self):
        from scipy.special import erfcx

        for x in (0.3, 1.0, 4.0):
            assert mittag_leffler(0.5, 1.0, -x) == pytest.approx(
                float(erfcx(x)), rel=1e-10
            )

    def test_domain(self):
        with pytest.raises(DomainError):
            mittag_leffler(1.2, 1.0, 0.5)
        with pytest.raises(DomainError):
            mittag_leffler(0.5, -1.0, 0.5)


class TestLeRoy:
    def test_alpha_one_exponential(self):
        assert le_roy(1.0, -3.0) == pytest.approx(math.exp(-3.0), rel=1e-12)

    def test_alpha_zero_geometric(self):
        assert le_roy(0.0, 0.25) == pytest.approx(4.0 / 3.0, rel=1e-14)

    def test_alpha_two_bessel(self):
        # sum x^n/(n!)^2 = I0(2 sqrt x)
        from scipy.special import iv

        assert le_roy(2.0, 4.0) == pytest.approx(float(iv(0, 4.0)), rel=1e-12)

    def test_asym_descriptor(self):
        assert le_roy_asym(0.5).coefficient == pytest.approx(
            1.0 / _gamma(0.5), rel=1e-13
        )
        assert le_roy_asym(2.5).oscillatory
        with pytest.raises(DomainError):
            le_roy_asym(1.0)


class TestCMCriterion:
    def test_boundary_inclusive(self):
        assert is_cm(KSParams(0.5, 1.0, -1.0))
        assert is_cm(KSParams(0.5, 1.0, 0.0))
        assert not is_cm(KSParams(0.5, 2.0, -0.5))

    @given(
        st.floats(min_value=0.1, max_value=1.0),
        st.floats(min_value=0.3, max_value=3.0),
    )
    @settings(max_examples=25, deadline=None)
    def test_survival_type_always_cm(self, a, m):
        # l = m - 1 >= m - 1/alpha holds for every alpha <= 1
        assert is_cm(KSParams(a, m, m - 1.0))


class TestBounds:
    @given(
        st.floats(min_value=0.15, max_value=0.95),
        st.floats(min_value=0.4, max_value=3.0),
        st.floats(min_value=1e-3, max_value=100.0),
    )
    @settings(max_examples=40, deadline=None)
    def test_survival_sandwich(self, a, m, c):
        x = (c * m) ** a  # bounded-cancellation argument
        lo, up = weibull_type_bounds(a, m, x)
        v = ks_eval(KSParams(a, m, m - 1.0), -x)
        assert lo <= v <= up
        assert 0.0 < lo < up <= 1.0

    @given(
        st.floats(min_value=0.15, max_value=0.95),
        st.floats(min_value=0.4, max_value=3.0),
        st.floats(min_value=1e-3, max_value=100.0),
    )
    @settings(max_examples=30, deadline=None)
    def test_boundary_upper(self, a, m, c):
        x = (c * m) ** a  # bounded-cancellation argument
        up = frechet_type_upper_bound(a, m, x)
        v = ks_eval(KSParams(a, m, m - 1.0 / a), -x)
        assert v <= up

    def test_generalized_ml_pair(self):
        for a, beta in [(0.5, 0.5), (0.5, 1.5), (0.8, 2.0)]:
            for x in (0.1, 1.0, 10.0):
                lo, up = generalized_ml_bounds(a, beta, x)
                v = _gamma(beta) * mittag_leffler(a, beta, -x)
                assert lo <= v <= up

    def test_bound_domains(self):
        with pytest.raises(DomainError):
            weibull_type_bounds(1.5, 1.0, 1.0)
        with pytest.raises(DomainError):
            generalized_ml_bounds(0.5, 0.3, 1.0)


class TestAsymptotics:
    def test_interior_constant(self):
        p = KSParams(0.5, 1.0, 0.5)
        law = asym_minus_infinity(p)
        assert law.exponent == -1.0
        want = _gamma(1 + 0.5 * 0.5) / _gamma(1 - 0.5 * 0.5)
        assert law.coefficient == pytest.approx(want, rel=1e-12)

    def test_boundary_exponent(self):
        law = asym_minus_infinity(KSParams(0.5, 2.0, 0.0))
        assert law.exponent == pytest.approx(-1.5)
        assert law.coefficient > 0.0

    def test_non_cm_rejected(self):
        with pytest.raises(DomainError):
            asym_minus_infinity(KSParams(0.5, 2.0, -0.5))
