import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy.integrate import quad
from scipy.stats import kstest

from kskit.errors import DomainError
from kskit.fracdist import (
    DistParams,
    frechet_cdf,
    frechet_density,
    frechet_sample,
    gumbel_sample,
    tail_law,
    weibull_cdf,
    weibull_density,
    weibull_sample,
)

D = DistParams(alpha=0.6, lam=1.5, rho=2.0)


class TestParams:
    def test_domain(self):
        with pytest.raises(DomainError):
            DistParams(alpha=1.2, lam=1.0, rho=1.0)
        with pytest.raises(DomainError):
            DistParams(alpha=0.5, lam=-1.0, rho=1.0)
        with pytest.raises(DomainError):
            DistParams(alpha=0.5, lam=1.0, rho=0.0)


class TestCdfs:
    def test_weibull_cdf_shape(self):
        assert weibull_cdf(D, 0.0) == 0.0
        assert weibull_cdf(D, -1.0) == 0.0
        xs = np.linspace(0.01, 5.0, 40)
        vals = [weibull_cdf(D, float(x)) for x in xs]
        assert all(0.0 <= v <= 1.0 for v in vals)
        assert all(b >= a for a, b in zip(vals, vals[1:]))
        # heavy algebraic upper tail: survival(5) ~ (lam Gamma(1-alpha) 5^rho)^-1
        assert vals[-1] > 0.97

    def test_frechet_cdf_shape(self):
        assert frechet_cdf(D, 0.0) == 0.0
        xs = np.linspace(0.01, 20.0, 40)
        vals = [frechet_cdf(D, float(x)) for x in xs]
        assert all(0.0 <= v <= 1.0 for v in vals)
        assert all(b >= a for a, b in zip(vals, vals[1:]))

    def test_alpha_one_closed_forms(self):
        d = DistParams(alpha=1.0, lam=2.0, rho=1.5)
        for x in (0.3, 1.0, 2.5):
            assert weibull_cdf(d, x) == pytest.approx(
                1.0 - math.exp(-2.0 * x**1.5 / 1.5), rel=1e-12
            )
            assert frechet_cdf(d, x) == pytest.approx(
                math.exp(-2.0 * x**-1.5 / 1.5), rel=1e-12
            )

    def test_alpha_zero_closed_forms(self):
        d = DistParams(alpha=0.0, lam=2.0, rho=1.5)
        for x in (0.3, 1.0, 2.5):
            t = 2.0 * x**1.5
            assert weibull_cdf(d, x) == pytest.approx(t / (1 + t), rel=1e-12)
            u = 2.0 * x**-1.5
            assert frechet_cdf(d, x) == pytest.approx(1 / (1 + u), rel=1e-12)


class TestDensities:
    def test_weibull_density_integrates_to_cdf(self):
        for hi in (0.5, 1.5):
            integral, err = quad(lambda t: weibull_density(D, t), 0.0, hi, limit=200)
            assert integral == pytest.approx(weibull_cdf(D, hi), rel=1e-8)

    def test_frechet_density_integrates_to_cdf(self):
        integral, err = quad(
            lambda t: frechet_density(D, t), 0.0, 2.0, limit=200
        )
        assert integral == pytest.approx(frechet_cdf(D, 2.0), rel=1e-7)

    def test_series_vs_mellin_method(self):
        for x in (0.4, 1.0, 2.0):
            s = weibull_density(D, x, method="series")
            m = weibull_density(D, x, method="mellin")
            assert m == pytest.approx(s, rel=1e-6)
        for x in (0.5, 1.5):
            s = frechet_density(D, x, method="series")
            m = frechet_density(D, x, method="mellin")
            assert m == pytest.approx(s, rel=1e-6)

    def test_nonnegative(self):
        for x in np.geomspace(1e-3, 50.0, 30):
            assert weibull_density(D, float(x)) >= 0.0
            assert frechet_density(D, float(x)) >= 0.0

    def test_bad_method(self):
        with pytest.raises(DomainError):
            weibull_density(D, 1.0, method="magic")


class TestSamplers:
    N = 20_000
    # two-sided KS acceptance threshold at roughly the 1e-3 level
    THRESH = 1.95 / math.sqrt(N)

    def _ks(self, sample, cdf):
        return kstest(sample, cdf).statistic

    def test_weibull_inverse_cdf(self):
        s = weibull_sample(D, self.N, seed=7)
        assert self._ks(s, lambda x: np.array([weibull_cdf(D, t) for t in np.atleast_1d(x)])) < self.THRESH

    def test_weibull_probabilistic(self):
        s = weibull_sample(D, self.N, seed=11, strategy="probabilistic")
        assert self._ks(s, lambda x: np.array([weibull_cdf(D, t) for t in np.atleast_1d(x)])) < self.THRESH

    def test_frechet_inverse_cdf(self):
        s = frechet_sample(D, self.N, seed=13)
        assert self._ks(s, lambda x: np.array([frechet_cdf(D, t) for t in np.atleast_1d(x)])) < self.THRESH

    def test_frechet_probabilistic_requires_matched_shape(self):
        with pytest.raises(DomainError):
            frechet_sample(D, 100, seed=1, strategy="probabilistic")
        d = DistParams(alpha=0.6, lam=1.0, rho=0.6)
        s = frechet_sample(d, self.N, seed=17, strategy="probabilistic")
        assert self._ks(s, lambda x: np.array([frechet_cdf(d, t) for t in np.atleast_1d(x)])) < self.THRESH

    def test_determinism(self):
        a = weibull_sample(D, 500, seed=3)
        b = weibull_sample(D, 500, seed=3)
        assert np.array_equal(a, b)
        c = weibull_sample(D, 500, seed=4)
        assert not np.array_equal(a, c)

    def test_edge_alphas(self):
        for alpha in (0.0, 1.0):
            d = DistParams(alpha=alpha, lam=1.0, rho=1.5)
            s = weibull_sample(d, self.N, seed=19)
            assert self._ks(s, lambda x, d=d: np.array([weibull_cdf(d, t) for t in np.atleast_1d(x)])) < self.THRESH

    def test_gumbel_sample_runs(self):
        s = gumbel_sample(0.5, 1.0, 5000, seed=23)
        assert s.shape == (5000,)
        assert np.all(np.isfinite(s))
        with pytest.raises(DomainError):
            gumbel_sample(1.0, 1.0, 10, seed=0)

    def test_gumbel_alpha_zero_is_logistic(self):
        # ln(E1/E2) is standard logistic
        from scipy.stats import logistic

        s = gumbel_sample(0.0, 1.0, self.N, seed=29)
        assert kstest(s, logistic.cdf).statistic < self.THRESH

    def test_bad_strategy(self):
        with pytest.raises(DomainError):
            weibull_sample(D, 10, seed=0, strategy="rejection")


class TestTailLaws:
    def test_weibull_zero_law(self):
        law = tail_law(D, "weibull_zero")
        x = 1e-4
        assert weibull_density(D, x) == pytest.approx(
            law.coefficient * x**law.exponent, rel=1e-3
        )

    def test_weibull_inf_law(self):
        law = tail_law(D, "weibull_inf")
        x = 1e4
        assert weibull_density(D, x, method="mellin") == pytest.approx(
            law.coefficient * x**law.exponent, rel=0.05
        )

    def test_frechet_inf_law(self):
        law = tail_law(D, "frechet_inf")
        x = 1e4
        assert frechet_density(D, x) == pytest.approx(
            law.coefficient * x**law.exponent, rel=1e-3
        )

    def test_frechet_zero_law(self):
        law = tail_law(D, "frechet_zero")
        x = 5e-3
        assert frechet_density(D, x, method="mellin") == pytest.approx(
            law.coefficient * x**law.exponent, rel=0.1
        )

    def test_alpha_one_excluded(self):
        d = DistParams(alpha=1.0, lam=1.0, rho=1.0)
        with pytest.raises(DomainError):
            tail_law(d, "weibull_inf")
        with pytest.raises(DomainError):
            tail_law(d, "frechet_zero")

    def test_unknown_end(self):
        with pytest.raises(DomainError):
            tail_law(D, "weibull_sideways")
