"""End-to-end acceptance gate.

One test class per criterion; each asserts both the numerical contract and
its wall-clock budget.  The Monte Carlo classes pin seeds so the whole gate
is deterministic.
"""

import math
import time

import numpy as np
import pytest
from scipy.interpolate import PchipInterpolator
from scipy.special import erfc, gamma as _gamma, iv, jv
from scipy.stats import kstest

from kskit.fracdist import DistParams, frechet_cdf, frechet_sample, weibull_cdf, weibull_sample
from kskit.ksfun import KSParams, ks_eval, le_roy
from kskit.mellin import le_roy_value_by_inversion
from kskit.stochastic import (
    MeshConfig,
    frechet_functional,
    mc_estimate,
    sample_positive_stable,
    substream,
    weibull_functional,
)
from kskit.verify import VerifyConfig, reports_to_json, run_claim, run_suite


class _Budget:
    """Context manager asserting a wall-clock budget in seconds."""

    def __init__(self, seconds):
        self.seconds = seconds

    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, *exc):
        if exc[0] is None:
            elapsed = time.perf_counter() - self.t0
            assert elapsed < self.seconds, (
                f"runtime {elapsed:.1f}s exceeds budget {self.seconds}s"
            )


class TestCriterion1SpecialCases:
    """Exponential and geometric closed forms at machine accuracy."""

    def test_exponential_and_geometric(self):
        with _Budget(1.0):
            p = KSParams(1.0, 1.0, 0.0)
            for x in np.linspace(-10.0, 10.0, 201):
                x = float(x)
                assert ks_eval(p, x) == pytest.approx(math.exp(x), rel=1e-12)
            p0 = KSParams(0.0, 2.0, 1.0)
            for x in np.linspace(-0.9, 0.9, 181):
                x = float(x)
                assert ks_eval(p0, x) == pytest.approx(1.0 / (1.0 - x), rel=1e-12)


class TestCriterion2DoubleGamma:
    """Double-Gamma identity campaign at 1e-8 relative accuracy."""

    CLAIMS = (
        "barnes-functional-equation",
        "barnes-second-concatenation",
        "barnes-self-value",
        "barnes-rescaling",
        "pochhammer-bridge",
        "gamma-ratio-double-gamma",
    )

    def test_identity_claims(self):
        with _Budget(30.0):
            for cid in self.CLAIMS:
                r = run_claim(cid, VerifyConfig())
                assert r.status == "PASS", (cid, r.witness)
                assert r.worst_margin <= 1e-8, (cid, r.worst_margin)


class TestCriterion3MomentCoherence:
    """Mellin moments against series coefficients and direct quadrature."""

    def test_moment_and_integral_claims(self):
        with _Budget(60.0):
            r = run_claim("moment-coherence", VerifyConfig())
            assert r.status == "PASS", r.witness
            assert r.worst_margin <= 1e-9
            r = run_claim("mellin-integral-coherence", VerifyConfig())
            assert r.status == "PASS", r.witness
            assert r.worst_margin <= 1e-4


class TestCriterion4BernsteinMonteCarlo:
    """Path-functional MGF estimates against the series, n = 1e5.

    dt = 0.002 keeps the 3x3 grid within budget; the mesh-halving check
    below guards the discretization bias.
    """

    N = 100_000
    XS = (0.5, 1.0, 2.0, 5.0)
    MESH = MeshConfig(dt=0.002)

    @pytest.mark.parametrize("alpha", (0.3, 0.5, 0.8))
    @pytest.mark.parametrize("m", (0.5, 1.0, 2.0))
    def test_mgf_grid(self, alpha, m):
        with _Budget(70.0):
            worker = int(1000 * alpha + 10 * m)
            sw = weibull_functional(alpha, m, substream(7, worker), self.N, mesh=self.MESH)
            sf = frechet_functional(alpha, m, substream(7, worker + 1), self.N, mesh=self.MESH)
            pw = KSParams(alpha, m, m - 1.0)
            pf = KSParams(alpha, m, m - 1.0 / alpha)
            for x in self.XS:
                for s, p in ((sw, pw), (sf, pf)):
                    est = mc_estimate(np.exp(-x * s))
                    want = ks_eval(p, -x)
                    assert abs(est.mean - want) <= 3.0 * est.stderr, (
                        alpha, m, x, est.mean, want, est.stderr,
                    )

    def test_mesh_halving_stability(self):
        # representative configuration, fixed seed; the halved-mesh estimate
        # must sit within one standard error of the working-mesh estimate
        with _Budget(150.0):
            fine = MeshConfig(dt=0.001)
            a = weibull_functional(0.5, 1.0, substream(42, 5), self.N, mesh=self.MESH)
            b = weibull_functional(0.5, 1.0, substream(42, 5), self.N, mesh=fine)
            for x in self.XS:
                da, db = np.exp(-x * a), np.exp(-x * b)
                se = float(np.std(da, ddof=1) / math.sqrt(self.N))
                assert abs(float(np.mean(da) - np.mean(db))) <= se
            a = frechet_functional(0.5, 1.0, substream(42, 6), self.N, mesh=self.MESH)
            b = frechet_functional(0.5, 1.0, substream(42, 6), self.N, mesh=fine)
            for x in self.XS:
                da, db = np.exp(-x * a), np.exp(-x * b)
                se = float(np.std(da, ddof=1) / math.sqrt(self.N))
                assert abs(float(np.mean(da) - np.mean(db))) <= se


class TestCriterion5HyperbolicBounds:
    """All closed-form bound sandwiches strict on the documented grids."""

    def test_bounds_suite(self):
        with _Budget(300.0):
            reports = run_suite("bounds", VerifyConfig())
            for r in reports:
                assert r.status == "PASS", (r.claim_id, r.witness)


class TestCriterion6AsymptoticConstants:
    """Negative-axis power laws and density tail constants."""

    def test_interior_law(self):
        with _Budget(120.0):
            r = run_claim("interior-negative-axis-law", VerifyConfig())
            assert r.status == "PASS", r.witness
            assert r.worst_margin <= 0.05

    def test_boundary_law(self):
        with _Budget(240.0):
            r = run_claim("boundary-negative-axis-law", VerifyConfig())
            assert r.status == "PASS", r.witness
            assert r.worst_margin <= 0.10

    def test_density_tails(self):
        with _Budget(240.0):
            for cid in ("weibull-density-tails", "frechet-density-tails"):
                r = run_claim(cid, VerifyConfig())
                assert r.status == "PASS", (cid, r.witness)
                assert r.worst_margin <= 0.10, (cid, r.worst_margin)


class TestCriterion7SamplerCoherence:
    """Kolmogorov-Smirnov gate for every sampler at n = 1e5."""

    N = 100_000
    THRESH = 1.95 / math.sqrt(100_000)

    @staticmethod
    def _cdf_interp(cdf, d, samples):
        # exact CDF on an 800-point log grid + monotone interpolation;
        # the ~1e-7 interpolation error is invisible at the 6.2e-3 KS gate,
        # while per-sample exact evaluation would cost ~40 minutes
        grid = np.geomspace(samples.min() * 0.999, samples.max() * 1.001, 800)
        vals = np.array([cdf(d, g) for g in grid])
        assert np.all(np.diff(vals) >= 0.0)
        f = PchipInterpolator(np.log(grid), vals)
        return lambda t: np.clip(f(np.log(np.asarray(t, dtype=float))), 0.0, 1.0)

    def test_weibull_and_frechet(self):
        with _Budget(240.0):
            for alpha, lam, rho in ((0.3, 1.0, 1.0), (0.6, 1.5, 2.0), (0.9, 0.5, 0.7)):
                d = DistParams(alpha=alpha, lam=lam, rho=rho)
                sw = weibull_sample(d, self.N, seed=101)
                stat = kstest(sw, self._cdf_interp(weibull_cdf, d, sw)).statistic
                assert stat < self.THRESH, ("weibull", alpha, lam, rho, stat)
                sf = frechet_sample(d, self.N, seed=103)
                stat = kstest(sf, self._cdf_interp(frechet_cdf, d, sf)).statistic
                assert stat < self.THRESH, ("frechet", alpha, lam, rho, stat)

    def test_stable_closed_form(self):
        with _Budget(60.0):
            s = sample_positive_stable(0.5, substream(11, 1), self.N)
            stat = kstest(s, lambda t: erfc(1.0 / (2.0 * np.sqrt(t)))).statistic
            assert stat < self.THRESH

    def test_stable_laplace_transform(self):
        with _Budget(60.0):
            for alpha in (0.3, 0.7):
                s = sample_positive_stable(alpha, substream(13, 1), self.N)
                for t in (0.5, 1.0, 2.0):
                    est = mc_estimate(np.exp(-t * s))
                    want = math.exp(-(t**alpha))
                    assert abs(est.mean - want) <= 3.0 * est.stderr


class TestCriterion8OrderingEvidence:
    """Convex/stochastic order and monotonicity checks, n = 1e5."""

    def test_ordering_suite(self):
        with _Budget(600.0):
            reports = run_suite("orderings", VerifyConfig(n_samples=100_000))
            for r in reports:
                assert r.status == "PASS", (r.claim_id, r.witness)

    def test_deterministic_monotonicity(self):
        with _Budget(120.0):
            for cid in ("leroy-alpha-monotonicity", "ml-beta-monotonicity"):
                r = run_claim(cid, VerifyConfig())
                assert r.status == "PASS", (cid, r.witness)


class TestCriterion9LeRoy:
    """Index-2 Bessel oracle and the negative-axis logarithmic law."""

    def test_bessel_oracle(self):
        with _Budget(60.0):
            for x in np.linspace(0.05, 20.0, 60):
                x = float(x)
                assert le_roy(2.0, x) == pytest.approx(
                    float(iv(0, 2.0 * math.sqrt(x))), rel=1e-10
                )
                assert le_roy(2.0, -x) == pytest.approx(
                    float(jv(0, 2.0 * math.sqrt(x))), rel=1e-10, abs=1e-10
                )

    def test_log_law(self):
        with _Budget(60.0):
            x = 1e6
            for alpha in (0.3, 0.5, 0.7):
                val = le_roy_value_by_inversion(alpha, x)
                want = 1.0 / (_gamma(1.0 - alpha) * x * math.log(x) ** alpha)
                assert val / want == pytest.approx(1.0, abs=0.10)


class TestCriterion10ConjectureExploration:
    """Conjecture campaigns: evidence only, never assertions, reproducible."""

    def test_reports_and_determinism(self):
        with _Budget(300.0):
            cfg = VerifyConfig(seed=5)
            reports = run_suite("conjectures", cfg)
            for r in reports:
                assert r.status in ("EVIDENCE", "EXPLORED"), (r.claim_id, r.status)
                assert r.grid
            # the seeded claim must reproduce byte-identically
            again = run_claim("interior-sandwich-conjecture", cfg)
            first = next(
                r for r in reports if r.claim_id == "interior-sandwich-conjecture"
            )
            assert reports_to_json([first]) == reports_to_json([again])
