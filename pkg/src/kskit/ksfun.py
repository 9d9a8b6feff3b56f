"""Kilbas-Saigo, Mittag-Leffler, and Le Roy function evaluation.

The three-parameter function is the entire series

    E(alpha, m, l; x) = 1 + sum_{n>=1} c_n x^n,
    c_n = prod_{k=1}^{n} Gamma(1 + alpha((k-1)m + l)) / Gamma(1 + alpha((k-1)m + l + 1)),

summed in software floating point (mpmath) with automatic precision
escalation when alternating-series cancellation is detected.  The module
also houses the complete-monotonicity classifier, the closed-form
hyperbolic bounds, and the asymptotic constants on the negative half-line.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import mpmath as mp
from scipy.special import gamma as _gamma

from .errors import AccuracyError, DomainError

__all__ = [
    "KSParams",
    "AsymptoticLaw",
    "LeRoyAsymptotic",
    "ks_eval",
    "ks_deriv",
    "mittag_leffler",
    "le_roy",
    "is_cm",
    "asym_minus_infinity",
    "weibull_type_bounds",
    "frechet_type_upper_bound",
    "generalized_ml_bounds",
    "le_roy_asym",
]

MAX_TERMS = 100_000
PRECISION_CAP = 1024
#: a parameter is treated as sitting on the boundary l = m - 1/alpha within
#: this relative tolerance (float drift on parameter arithmetic)
BOUNDARY_TOL = 1e-12


@dataclass(frozen=True)
class KSParams:
    """Parameter triple (alpha, m, l) of the three-parameter function."""

    alpha: float
    m: float
    l: float

    def __post_init__(self):
        if self.alpha < 0:
            raise DomainError(f"alpha must be >= 0, got {self.alpha}")
        if not self.m > 0:
            raise DomainError(f"m must be positive, got {self.m}")
        if self.alpha > 0 and not self.l > -1.0 / self.alpha:
            raise DomainError(
                f"l must exceed -1/alpha = {-1.0 / self.alpha}, got {self.l}"
            )

    @property
    def is_boundary(self) -> bool:
        """True on the edge l = m - 1/alpha of the CM region."""
        if self.alpha == 0:
            return False
        return abs(self.l - (self.m - 1.0 / self.alpha)) <= BOUNDARY_TOL * (1 + abs(self.l))

    @property
    def is_weibull_type(self) -> bool:
        """True when l = m - 1 (survival function of the fractional Weibull)."""
        return abs(self.l - (self.m - 1.0)) <= BOUNDARY_TOL * (1 + abs(self.l))


@dataclass(frozen=True)
class AsymptoticLaw:
    """E(-x) ~ coefficient * x**exponent as x -> +infinity."""

    coefficient: float
    exponent: float


@dataclass(frozen=True)
class LeRoyAsymptotic:
    """Negative-axis law of the Le Roy function.

    For 0 < alpha < 1 and 1 < alpha < 2 the function behaves like
    coefficient / (x (log x)^alpha); for alpha >= 2 it oscillates and no
    one-signed algebraic law exists (oscillatory=True, coefficient=None).
    """

    coefficient: float | None
    oscillatory: bool


#: float fast path gives up once cancellation exceeds this partial/total ratio
_FLOAT_CANCEL_LIMIT = 500.0


def _float_series(ratio_fn, x):
    """Plain-float attempt at 1 + sum term_n; None when floats don't suffice.

    ``ratio_fn(n)`` returns term_{n+1}/term_n / x as a float.  Bails out on
    overflow or when cancellation would eat more than ~17 of the 53 bits,
    in which case the caller falls back to escalating mpmath precision.
    """
    term = 1.0
    total = 1.0
    max_partial = 1.0
    small_run = 0
    for n in range(MAX_TERMS):
        term *= ratio_fn(n) * x
        total += term
        if not math.isfinite(total):
            return None
        at = abs(term)
        if at > max_partial:
            max_partial = at
        if abs(total) > max_partial:
            max_partial = abs(total)
        if at <= abs(total) * 1.1e-16 + 5e-324:
            small_run += 1
            if small_run >= 50:
                if total == 0.0 or max_partial / abs(total) > _FLOAT_CANCEL_LIMIT:
                    return None
                return total
        else:
            small_run = 0
    return None


def _series_sum(ratio_fn, x, precision_bits):
    """Escalating-precision compensated summation of 1 + sum term_n.

    ``ratio_fn(n, ctx)`` returns term_{n+1}/term_n / x at working context ctx.
    Terminates after 50 consecutive terms below 2^-prec * |partial sum|.
    """
    prec = max(53, int(precision_bits))
    while True:
        with mp.workprec(prec + 20):
            xm = mp.mpf(x)
            term = mp.mpf(1)
            total = mp.mpf(1)
            max_partial = mp.mpf(1)
            small_run = 0
            n = 0
            converged = False
            while n < MAX_TERMS:
                term = term * ratio_fn(n) * xm
                total += term
                n += 1
                if abs(total) > max_partial:
                    max_partial = abs(total)
                if abs(term) > max_partial:
                    max_partial = abs(term)
                if abs(term) <= mp.ldexp(abs(total) + mp.mpf(2) ** (-prec), -prec):
                    small_run += 1
                    if small_run >= 50:
                        converged = True
                        break
                else:
                    small_run = 0
            if not converged:
                raise AccuracyError(
                    f"series did not converge within {MAX_TERMS} terms",
                    estimate=float(total),
                )
            # bits lost to cancellation; escalate if the surviving precision
            # falls short of what was requested
            if abs(total) > 0:
                lost = int(mp.log(max_partial / abs(total), 2)) + 1
            else:
                lost = prec
            needed = int(precision_bits) + lost + 10
            if needed <= prec or prec >= PRECISION_CAP:
                if needed > prec:
                    raise AccuracyError(
                        "precision escalation cap reached",
                        estimate=float(total),
                        error_estimate=float(max_partial * mp.mpf(2) ** (-prec)),
                    )
                return total
        prec = min(max(2 * prec + 7, needed), PRECISION_CAP)


def ks_eval(p: KSParams, x: float, precision_bits: int = 53) -> float:
    """Evaluate E(alpha, m, l; x) by the log-space coefficient recurrence."""
    if precision_bits < 53:
        raise DomainError(f"precision_bits must be >= 53, got {precision_bits}")
    if p.alpha == 0:
        # coefficients collapse to 1: geometric series
        if x >= 1:
            raise DomainError(f"alpha = 0 requires x < 1, got x={x}")
        return 1.0 / (1.0 - x)
    a, m, l = p.alpha, p.m, p.l

    if precision_bits == 53:
        fast = _float_series(
            lambda n: math.exp(
                math.lgamma(1 + a * (n * m + l)) - math.lgamma(1 + a * (n * m + l + 1))
            ),
            x,
        )
        if fast is not None:
            return fast

    def ratio(n):
        # argument arithmetic at working precision: float rounding of y
        # inflates every term by ~1e-16 relative error, which dwarfs a
        # heavily cancelled sum
        am = mp.mpf(a)
        y = 1 + am * (n * mp.mpf(m) + mp.mpf(l))
        return mp.exp(mp.loggamma(y) - mp.loggamma(y + am))

    return float(_series_sum(ratio, x, precision_bits))


def ks_deriv(p: KSParams, x: float, precision_bits: int = 53) -> float:
    """Derivative of the series: sum_{n>=1} n c_n x^{n-1}.

    Same escalating-precision machinery as ``ks_eval``; the sum is
    rewritten as c_1 times a unit-leading-term series.
    """
    if precision_bits < 53:
        raise DomainError(f"precision_bits must be >= 53, got {precision_bits}")
    if p.alpha == 0:
        if x >= 1:
            raise DomainError(f"alpha = 0 requires x < 1, got x={x}")
        return 1.0 / (1.0 - x) ** 2
    a, m, l = p.alpha, p.m, p.l
    c1 = math.exp(
        float(mp.loggamma(1 + a * l)) - float(mp.loggamma(1 + a * (l + 1)))
    )

    if precision_bits == 53:
        fast = _float_series(
            lambda k: (k + 2)
            / (k + 1)
            * math.exp(
                math.lgamma(1 + a * ((k + 1) * m + l))
                - math.lgamma(1 + a * ((k + 1) * m + l + 1))
            ),
            x,
        )
        if fast is not None:
            return c1 * fast

    def ratio(k):
        # ((k+2)/(k+1)) * c_{k+2}/c_{k+1}
        am = mp.mpf(a)
        y = 1 + am * ((k + 1) * mp.mpf(m) + mp.mpf(l))
        return (
            mp.mpf(k + 2) / (k + 1) * mp.exp(mp.loggamma(y) - mp.loggamma(y + am))
        )

    return c1 * float(_series_sum(ratio, x, precision_bits))


def mittag_leffler(alpha: float, beta: float, x: float, precision_bits: int = 53) -> float:
    """Two-parameter Mittag-Leffler E_{alpha,beta}(x) for alpha in (0,1]."""
    if not 0 < alpha <= 1:
        raise DomainError(f"alpha must lie in (0, 1], got {alpha}")
    if not beta > 0:
        raise DomainError(f"beta must be positive, got {beta}")
    p = KSParams(alpha=alpha, m=1.0, l=(beta - 1.0) / alpha)
    return ks_eval(p, x, precision_bits) / _gamma(beta)


def le_roy(alpha: float, x: float, precision_bits: int = 53) -> float:
    """Le Roy function sum x^n / (n!)^alpha."""
    if alpha < 0:
        raise DomainError(f"alpha must be >= 0, got {alpha}")
    if alpha == 0:
        if x >= 1:
            raise DomainError(f"alpha = 0 requires x < 1, got x={x}")
        return 1.0 / (1.0 - x)

    if precision_bits == 53:
        fast = _float_series(lambda n: float(n + 1) ** (-alpha), x)
        if fast is not None:
            return fast

    def ratio(n):
        return mp.mpf(n + 1) ** (-alpha)

    return float(_series_sum(ratio, x, precision_bits))


def is_cm(p: KSParams) -> bool:
    """Complete monotonicity of x -> E(-x): alpha <= 1 and l >= m - 1/alpha."""
    if p.alpha == 0:
        raise DomainError("is_cm requires alpha > 0")
    if p.alpha > 1:
        return False
    edge = p.m - 1.0 / p.alpha
    return p.l >= edge - BOUNDARY_TOL * (1 + abs(p.l))


def asym_minus_infinity(p: KSParams) -> AsymptoticLaw:
    """Leading term of E(-x) as x -> infinity, CM parameters only.

    Interior (l > m - 1/alpha):  Gamma(1+a(l+1-m))/Gamma(1+a(l-m)) * x^-1.
    Boundary (l = m - 1/alpha):  (am)^{a/m} Gamma(1+a) G(1-a; am) G(1+a; am)
                                 * x^{-1-1/m}.
    """
    if not is_cm(p):
        raise DomainError(f"asymptotic law requires CM parameters, got {p}")
    a, m, l = p.alpha, p.m, p.l
    if p.is_boundary:
        if a == 1:
            raise DomainError("boundary case with alpha = 1 decays exponentially")
        d = a * m
        coeff = d ** (a / m) * _gamma(1 + a) \
            * math.exp(_log_g(1 - a, d) + _log_g(1 + a, d))
        return AsymptoticLaw(coefficient=coeff, exponent=-1.0 - 1.0 / m)
    coeff = _gamma(1 + a * (l + 1 - m)) / _gamma(1 + a * (l - m))
    return AsymptoticLaw(coefficient=coeff, exponent=-1.0)


def _log_g(z, delta):
    from .gammakit import default_context, log_barnes_g

    return log_barnes_g(z, default_context(delta))


def weibull_type_bounds(alpha: float, m: float, x: float) -> tuple[float, float]:
    """Hyperbolic sandwich for E(alpha, m, m-1; -x), x >= 0."""
    if not 0 <= alpha <= 1:
        raise DomainError(f"alpha must lie in [0, 1], got {alpha}")
    if not m > 0 or x < 0:
        raise DomainError("m must be positive and x >= 0")
    if x == 0:
        return (1.0, 1.0)
    if alpha == 1:
        lower = 0.0  # Gamma(0) = infinity limit
    else:
        lower = 1.0 / (1.0 + _gamma(1 - alpha) * x)
    upper = 1.0 / (1.0 + (_gamma(1 + alpha * (m - 1)) / _gamma(1 + alpha * m)) * x)
    return (lower, upper)


def frechet_type_upper_bound(alpha: float, m: float, x: float) -> float:
    """Upper bound for E(alpha, m, m-1/alpha; -x), x >= 0."""
    if not 0 < alpha <= 1:
        raise DomainError(f"alpha must lie in (0, 1], got {alpha}")
    if not m > 0 or x < 0:
        raise DomainError("m must be positive and x >= 0")
    c = _gamma(1 + alpha * m) / _gamma(1 + alpha * (m + 1))
    return (1.0 + c * x) ** (-1.0 - 1.0 / m)


def generalized_ml_bounds(alpha: float, beta: float, x: float) -> tuple[float, float]:
    """Hyperbolic sandwich for Gamma(beta) E_{alpha,beta}(-x), beta >= alpha.

    At beta = alpha the squared-hyperbolic pair applies; for beta > alpha the
    plain hyperbolic pair.
    """
    if not 0 < alpha <= 1:
        raise DomainError(f"alpha must lie in (0, 1], got {alpha}")
    if beta < alpha:
        raise DomainError(f"beta must be >= alpha, got beta={beta}, alpha={alpha}")
    if x < 0:
        raise DomainError(f"x must be >= 0, got {x}")
    if beta == alpha:
        if alpha == 1:
            lower = 0.0
        else:
            lower = (1.0 + math.sqrt(_gamma(1 - alpha) / _gamma(1 + alpha)) * x) ** -2
        upper = (1.0 + (_gamma(1 + alpha) / _gamma(1 + 2 * alpha)) * x) ** -2
        return (lower, upper)
    lower = 1.0 / (1.0 + (_gamma(beta - alpha) / _gamma(beta)) * x)
    upper = 1.0 / (1.0 + (_gamma(beta) / _gamma(beta + alpha)) * x)
    return (lower, upper)


def le_roy_asym(alpha: float) -> LeRoyAsymptotic:
    """Negative-axis asymptotic descriptor of the Le Roy function."""
    if not alpha > 0:
        raise DomainError(f"alpha must be positive, got {alpha}")
    if alpha == 1:
        raise DomainError("alpha = 1 is the exponential; no algebraic law")
    if alpha >= 2:
        return LeRoyAsymptotic(coefficient=None, oscillatory=True)
    if alpha < 1:
        return LeRoyAsymptotic(coefficient=1.0 / _gamma(1 - alpha), oscillatory=False)
    # alpha in (1, 2): Gamma(1 - alpha) < 0, so the coefficient is negative
    return LeRoyAsymptotic(
        coefficient=1.0 / (alpha**alpha * _gamma(1 - alpha)), oscillatory=False
    )
