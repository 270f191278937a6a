"""Birnbaum-Saunders distribution math and inverse-gamma prior utilities.

Densities are exposed in log space only: the marginal posterior of the
scale parameter underflows for moderate sample sizes if exponentiated,
so callers that need a density on the natural scale exponentiate at
their own risk.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import gammaln

__all__ = [
    "BSParams",
    "InvGammaParams",
    "PriorSpec",
    "bs_log_pdf",
    "bs_sample",
    "bs_mean",
    "bs_variance",
    "invgamma_sample",
    "invgamma_log_pdf",
]

_LOG_SQRT_2PI = 0.5 * math.log(2.0 * math.pi)


@dataclass(frozen=True)
class BSParams:
    """Shape ``alpha`` and scale ``beta`` of a Birnbaum-Saunders distribution.

    ``beta`` is also the median of the distribution.
    """

    alpha: float
    beta: float

    def __post_init__(self) -> None:
        if not (self.alpha > 0 and math.isfinite(self.alpha)):
            raise ValueError(f"alpha must be positive and finite, got {self.alpha}")
        if not (self.beta > 0 and math.isfinite(self.beta)):
            raise ValueError(f"beta must be positive and finite, got {self.beta}")


@dataclass(frozen=True)
class InvGammaParams:
    """Shape ``a`` and rate-like parameter ``b`` of an inverse gamma.

    Density is proportional to ``x**-(a+1) * exp(-b/x)`` on x > 0.
    """

    a: float
    b: float

    def __post_init__(self) -> None:
        if not (self.a > 0 and math.isfinite(self.a)):
            raise ValueError(f"a must be positive and finite, got {self.a}")
        if not (self.b > 0 and math.isfinite(self.b)):
            raise ValueError(f"b must be positive and finite, got {self.b}")

    @property
    def mean(self) -> float:
        """Analytic mean b/(a-1); infinite for a <= 1."""
        return self.b / (self.a - 1.0) if self.a > 1.0 else math.inf

    @property
    def variance(self) -> float:
        """Analytic variance; infinite for a <= 2."""
        if self.a <= 2.0:
            return math.inf
        return self.b**2 / ((self.a - 1.0) ** 2 * (self.a - 2.0))

    @property
    def mode(self) -> float:
        return self.b / (self.a + 1.0)


@dataclass(frozen=True)
class PriorSpec:
    """Hyperparameters of the two inverse-gamma priors.

    ``(a1, b1)`` parameterize the prior on the scale beta, ``(a2, b2)``
    the prior on the squared shape alpha**2.
    """

    a1: float
    b1: float
    a2: float
    b2: float

    def __post_init__(self) -> None:
        for name in ("a1", "b1", "a2", "b2"):
            v = getattr(self, name)
            if not (v > 0 and math.isfinite(v)):
                raise ValueError(f"{name} must be positive and finite, got {v}")

    @property
    def beta_params(self) -> InvGammaParams:
        return InvGammaParams(self.a1, self.b1)

    @property
    def alpha2_params(self) -> InvGammaParams:
        return InvGammaParams(self.a2, self.b2)


def bs_log_pdf(x, p: BSParams):
    """Log density of the Birnbaum-Saunders distribution at ``x``.

    Accepts a scalar or array of strictly positive points; computed
    directly in log space.
    """
    x = np.asarray(x, dtype=float)
    if np.any(x <= 0) or np.any(~np.isfinite(x)):
        raise ValueError("x must be strictly positive and finite")
    alpha, beta = p.alpha, p.beta
    expo = -(x / beta + beta / x - 2.0) / (2.0 * alpha**2)
    out = (
        -_LOG_SQRT_2PI
        + expo
        + np.log(x + beta)
        - math.log(2.0 * alpha)
        - 0.5 * (math.log(beta) + 3.0 * np.log(x))
    )
    return out if out.ndim else float(out)


def bs_sample(p: BSParams, rng: np.random.Generator, size=None):
    """Draw from BS(alpha, beta) through its standard-normal representation.

    X = (beta/4) * (alpha*Z + sqrt((alpha*Z)**2 + 4))**2 with Z standard
    normal, so every draw is strictly positive.
    """
    z = rng.standard_normal(size)
    az = p.alpha * z
    root = az + np.sqrt(az**2 + 4.0)
    return (p.beta / 4.0) * root**2


def bs_mean(p: BSParams) -> float:
    """Mean beta * (1 + alpha**2 / 2)."""
    return p.beta * (1.0 + 0.5 * p.alpha**2)


def bs_variance(p: BSParams) -> float:
    """Variance (alpha*beta)**2 * (1 + 5*alpha**2/4)."""
    return (p.alpha * p.beta) ** 2 * (1.0 + 1.25 * p.alpha**2)


def invgamma_sample(p: InvGammaParams, rng: np.random.Generator, size=None):
    """Draw from the inverse gamma as the reciprocal of a gamma(a, rate=b) draw."""
    return 1.0 / rng.gamma(shape=p.a, scale=1.0 / p.b, size=size)


def invgamma_log_pdf(x, p: InvGammaParams):
    """Normalized log density of the inverse gamma at ``x`` (scalar or array)."""
    x = np.asarray(x, dtype=float)
    if np.any(x <= 0) or np.any(~np.isfinite(x)):
        raise ValueError("x must be strictly positive and finite")
    out = p.a * math.log(p.b) - gammaln(p.a) - (p.a + 1.0) * np.log(x) - p.b / x
    return out if out.ndim else float(out)
