"""Loss functions for point and interval estimation of the BS mean.

Four losses are supported: absolute error and squared error for point
estimates, and two interval losses that trade interval length against
coverage. For each one this module exposes the optimal decision under
the empirical posterior (the Bayes rule), the matching estimate of the
posterior expected loss at that decision, and the raw loss itself.

Conventions, fixed once for reproducibility:

* the p-quantile of N sorted draws is the ceil(p*N)-th order statistic
  (no interpolation), with p = 0 mapped to the first;
* the median of an even-length sample averages the two central order
  statistics;
* sample variance uses divisor N-1, except that the centered-interval
  Bayes rule scales its half-width with the divisor-N standard
  deviation, which makes the returned interval the exact minimizer of
  the average loss over the draws.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "LossKind",
    "LossSpec",
    "Decision",
    "empirical_quantile",
    "bayes_rule",
    "expected_posterior_loss",
    "loss_value",
]


class LossKind(enum.Enum):
    ABSOLUTE = "absolute"
    QUADRATIC = "quadratic"
    INTERVAL_QUANTILE = "interval_quantile"
    INTERVAL_CENTERED = "interval_centered"


_POINT_KINDS = (LossKind.ABSOLUTE, LossKind.QUADRATIC)


@dataclass(frozen=True)
class LossSpec:
    """A loss kind plus its parameter.

    ``rho`` (interval-probability weight in (0,1)) is required exactly
    for the quantile-interval loss; ``gamma`` (positive length weight)
    exactly for the centered-interval loss.
    """

    kind: LossKind
    rho: float | None = None
    gamma: float | None = None

    def __post_init__(self) -> None:
        if self.kind is LossKind.INTERVAL_QUANTILE:
            if self.rho is None:
                raise ValueError("rho is required for the quantile-interval loss")
            if not (0.0 < self.rho < 1.0):
                raise ValueError(f"rho must lie in (0, 1), got {self.rho}")
        elif self.rho is not None:
            raise ValueError(f"rho is only valid for the quantile-interval loss, not {self.kind.value}")
        if self.kind is LossKind.INTERVAL_CENTERED:
            if self.gamma is None:
                raise ValueError("gamma is required for the centered-interval loss")
            if not (self.gamma > 0 and math.isfinite(self.gamma)):
                raise ValueError(f"gamma must be positive, got {self.gamma}")
        elif self.gamma is not None:
            raise ValueError(f"gamma is only valid for the centered-interval loss, not {self.kind.value}")

    @property
    def is_interval(self) -> bool:
        return self.kind not in _POINT_KINDS


@dataclass(frozen=True)
class Decision:
    """Either a point estimate or a credible interval (a, b) with a <= b."""

    point: float | None = None
    interval: tuple[float, float] | None = None

    def __post_init__(self) -> None:
        if (self.point is None) == (self.interval is None):
            raise ValueError("exactly one of point or interval must be given")
        if self.interval is not None and not self.interval[0] <= self.interval[1]:
            raise ValueError(f"interval must satisfy a <= b, got {self.interval}")


def empirical_quantile(draws: np.ndarray, p: float) -> float:
    """ceil(p*N)-th order statistic of ``draws`` (p=0 maps to the minimum).

    Integer boundaries of p*N are resolved to within 1e-9 so that exact
    probabilities like 0.05 * 100 do not spill over to the next order
    statistic through float rounding.
    """
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must lie in [0, 1], got {p}")
    x = np.sort(np.asarray(draws, dtype=float))
    n = x.size
    k = max(1, math.ceil(p * n - 1e-9))
    return float(x[k - 1])


def _check_draws(theta_draws) -> np.ndarray:
    x = np.asarray(theta_draws, dtype=float)
    if x.ndim != 1:
        raise ValueError("theta_draws must be one-dimensional")
    if x.size < 2:
        raise ValueError(f"need at least 2 draws, got {x.size}")
    if not np.all(np.isfinite(x)):
        raise ValueError("theta_draws contains non-finite values")
    return x


def bayes_rule(theta_draws, spec: LossSpec) -> Decision:
    """Optimal decision under ``spec`` for the empirical posterior ``theta_draws``."""
    x = _check_draws(theta_draws)
    if spec.kind is LossKind.ABSOLUTE:
        return Decision(point=float(np.median(x)))
    if spec.kind is LossKind.QUADRATIC:
        return Decision(point=float(np.mean(x)))
    if spec.kind is LossKind.INTERVAL_QUANTILE:
        lo = empirical_quantile(x, spec.rho / 2.0)
        hi = empirical_quantile(x, 1.0 - spec.rho / 2.0)
        return Decision(interval=(lo, hi))
    # centered interval: mean +- sd/sqrt(gamma), divisor-N sd (exact minimizer)
    m = float(np.mean(x))
    half = float(np.std(x)) / math.sqrt(spec.gamma)
    return Decision(interval=(m - half, m + half))


def expected_posterior_loss(theta_draws, spec: LossSpec) -> float:
    """Estimated posterior expected loss at the Bayes rule of ``spec``.

    The rule is recomputed internally from the same draws; quadratic and
    centered-interval losses use their closed forms (sample variance and
    2*sqrt(gamma)*sd, both with divisor N-1).
    """
    x = _check_draws(theta_draws)
    if spec.kind is LossKind.ABSOLUTE:
        return float(np.mean(np.abs(x - np.median(x))))
    if spec.kind is LossKind.QUADRATIC:
        return float(np.var(x, ddof=1))
    if spec.kind is LossKind.INTERVAL_QUANTILE:
        a, b = bayes_rule(x, spec).interval
        return float((x[x >= b].sum() - x[x <= a].sum()) / x.size)
    return 2.0 * math.sqrt(spec.gamma) * float(np.std(x, ddof=1))


def loss_value(theta, decision: Decision, spec: LossSpec):
    """Raw loss of ``decision`` at parameter value ``theta`` (scalar or array)."""
    theta = np.asarray(theta, dtype=float)
    if spec.is_interval:
        if decision.interval is None:
            raise ValueError(f"{spec.kind.value} loss needs an interval decision")
        a, b = decision.interval
        tau = 0.5 * (b - a)
        if spec.kind is LossKind.INTERVAL_QUANTILE:
            out = spec.rho * tau + np.maximum(a - theta, 0.0) + np.maximum(theta - b, 0.0)
        else:
            m = 0.5 * (a + b)
            if tau == 0.0:
                if np.all(theta == m):
                    out = np.zeros_like(theta)
                else:
                    raise ValueError("degenerate interval (a == b) with theta != midpoint")
            else:
                out = spec.gamma * tau + (theta - m) ** 2 / tau
    else:
        if decision.point is None:
            raise ValueError(f"{spec.kind.value} loss needs a point decision")
        d = decision.point
        if spec.kind is LossKind.ABSOLUTE:
            out = np.abs(theta - d)
        else:
            out = (theta - d) ** 2
    return out if out.ndim else float(out)
