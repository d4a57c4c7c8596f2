"""Regression of accuracy against log(n/m) and its inversion.

The fitted law is ``accuracy = c0 * ln(n/m) + c1`` (natural log; the
constants absorb any base change).  With c0 > 0 the law inverts to a
recommended target dimension ``ceil(m * exp((target - c1) / c0))``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import DegenerateDesign, InsufficientSamples, NonPositiveSlope


@dataclass(frozen=True)
class FitResult:
    c0: float
    c1: float
    r_squared: float
    n_points: int


@dataclass(frozen=True)
class Recommendation:
    target_accuracy: float
    m: int
    recommended_dim: int
    clamped: bool


def fit_law(samples: Sequence[tuple[int, int, float]]) -> FitResult:
    """Ordinary least squares of accuracy on ln(n/m).

    ``samples`` are (n, m, accuracy) triples with n >= 1 and m >= n;
    at least two distinct n/m ratios are required.
    """
    if len(samples) < 2:
        raise InsufficientSamples(f"need >= 2 samples, got {len(samples)}")
    n = np.array([s[0] for s in samples], dtype=np.float64)
    m = np.array([s[1] for s in samples], dtype=np.float64)
    acc = np.array([s[2] for s in samples], dtype=np.float64)
    if np.any(n < 1) or np.any(m < n):
        raise ValueError("samples must satisfy 1 <= n <= m")
    log_ratio = np.log(n / m)
    if np.ptp(log_ratio) == 0:
        raise DegenerateDesign("all samples share one n/m ratio")
    c0, c1 = np.polyfit(log_ratio, acc, deg=1)
    residuals = acc - (c0 * log_ratio + c1)
    ss_res = float((residuals**2).sum())
    ss_tot = float(((acc - acc.mean()) ** 2).sum())
    # with an intercept, ss_tot = 0 forces ss_res = 0 up to rounding
    r_squared = 1.0 if ss_tot == 0 else 1.0 - ss_res / ss_tot
    return FitResult(c0=float(c0), c1=float(c1), r_squared=r_squared, n_points=len(samples))


def predict_accuracy(fit: FitResult, n: int, m: int, clamp: bool = True) -> float:
    """Accuracy the fitted law predicts at ratio n/m (clamped for display)."""
    a = fit.c0 * math.log(n / m) + fit.c1
    return min(1.0, max(0.0, a)) if clamp else a


def recommend_dim(
    fit: FitResult, target_accuracy: float, m: int, max_dim: int
) -> Recommendation:
    """Smallest integer dimension the fitted law says reaches the target.

    The raw value ``m * exp((target - c1) / c0)`` is rounded up and
    clamped into [1, min(m - 1, max_dim)].
    """
    if not 0 < target_accuracy <= 1:
        raise ValueError(f"target_accuracy must be in (0, 1], got {target_accuracy}")
    if m < 2 or max_dim < 1:
        raise ValueError("need m >= 2 and max_dim >= 1")
    if fit.c0 <= 0:
        raise NonPositiveSlope(f"fitted slope c0 = {fit.c0} is not positive")
    raw = m * math.exp((target_accuracy - fit.c1) / fit.c0)
    dim = math.ceil(raw)
    clamped_dim = min(max(dim, 1), min(m - 1, max_dim))
    return Recommendation(
        target_accuracy=target_accuracy,
        m=m,
        recommended_dim=clamped_dim,
        clamped=(clamped_dim != dim),
    )
