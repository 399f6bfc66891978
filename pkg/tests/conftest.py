"""Shared independent oracles for the numerical test suite.

The root-finders here invert curves by bracketing and bisection only; they
never touch the closed-form inversions they are used to check. Compute
accumulation is cross-checked separately against adaptive quadrature, which
closes the loop on the curve evaluation itself.
"""

from __future__ import annotations

import math

from scipy.integrate import quad

from scaling_horizon import ScalingConfig, relative_loss
from scaling_horizon.solvers import perturbed_relative_loss


def quad_compute_ratio(gamma: float, t: float) -> float:
    """Numerical integral of 2**(gamma*u) over [0, t]."""
    value, _ = quad(lambda u: 2.0 ** (gamma * u), 0.0, t, epsabs=0.0, epsrel=1e-12, limit=400)
    return value


def bisect_time_to_target(
    kappa: float, gamma: float, target: float, tau: float | None = None
) -> float:
    """Bracketing bisection for R(t) = target, to float resolution."""
    config = ScalingConfig(kappa=kappa, gamma=gamma)
    if tau is None:
        f = lambda t: relative_loss(config, t) - target
    else:
        f = lambda t: perturbed_relative_loss(config, t, tau) - target
    if f(0.0) <= 0.0:
        return 0.0
    lo, hi = 0.0, 1.0
    while f(hi) > 0.0:
        lo, hi = hi, hi * 2.0
    while True:
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi:
            break
        if f(mid) > 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def fit_log2_slope(ts: list[float], values: list[float]) -> float:
    """Least-squares slope of -log2(values) against ts."""
    n = len(ts)
    ys = [-math.log2(v) for v in values]
    mean_t = sum(ts) / n
    mean_y = sum(ys) / n
    num = sum((t - mean_t) * (y - mean_y) for t, y in zip(ts, ys))
    den = sum((t - mean_t) ** 2 for t in ts)
    return num / den
