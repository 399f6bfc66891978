"""Closed-form inversion of the relative-loss curve and its sensitivities.

The central quantity is Y = target ** (-1/kappa), the accumulated-compute
multiple a target demands. Inverting R(t) = target gives

    t* = (1/gamma) * log2(1 + gamma * ln2 * (Y - 1))      for gamma > 0
    t* = Y - 1                                            for gamma = 0

Perturbing the baseline-compute identity by a factor (1 + tau) scales the
(Y - 1) term, which yields the exact first-order sensitivity
dt/dtau|0 = (Y - 1) / (1 + gamma * ln2 * (Y - 1)) -> 1/(gamma * ln2) as Y
grows.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import (
    LN2,
    UNDERFLOW_GAMMA_T,
    ScalingConfig,
    _check_nonnegative,
    _check_positive,
    delta_compute_ratio,
    relative_loss,
)
from .errors import InvalidArgumentError, UnreachableTargetError

# expm1 overflows just above 709.7; past this the +-1 terms are far below
# double-precision resolution and the asymptotic log form is exact.
_EXPM1_LIMIT = 700.0

BRANCH_EXPONENTIAL = "exponential"
BRANCH_STATIC = "static"


@dataclass(frozen=True)
class SolveResult:
    """A time-to-target answer with its re-evaluation residual."""

    time_to_target: float
    branch: str  # BRANCH_EXPONENTIAL (gamma > 0) or BRANCH_STATIC (gamma = 0)
    residual: float  # |R(t*) - target| from re-evaluating the curve
    target: float


def _check_target(target: float) -> float:
    target = _check_positive("target", target)
    if target > 1.0:
        raise InvalidArgumentError(f"target must be in (0, 1], got {target!r}")
    return target


def _log_compute_multiple(kappa: float, target: float) -> float:
    """ln(Y) = -ln(target)/kappa, the log of the required compute multiple."""
    return -math.log(target) / kappa


def perturbed_relative_loss(config: ScalingConfig, t: float, tau: float) -> float:
    """R(t) when the baseline compute identity is scaled by (1 + tau)."""
    if tau <= -1.0:
        raise InvalidArgumentError(f"tau must be > -1, got {tau!r}")
    t = _check_nonnegative("t", t)
    return (1.0 + delta_compute_ratio(config.gamma, t) / (1.0 + tau)) ** -config.kappa


def _solve(kappa: float, gamma: float, target: float, scale: float) -> float:
    """t* with the (Y - 1) term scaled by `scale`; overflow-safe in log space."""
    if target == 1.0:
        return 0.0
    x = _log_compute_multiple(kappa, target)
    if gamma == 0.0:
        if x > _EXPM1_LIMIT:
            raise UnreachableTargetError(
                f"target {target!r} needs a compute multiple beyond double precision"
            )
        return scale * math.expm1(x)
    g = gamma * LN2
    if x > _EXPM1_LIMIT:
        t = (x + math.log(scale * g)) / g
    else:
        t = math.log1p(scale * g * math.expm1(x)) / g
    if gamma * t > UNDERFLOW_GAMMA_T:
        raise UnreachableTargetError(
            f"target {target!r} lies below the representable relative-loss floor"
        )
    return t


def time_to_target(config: ScalingConfig, target: float) -> SolveResult:
    """Years until R(t) reaches `target`; target = 1 returns 0."""
    target = _check_target(target)
    t = _solve(config.kappa, config.gamma, target, 1.0)
    branch = BRANCH_STATIC if config.gamma == 0.0 else BRANCH_EXPONENTIAL
    return SolveResult(t, branch, abs(relative_loss(config, t) - target), target)


def time_to_target_perturbed(config: ScalingConfig, target: float, tau: float) -> SolveResult:
    """Time-to-target when effective baseline compute is scaled by (1 + tau)."""
    target = _check_target(target)
    if tau <= -1.0:
        raise InvalidArgumentError(f"tau must be > -1, got {tau!r}")
    if config.gamma == 0.0:
        raise InvalidArgumentError("perturbation analysis requires gamma > 0")
    t = _solve(config.kappa, config.gamma, target, 1.0 + tau)
    residual = abs(perturbed_relative_loss(config, t, tau) - target)
    return SolveResult(t, BRANCH_EXPONENTIAL, residual, target)


def sensitivity_slope(config: ScalingConfig, target: float) -> float:
    """Exact dt/dtau at tau = 0: (Y-1) / (1 + gamma*ln2*(Y-1))."""
    target = _check_target(target)
    if target == 1.0:
        raise InvalidArgumentError("sensitivity is undefined for target = 1 (zero-length solve)")
    if config.gamma == 0.0:
        raise InvalidArgumentError("sensitivity analysis requires gamma > 0")
    g = config.gamma * LN2
    x = _log_compute_multiple(config.kappa, target)
    if x > _EXPM1_LIMIT:
        return 1.0 / g
    return 1.0 / (g + 1.0 / math.expm1(x))


def slope_approximation(gamma: float) -> float:
    """Large-Y limit of the sensitivity slope: 1 / (gamma * ln 2)."""
    gamma = _check_positive("gamma", gamma)
    return 1.0 / (gamma * LN2)


def space_unfold_factor(kappa: float, target: float) -> float:
    """Required dC/C0 = Y - 1 to hit `target` within a single static year.

    Numerically identical to the gamma = 0 time-to-target in years; a fleet
    sized baseline_fleet * (1 + factor) reaches the target in year one.
    """
    kappa = _check_positive("kappa", kappa)
    target = _check_target(target)
    return _solve(kappa, 0.0, target, 1.0)


def horizon_grid(
    kappa: float, gammas: list[float], targets: list[float]
) -> list[list[float]]:
    """Matrix of time_to_target years, rows indexed by gamma, columns by target."""
    if not gammas or not targets:
        raise InvalidArgumentError("horizon grid needs at least one gamma and one target")
    return [
        [time_to_target(ScalingConfig(kappa=kappa, gamma=g), y).time_to_target for y in targets]
        for g in gammas
    ]
