"""Closed-form relative-loss dynamics under compounding efficiency growth.

Everything here is a pure function of its inputs. Efficiency doubles at an
annual rate ``gamma``, cumulative compute accumulates as the integral of that
growth, and loss follows a power law with exponent ``kappa`` in the
accumulated-compute ratio:

    R(t) = (1 + (2**(gamma*t) - 1) / (gamma * ln 2)) ** -kappa

with the gamma = 0 limit reducing to the static form (1 + t) ** -kappa.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .errors import InvalidArgumentError

LN2 = math.log(2.0)

# Past this point 2**(gamma*t) dwarfs double precision; the relative loss is
# clamped to exactly 0 and flagged rather than surfacing subnormal noise.
UNDERFLOW_GAMMA_T = 1000.0


def _check_finite(name: str, value: float) -> float:
    value = float(value)
    if not math.isfinite(value):
        raise InvalidArgumentError(f"{name} must be finite, got {value!r}")
    return value


def _check_positive(name: str, value: float) -> float:
    value = _check_finite(name, value)
    if value <= 0.0:
        raise InvalidArgumentError(f"{name} must be > 0, got {value!r}")
    return value


def _check_nonnegative(name: str, value: float) -> float:
    value = _check_finite(name, value)
    if value < 0.0:
        raise InvalidArgumentError(f"{name} must be >= 0, got {value!r}")
    return value


@dataclass(frozen=True)
class ScalingConfig:
    """The (kappa, gamma) pair plus optional baseline anchors.

    kappa: unitless scaling exponent (loss vs. cumulative compute), > 0.
    gamma: annual efficiency-doubling rate in 1/years, >= 0 (0 = static).
    l0:    baseline loss in nats/token, > 0.
    e0:    baseline efficiency in PFLOPs/(year*MW), > 0 when given.
    p0:    mean-field power in MW, > 0 when given.
    """

    kappa: float
    gamma: float
    l0: float = 1.0
    e0: float | None = None
    p0: float | None = None

    def __post_init__(self) -> None:
        _check_positive("kappa", self.kappa)
        _check_nonnegative("gamma", self.gamma)
        _check_positive("l0", self.l0)
        if self.e0 is not None:
            _check_positive("e0", self.e0)
        if self.p0 is not None:
            _check_positive("p0", self.p0)


class TrajectoryPoint(NamedTuple):
    t_years: float
    relative_loss: float
    loss: float
    underflow: bool = False


@dataclass(frozen=True)
class TrajectorySeries:
    """Sampled (t, R(t), L(t)) points for one config, t strictly increasing."""

    points: list[TrajectoryPoint]
    config: ScalingConfig


def efficiency_at(e0: float, gamma: float, t: float) -> float:
    """Efficiency after t years of doubling at rate gamma: e0 * 2**(gamma*t)."""
    e0 = _check_positive("e0", e0)
    gamma = _check_nonnegative("gamma", gamma)
    t = _check_nonnegative("t", t)
    x = gamma * t
    if x * LN2 > 709.0:  # exp overflow threshold for float64
        raise InvalidArgumentError(
            f"efficiency growth overflows double precision at gamma*t = {x!r}"
        )
    return e0 * 2.0**x


def delta_compute_ratio(gamma: float, t: float) -> float:
    """Accumulated-compute ratio dC(t)/C0 = (2**(gamma*t) - 1) / (gamma*ln 2).

    Returns exactly t for gamma = 0 and stays continuous across that branch:
    the numerator is evaluated through expm1, so tiny gamma*t never cancels.
    """
    gamma = _check_nonnegative("gamma", gamma)
    t = _check_nonnegative("t", t)
    if gamma == 0.0:
        return t
    x = gamma * t * LN2
    if x > 709.0:
        raise InvalidArgumentError(
            f"compute accumulation overflows double precision at gamma*t = {gamma * t!r}"
        )
    return math.expm1(x) / (gamma * LN2)


class LossEval(NamedTuple):
    """Relative loss plus an explicit flag for the deep-underflow clamp."""

    relative_loss: float
    underflow: bool


def relative_loss_eval(config: ScalingConfig, t: float) -> LossEval:
    """relative_loss with the clamp made visible; R(0) = 1 exactly."""
    t = _check_nonnegative("t", t)
    if config.gamma * t > UNDERFLOW_GAMMA_T:
        return LossEval(0.0, True)
    return LossEval((1.0 + delta_compute_ratio(config.gamma, t)) ** -config.kappa, False)


def relative_loss(config: ScalingConfig, t: float) -> float:
    """R(t) = (1 + dC(t)/C0) ** -kappa; equals 1 at t = 0, decreasing in t."""
    return relative_loss_eval(config, t).relative_loss


def loss_at(config: ScalingConfig, t: float) -> float:
    """Absolute loss L(t) = l0 * R(t) in nats/token."""
    return config.l0 * relative_loss(config, t)


def static_relative_loss(kappa: float, t: float) -> float:
    """The gamma = 0 limit: R(t) = (1 + t) ** -kappa."""
    kappa = _check_positive("kappa", kappa)
    t = _check_nonnegative("t", t)
    return (1.0 + t) ** -kappa


def asymptotic_halving_time(config: ScalingConfig) -> float:
    """Large-t halving time of R: R ~ 2**(-kappa*gamma*t), so 1/(kappa*gamma)."""
    if config.gamma == 0.0:
        raise InvalidArgumentError(
            "asymptotic halving time requires gamma > 0 (no exponential regime at gamma = 0)"
        )
    return 1.0 / (config.kappa * config.gamma)


def sample_trajectory(config: ScalingConfig, t_max: float, n: int) -> TrajectorySeries:
    """n evenly spaced (t, R, L) samples on [0, t_max]."""
    t_max = _check_positive("t_max", t_max)
    if n < 2:
        raise InvalidArgumentError(f"need at least 2 samples, got {n}")
    points = []
    for i in range(n):
        t = t_max if i == n - 1 else i * t_max / (n - 1)
        r, under = relative_loss_eval(config, t)
        points.append(TrajectoryPoint(t, r, config.l0 * r, under))
    return TrajectorySeries(points, config)
