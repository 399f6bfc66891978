"""Time- and efficiency-aware scaling-law planning.

Evaluate relative-loss curves under compounding efficiency growth, invert
them for time-to-target, compare front-load-vs-efficiency scenarios, and
account for logical compute across training runs.
"""

from .accounting import (
    DEEPSEEK_V3,
    LLAMA3_405B,
    LossSurface,
    ModelAccount,
    account_table,
    builtin_pair,
    kappa_from_exponents,
    logical_compute,
    mean_field_power,
    optimal_allocation,
    optimal_loss_exponent_check,
    peak_power_mw,
    reference_gpu_hours,
    relative_efficiency,
)
from .core import (
    ScalingConfig,
    TrajectoryPoint,
    TrajectorySeries,
    asymptotic_halving_time,
    delta_compute_ratio,
    efficiency_at,
    loss_at,
    relative_loss,
    relative_loss_eval,
    sample_trajectory,
    static_relative_loss,
)
from .errors import InvalidArgumentError, ScalingError, UnreachableTargetError
from .scenarios import (
    PaperReported,
    Scenario,
    ScenarioResult,
    compare,
    initial_loss,
    presets,
    run_scenario,
)
from .solvers import (
    SolveResult,
    horizon_grid,
    sensitivity_slope,
    slope_approximation,
    space_unfold_factor,
    time_to_target,
    time_to_target_perturbed,
)

__version__ = "0.1.0"

__all__ = [
    "DEEPSEEK_V3",
    "LLAMA3_405B",
    "InvalidArgumentError",
    "LossSurface",
    "ModelAccount",
    "PaperReported",
    "ScalingConfig",
    "ScalingError",
    "Scenario",
    "ScenarioResult",
    "SolveResult",
    "TrajectoryPoint",
    "TrajectorySeries",
    "UnreachableTargetError",
    "account_table",
    "asymptotic_halving_time",
    "builtin_pair",
    "compare",
    "delta_compute_ratio",
    "efficiency_at",
    "horizon_grid",
    "initial_loss",
    "kappa_from_exponents",
    "logical_compute",
    "loss_at",
    "mean_field_power",
    "optimal_allocation",
    "optimal_loss_exponent_check",
    "peak_power_mw",
    "presets",
    "reference_gpu_hours",
    "relative_efficiency",
    "relative_loss",
    "relative_loss_eval",
    "run_scenario",
    "sample_trajectory",
    "sensitivity_slope",
    "slope_approximation",
    "space_unfold_factor",
    "static_relative_loss",
    "time_to_target",
    "time_to_target_perturbed",
]
