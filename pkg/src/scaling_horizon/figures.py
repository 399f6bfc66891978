"""Data series behind the three reference figures.

Rendering is left to callers (CLI emits CSV, the explorer UI draws its own
charts); these builders only produce rows. Grids that the source material
does not pin down are fixed here as documented defaults.
"""

from __future__ import annotations

from .core import ScalingConfig, sample_trajectory
from .errors import InvalidArgumentError
from .solvers import time_to_target, time_to_target_perturbed

# Figure 1: relative-loss curve family. Five doubling rates at the
# LLM-typical exponent plus the classic transistor-scaling analogue, over a
# window that shows the gamma = 0.5 threshold crossing near 20 years.
FIG1_CURVES = [
    (0.048, 0.0),
    (0.048, 0.5),
    (0.048, 1.0),
    (0.048, 2.0),
    (0.048, 3.0),
    (0.4, 0.5),
]
FIG1_T_MAX = 25.0
FIG1_SAMPLES = 251
FIG1_REFERENCE = 0.68  # ~50% token-prediction probability at l0 = 1

# Figure 2: time-to-target vs. baseline perturbation tau; default grid
# (documented choice, not externally pinned).
FIG2_GAMMAS = [0.5, 1.0, 2.0, 3.0]
FIG2_KAPPA = 0.048
FIG2_TARGET = 0.68
FIG2_TAU_MIN = -0.9
FIG2_TAU_MAX = 2.0
FIG2_SAMPLES = 59

# Figure 3: time horizons vs. doubling rate for a band of targets.
FIG3_KAPPA = 0.048
FIG3_TARGETS = [0.5, 0.6, 0.7, 0.8, 0.9]
FIG3_GAMMA_MIN = 0.25
FIG3_GAMMA_MAX = 4.0
FIG3_GAMMA_STEP = 0.25


def _series_label(kappa: float, gamma: float) -> str:
    return f"k{kappa:g}_g{gamma:g}"


def figure1_rows() -> list[dict]:
    rows = []
    for kappa, gamma in FIG1_CURVES:
        series = sample_trajectory(ScalingConfig(kappa=kappa, gamma=gamma), FIG1_T_MAX, FIG1_SAMPLES)
        label = _series_label(kappa, gamma)
        for point in series.points:
            rows.append(
                {
                    "series": label,
                    "t_years": point.t_years,
                    "relative_loss": point.relative_loss,
                    "reference": FIG1_REFERENCE,
                }
            )
    return rows


def figure2_rows() -> list[dict]:
    rows = []
    for gamma in FIG2_GAMMAS:
        config = ScalingConfig(kappa=FIG2_KAPPA, gamma=gamma)
        for i in range(FIG2_SAMPLES):
            tau = FIG2_TAU_MIN + i * (FIG2_TAU_MAX - FIG2_TAU_MIN) / (FIG2_SAMPLES - 1)
            solved = time_to_target_perturbed(config, FIG2_TARGET, tau)
            rows.append(
                {
                    "series": f"g{gamma:g}",
                    "tau": tau,
                    "time_to_target_years": solved.time_to_target,
                }
            )
    return rows


def figure3_rows() -> list[dict]:
    rows = []
    steps = round((FIG3_GAMMA_MAX - FIG3_GAMMA_MIN) / FIG3_GAMMA_STEP)
    gammas = [FIG3_GAMMA_MIN + i * FIG3_GAMMA_STEP for i in range(steps + 1)]
    for target in FIG3_TARGETS:
        for gamma in gammas:
            config = ScalingConfig(kappa=FIG3_KAPPA, gamma=gamma)
            rows.append(
                {
                    "series": f"y{target:g}",
                    "gamma": gamma,
                    "time_to_target_years": time_to_target(config, target).time_to_target,
                }
            )
    return rows


def figure_rows(figure_id: int) -> list[dict]:
    builders = {1: figure1_rows, 2: figure2_rows, 3: figure3_rows}
    try:
        return builders[figure_id]()
    except KeyError:
        raise InvalidArgumentError(f"unknown figure id {figure_id!r}; valid: 1, 2, 3") from None
