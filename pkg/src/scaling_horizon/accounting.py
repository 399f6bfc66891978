"""Logical-compute accounting and compute-optimal allocation.

Logical compute is deliberately dense and full-precision: 6 * N * D FLOPs for
N parameters trained on D tokens, independent of sparsity or numeric-format
optimizations. Real-world speedups show up in fewer reference GPU-hours, so
"relative efficiency" (logical compute per H100-equivalent hour, normalized
to a baseline model) credits them without shrinking the compute measure.

The built-in DeepSeek-V3 / Llama 3 (405B) pair carries the logical-compute
figures exactly as published alongside the recomputed 6*N*D values; the two
disagree (the published table keeps one shared decimal scale), and the
published pair is what reproduces the well-known ~17x efficiency ratio. Both
are kept visible rather than silently overriding either side.
"""

from __future__ import annotations

import json
import warnings
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .core import _check_nonnegative, _check_positive
from .errors import InvalidArgumentError

YEAR_HOURS = 8760.0
DEFAULT_GPU_POWER_KW = 1.0
# H800 -> H100 hour conversion implied by the published pair 2.224M / 2.78M.
H800_TO_H100 = 0.8

ACCOUNT_FILE_KEYS = ("name", "params_n", "tokens_d", "gpu_hours", "equivalence_factor")
ACCOUNT_OPTIONAL_KEYS = ("per_gpu_power", "reported_logical_compute")


@dataclass(frozen=True)
class ModelAccount:
    """One training run: parameters, tokens, and native GPU-hours.

    equivalence_factor converts native hours to reference (H100) hours.
    reported_logical_compute, when set, is the externally published
    logical-compute figure and takes precedence over 6*N*D in efficiency
    ratios (the recomputation stays available via logical_compute()).
    """

    name: str
    params_n: float
    tokens_d: float
    gpu_hours: float
    equivalence_factor: float = 1.0
    per_gpu_power_kw: float | None = None
    reported_logical_compute: float | None = None

    def __post_init__(self) -> None:
        _check_positive("params_n", self.params_n)
        _check_positive("tokens_d", self.tokens_d)
        _check_positive("gpu_hours", self.gpu_hours)
        factor = _check_positive("equivalence_factor", self.equivalence_factor)
        if factor > 2.0:
            raise InvalidArgumentError(
                f"equivalence_factor {factor!r} fails the sanity bound (0, 2]"
            )
        if self.per_gpu_power_kw is not None:
            _check_positive("per_gpu_power_kw", self.per_gpu_power_kw)
        if self.reported_logical_compute is not None:
            _check_positive("reported_logical_compute", self.reported_logical_compute)


@dataclass(frozen=True)
class LossSurface:
    """L(N, D) = a * N**-alpha + b * D**-beta + e_floor."""

    a: float
    b: float
    alpha: float
    beta: float
    e_floor: float = 0.0

    def __post_init__(self) -> None:
        _check_positive("a", self.a)
        _check_positive("b", self.b)
        _check_positive("alpha", self.alpha)
        _check_positive("beta", self.beta)
        _check_nonnegative("e_floor", self.e_floor)

    def loss(self, params_n: float, tokens_d: float) -> float:
        return (
            self.a * params_n**-self.alpha + self.b * tokens_d**-self.beta + self.e_floor
        )


def logical_compute(params_n: float, tokens_d: float) -> float:
    """Dense full-precision training FLOPs: 6 * N * D."""
    params_n = _check_nonnegative("params_n", params_n)
    tokens_d = _check_nonnegative("tokens_d", tokens_d)
    return 6.0 * params_n * tokens_d


def account_logical_compute(account: ModelAccount) -> float:
    """Published figure when the account carries one, else 6 * N * D."""
    if account.reported_logical_compute is not None:
        return account.reported_logical_compute
    return logical_compute(account.params_n, account.tokens_d)


def reference_gpu_hours(account: ModelAccount) -> float:
    """Native GPU-hours converted to reference hardware."""
    return account.gpu_hours * account.equivalence_factor


def relative_efficiency(subject: ModelAccount, baseline: ModelAccount) -> float:
    """Logical compute per reference GPU-hour, normalized to the baseline."""
    subject_rate = account_logical_compute(subject) / reference_gpu_hours(subject)
    baseline_rate = account_logical_compute(baseline) / reference_gpu_hours(baseline)
    return subject_rate / baseline_rate


def mean_field_power(gpu_hours: float, per_gpu_power_kw: float, horizon_years: float) -> float:
    """Average power in MW when the run's energy is smoothed over the horizon."""
    gpu_hours = _check_positive("gpu_hours", gpu_hours)
    per_gpu_power_kw = _check_positive("per_gpu_power_kw", per_gpu_power_kw)
    horizon_years = _check_positive("horizon_years", horizon_years)
    return gpu_hours * per_gpu_power_kw / (horizon_years * YEAR_HOURS * 1000.0)


def peak_power_mw(gpu_count: float, per_gpu_power_kw: float = DEFAULT_GPU_POWER_KW) -> float:
    """Instantaneous draw of a fleet in MW."""
    gpu_count = _check_positive("gpu_count", gpu_count)
    per_gpu_power_kw = _check_positive("per_gpu_power_kw", per_gpu_power_kw)
    return gpu_count * per_gpu_power_kw / 1000.0


def kappa_from_exponents(alpha: float, beta: float) -> float:
    """The conventional kappa attributed to a balanced surface: alpha / (alpha + beta).

    This ratio is the compute-optimal token exponent (D* grows as
    C**(alpha/(alpha+beta))). The loss-vs-compute slope of the same surface
    is alpha*beta/(alpha+beta); optimal_loss_exponent_check measures that one
    directly.

    Complement pairs must sum to exactly 1, so the larger share is derived
    from the smaller one instead of rounding both divisions independently.
    """
    alpha = _check_positive("alpha", alpha)
    beta = _check_nonnegative("beta", beta)
    s = alpha + beta
    if alpha >= beta:
        return 1.0 - beta / s
    return alpha / s


def optimal_allocation(surface: LossSurface, compute_c: float) -> tuple[float, float]:
    """Minimize surface loss subject to 6 * N * D = C.

    Closed form from the stationarity condition alpha*a*N**-alpha =
    beta*b*D**-beta:

        N* = ((alpha*a) / (beta*b)) ** (1/(alpha+beta)) * K ** (beta/(alpha+beta))
        D* = K / N*,   K = C / 6
    """
    compute_c = _check_positive("compute_c", compute_c)
    k = compute_c / 6.0
    s = surface.alpha + surface.beta
    n_star = ((surface.alpha * surface.a) / (surface.beta * surface.b)) ** (1.0 / s) * k ** (
        surface.beta / s
    )
    return n_star, k / n_star


def optimal_loss_exponent_check(surface: LossSurface, c_grid: list[float]) -> float:
    """Fit |d log L* / d log C| over compute-optimal allocations.

    For a zero-floor surface both optimal terms scale identically, so the
    fitted magnitude equals alpha*beta/(alpha+beta). Requires a grid spanning
    at least 3 decades; a nonzero loss floor biases the fit at large compute
    and is flagged with a warning rather than rejected.
    """
    if len(c_grid) < 2:
        raise InvalidArgumentError("exponent fit needs at least two compute values")
    for c in c_grid:
        _check_positive("compute_c", c)
    if max(c_grid) / min(c_grid) < 1e3:
        raise InvalidArgumentError("exponent fit needs a compute grid spanning >= 3 decades")
    if surface.e_floor > 0.0:
        warnings.warn(
            "nonzero loss floor flattens L(C) at large compute; fitted exponent is biased",
            stacklevel=2,
        )
    losses = [surface.loss(*optimal_allocation(surface, c)) for c in c_grid]
    slope = np.polyfit(np.log10(c_grid), np.log10(losses), 1)[0]
    return float(abs(slope))


DEEPSEEK_V3 = ModelAccount(
    name="DeepSeek-V3",
    params_n=671e9,
    tokens_d=14.8e12,
    gpu_hours=2.78e6,
    equivalence_factor=H800_TO_H100,
    reported_logical_compute=5.95e15,
)

LLAMA3_405B = ModelAccount(
    name="Llama 3 (405B)",
    params_n=405e9,
    tokens_d=2.0e12,
    gpu_hours=30.84e6,
    equivalence_factor=1.0,
    reported_logical_compute=4.86e15,
)

BUILTIN_PAIRS = {"deepseek-llama": (DEEPSEEK_V3, LLAMA3_405B)}


def builtin_pair(key: str = "deepseek-llama") -> tuple[ModelAccount, ModelAccount]:
    """(subject, baseline) accounts for a named built-in comparison."""
    try:
        return BUILTIN_PAIRS[key]
    except KeyError:
        raise InvalidArgumentError(
            f"unknown builtin pair {key!r}; valid: {', '.join(sorted(BUILTIN_PAIRS))}"
        ) from None


def account_table(accounts: list[ModelAccount]) -> list[dict]:
    """Table rows with derived columns; the last account is the efficiency
    baseline, normalized to 1.0."""
    if not accounts:
        raise InvalidArgumentError("account table needs at least one account")
    baseline = accounts[-1]
    rows = []
    for account in accounts:
        rows.append(
            {
                "name": account.name,
                "params_n": account.params_n,
                "tokens_d": account.tokens_d,
                "logical_compute_flops": logical_compute(account.params_n, account.tokens_d),
                "reference_gpu_hours": reference_gpu_hours(account),
                "relative_efficiency": relative_efficiency(account, baseline),
            }
        )
    return rows


def parse_account(raw: object, source: str = "account") -> ModelAccount:
    """Validate one model-account JSON object; unknown keys rejected."""
    if not isinstance(raw, dict):
        raise InvalidArgumentError(f"{source}: expected a JSON object, got {type(raw).__name__}")
    allowed = set(ACCOUNT_FILE_KEYS) | set(ACCOUNT_OPTIONAL_KEYS)
    for key in raw:
        if key not in allowed:
            raise InvalidArgumentError(f"{source}: unknown key {key!r}")
    if "name" not in raw or not isinstance(raw["name"], str):
        raise InvalidArgumentError(f"{source}: 'name' must be a string")

    def number(key: str, default: float | None = None) -> float | None:
        if key not in raw:
            if default is not None or key in ACCOUNT_OPTIONAL_KEYS:
                return default
            raise InvalidArgumentError(f"{source}: missing key {key!r}")
        value = raw[key]
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise InvalidArgumentError(f"{source}: {key!r} must be a number")
        return float(value)

    return ModelAccount(
        name=raw["name"],
        params_n=number("params_n"),
        tokens_d=number("tokens_d"),
        gpu_hours=number("gpu_hours"),
        equivalence_factor=number("equivalence_factor", 1.0),
        per_gpu_power_kw=number("per_gpu_power"),
        reported_logical_compute=number("reported_logical_compute"),
    )


def load_accounts_file(path: str | Path) -> list[ModelAccount]:
    """Load a JSON account object or array of them."""
    raw = json.loads(Path(path).read_text(encoding="utf-8"))
    if isinstance(raw, dict):
        return [parse_account(raw, source=str(path))]
    if not isinstance(raw, list):
        raise InvalidArgumentError(f"{path}: expected a JSON object or array of objects")
    if not raw:
        raise InvalidArgumentError(f"{path}: empty account list")
    return [parse_account(item, source=f"{path}[{i}]") for i, item in enumerate(raw)]
