"""Stateless HTTP JSON API wrapping the library for the explorer UI.

Every response body is {"schema_version": "1", "result": ...} on success or
{"schema_version": "1", "error": {"code", "message"}} on failure, with error
codes drawn from a closed set: invalid_argument, unreachable_target,
malformed_body. Handlers are pure functions of the request body; numbers come
from the same library calls the CLI uses, serialized at full float precision.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel, ConfigDict, Field

from .accounting import (
    BUILTIN_PAIRS,
    ModelAccount,
    account_logical_compute,
    logical_compute,
    reference_gpu_hours,
    relative_efficiency,
)
from .core import ScalingConfig, TrajectorySeries, relative_loss_eval
from .errors import InvalidArgumentError, ScalingError, UnreachableTargetError
from .scenarios import PaperReported, Scenario, compare, presets, scenario_to_dict
from .solvers import (
    sensitivity_slope,
    slope_approximation,
    time_to_target,
    time_to_target_perturbed,
)

SCHEMA_VERSION = "1"
MAX_BODY_BYTES = 1 << 20  # 1 MiB
MAX_SCENARIOS = 100
MAX_GRID_POINTS = 10_000

CODE_INVALID_ARGUMENT = "invalid_argument"
CODE_UNREACHABLE_TARGET = "unreachable_target"
CODE_MALFORMED_BODY = "malformed_body"


class EvaluateRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    kappa: float
    gamma: float
    l0: float = 1.0
    t: list[float] = Field(min_length=1, max_length=MAX_GRID_POINTS)


class SolveRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    kappa: float
    gamma: float
    target: float
    tau: float | None = None
    tau_grid: list[float] | None = Field(default=None, min_length=1, max_length=256)
    l0: float = 1.0


class PaperReportedModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    l0: float
    relative_loss: float
    time_years: float


class ScenarioModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    name: str
    initial_fleet: int
    baseline_fleet: int
    gamma: float
    kappa: float
    l_init: float
    target_loss: float
    # Round-trips from GET /v1/scenarios/presets so a client can ask for
    # published-figure comparisons without the server holding state.
    paper_reported: PaperReportedModel | None = None

    def to_scenario(self) -> Scenario:
        reported = None
        if self.paper_reported is not None:
            reported = PaperReported(
                l0=self.paper_reported.l0,
                relative_loss=self.paper_reported.relative_loss,
                time_years=self.paper_reported.time_years,
            )
        return Scenario(
            name=self.name,
            initial_fleet=self.initial_fleet,
            baseline_fleet=self.baseline_fleet,
            gamma=self.gamma,
            kappa=self.kappa,
            l_init=self.l_init,
            target_loss=self.target_loss,
            paper_reported=reported,
        )


class CompareRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    scenarios: list[ScenarioModel] = Field(min_length=1, max_length=MAX_SCENARIOS)
    target: float | None = None
    paper_values: bool = False


class AccountModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    name: str
    params_n: float
    tokens_d: float
    gpu_hours: float
    equivalence_factor: float = 1.0
    per_gpu_power: float | None = None
    reported_logical_compute: float | None = None

    def to_account(self) -> ModelAccount:
        return ModelAccount(
            name=self.name,
            params_n=self.params_n,
            tokens_d=self.tokens_d,
            gpu_hours=self.gpu_hours,
            equivalence_factor=self.equivalence_factor,
            per_gpu_power_kw=self.per_gpu_power,
            reported_logical_compute=self.reported_logical_compute,
        )


class EfficiencyRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    subject: AccountModel
    baseline: AccountModel


def _ok(result: object) -> JSONResponse:
    return JSONResponse({"schema_version": SCHEMA_VERSION, "result": result})


def _error(status: int, code: str, message: str) -> JSONResponse:
    return JSONResponse(
        {"schema_version": SCHEMA_VERSION, "error": {"code": code, "message": message}},
        status_code=status,
    )


def _trajectory_json(series: TrajectorySeries) -> dict:
    return {
        "points": [
            {
                "t_years": p.t_years,
                "relative_loss": p.relative_loss,
                "loss": p.loss,
                "underflow": p.underflow,
            }
            for p in series.points
        ]
    }


def _account_row(account: ModelAccount) -> dict:
    return {
        "name": account.name,
        "params_n": account.params_n,
        "tokens_d": account.tokens_d,
        "logical_compute": logical_compute(account.params_n, account.tokens_d),
        "effective_logical_compute": account_logical_compute(account),
        "reference_gpu_hours": reference_gpu_hours(account),
    }


def _account_json(account: ModelAccount) -> dict:
    return {
        "name": account.name,
        "params_n": account.params_n,
        "tokens_d": account.tokens_d,
        "gpu_hours": account.gpu_hours,
        "equivalence_factor": account.equivalence_factor,
        "per_gpu_power": account.per_gpu_power_kw,
        "reported_logical_compute": account.reported_logical_compute,
    }


def _paper_reported_json(reported: PaperReported | None) -> dict | None:
    if reported is None:
        return None
    return {
        "l0": reported.l0,
        "relative_loss": reported.relative_loss,
        "time_years": reported.time_years,
    }


def create_app(cors_allow: bool = True) -> FastAPI:
    app = FastAPI(title="scaling-horizon", docs_url=None, redoc_url=None, openapi_url=None)

    if cors_allow:
        app.add_middleware(
            CORSMiddleware,
            allow_origins=["*"],
            allow_methods=["*"],
            allow_headers=["*"],
        )

    @app.middleware("http")
    async def limit_body_size(request: Request, call_next):
        length = request.headers.get("content-length")
        if length is not None and length.isdigit() and int(length) > MAX_BODY_BYTES:
            return _error(400, CODE_MALFORMED_BODY, "request body exceeds 1 MiB")
        return await call_next(request)

    @app.exception_handler(RequestValidationError)
    async def on_validation_error(request: Request, exc: RequestValidationError):
        parts = []
        for err in exc.errors():
            loc = ".".join(str(piece) for piece in err.get("loc", ()) if piece != "body")
            parts.append(f"{loc}: {err.get('msg')}" if loc else str(err.get("msg")))
        return _error(400, CODE_MALFORMED_BODY, "; ".join(parts) or "malformed request body")

    @app.exception_handler(UnreachableTargetError)
    async def on_unreachable(request: Request, exc: UnreachableTargetError):
        return _error(422, CODE_UNREACHABLE_TARGET, str(exc))

    @app.exception_handler(ScalingError)
    async def on_domain_error(request: Request, exc: ScalingError):
        return _error(422, CODE_INVALID_ARGUMENT, str(exc))

    @app.get("/v1/health")
    async def health():
        return {"status": "ok"}

    @app.post("/v1/evaluate")
    async def evaluate(body: EvaluateRequest):
        config = ScalingConfig(kappa=body.kappa, gamma=body.gamma, l0=body.l0)
        points = []
        for t in body.t:
            value, underflow = relative_loss_eval(config, t)
            points.append(
                {
                    "t_years": t,
                    "relative_loss": value,
                    "loss": config.l0 * value,
                    "underflow": underflow,
                }
            )
        return _ok(
            {
                "config": {"kappa": config.kappa, "gamma": config.gamma, "l0": config.l0},
                "points": points,
            }
        )

    @app.post("/v1/solve")
    async def solve(body: SolveRequest):
        config = ScalingConfig(kappa=body.kappa, gamma=body.gamma, l0=body.l0)
        if body.tau is None:
            result = time_to_target(config, body.target)
        else:
            result = time_to_target_perturbed(config, body.target, body.tau)

        slope = approx = None
        if config.gamma > 0.0 and 0.0 < body.target < 1.0:
            slope = sensitivity_slope(config, body.target)
            approx = slope_approximation(config.gamma)

        perturbed = None
        if body.tau_grid is not None:
            perturbed = [
                {
                    "tau": tau,
                    "time_to_target_years": time_to_target_perturbed(
                        config, body.target, tau
                    ).time_to_target,
                }
                for tau in body.tau_grid
            ]

        return _ok(
            {
                "time_to_target_years": result.time_to_target,
                "branch": result.branch,
                "residual": result.residual,
                "target": result.target,
                "tau": body.tau,
                "sensitivity_slope": slope,
                "slope_approximation": approx,
                "perturbed": perturbed,
            }
        )

    @app.get("/v1/scenarios/presets")
    async def scenario_presets():
        result = []
        for scenario in presets():
            key = scenario.name.lower().replace(" ", "-")
            result.append(
                {
                    "key": key,
                    "scenario": scenario_to_dict(scenario),
                    "paper_reported": _paper_reported_json(scenario.paper_reported),
                }
            )
        return _ok(result)

    @app.post("/v1/scenarios/compare")
    async def scenarios_compare(body: CompareRequest):
        rows = compare(
            [model.to_scenario() for model in body.scenarios],
            common_target=body.target,
            paper_values=body.paper_values,
        )
        return _ok(
            {
                "rows": [
                    {
                        "name": r.scenario.name,
                        "initial_fleet": r.scenario.initial_fleet,
                        "baseline_fleet": r.scenario.baseline_fleet,
                        "gamma": r.scenario.gamma,
                        "kappa": r.scenario.kappa,
                        "l0": r.l0,
                        "required_ratio": r.required_ratio,
                        "target_loss": r.target_loss,
                        "time_to_target_years": r.time_to_target,
                        "target_met_in_first_year": r.target_met_in_first_year,
                        "fleet_requirement": r.fleet_requirement,
                        "paper_values_used": r.paper_values_used,
                        "paper_reported": _paper_reported_json(r.paper_reported),
                        "trajectory": _trajectory_json(r.trajectory),
                    }
                    for r in rows
                ]
            }
        )

    @app.post("/v1/accounting/relative-efficiency")
    async def accounting_relative_efficiency(body: EfficiencyRequest):
        subject = body.subject.to_account()
        baseline = body.baseline.to_account()
        return _ok(
            {
                "ratio": relative_efficiency(subject, baseline),
                "subject": _account_row(subject),
                "baseline": _account_row(baseline),
            }
        )

    @app.get("/v1/accounting/builtin")
    async def accounting_builtin(pair: str = "deepseek-llama"):
        if pair not in BUILTIN_PAIRS:
            raise InvalidArgumentError(
                f"unknown builtin pair {pair!r}; valid: {', '.join(sorted(BUILTIN_PAIRS))}"
            )
        subject, baseline = BUILTIN_PAIRS[pair]
        return _ok(
            {
                "accounts": [_account_json(subject), _account_json(baseline)],
                "ratio": relative_efficiency(subject, baseline),
                "subject": _account_row(subject),
                "baseline": _account_row(baseline),
            }
        )

    return app
