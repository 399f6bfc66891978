"""Command-line front end.

Thin wrappers over the library: evaluate curves, invert them for
time-to-target, run and compare scenarios, emit figure data series, print
accounting tables, and launch the HTTP service.

Exit codes: 0 success, 1 domain/computation error, 2 usage error.
"""

from __future__ import annotations

import json
import os
from contextlib import contextmanager

import click

from . import figures
from .accounting import account_table, builtin_pair, load_accounts_file
from .core import ScalingConfig, relative_loss_eval, sample_trajectory
from .errors import ScalingError
from .render import (
    FORMAT_CSV,
    FORMAT_JSON,
    FORMAT_TEXT,
    OutputEnvelope,
    emit_record,
    emit_table,
)
from .scenarios import (
    ScenarioResult,
    compare,
    load_scenario_file,
    load_scenarios_file,
    preset_index,
    scenario_to_dict,
)
from .solvers import (
    sensitivity_slope,
    slope_approximation,
    time_to_target,
    time_to_target_perturbed,
)

PRESET_DIR_ENV = "SCALING_HORIZON_PRESET_DIR"

EVAL_COLUMNS = ["t_years", "relative_loss", "loss"]
SCENARIO_COLUMNS = [
    "name",
    "initial_gpus",
    "gamma",
    "l0",
    "required_r",
    "time_yrs",
    "fleet_req",
    "paper_l0",
    "paper_r",
    "paper_time_yrs",
    "note",
]
ACCOUNT_COLUMNS = [
    "name",
    "params_n",
    "tokens_d",
    "logical_compute_flops",
    "reference_gpu_hours",
    "relative_efficiency",
]
FIGURE_COLUMNS = {
    1: ["series", "t_years", "relative_loss", "reference"],
    2: ["series", "tau", "time_to_target_years"],
    3: ["series", "gamma", "time_to_target_years"],
}


@contextmanager
def _domain_errors():
    try:
        yield
    except ScalingError as exc:
        raise click.ClickException(str(exc)) from exc
    except json.JSONDecodeError as exc:
        raise click.ClickException(
            f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from exc


def _output_options(default_format: str = FORMAT_TEXT):
    def wrap(f):
        f = click.option(
            "--format",
            "fmt",
            type=click.Choice([FORMAT_TEXT, FORMAT_JSON, FORMAT_CSV]),
            default=default_format,
            show_default=True,
            help="Output format.",
        )(f)
        f = click.option(
            "--precision",
            type=click.IntRange(3, 17),
            default=6,
            show_default=True,
            help="Significant digits for text/csv output.",
        )(f)
        f = click.option(
            "--output",
            type=click.Path(dir_okay=False, writable=True),
            default=None,
            help="Write to a file instead of stdout.",
        )(f)
        return f

    return wrap


@click.group()
def main() -> None:
    """Time- and efficiency-aware scaling-law planning."""


@main.command("eval")
@click.option("--kappa", type=float, required=True, help="Scaling exponent (> 0).")
@click.option("--gamma", type=float, required=True, help="Efficiency-doubling rate in 1/yr (>= 0).")
@click.option("--l0", type=float, default=None, help="Baseline loss in nats/token.")
@click.option("--t", type=float, default=None, help="Single evaluation time in years.")
@click.option("--t-max", type=float, default=None, help="Series end time in years.")
@click.option("--samples", type=int, default=251, show_default=True, help="Series sample count.")
@_output_options()
def cmd_eval(kappa, gamma, l0, t, t_max, samples, fmt, precision, output):
    """Evaluate the relative-loss curve at a point or as a series."""
    if (t is None) == (t_max is None):
        raise click.UsageError("pass exactly one of --t or --t-max")
    envelope = OutputEnvelope(fmt, output, precision)
    with _domain_errors():
        config = ScalingConfig(kappa=kappa, gamma=gamma, l0=1.0 if l0 is None else l0)
        if t is not None:
            value, underflow = relative_loss_eval(config, t)
            record = {"t_years": t, "relative_loss": value}
            if l0 is not None:
                record["loss"] = config.l0 * value
            if underflow:
                record["underflow"] = True
            emit_record(envelope, record)
        else:
            series = sample_trajectory(config, t_max, samples)
            rows = [
                {
                    "t_years": p.t_years,
                    "relative_loss": p.relative_loss,
                    "loss": p.loss,
                    "underflow": p.underflow,
                }
                for p in series.points
            ]
            emit_table(envelope, EVAL_COLUMNS, rows)


@main.command("solve")
@click.option("--kappa", type=float, required=True, help="Scaling exponent (> 0).")
@click.option("--gamma", type=float, required=True, help="Efficiency-doubling rate in 1/yr (>= 0).")
@click.option("--target", type=float, required=True, help="Relative-loss target in (0, 1].")
@click.option("--tau", type=float, default=None, help="Baseline perturbation (> -1).")
@click.option("--sensitivity", is_flag=True, help="Also report dt/dtau at tau = 0.")
@_output_options()
def cmd_solve(kappa, gamma, target, tau, sensitivity, fmt, precision, output):
    """Solve the curve for the time at which the target is reached."""
    envelope = OutputEnvelope(fmt, output, precision)
    with _domain_errors():
        config = ScalingConfig(kappa=kappa, gamma=gamma)
        if tau is None:
            result = time_to_target(config, target)
        else:
            result = time_to_target_perturbed(config, target, tau)
        record = {
            "time_to_target_years": result.time_to_target,
            "branch": result.branch,
            "residual": result.residual,
            "target": result.target,
        }
        if tau is not None:
            record["tau"] = tau
        if sensitivity:
            record["sensitivity_slope"] = sensitivity_slope(config, target)
            record["slope_approximation"] = slope_approximation(gamma)
        emit_record(envelope, record)


def _scenario_rows(results: list[ScenarioResult]) -> list[dict]:
    rows = []
    for r in results:
        pr = r.paper_reported
        rows.append(
            {
                "name": r.scenario.name,
                "initial_gpus": r.scenario.initial_fleet,
                "gamma": r.scenario.gamma,
                "l0": r.l0,
                "required_r": r.required_ratio,
                "time_yrs": r.time_to_target,
                "fleet_req": r.fleet_requirement,
                "paper_l0": pr.l0 if pr else None,
                "paper_r": pr.relative_loss if pr else None,
                "paper_time_yrs": pr.time_years if pr else None,
                "note": "target met in first year" if r.target_met_in_first_year else None,
            }
        )
    return rows


def _scenario_json(results: list[ScenarioResult]) -> list[dict]:
    payload = []
    for r in results:
        pr = r.paper_reported
        payload.append(
            {
                "scenario": scenario_to_dict(r.scenario),
                "l0": r.l0,
                "required_ratio": r.required_ratio,
                "target_loss": r.target_loss,
                "time_to_target_years": r.time_to_target,
                "target_met_in_first_year": r.target_met_in_first_year,
                "fleet_requirement": r.fleet_requirement,
                "paper_values_used": r.paper_values_used,
                "paper_reported": (
                    {
                        "l0": pr.l0,
                        "relative_loss": pr.relative_loss,
                        "time_years": pr.time_years,
                    }
                    if pr
                    else None
                ),
            }
        )
    return payload


@main.command("scenario")
@click.argument("file", required=False, type=click.Path(exists=True, dir_okay=False))
@click.option("--preset", default=None, help="Built-in preset name, or 'all'.")
@click.option(
    "--compare",
    "compare_file",
    type=click.Path(exists=True, dir_okay=False),
    default=None,
    help="JSON array of scenarios to compare.",
)
@click.option("--target", type=float, default=None, help="Common target loss for all rows.")
@click.option(
    "--paper-values",
    is_flag=True,
    help="Feed published reference (L0, R) pairs to the solver instead of recomputed values.",
)
@_output_options()
def cmd_scenario(file, preset, compare_file, target, paper_values, fmt, precision, output):
    """Run one scenario or compare several (Table-2-shaped output)."""
    sources = [s for s in (file, preset, compare_file) if s]
    if len(sources) != 1:
        raise click.UsageError("pass exactly one of FILE, --preset, or --compare")
    envelope = OutputEnvelope(fmt, output, precision)
    with _domain_errors():
        if preset is not None:
            index = preset_index(os.environ.get(PRESET_DIR_ENV))
            if preset == "all":
                scenarios = list(index.values())
            elif preset in index:
                scenarios = [index[preset]]
            else:
                raise click.UsageError(
                    f"unknown preset {preset!r}; valid: all, {', '.join(index)}"
                )
        elif compare_file is not None:
            scenarios = load_scenarios_file(compare_file)
        else:
            scenarios = [load_scenario_file(file)]
        results = compare(scenarios, common_target=target, paper_values=paper_values)
        if envelope.format == FORMAT_JSON:
            emit_record(envelope, {"rows": _scenario_json(results)})
        else:
            emit_table(envelope, SCENARIO_COLUMNS, _scenario_rows(results))


@main.command("figure")
@click.argument("figure_id", type=click.Choice(["1", "2", "3"]))
@_output_options(default_format=FORMAT_CSV)
def cmd_figure(figure_id, fmt, precision, output):
    """Emit the data series behind a reference figure."""
    envelope = OutputEnvelope(fmt, output, precision)
    with _domain_errors():
        figure = int(figure_id)
        emit_table(envelope, FIGURE_COLUMNS[figure], figures.figure_rows(figure))


@main.command("account")
@click.argument("file", required=False, type=click.Path(exists=True, dir_okay=False))
@click.option("--builtin", "builtin_key", default=None, help="Built-in comparison pair name.")
@_output_options()
def cmd_account(file, builtin_key, fmt, precision, output):
    """Render a logical-compute accounting table (last row is the baseline)."""
    if (file is None) == (builtin_key is None):
        raise click.UsageError("pass exactly one of FILE or --builtin")
    envelope = OutputEnvelope(fmt, output, precision)
    with _domain_errors():
        if builtin_key is not None:
            accounts = list(builtin_pair(builtin_key))
        else:
            accounts = load_accounts_file(file)
        emit_table(envelope, ACCOUNT_COLUMNS, account_table(accounts))


@main.command("serve")
@click.option("--port", type=int, default=8000, show_default=True)
@click.option("--bind", default="127.0.0.1", show_default=True, help="Address to bind.")
@click.option(
    "--no-cors-allow",
    is_flag=True,
    help="Disable the default allow-any-origin CORS policy.",
)
def cmd_serve(port, bind, no_cors_allow):
    """Start the stateless HTTP JSON API."""
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(cors_allow=not no_cors_allow), host=bind, port=port)


if __name__ == "__main__":
    main()
