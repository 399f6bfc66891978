import { describe, expect, it } from "vitest";

import {
  accountingModel,
  editAccount,
  validateAccountDraft,
} from "../src/views/accounting.js";
import { curveChartSeries, curveReadout } from "../src/views/curves.js";
import {
  compareRequestBody,
  draftsFromPresets,
  editDraft,
  raceChartSeries,
  raceRowModels,
  validateDraft,
} from "../src/views/race.js";
import { sensitivityChartSeries, sensitivityReadout } from "../src/views/sensitivity.js";
import type {
  AccountWire,
  BuiltinAccountsResult,
  CompareResult,
  EfficiencyResult,
  EvaluateResult,
  PresetEntry,
  SolveResult,
} from "../src/types.js";
import { fixture } from "./helpers.js";

describe("curves view", () => {
  it("readout reflects the solve branch", () => {
    const moving = curveReadout(fixture<SolveResult>("solve_baseline.json"));
    expect(moving.staticRegime).toBe(false);
    const parked = curveReadout(fixture<SolveResult>("solve_static.json"));
    expect(parked.staticRegime).toBe(true);
    expect(parked.timeText).toBe("3085");
  });

  it("chart series carries the response points verbatim", () => {
    const result = fixture<EvaluateResult>("evaluate_baseline.json");
    const [series] = curveChartSeries(result);
    expect(series.points.length).toBe(result.points.length);
    expect(series.points[0]).toEqual({ x: 0, y: 1 });
    const last = result.points[result.points.length - 1];
    expect(series.points[series.points.length - 1]).toEqual({
      x: last.t_years,
      y: last.relative_loss,
    });
  });
});

describe("race view", () => {
  const presets = fixture<PresetEntry[]>("presets.json");
  const compare = fixture<CompareResult>("compare_presets.json");

  it("seeds five pristine drafts with published figures attached", () => {
    const drafts = draftsFromPresets(presets);
    expect(drafts.length).toBe(5);
    expect(drafts.every((d) => d.pristine)).toBe(true);
    expect(drafts[3].scenario.paper_reported?.l0).toBe(1.12);
  });

  it("an edit strips published figures and pristine status", () => {
    const [draft] = draftsFromPresets(presets).slice(3); // turtle
    const edited = editDraft(draft, "initial_fleet", 100_000);
    expect(edited.pristine).toBe(false);
    expect(edited.scenario.paper_reported).toBeNull();
    expect(edited.scenario.initial_fleet).toBe(100_000);
    // the original draft is untouched
    expect(draft.scenario.initial_fleet).toBe(10_000);
  });

  it("compare body round-trips drafts and flags published mode", () => {
    const drafts = draftsFromPresets(presets);
    const body = compareRequestBody(drafts);
    expect(body.scenarios.length).toBe(5);
    expect(body.paper_values).toBe(true);
    const allEdited = drafts.map((d) => editDraft(d, "gamma", 1.0));
    expect(compareRequestBody(allEdited).paper_values).toBe(false);
  });

  it("validation flags non-positive and fractional fields by name", () => {
    const base = draftsFromPresets(presets)[2].scenario;
    expect(validateDraft({ ...base, initial_fleet: 0 }).initial_fleet).toMatch(/positive/);
    expect(validateDraft({ ...base, initial_fleet: 10.5 }).initial_fleet).toMatch(/whole/);
    expect(validateDraft({ ...base, gamma: -1 }).gamma).toBeDefined();
    expect(validateDraft({ ...base, kappa: 0 }).kappa).toBeDefined();
    expect(validateDraft(base)).toEqual({});
  });

  it("row models preserve the response ordering and formatting", () => {
    const rows = raceRowModels(compare);
    expect(rows.map((r) => r.name)).toEqual([
      "Unfold in Space",
      "Turtle",
      "Hare",
      "Baseline",
      "Unfold in Time",
    ]);
    expect(rows.map((r) => r.rank)).toEqual([1, 2, 3, 4, 5]);
    const turtle = rows[1];
    expect(turtle.timeText).toBe("5.30");
    expect(turtle.l0Text).toBe("1.12");
    const space = rows[0];
    expect(space.metFirstYear).toBe(true);
    expect(space.fleetRequirementText).toBe("3.09e8");
  });

  it("trajectory series come straight from the response", () => {
    const series = raceChartSeries(compare);
    expect(series.length).toBe(5);
    const baseline = series[3];
    const row = compare.rows[3];
    expect(baseline.points[0].y).toBe(row.trajectory.points[0].loss);
    expect(baseline.points.length).toBe(row.trajectory.points.length);
  });
});

describe("sensitivity view", () => {
  const solve = fixture<SolveResult>("solve_sensitivity.json");

  it("shows exact and approximate slopes from the response", () => {
    const readout = sensitivityReadout(solve);
    expect(readout).not.toBeNull();
    expect(readout!.exactText).toBe("0.7212");
    expect(readout!.approximationText).toBe("0.7213");
  });

  it("tau = 0 grid point equals the unperturbed solve", () => {
    const zero = solve.perturbed!.find((p) => p.tau === 0)!;
    expect(zero.time_to_target_years).toBe(solve.time_to_target_years);
  });

  it("chart points mirror the perturbed grid", () => {
    const [series] = sensitivityChartSeries(solve);
    expect(series.points.length).toBe(solve.perturbed!.length);
    const times = series.points.map((p) => p.y);
    expect([...times].sort((a, b) => a - b)).toEqual(times); // monotone in tau
  });

  it("is disabled without a growing-efficiency regime", () => {
    const parked = fixture<SolveResult>("solve_static.json");
    expect(sensitivityReadout(parked)).toBeNull();
  });
});

describe("accounting view", () => {
  const builtin = fixture<BuiltinAccountsResult>("builtin_accounts.json");
  const efficiency = fixture<EfficiencyResult>("efficiency_builtin.json");

  it("formats the ratio and derived columns from the response", () => {
    const model = accountingModel(efficiency);
    expect(model.ratioText).toBe("17.0");
    expect(model.subject.computeText).toBe("5.958e+25");
    expect(model.baseline.computeText).toBe("4.860e+24");
    // published figures differ from dense 6ND for this pair, so both show
    expect(model.subject.effectiveText).not.toBeNull();
  });

  it("editing params or tokens drops the published compute figure", () => {
    const subject: AccountWire = { ...builtin.accounts[0] };
    expect(subject.reported_logical_compute).not.toBeNull();
    const editedParams = editAccount(subject, "params_n", 700e9);
    expect(editedParams.reported_logical_compute).toBeNull();
    const editedHours = editAccount(subject, "gpu_hours", 1.39e6);
    expect(editedHours.reported_logical_compute).toBe(subject.reported_logical_compute);
  });

  it("flags non-positive inputs by field", () => {
    const subject = builtin.accounts[0];
    expect(validateAccountDraft({ ...subject, gpu_hours: 0 }).gpu_hours).toBe("must be > 0");
    expect(validateAccountDraft({ ...subject, equivalence_factor: 3 }).equivalence_factor).toMatch(
      /\(0, 2\]/,
    );
    expect(validateAccountDraft(subject)).toEqual({});
  });
});
