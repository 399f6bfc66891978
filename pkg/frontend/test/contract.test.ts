/** Contract acceptance against recorded service responses: the displayed
 * numbers must equal the recorded values bit-for-bit at display precision,
 * and the headline readouts must land on the published figures. */

import { describe, expect, it } from "vitest";

import { formatRatio, formatYears } from "../src/format.js";
import { accountingModel } from "../src/views/accounting.js";
import { curveReadout } from "../src/views/curves.js";
import { raceRowModels } from "../src/views/race.js";
import type {
  CompareResult,
  EfficiencyResult,
  PresetEntry,
  SolveResult,
} from "../src/types.js";
import { fixture, rawFixture } from "./helpers.js";

describe("recorded /v1 contract", () => {
  it("every fixture envelope is schema version 1", () => {
    for (const name of [
      "solve_baseline.json",
      "solve_static.json",
      "solve_sensitivity.json",
      "evaluate_baseline.json",
      "presets.json",
      "compare_presets.json",
      "builtin_accounts.json",
      "efficiency_builtin.json",
    ]) {
      const raw = rawFixture(name) as { schema_version?: string };
      expect(raw.schema_version, name).toBe("1");
    }
  });

  it("curve explorer at (gamma 0.5, kappa 0.048, target 0.68) displays 20.1 yr", () => {
    const solve = fixture<SolveResult>("solve_baseline.json");
    expect(Math.abs(solve.time_to_target_years - 20.1)).toBeLessThanOrEqual(0.2);
    const readout = curveReadout(solve);
    expect(readout.timeText).toBe("20.1");
    // bit-for-bit at display precision: the string is the formatter applied
    // to the recorded value, nothing else
    expect(readout.timeText).toBe(formatYears(solve.time_to_target_years));
  });

  it("static regime badge comes from the recorded branch", () => {
    const solve = fixture<SolveResult>("solve_static.json");
    const readout = curveReadout(solve);
    expect(readout.staticRegime).toBe(true);
    expect(readout.timeText).toBe(formatYears(solve.time_to_target_years));
    expect(readout.timeText).toBe("3085");
  });

  it("preset race renders exactly five published rows", () => {
    const presets = fixture<PresetEntry[]>("presets.json");
    expect(presets.length).toBe(5);
    const rows = raceRowModels(fixture<CompareResult>("compare_presets.json"));
    expect(rows.length).toBe(5);
    const byName = new Map(rows.map((r) => [r.name, r]));
    expect(byName.get("Turtle")!.timeText).toBe("5.30");
    expect(byName.get("Hare")!.timeText).toBe("5.38");
    expect(byName.get("Baseline")!.timeText).toBe("20.1");
    expect(byName.get("Unfold in Time")!.timeText).toBe("3085");
    expect(byName.get("Unfold in Space")!.metFirstYear).toBe(true);
  });

  it("race row strings equal formatters applied to recorded values", () => {
    const compare = fixture<CompareResult>("compare_presets.json");
    const rows = raceRowModels(compare);
    compare.rows.forEach((recorded, i) => {
      expect(rows[i].timeText).toBe(formatYears(recorded.time_to_target_years));
    });
  });

  it("accounting view's built-in pair shows 17.0", () => {
    const efficiency = fixture<EfficiencyResult>("efficiency_builtin.json");
    expect(Math.abs(efficiency.ratio - 17.0)).toBeLessThanOrEqual(0.3);
    const model = accountingModel(efficiency);
    expect(model.ratioText).toBe("17.0");
    expect(model.ratioText).toBe(formatRatio(efficiency.ratio));
  });

  it("solve responses expose the closed error-code surface on demand", () => {
    const raw = rawFixture("error_malformed.json") as {
      error: { code: string; message: string };
    };
    expect(["invalid_argument", "unreachable_target", "malformed_body"]).toContain(
      raw.error.code,
    );
  });
});
