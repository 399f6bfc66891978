/** Scenario race: editable preset rows, a compare run against the service,
 * and overlaid loss trajectories with the target line. */

import type { ApiClient } from "../api.js";
import { renderChartSvg, type SeriesSpec } from "../chart.js";
import { formatCount, formatSig, formatYears } from "../format.js";
import { refreshSlot, ResponseSlot } from "../state.js";
import type { CompareResult, PresetEntry, ScenarioWire } from "../types.js";

const ROW_COLORS = ["#2563eb", "#dc2626", "#059669", "#d97706", "#7c3aed", "#0891b2"];

export interface ScenarioDraft {
  scenario: ScenarioWire;
  /** Unedited presets keep their published figures; any edit switches the
   * row to recomputed values. */
  pristine: boolean;
}

export type DraftErrors = Partial<Record<keyof ScenarioWire, string>>;

export const EDITABLE_FIELDS = [
  "initial_fleet",
  "baseline_fleet",
  "gamma",
  "kappa",
  "l_init",
  "target_loss",
] as const;
export type EditableField = (typeof EDITABLE_FIELDS)[number];

export function draftsFromPresets(presets: PresetEntry[]): ScenarioDraft[] {
  return presets.map((p) => ({
    scenario: { ...p.scenario, paper_reported: p.paper_reported },
    pristine: true,
  }));
}

export function validateDraft(scenario: ScenarioWire): DraftErrors {
  const errors: DraftErrors = {};
  if (!Number.isFinite(scenario.initial_fleet) || scenario.initial_fleet <= 0) {
    errors.initial_fleet = "must be a positive GPU count";
  } else if (!Number.isInteger(scenario.initial_fleet)) {
    errors.initial_fleet = "must be a whole GPU count";
  }
  if (!Number.isFinite(scenario.baseline_fleet) || scenario.baseline_fleet <= 0) {
    errors.baseline_fleet = "must be a positive GPU count";
  } else if (!Number.isInteger(scenario.baseline_fleet)) {
    errors.baseline_fleet = "must be a whole GPU count";
  }
  if (!Number.isFinite(scenario.gamma) || scenario.gamma < 0) {
    errors.gamma = "must be >= 0";
  }
  if (!Number.isFinite(scenario.kappa) || scenario.kappa <= 0) {
    errors.kappa = "must be > 0";
  }
  if (!Number.isFinite(scenario.l_init) || scenario.l_init <= 0) {
    errors.l_init = "must be > 0";
  }
  if (!Number.isFinite(scenario.target_loss) || scenario.target_loss <= 0) {
    errors.target_loss = "must be > 0";
  }
  return errors;
}

/** Apply one field edit: the row loses its published figures and becomes a
 * recomputed scenario. */
export function editDraft(draft: ScenarioDraft, field: EditableField, value: number): ScenarioDraft {
  return {
    scenario: { ...draft.scenario, [field]: value, paper_reported: null },
    pristine: false,
  };
}

export function compareRequestBody(drafts: ScenarioDraft[]): {
  scenarios: ScenarioWire[];
  paper_values: boolean;
} {
  return {
    scenarios: drafts.map((d) => d.scenario),
    // published figures for untouched presets, recomputed for edited rows;
    // the engine applies the flag per row based on attached figures
    paper_values: drafts.some((d) => d.pristine),
  };
}

export interface RaceRowModel {
  rank: number;
  name: string;
  fleetText: string;
  gammaText: string;
  l0Text: string;
  ratioText: string;
  timeText: string;
  metFirstYear: boolean;
  fleetRequirementText: string | null;
  usedPublished: boolean;
}

/** Table rows straight from the compare response (pre-sorted by time). */
export function raceRowModels(result: CompareResult): RaceRowModel[] {
  return result.rows.map((row, i) => ({
    rank: i + 1,
    name: row.name,
    fleetText: formatCount(row.initial_fleet),
    gammaText: formatSig(row.gamma, 3),
    l0Text: formatSig(row.l0, 3),
    ratioText: formatSig(row.required_ratio, 3),
    timeText: formatYears(row.time_to_target_years),
    metFirstYear: row.target_met_in_first_year,
    fleetRequirementText:
      row.fleet_requirement === null ? null : formatCount(row.fleet_requirement),
    usedPublished: row.paper_values_used,
  }));
}

export function raceChartSeries(result: CompareResult): SeriesSpec[] {
  return result.rows.map((row, i) => ({
    label: row.name,
    color: ROW_COLORS[i % ROW_COLORS.length],
    points: row.trajectory.points.map((p) => ({ x: p.t_years, y: p.loss })),
  }));
}

export function createRaceView(client: ApiClient, root: HTMLElement): { refresh(): void } {
  const slot = new ResponseSlot<CompareResult>();
  let drafts: ScenarioDraft[] = [];
  let logTime = false;

  root.innerHTML = `
    <div class="race-editor" data-ref="editor"></div>
    <div class="controls">
      <button data-ref="compare">compare</button>
      <label><input type="checkbox" data-ref="log-toggle"> log time axis</label>
    </div>
    <div data-ref="table"></div>
    <div class="chart-box" data-ref="chart"></div>
  `;
  const el = <T extends HTMLElement>(ref: string) =>
    root.querySelector<T>(`[data-ref="${ref}"]`)!;

  const runCompare = () => {
    if (drafts.some((d) => Object.keys(validateDraft(d.scenario)).length > 0)) {
      return;
    }
    refreshSlot(slot, () => client.compare(compareRequestBody(drafts)));
  };

  const renderEditor = () => {
    const editor = el("editor");
    editor.innerHTML = drafts
      .map((draft, row) => {
        const errors = validateDraft(draft.scenario);
        const fields = EDITABLE_FIELDS.map((field) => {
          const error = errors[field];
          return (
            `<label class="cell">${field.replace(/_/g, " ")}` +
            `<input type="number" step="any" data-row="${row}" data-field="${field}" ` +
            `value="${draft.scenario[field]}">` +
            (error ? `<span class="error">${error}</span>` : "") +
            `</label>`
          );
        }).join("");
        return (
          `<fieldset><legend>${draft.scenario.name}` +
          (draft.pristine ? ' <span class="badge">published</span>' : "") +
          `</legend>${fields}</fieldset>`
        );
      })
      .join("");
    editor.querySelectorAll<HTMLInputElement>("input[data-row]").forEach((input) => {
      input.addEventListener("change", () => {
        const row = Number(input.dataset.row);
        const field = input.dataset.field as EditableField;
        drafts[row] = editDraft(drafts[row], field, Number(input.value));
        slot.invalidate();
        renderEditor();
        runCompare();
      });
    });
  };

  el("compare").addEventListener("click", runCompare);
  el<HTMLInputElement>("log-toggle").addEventListener("change", (event) => {
    logTime = (event.target as HTMLInputElement).checked;
    render(slot.lastValue, slot.current.kind !== "ready");
  });

  const render = (value: CompareResult | null, stale: boolean) => {
    const tableEl = el("table");
    const chartEl = el("chart");
    if (!value) {
      tableEl.textContent = "no comparison yet";
      return;
    }
    const rows = raceRowModels(value)
      .map(
        (r) =>
          `<tr data-name="${r.name}"><td>${r.rank}</td><td>${r.name}` +
          (r.usedPublished ? ' <span class="badge">published</span>' : "") +
          `</td><td>${r.fleetText}</td><td>${r.gammaText}</td><td>${r.l0Text}</td>` +
          `<td>${r.ratioText}</td><td>${
            r.metFirstYear ? "met in first year" : `${r.timeText} yr`
          }${r.fleetRequirementText ? ` (fleet ${r.fleetRequirementText})` : ""}</td></tr>`,
      )
      .join("");
    tableEl.className = stale ? "stale" : "";
    tableEl.innerHTML =
      `<table><thead><tr><th>#</th><th>scenario</th><th>GPUs</th><th>&gamma;</th>` +
      `<th>L0</th><th>required R</th><th>time to target</th></tr></thead>` +
      `<tbody>${rows}</tbody></table>`;
    chartEl.className = stale ? "chart-box stale" : "chart-box";
    chartEl.innerHTML = renderChartSvg(raceChartSeries(value), {
      xLabel: "time (years)",
      yLabel: "loss (nats/token)",
      refY: drafts[0]?.scenario.target_loss,
      logX: logTime,
    });
  };

  slot.subscribe((state) => {
    if (state.kind === "error") {
      el("table").innerHTML = `<span class="error">${state.message}</span>`;
      return;
    }
    render(slot.lastValue, state.kind !== "ready");
  });

  const refresh = () => {
    client
      .presets()
      .then((presets) => {
        drafts = draftsFromPresets(presets);
        renderEditor();
        runCompare();
      })
      .catch((error: unknown) => {
        el("editor").innerHTML = `<span class="error">${
          error instanceof Error ? error.message : String(error)
        }</span>`;
      });
  };

  refresh();
  return { refresh };
}
