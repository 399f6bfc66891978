/** Curve explorer: gamma/kappa/target sliders, the relative-loss chart with
 * the target reference line, and a live time-to-target readout. */

import type { ApiClient } from "../api.js";
import { renderChartSvg, type SeriesSpec } from "../chart.js";
import { createDragDebouncer } from "../debounce.js";
import { formatSig, formatYears } from "../format.js";
import { refreshSlot, ResponseSlot } from "../state.js";
import type { EvaluateResult, SolveResult } from "../types.js";

export interface CurveInputs {
  kappa: number;
  gamma: number;
  target: number;
}

export const CURVE_DEFAULTS: CurveInputs = { kappa: 0.048, gamma: 0.5, target: 0.68 };
export const CURVE_T_GRID: number[] = Array.from({ length: 126 }, (_, i) => i * 0.2);

export interface CurveReadout {
  timeText: string;
  staticRegime: boolean;
  targetText: string;
}

/** Readout strings straight from the solve response (no local math). */
export function curveReadout(solve: SolveResult): CurveReadout {
  return {
    timeText: formatYears(solve.time_to_target_years),
    staticRegime: solve.branch === "static",
    targetText: formatSig(solve.target, 3),
  };
}

/** Chart series from the evaluate response points, verbatim. */
export function curveChartSeries(result: EvaluateResult): SeriesSpec[] {
  return [
    {
      label: `gamma=${result.config.gamma}`,
      color: "#2563eb",
      points: result.points.map((p) => ({ x: p.t_years, y: p.relative_loss })),
    },
  ];
}

interface ViewData {
  evaluate: EvaluateResult;
  solve: SolveResult;
}

export function createCurvesView(client: ApiClient, root: HTMLElement): { refresh(): void } {
  const slot = new ResponseSlot<ViewData>();
  const inputs: CurveInputs = { ...CURVE_DEFAULTS };

  root.innerHTML = `
    <div class="controls">
      <label>doubling rate &gamma; <span data-ref="gamma-value"></span>/yr
        <input type="range" min="0" max="4" step="0.05" data-ref="gamma">
      </label>
      <label>scaling exponent &kappa; <span data-ref="kappa-value"></span>
        <input type="range" min="0.01" max="0.5" step="0.001" data-ref="kappa">
      </label>
      <label>target relative loss <span data-ref="target-value"></span>
        <input type="range" min="0.5" max="0.99" step="0.01" data-ref="target">
      </label>
    </div>
    <div class="readout" data-ref="readout"></div>
    <div class="chart-box" data-ref="chart"></div>
  `;

  const el = <T extends HTMLElement>(ref: string) =>
    root.querySelector<T>(`[data-ref="${ref}"]`)!;
  const sliders = {
    gamma: el<HTMLInputElement>("gamma"),
    kappa: el<HTMLInputElement>("kappa"),
    target: el<HTMLInputElement>("target"),
  };
  sliders.gamma.value = String(inputs.gamma);
  sliders.kappa.value = String(inputs.kappa);
  sliders.target.value = String(inputs.target);

  const load = () => {
    const { kappa, gamma, target } = inputs;
    return refreshSlot(slot, async () => {
      const [evaluate, solve] = await Promise.all([
        client.evaluate({ kappa, gamma, t: CURVE_T_GRID }),
        client.solve({ kappa, gamma, target }),
      ]);
      return { evaluate, solve };
    });
  };
  const debouncer = createDragDebouncer(load);

  const syncLabels = () => {
    el("gamma-value").textContent = formatSig(inputs.gamma, 3);
    el("kappa-value").textContent = formatSig(inputs.kappa, 3);
    el("target-value").textContent = formatSig(inputs.target, 3);
  };

  for (const [name, slider] of Object.entries(sliders) as [keyof CurveInputs, HTMLInputElement][]) {
    slider.addEventListener("input", () => {
      inputs[name] = Number(slider.value);
      syncLabels();
      slot.invalidate();
      debouncer.onDrag();
    });
    slider.addEventListener("change", () => debouncer.onRelease());
  }

  slot.subscribe((state) => {
    const readoutEl = el("readout");
    const chartEl = el("chart");
    const value = slot.lastValue;
    const stale = state.kind !== "ready";
    if (state.kind === "error") {
      readoutEl.innerHTML = `<span class="error">${state.message}</span>`;
      return;
    }
    if (!value) {
      readoutEl.textContent = "loading…";
      return;
    }
    const readout = curveReadout(value.solve);
    readoutEl.className = stale ? "readout stale" : "readout";
    readoutEl.innerHTML =
      `time to target ${readout.targetText}: <strong data-ref="time">${readout.timeText}</strong> yr` +
      (readout.staticRegime ? ' <span class="badge">static regime</span>' : "");
    chartEl.className = stale ? "chart-box stale" : "chart-box";
    chartEl.innerHTML = renderChartSvg(curveChartSeries(value.evaluate), {
      xLabel: "time (years)",
      yLabel: "relative loss",
      refY: value.solve.target,
    });
  });

  syncLabels();
  load();
  return { refresh: load };
}
