/** Sensitivity view: t(tau) over the perturbation range with the exact
 * slope at tau = 0 and its 1/(gamma ln2) approximation side by side. */

import type { ApiClient } from "../api.js";
import { renderChartSvg, type SeriesSpec } from "../chart.js";
import { createDragDebouncer } from "../debounce.js";
import { formatSig } from "../format.js";
import { refreshSlot, ResponseSlot } from "../state.js";
import type { SolveResult } from "../types.js";

export const TAU_MIN = -0.9;
export const TAU_MAX = 2.0;
export const TAU_GRID: number[] = Array.from({ length: 30 }, (_, i) =>
  Number((TAU_MIN + (i * (TAU_MAX - TAU_MIN)) / 29).toFixed(6)),
);

export interface SensitivityReadout {
  exactText: string;
  approximationText: string;
  unperturbedText: string;
}

export function sensitivityReadout(solve: SolveResult): SensitivityReadout | null {
  if (solve.sensitivity_slope === null || solve.slope_approximation === null) {
    return null;
  }
  return {
    exactText: formatSig(solve.sensitivity_slope, 4),
    approximationText: formatSig(solve.slope_approximation, 4),
    unperturbedText: formatSig(solve.time_to_target_years, 4),
  };
}

export function sensitivityChartSeries(solve: SolveResult): SeriesSpec[] {
  if (!solve.perturbed) return [];
  return [
    {
      label: "t(tau)",
      color: "#2563eb",
      points: solve.perturbed.map((p) => ({ x: p.tau, y: p.time_to_target_years })),
    },
  ];
}

export function createSensitivityView(client: ApiClient, root: HTMLElement): { refresh(): void } {
  const slot = new ResponseSlot<SolveResult>();
  const inputs = { kappa: 0.048, gamma: 2.0, target: 0.68 };

  root.innerHTML = `
    <div class="controls">
      <label>doubling rate &gamma; <span data-ref="gamma-value"></span>/yr
        <input type="range" min="0" max="4" step="0.05" data-ref="gamma">
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
  const gammaSlider = el<HTMLInputElement>("gamma");
  const targetSlider = el<HTMLInputElement>("target");
  gammaSlider.value = String(inputs.gamma);
  targetSlider.value = String(inputs.target);

  const load = () => {
    if (inputs.gamma === 0) {
      // perturbation analysis needs a growing-efficiency regime
      slot.invalidate();
      el("readout").innerHTML =
        '<span class="note">gamma = 0 has no perturbation dynamics; ' +
        "raise the doubling rate to explore sensitivity</span>";
      el("chart").innerHTML = "";
      return;
    }
    refreshSlot(slot, () =>
      client.solve({ ...inputs, tau_grid: TAU_GRID.concat([0]).sort((a, b) => a - b) }),
    );
  };
  const debouncer = createDragDebouncer(load);

  const syncLabels = () => {
    el("gamma-value").textContent = formatSig(inputs.gamma, 3);
    el("target-value").textContent = formatSig(inputs.target, 3);
  };

  for (const [slider, name] of [
    [gammaSlider, "gamma"],
    [targetSlider, "target"],
  ] as const) {
    slider.addEventListener("input", () => {
      inputs[name] = Number(slider.value);
      syncLabels();
      slot.invalidate();
      debouncer.onDrag();
    });
    slider.addEventListener("change", () => debouncer.onRelease());
  }

  slot.subscribe((state) => {
    if (state.kind === "error") {
      el("readout").innerHTML = `<span class="error">${state.message}</span>`;
      return;
    }
    const value = slot.lastValue;
    if (!value) return;
    const stale = state.kind !== "ready";
    const readout = sensitivityReadout(value);
    if (readout) {
      el("readout").className = stale ? "readout stale" : "readout";
      el("readout").innerHTML =
        `dt/d&tau; at &tau;=0: <strong>${readout.exactText}</strong> yr ` +
        `(approximation 1/(&gamma; ln 2): ${readout.approximationText} yr); ` +
        `unperturbed solve ${readout.unperturbedText} yr`;
    }
    el("chart").className = stale ? "chart-box stale" : "chart-box";
    el("chart").innerHTML = renderChartSvg(sensitivityChartSeries(value), {
      xLabel: "baseline perturbation tau (years)",
      yLabel: "time to target (years)",
      refX: 0,
    });
  });

  syncLabels();
  load();
  return { refresh: load };
}
