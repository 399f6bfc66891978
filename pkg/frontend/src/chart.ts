/** Dependency-free SVG line charts.
 *
 * chartModel() is pure (data in, pixel geometry out) so scaling and the
 * log-axis toggle are unit-testable; renderChartSvg() serializes the model
 * to markup for innerHTML mounting.
 */

export interface SeriesSpec {
  label: string;
  color: string;
  points: { x: number; y: number }[];
  dashed?: boolean;
}

export interface ChartOptions {
  width?: number;
  height?: number;
  logX?: boolean;
  logY?: boolean;
  xLabel?: string;
  yLabel?: string;
  /** Horizontal reference line (e.g. the 0.68 target). */
  refY?: number;
  /** Vertical marker (e.g. tau = 0). */
  refX?: number;
}

export interface ChartModel {
  width: number;
  height: number;
  plot: { left: number; top: number; right: number; bottom: number };
  paths: { label: string; color: string; d: string; dashed: boolean }[];
  xTicks: { px: number; label: string }[];
  yTicks: { py: number; label: string }[];
  refLineY: number | null;
  refLineX: number | null;
  xLabel: string;
  yLabel: string;
}

const MARGIN = { left: 58, top: 14, right: 14, bottom: 40 };

function niceTicks(min: number, max: number, count = 5): number[] {
  if (!(max > min)) return [min];
  const raw = (max - min) / count;
  const power = 10 ** Math.floor(Math.log10(raw));
  const step = [1, 2, 2.5, 5, 10].map((m) => m * power).find((s) => (max - min) / s <= count + 1)!;
  const start = Math.ceil(min / step) * step;
  const ticks: number[] = [];
  for (let v = start; v <= max + step * 1e-9; v += step) {
    ticks.push(Number(v.toPrecision(12)));
  }
  return ticks;
}

function tickLabel(value: number): string {
  if (value === 0) return "0";
  const magnitude = Math.abs(value);
  if (magnitude >= 1e5 || magnitude < 1e-3) return value.toExponential(0);
  return Number(value.toPrecision(6)).toString();
}

export function chartModel(series: SeriesSpec[], options: ChartOptions = {}): ChartModel {
  const width = options.width ?? 640;
  const height = options.height ?? 320;
  const plot = {
    left: MARGIN.left,
    top: MARGIN.top,
    right: width - MARGIN.right,
    bottom: height - MARGIN.bottom,
  };

  const logX = options.logX ?? false;
  const logY = options.logY ?? false;
  const rawXs = series
    .flatMap((s) => s.points.map((p) => p.x))
    .concat(options.refX !== undefined ? [options.refX] : []);
  const rawYs = series
    .flatMap((s) => s.points.map((p) => p.y))
    .concat(options.refY !== undefined ? [options.refY] : []);
  const xs = logX ? rawXs.filter((x) => x > 0) : rawXs;
  const ys = logY ? rawYs.filter((y) => y > 0) : rawYs;

  const xMinRaw = xs.length ? Math.min(...xs) : logX ? 1 : 0;
  const xMaxRaw = xs.length ? Math.max(...xs) : 1;
  const yMinRaw = ys.length ? Math.min(...ys) : logY ? 1 : 0;
  const yMaxRaw = ys.length ? Math.max(...ys) : 1;
  const xMin = logX ? Math.log10(xMinRaw) : xMinRaw;
  const xMax = logX ? Math.log10(xMaxRaw) : xMaxRaw;
  const yMin = logY ? Math.log10(yMinRaw) : yMinRaw;
  const yMax = logY ? Math.log10(yMaxRaw) : yMaxRaw;

  const xSpan = xMax - xMin || 1;
  const ySpan = yMax - yMin || 1;
  const toPx = (x: number) => {
    const value = logX ? Math.log10(x) : x;
    return plot.left + ((value - xMin) / xSpan) * (plot.right - plot.left);
  };
  const toPy = (y: number) => {
    const value = logY ? Math.log10(y) : y;
    return plot.bottom - ((value - yMin) / ySpan) * (plot.bottom - plot.top);
  };

  const paths = series.map((s) => {
    const visible = s.points.filter((p) => (!logX || p.x > 0) && (!logY || p.y > 0));
    const d = visible
      .map((p, i) => `${i === 0 ? "M" : "L"}${toPx(p.x).toFixed(2)},${toPy(p.y).toFixed(2)}`)
      .join("");
    return { label: s.label, color: s.color, d, dashed: s.dashed ?? false };
  });

  const xTickValues = logX
    ? niceTicks(xMin, xMax, 6).map((exp) => 10 ** exp)
    : niceTicks(xMin, xMax, 6);
  const yTickValues = logY
    ? niceTicks(yMin, yMax, 5).map((exp) => 10 ** exp)
    : niceTicks(yMin, yMax, 5);

  return {
    width,
    height,
    plot,
    paths,
    xTicks: xTickValues.map((v) => ({ px: toPx(v), label: tickLabel(v) })),
    yTicks: yTickValues.map((v) => ({ py: toPy(v), label: tickLabel(v) })),
    refLineY: options.refY !== undefined && (!logY || options.refY > 0) ? toPy(options.refY) : null,
    refLineX: options.refX !== undefined && (!logX || options.refX > 0) ? toPx(options.refX) : null,
    xLabel: options.xLabel ?? "",
    yLabel: options.yLabel ?? "",
  };
}

export function renderChartSvg(series: SeriesSpec[], options: ChartOptions = {}): string {
  const m = chartModel(series, options);
  const parts: string[] = [
    `<svg viewBox="0 0 ${m.width} ${m.height}" class="chart" role="img">`,
    `<rect x="${m.plot.left}" y="${m.plot.top}" width="${m.plot.right - m.plot.left}" ` +
      `height="${m.plot.bottom - m.plot.top}" class="chart-bg"/>`,
  ];
  for (const tick of m.xTicks) {
    parts.push(
      `<line x1="${tick.px.toFixed(2)}" y1="${m.plot.top}" x2="${tick.px.toFixed(2)}" ` +
        `y2="${m.plot.bottom}" class="gridline"/>`,
      `<text x="${tick.px.toFixed(2)}" y="${m.plot.bottom + 16}" class="tick" ` +
        `text-anchor="middle">${tick.label}</text>`,
    );
  }
  for (const tick of m.yTicks) {
    parts.push(
      `<line x1="${m.plot.left}" y1="${tick.py.toFixed(2)}" x2="${m.plot.right}" ` +
        `y2="${tick.py.toFixed(2)}" class="gridline"/>`,
      `<text x="${m.plot.left - 6}" y="${(tick.py + 4).toFixed(2)}" class="tick" ` +
        `text-anchor="end">${tick.label}</text>`,
    );
  }
  if (m.refLineY !== null) {
    parts.push(
      `<line x1="${m.plot.left}" y1="${m.refLineY.toFixed(2)}" x2="${m.plot.right}" ` +
        `y2="${m.refLineY.toFixed(2)}" class="refline"/>`,
    );
  }
  if (m.refLineX !== null) {
    parts.push(
      `<line x1="${m.refLineX.toFixed(2)}" y1="${m.plot.top}" x2="${m.refLineX.toFixed(2)}" ` +
        `y2="${m.plot.bottom}" class="refline"/>`,
    );
  }
  for (const path of m.paths) {
    if (!path.d) continue;
    parts.push(
      `<path d="${path.d}" fill="none" stroke="${path.color}" stroke-width="1.8"` +
        `${path.dashed ? ' stroke-dasharray="6 4"' : ""}><title>${path.label}</title></path>`,
    );
  }
  if (m.xLabel) {
    parts.push(
      `<text x="${(m.plot.left + m.plot.right) / 2}" y="${m.height - 6}" class="axis-label" ` +
        `text-anchor="middle">${m.xLabel}</text>`,
    );
  }
  if (m.yLabel) {
    parts.push(
      `<text x="14" y="${(m.plot.top + m.plot.bottom) / 2}" class="axis-label" ` +
        `text-anchor="middle" transform="rotate(-90 14 ${(m.plot.top + m.plot.bottom) / 2})">` +
        `${m.yLabel}</text>`,
    );
  }
  parts.push("</svg>");
  return parts.join("");
}
