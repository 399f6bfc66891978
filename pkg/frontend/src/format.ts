/** Display formatting. Numbers are formatted, never recomputed: every value
 * shown on screen comes straight out of a service response. */

/** Significant digits with trailing fraction zeros trimmed
 * (1.0000 -> "1", 20.127285 -> "20.1" at 3 digits). */
export function formatSig(value: number, digits = 6): string {
  if (!Number.isFinite(value)) return String(value);
  if (value === 0) return "0";
  const fixed = value.toPrecision(digits);
  if (fixed.includes("e") || !fixed.includes(".")) return fixed;
  return fixed.replace(/0+$/, "").replace(/\.$/, "");
}

/** Years readout at 3 significant digits, whole years from 100 up
 * (20.127 -> "20.1", 5.3042 -> "5.30", 3085.01 -> "3085"). */
export function formatYears(years: number): string {
  if (!Number.isFinite(years)) return String(years);
  if (Math.abs(years) >= 100) return Math.round(years).toString();
  return years.toPrecision(3);
}

/** Ratio readout, zero kept meaningful (17.0012 -> "17.0"). */
export function formatRatio(value: number): string {
  if (!Number.isFinite(value)) return String(value);
  return value.toPrecision(3);
}

/** Compact count: scientific from a million up (308601229 -> "3.09e8"),
 * grouped integer below. */
export function formatCount(value: number): string {
  if (!Number.isFinite(value)) return String(value);
  if (Math.abs(value) >= 1e6) {
    const exponent = Math.floor(Math.log10(Math.abs(value)));
    const mantissa = value / 10 ** exponent;
    return `${mantissa.toPrecision(3)}e${exponent}`;
  }
  return Math.round(value).toLocaleString("en-US");
}
