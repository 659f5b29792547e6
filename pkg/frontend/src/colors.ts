/**
 * Shared color assignments so the same filter looks the same in every
 * figure: the energy filter is blue, exact references are red, sampled
 * baselines are orange, and the latent true state is green.
 */

export const COLORS = {
  ebds: "#1f77b4",
  reference: "#d62728",
  baseline: "#ff7f0e",
  trueState: "#2ca02c",
} as const;

const FILTER_COLOR: Record<string, string> = {
  ebds: COLORS.ebds,
  kf: COLORS.reference,
  ekf: COLORS.reference,
  exact: COLORS.reference,
  pf: COLORS.baseline,
};

const EXTRA_COLORS = ["#9467bd", "#8c564b", "#e377c2", "#7f7f7f"];

/** Color for a filter name, falling back to a stable extra palette. */
export function filterColor(name: string, fallbackIndex: number): string {
  const key = name.toLowerCase().split("-")[0] ?? name.toLowerCase();
  return FILTER_COLOR[key] ?? EXTRA_COLORS[fallbackIndex % EXTRA_COLORS.length]!;
}
