/**
 * Metrics figure: one panel per metric, one curve per filter.
 *
 * The input is the per-step metrics CSV written by the evaluation
 * pipeline.  Panels share the time axis; the error-divergence metrics
 * (mae, fme) use a linear value axis and the divergence-to-reference
 * metric (kld) uses a log axis when all values are positive.
 */

import { MetricsFile, series } from "./csv.js";
import { filterColor } from "./colors.js";
import {
  SvgDocument,
  Scale,
  Rect,
  drawAxes,
  drawLegend,
  niceTicks,
  tickLabel,
} from "./svg.js";

const PANEL_WIDTH = 360;
const PANEL_HEIGHT = 240;
const MARGIN = { left: 62, right: 20, top: 34, bottom: 46 };
const GAP = 18;

export interface RenderResult {
  svg: string;
  warnings: string[];
}

const METRIC_ORDER = ["mae", "fme", "kld"];
const METRIC_TITLE: Record<string, string> = {
  mae: "Mean absolute error vs true state",
  fme: "First-moment error vs reference",
  kld: "Divergence from reference density",
};

function orderedMetrics(file: MetricsFile): string[] {
  const known = METRIC_ORDER.filter((m) => file.metrics.includes(m));
  const extra = file.metrics.filter((m) => !METRIC_ORDER.includes(m)).sort();
  return [...known, ...extra];
}

export function renderMetrics(file: MetricsFile): RenderResult {
  const warnings: string[] = [];
  const metrics = orderedMetrics(file);
  const filters = file.filters;
  const width = MARGIN.left + PANEL_WIDTH + MARGIN.right;
  const height =
    MARGIN.top +
    metrics.length * PANEL_HEIGHT +
    (metrics.length - 1) * (GAP + MARGIN.top + MARGIN.bottom) +
    MARGIN.bottom;
  const doc = new SvgDocument(width, height);
  if (file.configHash) doc.comment(`config=${file.configHash}`);

  metrics.forEach((metric, panelIndex) => {
    const rect: Rect = {
      x: MARGIN.left,
      y: MARGIN.top + panelIndex * (PANEL_HEIGHT + GAP + MARGIN.top + MARGIN.bottom),
      width: PANEL_WIDTH,
      height: PANEL_HEIGHT,
    };
    const curves: Array<{ filter: string; time: number[]; value: number[] }> = [];
    filters.forEach((filter) => {
      const data = series(file, filter, metric);
      if (data.time.length === 0) {
        warnings.push(`no "${metric}" series for filter "${filter}"`);
        return;
      }
      curves.push({ filter, time: data.time, value: data.value });
    });
    if (curves.length === 0) {
      warnings.push(`metric "${metric}" has no plottable series`);
      return;
    }

    const times = curves.flatMap((c) => c.time);
    const values = curves.flatMap((c) => c.value);
    const xMin = Math.min(...times);
    const xMax = Math.max(...times);
    const useLog = metric === "kld" && values.every((v) => v > 0);

    let scale: Scale;
    let yTicks: number[] | undefined;
    let yTickLabels: string[] | undefined;
    if (useLog) {
      const logs = values.map((v) => Math.log10(v));
      const lo = Math.floor(Math.min(...logs));
      const hi = Math.ceil(Math.max(...logs));
      scale = new Scale(xMin, xMax, lo, hi === lo ? lo + 1 : hi, rect);
      yTicks = [];
      yTickLabels = [];
      for (let e = lo; e <= (hi === lo ? lo + 1 : hi); e++) {
        yTicks.push(e);
        yTickLabels.push(`1e${e}`);
      }
    } else {
      const vMax = Math.max(...values);
      const vMin = Math.min(0, Math.min(...values));
      scale = new Scale(xMin, xMax, vMin, vMax === vMin ? vMin + 1 : vMax * 1.05, rect);
      yTicks = niceTicks(scale.yMin, scale.yMax);
      yTickLabels = yTicks.map(tickLabel);
    }

    drawAxes(doc, scale, {
      title: METRIC_TITLE[metric] ?? metric,
      xLabel: "time",
      yLabel: metric,
      yTicks,
      yTickLabels,
    });

    const legend = curves.map((curve, i) => ({
      label: curve.filter,
      color: filterColor(curve.filter, i),
    }));
    curves.forEach((curve, i) => {
      const points: Array<[number, number]> = curve.time.map((t, j) => {
        const v = curve.value[j] as number;
        const yVal = useLog ? Math.log10(Math.max(v, 1e-300)) : v;
        return [scale.x(t), scale.y(yVal)];
      });
      doc.polyline(points, filterColor(curve.filter, i));
    });
    drawLegend(doc, rect.x + 8, rect.y + 14, legend);
  });

  return { svg: doc.toString(), warnings };
}
