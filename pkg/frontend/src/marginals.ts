/**
 * Marginal-comparison figure: a 2x2 grid of one-dimensional marginal
 * densities for a four-dimensional state.  The left column holds the
 * observed dimensions, the right column the unobserved ones; input
 * files are taken in the order (top-left, bottom-left, top-right,
 * bottom-right).
 */

import { DensityFile, SchemaError } from "./csv.js";
import { COLORS } from "./colors.js";
import { SvgDocument, Scale, Rect, drawAxes, drawLegend, LegendEntry } from "./svg.js";

const PANEL = { width: 250, height: 190 };
const MARGIN = { left: 60, right: 16, top: 40, bottom: 48 };

export interface MarginalsOptions {
  /** Baseline marginals overlaid per panel, matched by order. */
  refs?: DensityFile[];
}

function panelTitle(file: DensityFile, index: number): string {
  const base = file.path.split("/").pop() ?? "";
  const match = /dim(\d+)/.exec(base);
  const dim = match ? Number(match[1]) : index;
  const column = index < 2 ? "observed" : "unobserved";
  return `dimension ${dim} (${column})`;
}

export function renderMarginals(files: DensityFile[], options: MarginalsOptions = {}): {
  svg: string;
  warnings: string[];
} {
  if (files.length !== 4) {
    throw new SchemaError(`marginal figure needs exactly 4 inputs, got ${files.length}`);
  }
  const warnings: string[] = [];
  const refs = options.refs ?? [];
  const hash = files[0]?.configHash ?? "";

  const cellW = MARGIN.left + PANEL.width + MARGIN.right;
  const cellH = MARGIN.top + PANEL.height + MARGIN.bottom;
  const doc = new SvgDocument(2 * cellW, 2 * cellH);
  if (hash) doc.comment(`config=${hash}`);

  files.forEach((file, index) => {
    const column = index < 2 ? 0 : 1;
    const row = index % 2;
    const rect: Rect = {
      x: column * cellW + MARGIN.left,
      y: row * cellH + MARGIN.top,
      width: PANEL.width,
      height: PANEL.height,
    };
    const ref = refs[index];
    if (ref && ref.configHash && hash && ref.configHash !== hash) {
      warnings.push(`reference ${ref.path} has a different config hash`);
    }
    const xMin = Math.min(file.x[0] as number, ref ? (ref.x[0] as number) : Infinity);
    const xMax = Math.max(
      file.x[file.x.length - 1] as number,
      ref ? (ref.x[ref.x.length - 1] as number) : -Infinity,
    );
    const pMax = Math.max(...file.p, ...(ref ? ref.p : [0]));
    const scale = new Scale(xMin, xMax, 0, pMax * 1.08 || 1, rect);
    drawAxes(doc, scale, {
      title: panelTitle(file, index),
      xLabel: "x",
      yLabel: "p(x)",
    });
    const legend: LegendEntry[] = [{ label: "filter", color: COLORS.ebds }];
    doc.polyline(
      file.x.map((x, j) => [scale.x(x), scale.y(file.p[j] as number)]),
      COLORS.ebds,
    );
    if (ref) {
      doc.polyline(
        ref.x.map((x, j) => [scale.x(x), scale.y(ref.p[j] as number)]),
        COLORS.baseline,
        1.5,
        "5 3",
      );
      legend.push({ label: "baseline", color: COLORS.baseline, dash: "5 3" });
    }
    drawLegend(doc, rect.x + 6, rect.y + 12, legend);
  });

  return { svg: doc.toString(), warnings };
}
