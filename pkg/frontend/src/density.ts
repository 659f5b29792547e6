/**
 * Density figure: a waterfall of the filtering density over time plus
 * three snapshot panels (first, middle, last input) that can overlay a
 * reference density and the latent true state.
 *
 * Inputs are the (x, p) density dumps written by the pipeline, one file
 * per time step, passed in time order.
 */

import { DensityFile } from "./csv.js";
import { COLORS } from "./colors.js";
import { SvgDocument, Scale, Rect, drawAxes, drawLegend, LegendEntry } from "./svg.js";

const WATERFALL = { width: 380, height: 300 };
const SNAPSHOT = { width: 230, height: 170 };
const MARGIN = { left: 62, right: 24, top: 36, bottom: 48 };
const GAP = 26;

export interface DensityOptions {
  /** Reference dumps overlaid on the snapshot panels, matched by order. */
  refs?: DensityFile[];
  /** True state values marked on the snapshot panels, matched by order. */
  states?: number[];
}

function panelLabel(file: DensityFile, index: number): string {
  if (!file.path) return `step ${index}`;
  const base = file.path.split("/").pop() ?? file.path;
  return base.replace(/\.[^.]*$/, "");
}

function snapshotIndices(count: number): number[] {
  if (count <= 3) return Array.from({ length: count }, (_, i) => i);
  return [0, Math.floor((count - 1) / 2), count - 1];
}

export function renderDensity(files: DensityFile[], options: DensityOptions = {}): {
  svg: string;
  warnings: string[];
} {
  const warnings: string[] = [];
  const refs = options.refs ?? [];
  const states = options.states ?? [];
  const snaps = snapshotIndices(files.length);

  const xMin = Math.min(...files.map((f) => f.x[0] as number));
  const xMax = Math.max(...files.map((f) => f.x[f.x.length - 1] as number));
  const pMax = Math.max(...files.flatMap((f) => f.p));

  const width =
    MARGIN.left + WATERFALL.width + GAP + MARGIN.left + SNAPSHOT.width + MARGIN.right;
  const height = Math.max(
    MARGIN.top + WATERFALL.height + MARGIN.bottom,
    snaps.length * (MARGIN.top + SNAPSHOT.height + MARGIN.bottom),
  );
  const doc = new SvgDocument(width, height);
  const hash = files[0]?.configHash ?? "";
  if (hash) doc.comment(`config=${hash}`);

  // Waterfall: one curve per step, offset upward with time.  The offset
  // leaves each curve room for about two offsets of peak height.
  const rect: Rect = {
    x: MARGIN.left,
    y: MARGIN.top,
    width: WATERFALL.width,
    height: WATERFALL.height,
  };
  const offsetUnit = files.length > 1 ? 1 / (files.length - 1) : 0;
  const curveScale = offsetUnit > 0 ? (2 * offsetUnit) / pMax : 1 / pMax;
  const yTop = 1 + (files[files.length - 1]?.p ?? []).reduce((a, b) => Math.max(a, b), 0) * curveScale;
  const scale = new Scale(xMin, xMax, 0, Math.max(yTop, 1e-9), rect);
  drawAxes(doc, scale, {
    title: "Density evolution",
    xLabel: "x",
    yLabel: "time (offset)",
    yTicks: [],
    yTickLabels: [],
  });
  files.forEach((file, index) => {
    const offset = index * offsetUnit;
    const points: Array<[number, number]> = file.x.map((x, j) => [
      scale.x(x),
      scale.y(offset + (file.p[j] as number) * curveScale),
    ]);
    doc.polyline(points, COLORS.ebds, 1.2);
    doc.text(rect.x + rect.width + 4, scale.y(offset) + 3.5, panelLabel(file, index), {
      size: 8,
      fill: "#606060",
    });
  });

  // Snapshot column.
  const snapX = MARGIN.left + WATERFALL.width + GAP + MARGIN.left;
  snaps.forEach((fileIndex, row) => {
    const file = files[fileIndex] as DensityFile;
    const ref = refs[row];
    const state = states[row];
    const rectSnap: Rect = {
      x: snapX,
      y: MARGIN.top + row * (MARGIN.top + SNAPSHOT.height + MARGIN.bottom),
      width: SNAPSHOT.width,
      height: SNAPSHOT.height,
    };
    const localMax = Math.max(...file.p, ...(ref ? ref.p : [0]));
    const snapScale = new Scale(xMin, xMax, 0, localMax * 1.08 || 1, rectSnap);
    drawAxes(doc, snapScale, {
      title: panelLabel(file, fileIndex),
      xLabel: "x",
      yLabel: "p(x)",
    });
    const legend: LegendEntry[] = [{ label: "filter", color: COLORS.ebds }];
    doc.polyline(
      file.x.map((x, j) => [snapScale.x(x), snapScale.y(file.p[j] as number)]),
      COLORS.ebds,
    );
    if (ref) {
      if (ref.configHash && hash && ref.configHash !== hash) {
        warnings.push(`reference ${ref.path} has a different config hash`);
      }
      doc.polyline(
        ref.x.map((x, j) => [snapScale.x(x), snapScale.y(ref.p[j] as number)]),
        COLORS.reference,
        1.5,
        "5 3",
      );
      legend.push({ label: "reference", color: COLORS.reference, dash: "5 3" });
    }
    if (state !== undefined) {
      doc.line(
        snapScale.x(state),
        rectSnap.y,
        snapScale.x(state),
        rectSnap.y + rectSnap.height,
        COLORS.trueState,
        1.5,
        "2 2",
      );
      legend.push({ label: "true state", color: COLORS.trueState, dash: "2 2" });
    }
    drawLegend(doc, rectSnap.x + 6, rectSnap.y + 12, legend);
  });

  return { svg: doc.toString(), warnings };
}
