/**
 * Minimal deterministic SVG builder.
 *
 * Every coordinate is rounded to a fixed number of decimals and the
 * document carries no timestamps, random identifiers, or environment
 * state, so rendering the same inputs twice produces identical bytes.
 */

const PRECISION = 3;

export function fmt(value: number): string {
  if (!Number.isFinite(value)) return "0";
  const rounded = value.toFixed(PRECISION);
  // Normalize negative zero so output bytes do not depend on sign noise.
  return rounded === "-0." + "0".repeat(PRECISION) ? (0).toFixed(PRECISION) : rounded;
}

export function escapeText(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

export interface Rect {
  x: number;
  y: number;
  width: number;
  height: number;
}

/** Maps data coordinates into a pixel rectangle (y axis flipped). */
export class Scale {
  constructor(
    readonly xMin: number,
    readonly xMax: number,
    readonly yMin: number,
    readonly yMax: number,
    readonly rect: Rect,
  ) {}

  x(v: number): number {
    const span = this.xMax - this.xMin || 1;
    return this.rect.x + ((v - this.xMin) / span) * this.rect.width;
  }

  y(v: number): number {
    const span = this.yMax - this.yMin || 1;
    return this.rect.y + this.rect.height - ((v - this.yMin) / span) * this.rect.height;
  }
}

/** Round-valued tick positions covering [lo, hi] with about n steps. */
export function niceTicks(lo: number, hi: number, n = 5): number[] {
  if (!(hi > lo)) return [lo];
  const rawStep = (hi - lo) / Math.max(n, 1);
  const power = Math.pow(10, Math.floor(Math.log10(rawStep)));
  const candidates = [1, 2, 2.5, 5, 10];
  let step = candidates[candidates.length - 1]! * power;
  for (const c of candidates) {
    if (c * power >= rawStep) {
      step = c * power;
      break;
    }
  }
  const ticks: number[] = [];
  const first = Math.ceil(lo / step - 1e-9);
  for (let k = first; k * step <= hi + step * 1e-9; k++) {
    // Multiples of a decimal step accumulate binary noise (3 * 0.2 =
    // 0.6000000000000001); squeeze it out so tick values are exact.
    ticks.push(Number((k * step).toPrecision(12)));
  }
  return ticks;
}

export function tickLabel(value: number): string {
  if (value === 0) return "0";
  const abs = Math.abs(value);
  if (abs >= 1e4 || abs < 1e-3) return value.toExponential(1);
  const text = value.toPrecision(4);
  return text.includes(".") ? text.replace(/\.?0+$/, "") : text;
}

export class SvgDocument {
  private parts: string[] = [];

  constructor(readonly width: number, readonly height: number) {
    this.parts.push(
      `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" height="${height}" ` +
        `viewBox="0 0 ${width} ${height}" font-family="Helvetica, Arial, sans-serif">`,
    );
    this.parts.push(`<rect x="0" y="0" width="${width}" height="${height}" fill="#ffffff"/>`);
  }

  line(x1: number, y1: number, x2: number, y2: number, stroke: string, width = 1, dash = ""): void {
    const dashAttr = dash ? ` stroke-dasharray="${dash}"` : "";
    this.parts.push(
      `<line x1="${fmt(x1)}" y1="${fmt(y1)}" x2="${fmt(x2)}" y2="${fmt(y2)}" ` +
        `stroke="${stroke}" stroke-width="${fmt(width)}"${dashAttr}/>`,
    );
  }

  polyline(points: Array<[number, number]>, stroke: string, width = 1.5, dash = ""): void {
    if (points.length === 0) return;
    const path = points.map(([x, y]) => `${fmt(x)},${fmt(y)}`).join(" ");
    const dashAttr = dash ? ` stroke-dasharray="${dash}"` : "";
    this.parts.push(
      `<polyline points="${path}" fill="none" stroke="${stroke}" ` +
        `stroke-width="${fmt(width)}" stroke-linejoin="round"${dashAttr}/>`,
    );
  }

  rect(r: Rect, stroke: string, fill = "none"): void {
    this.parts.push(
      `<rect x="${fmt(r.x)}" y="${fmt(r.y)}" width="${fmt(r.width)}" ` +
        `height="${fmt(r.height)}" stroke="${stroke}" fill="${fill}"/>`,
    );
  }

  circle(cx: number, cy: number, r: number, fill: string): void {
    this.parts.push(`<circle cx="${fmt(cx)}" cy="${fmt(cy)}" r="${fmt(r)}" fill="${fill}"/>`);
  }

  text(
    x: number,
    y: number,
    content: string,
    options: { size?: number; anchor?: string; fill?: string; rotate?: number } = {},
  ): void {
    const size = options.size ?? 11;
    const anchor = options.anchor ?? "start";
    const fill = options.fill ?? "#000000";
    const transform =
      options.rotate !== undefined
        ? ` transform="rotate(${fmt(options.rotate)} ${fmt(x)} ${fmt(y)})"`
        : "";
    this.parts.push(
      `<text x="${fmt(x)}" y="${fmt(y)}" font-size="${size}" text-anchor="${anchor}" ` +
        `fill="${fill}"${transform}>${escapeText(content)}</text>`,
    );
  }

  comment(content: string): void {
    this.parts.push(`<!-- ${content.replace(/--/g, "- -")} -->`);
  }

  toString(): string {
    return this.parts.join("\n") + "\n</svg>\n";
  }
}

export interface AxesOptions {
  xLabel?: string;
  yLabel?: string;
  title?: string;
  /** Use a log10 y axis: tick values are given in data space already. */
  yTicks?: number[];
  xTicks?: number[];
  yTickLabels?: string[];
}

/** Draws the frame, ticks, grid lines, and labels for one panel. */
export function drawAxes(doc: SvgDocument, scale: Scale, options: AxesOptions = {}): void {
  const r = scale.rect;
  const xTicks = options.xTicks ?? niceTicks(scale.xMin, scale.xMax);
  const yTicks = options.yTicks ?? niceTicks(scale.yMin, scale.yMax);
  xTicks.forEach((t) => {
    if (t < scale.xMin - 1e-9 || t > scale.xMax + 1e-9) return;
    const px = scale.x(t);
    doc.line(px, r.y, px, r.y + r.height, "#e0e0e0", 0.5);
    doc.line(px, r.y + r.height, px, r.y + r.height + 4, "#000000", 1);
    doc.text(px, r.y + r.height + 16, tickLabel(t), { anchor: "middle", size: 10 });
  });
  yTicks.forEach((t, i) => {
    if (t < scale.yMin - 1e-9 || t > scale.yMax + 1e-9) return;
    const py = scale.y(t);
    doc.line(r.x, py, r.x + r.width, py, "#e0e0e0", 0.5);
    doc.line(r.x - 4, py, r.x, py, "#000000", 1);
    const label = options.yTickLabels?.[i] ?? tickLabel(t);
    doc.text(r.x - 7, py + 3.5, label, { anchor: "end", size: 10 });
  });
  doc.rect(r, "#000000");
  if (options.title) {
    doc.text(r.x + r.width / 2, r.y - 8, options.title, { anchor: "middle", size: 12 });
  }
  if (options.xLabel) {
    doc.text(r.x + r.width / 2, r.y + r.height + 32, options.xLabel, {
      anchor: "middle",
      size: 11,
    });
  }
  if (options.yLabel) {
    doc.text(r.x - 40, r.y + r.height / 2, options.yLabel, {
      anchor: "middle",
      size: 11,
      rotate: -90,
    });
  }
}

export interface LegendEntry {
  label: string;
  color: string;
  dash?: string;
}

export function drawLegend(doc: SvgDocument, x: number, y: number, entries: LegendEntry[]): void {
  entries.forEach((entry, i) => {
    const ly = y + i * 16;
    doc.line(x, ly, x + 22, ly, entry.color, 2, entry.dash ?? "");
    doc.text(x + 28, ly + 3.5, entry.label, { size: 10 });
  });
}
