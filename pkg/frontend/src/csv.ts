/**
 * CSV readers for the filter pipeline's output files.
 *
 * Three shapes are understood:
 *  - metrics CSV: columns (step, time, filter, metric, value, M, K, seed),
 *  - density dump: columns (x, p) for one time step,
 *  - any of them may carry a leading `# config=<hash>` provenance line.
 *
 * Values never contain commas or quotes (they are numbers and plain
 * identifiers written by the pipeline), so a plain split is exact here.
 */

export class SchemaError extends Error {}

export interface ParsedCsv {
  configHash: string;
  header: string[];
  rows: string[][];
}

export interface MetricRow {
  step: number;
  time: number;
  filter: string;
  metric: string;
  value: number;
  m: number;
  k: number;
  seed: number;
}

export interface MetricsFile {
  configHash: string;
  rows: MetricRow[];
  filters: string[];
  metrics: string[];
}

export interface DensityFile {
  configHash: string;
  x: number[];
  p: number[];
  /** Source path, used for panel labels. */
  path: string;
}

export function parseCsv(text: string): ParsedCsv {
  const lines = text.split(/\r?\n/).filter((line) => line.length > 0);
  let configHash = "";
  let start = 0;
  const first = lines[0];
  if (first !== undefined && first.startsWith("#")) {
    const match = /^# config=([0-9a-f]*)$/.exec(first.trim());
    configHash = match?.[1] ?? "";
    start = 1;
  }
  const headerLine = lines[start];
  if (headerLine === undefined) {
    throw new SchemaError("empty CSV: no header row");
  }
  const header = headerLine.split(",").map((c) => c.trim());
  const rows: string[][] = [];
  for (let i = start + 1; i < lines.length; i++) {
    const line = lines[i];
    if (line === undefined || line.startsWith("#")) continue;
    const cells = line.split(",").map((c) => c.trim());
    if (cells.length !== header.length) {
      throw new SchemaError(
        `row ${i + 1} has ${cells.length} cells, header has ${header.length}`,
      );
    }
    rows.push(cells);
  }
  return { configHash, header, rows };
}

function numberCell(cells: string[], index: number, name: string, row: number): number {
  const raw = cells[index];
  const value = Number(raw);
  if (raw === undefined || raw === "" || Number.isNaN(value)) {
    throw new SchemaError(`row ${row}: column "${name}" is not a number: ${raw}`);
  }
  return value;
}

const METRIC_COLUMNS = ["step", "time", "filter", "metric", "value", "M", "K", "seed"];

export function parseMetricsCsv(text: string): MetricsFile {
  const parsed = parseCsv(text);
  for (const column of METRIC_COLUMNS) {
    if (!parsed.header.includes(column)) {
      throw new SchemaError(`metrics CSV is missing column "${column}"`);
    }
  }
  if (parsed.rows.length === 0) {
    throw new SchemaError("metrics CSV has no data rows");
  }
  const at = (name: string) => parsed.header.indexOf(name);
  const iStep = at("step"), iTime = at("time"), iFilter = at("filter");
  const iMetric = at("metric"), iValue = at("value");
  const iM = at("M"), iK = at("K"), iSeed = at("seed");
  const rows: MetricRow[] = [];
  const filters: string[] = [];
  const metrics: string[] = [];
  parsed.rows.forEach((cells, index) => {
    const row = index + 1;
    const filter = cells[iFilter] ?? "";
    const metric = cells[iMetric] ?? "";
    if (filter === "" || metric === "") {
      throw new SchemaError(`row ${row}: empty filter or metric name`);
    }
    rows.push({
      step: numberCell(cells, iStep, "step", row),
      time: numberCell(cells, iTime, "time", row),
      filter,
      metric,
      value: numberCell(cells, iValue, "value", row),
      m: numberCell(cells, iM, "M", row),
      k: numberCell(cells, iK, "K", row),
      seed: numberCell(cells, iSeed, "seed", row),
    });
    if (!filters.includes(filter)) filters.push(filter);
    if (!metrics.includes(metric)) metrics.push(metric);
  });
  return { configHash: parsed.configHash, rows, filters, metrics };
}

export function parseDensityCsv(text: string, path = ""): DensityFile {
  const parsed = parseCsv(text);
  if (parsed.header.length !== 2 || parsed.header[0] !== "x" || parsed.header[1] !== "p") {
    throw new SchemaError(
      `density CSV must have header "x,p", got "${parsed.header.join(",")}"`,
    );
  }
  if (parsed.rows.length < 2) {
    throw new SchemaError("density CSV needs at least two rows");
  }
  const x: number[] = [];
  const p: number[] = [];
  parsed.rows.forEach((cells, index) => {
    x.push(numberCell(cells, 0, "x", index + 1));
    p.push(numberCell(cells, 1, "p", index + 1));
  });
  for (let i = 1; i < x.length; i++) {
    if (!((x[i] as number) > (x[i - 1] as number))) {
      throw new SchemaError(`density CSV x values must be increasing (row ${i + 1})`);
    }
  }
  return { configHash: parsed.configHash, x, p, path };
}

/** Per-step series of one (filter, metric) pair, ordered by step. */
export function series(
  file: MetricsFile,
  filter: string,
  metric: string,
): { time: number[]; value: number[] } {
  const picked = file.rows
    .filter((r) => r.filter === filter && r.metric === metric)
    .sort((a, b) => a.step - b.step);
  return {
    time: picked.map((r) => r.time),
    value: picked.map((r) => r.value),
  };
}
