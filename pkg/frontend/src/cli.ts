/**
 * Command line for rendering figure SVGs from the pipeline's CSVs.
 *
 * Usage:
 *   render --kind metrics   --in metrics.csv --out figure.svg
 *   render --kind density   --in step1.csv step2.csv ... --out figure.svg
 *                           [--ref ref1.csv ...] [--state x1 x2 x3]
 *   render --kind marginals --in dim0.csv dim1.csv dim2.csv dim3.csv
 *                           --out figure.svg [--ref r0.csv ...]
 *
 * Exit codes: 0 success, 1 I/O or internal failure, 2 usage or schema error.
 */

import { readFileSync, writeFileSync } from "node:fs";
import process from "node:process";
import { parseDensityCsv, parseMetricsCsv, DensityFile, SchemaError } from "./csv.js";
import { renderMetrics } from "./metricsPanels.js";
import { renderDensity } from "./density.js";
import { renderMarginals } from "./marginals.js";

const USAGE =
  "usage: render --kind metrics|density|marginals --in <csv...> --out <svg> " +
  "[--ref <csv...>] [--state <x...>]";

class UsageError extends Error {}

interface Args {
  kind: string;
  inputs: string[];
  refs: string[];
  states: number[];
  out: string;
}

function parseArgs(argv: string[]): Args {
  if (argv[0] !== "render") {
    throw new UsageError(`unknown command "${argv[0] ?? ""}"; ${USAGE}`);
  }
  const args: Args = { kind: "", inputs: [], refs: [], states: [], out: "" };
  let current: string | null = null;
  for (let i = 1; i < argv.length; i++) {
    const token = argv[i] as string;
    if (token.startsWith("--")) {
      const eq = token.indexOf("=");
      const flag = eq >= 0 ? token.slice(0, eq) : token;
      if (!["--kind", "--in", "--out", "--ref", "--state"].includes(flag)) {
        throw new UsageError(`unknown flag "${flag}"; ${USAGE}`);
      }
      current = flag;
      if (eq >= 0) {
        consume(args, flag, token.slice(eq + 1));
        if (flag === "--kind" || flag === "--out") current = null;
      }
    } else {
      if (current === null) throw new UsageError(`unexpected argument "${token}"; ${USAGE}`);
      consume(args, current, token);
      if (current === "--kind" || current === "--out") current = null;
    }
  }
  if (!args.kind) throw new UsageError(`--kind is required; ${USAGE}`);
  if (!["metrics", "density", "marginals"].includes(args.kind)) {
    throw new UsageError(`--kind must be metrics, density, or marginals, got "${args.kind}"`);
  }
  if (args.inputs.length === 0) throw new UsageError(`--in needs at least one CSV; ${USAGE}`);
  if (!args.out) throw new UsageError(`--out is required; ${USAGE}`);
  return args;
}

function consume(args: Args, flag: string, value: string): void {
  if (flag === "--kind") args.kind = value;
  else if (flag === "--in") args.inputs.push(value);
  else if (flag === "--ref") args.refs.push(value);
  else if (flag === "--out") args.out = value;
  else {
    const x = Number(value);
    if (Number.isNaN(x)) throw new UsageError(`--state expects numbers, got "${value}"`);
    args.states.push(x);
  }
}

function readDensity(path: string): DensityFile {
  return parseDensityCsv(readFileSync(path, "utf8"), path);
}

export function run(argv: string[]): number {
  let args: Args;
  try {
    args = parseArgs(argv);
  } catch (error) {
    process.stderr.write(`${(error as Error).message}\n`);
    return 2;
  }
  try {
    let svg: string;
    let warnings: string[];
    if (args.kind === "metrics") {
      if (args.inputs.length !== 1) {
        throw new UsageError("metrics rendering takes exactly one --in CSV");
      }
      const file = parseMetricsCsv(readFileSync(args.inputs[0] as string, "utf8"));
      ({ svg, warnings } = renderMetrics(file));
    } else if (args.kind === "density") {
      const files = args.inputs.map(readDensity);
      const refs = args.refs.map(readDensity);
      ({ svg, warnings } = renderDensity(files, { refs, states: args.states }));
    } else {
      const files = args.inputs.map(readDensity);
      const refs = args.refs.map(readDensity);
      ({ svg, warnings } = renderMarginals(files, { refs }));
    }
    warnings.forEach((w) => process.stderr.write(`warning: ${w}\n`));
    writeFileSync(args.out, svg, "utf8");
    return 0;
  } catch (error) {
    if (error instanceof UsageError || error instanceof SchemaError) {
      process.stderr.write(`${(error as Error).message}\n`);
      return 2;
    }
    process.stderr.write(`${(error as Error).message}\n`);
    return 1;
  }
}

const invokedDirectly =
  process.argv[1] !== undefined &&
  import.meta.url.endsWith(process.argv[1].split("/").pop() as string);
if (invokedDirectly) {
  process.exit(run(process.argv.slice(2)));
}
