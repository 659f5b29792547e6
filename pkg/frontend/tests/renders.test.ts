import { describe, expect, it } from "vitest";
import { parseDensityCsv, parseMetricsCsv } from "../src/csv.js";
import { renderMetrics } from "../src/metricsPanels.js";
import { renderDensity } from "../src/density.js";
import { renderMarginals } from "../src/marginals.js";
import { COLORS } from "../src/colors.js";

function metricsText(rows: string[]): string {
  return ["step,time,filter,metric,value,M,K,seed", ...rows, ""].join("\n");
}

function gaussianDump(mean: number, hash = "abcd"): string {
  const lines = [`# config=${hash}`, "x,p"];
  for (let i = 0; i <= 80; i++) {
    const x = -4 + i * 0.1;
    const p = Math.exp(-0.5 * (x - mean) ** 2) / Math.sqrt(2 * Math.PI);
    lines.push(`${x},${p}`);
  }
  return lines.join("\n") + "\n";
}

describe("renderMetrics", () => {
  it("renders one panel per metric with per-filter colors", () => {
    const file = parseMetricsCsv(metricsText([
      "1,0.01,ebds,mae,0.5,3,50,7",
      "2,0.02,ebds,mae,0.45,3,50,7",
      "1,0.01,kf,mae,0.4,3,50,7",
      "2,0.02,kf,mae,0.41,3,50,7",
      "1,0.01,pf,mae,0.6,3,50,7",
      "2,0.02,pf,mae,0.55,3,50,7",
    ]));
    const { svg, warnings } = renderMetrics(file);
    expect(warnings).toEqual([]);
    expect(svg).toContain(COLORS.ebds);
    expect(svg).toContain(COLORS.reference);
    expect(svg).toContain(COLORS.baseline);
    expect(svg).toContain("Mean absolute error");
  });

  it("renders a flat line for a single constant series", () => {
    const file = parseMetricsCsv(metricsText([
      "1,0.01,ebds,fme,0.25,1,10,0",
      "2,0.02,ebds,fme,0.25,1,10,0",
      "3,0.03,ebds,fme,0.25,1,10,0",
    ]));
    const { svg, warnings } = renderMetrics(file);
    expect(warnings).toEqual([]);
    const match = /<polyline points="([^"]+)"/.exec(svg);
    expect(match).not.toBeNull();
    const ys = new Set(
      (match![1] as string).split(" ").map((pt) => pt.split(",")[1]),
    );
    expect(ys.size).toBe(1);
  });

  it("warns about a filter missing one metric but still renders", () => {
    const file = parseMetricsCsv(metricsText([
      "1,0.01,ebds,mae,0.5,3,50,7",
      "1,0.01,ebds,kld,0.001,3,50,7",
      "1,0.01,kf,mae,0.4,3,50,7",
    ]));
    const { svg, warnings } = renderMetrics(file);
    expect(warnings).toContain('no "kld" series for filter "kf"');
    expect(svg).toContain("<svg");
  });

  it("uses a log axis for positive kld series", () => {
    const file = parseMetricsCsv(metricsText([
      "1,0.01,ebds,kld,0.001,3,50,7",
      "2,0.02,ebds,kld,0.1,3,50,7",
    ]));
    const { svg } = renderMetrics(file);
    expect(svg).toContain("1e-3");
    expect(svg).toContain("1e-1");
  });
});

describe("renderDensity", () => {
  it("renders a single-step dump as one curve plus one snapshot", () => {
    const file = parseDensityCsv(gaussianDump(0), "step1.csv");
    const { svg, warnings } = renderDensity([file]);
    expect(warnings).toEqual([]);
    const curves = svg.match(/<polyline/g) ?? [];
    expect(curves.length).toBe(2);
    expect(svg).toContain("step1");
  });

  it("picks first, middle, and last snapshots and overlays reference and state", () => {
    const files = [0, 0.3, 0.6, 0.9, 1.2].map((m, i) =>
      parseDensityCsv(gaussianDump(m), `step${i}.csv`),
    );
    const refs = [0, 0.6, 1.2].map((m) => parseDensityCsv(gaussianDump(m), "ref.csv"));
    const { svg, warnings } = renderDensity(files, { refs, states: [0.1, 0.7, 1.3] });
    expect(warnings).toEqual([]);
    expect(svg).toContain("step0");
    expect(svg).toContain("step2");
    expect(svg).toContain("step4");
    expect(svg).toContain(COLORS.reference);
    expect(svg).toContain(COLORS.trueState);
    expect(svg).toContain("true state");
  });

  it("warns when a reference carries a different config hash", () => {
    const file = parseDensityCsv(gaussianDump(0, "aaaa"), "a.csv");
    const ref = parseDensityCsv(gaussianDump(0, "bbbb"), "b.csv");
    const { warnings } = renderDensity([file], { refs: [ref] });
    expect(warnings.some((w) => w.includes("config hash"))).toBe(true);
  });
});

describe("renderMarginals", () => {
  const four = () =>
    [0, 1, 2, 3].map((k) =>
      parseDensityCsv(gaussianDump(k * 0.2), `spring_dim0${k}.csv`),
    );

  it("lays out exactly four panels, observed dimensions on the left", () => {
    const { svg, warnings } = renderMarginals(four());
    expect(warnings).toEqual([]);
    expect(svg).toContain("dimension 0 (observed)");
    expect(svg).toContain("dimension 1 (observed)");
    expect(svg).toContain("dimension 2 (unobserved)");
    expect(svg).toContain("dimension 3 (unobserved)");
  });

  it("rejects any other input count", () => {
    expect(() => renderMarginals(four().slice(0, 3))).toThrow(/exactly 4/);
  });

  it("overlays baselines in the baseline color", () => {
    const { svg } = renderMarginals(four(), { refs: four() });
    expect(svg).toContain(COLORS.baseline);
    expect(svg).toContain("baseline");
  });
});
