import { mkdtempSync, readFileSync, rmSync, writeFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";
import { afterAll, beforeAll, describe, expect, it, vi } from "vitest";
import { run } from "../src/cli.js";

let dir: string;

function gaussianDump(mean: number): string {
  const lines = ["# config=feed0123", "x,p"];
  for (let i = 0; i <= 60; i++) {
    const x = -3 + i * 0.1;
    const p = Math.exp(-0.5 * (x - mean) ** 2) / Math.sqrt(2 * Math.PI);
    lines.push(`${x},${p}`);
  }
  return lines.join("\n") + "\n";
}

beforeAll(() => {
  dir = mkdtempSync(join(tmpdir(), "plots-"));
  writeFileSync(join(dir, "m.csv"), [
    "# config=feed0123",
    "step,time,filter,metric,value,M,K,seed",
    "1,0.01,ebds,mae,0.5,3,50,7",
    "2,0.02,ebds,mae,0.45,3,50,7",
    "",
  ].join("\n"));
  for (let i = 0; i < 4; i++) {
    writeFileSync(join(dir, `d${i}.csv`), gaussianDump(0.2 * i));
  }
  writeFileSync(join(dir, "bad.csv"), "a,b\n1,2\n");
  writeFileSync(join(dir, "empty.csv"), "");
});

afterAll(() => {
  rmSync(dir, { recursive: true, force: true });
});

describe("render command", () => {
  it("renders metrics and exits 0", () => {
    const out = join(dir, "metrics.svg");
    expect(run(["render", "--kind", "metrics", "--in", join(dir, "m.csv"), "--out", out])).toBe(0);
    expect(readFileSync(out, "utf8")).toContain("</svg>");
  });

  it("renders a density figure from several dumps", () => {
    const out = join(dir, "density.svg");
    const code = run([
      "render", "--kind", "density",
      "--in", join(dir, "d0.csv"), join(dir, "d1.csv"), join(dir, "d2.csv"),
      "--out", out,
    ]);
    expect(code).toBe(0);
    expect(readFileSync(out, "utf8")).toContain("</svg>");
  });

  it("renders the four-panel marginal figure", () => {
    const out = join(dir, "marginals.svg");
    const code = run([
      "render", "--kind", "marginals",
      "--in", ...[0, 1, 2, 3].map((i) => join(dir, `d${i}.csv`)),
      "--out", out,
    ]);
    expect(code).toBe(0);
    expect(readFileSync(out, "utf8")).toContain("dimension 0");
  });

  it("produces identical bytes when run twice", () => {
    const a = join(dir, "a.svg");
    const b = join(dir, "b.svg");
    const argv = (out: string) => [
      "render", "--kind", "density", "--in", join(dir, "d0.csv"), "--out", out,
    ];
    expect(run(argv(a))).toBe(0);
    expect(run(argv(b))).toBe(0);
    expect(readFileSync(a)).toEqual(readFileSync(b));
  });

  it("exits 2 on a schema error (empty CSV)", () => {
    const spy = vi.spyOn(process.stderr, "write").mockImplementation(() => true);
    const code = run([
      "render", "--kind", "metrics", "--in", join(dir, "empty.csv"),
      "--out", join(dir, "x.svg"),
    ]);
    spy.mockRestore();
    expect(code).toBe(2);
  });

  it("exits 2 on a density CSV with the wrong header", () => {
    const spy = vi.spyOn(process.stderr, "write").mockImplementation(() => true);
    const code = run([
      "render", "--kind", "density", "--in", join(dir, "bad.csv"),
      "--out", join(dir, "x.svg"),
    ]);
    spy.mockRestore();
    expect(code).toBe(2);
  });

  it("exits 2 on usage errors", () => {
    const spy = vi.spyOn(process.stderr, "write").mockImplementation(() => true);
    expect(run(["render", "--kind", "waterfall", "--in", "a", "--out", "b"])).toBe(2);
    expect(run(["rennder"])).toBe(2);
    expect(run(["render", "--kind", "metrics", "--out", "b"])).toBe(2);
    spy.mockRestore();
  });

  it("exits 1 when an input file does not exist", () => {
    const spy = vi.spyOn(process.stderr, "write").mockImplementation(() => true);
    const code = run([
      "render", "--kind", "metrics", "--in", join(dir, "nope.csv"),
      "--out", join(dir, "x.svg"),
    ]);
    spy.mockRestore();
    expect(code).toBe(1);
  });

  it("prints warnings for missing series but still succeeds", () => {
    const withGap = join(dir, "gap.csv");
    writeFileSync(withGap, [
      "step,time,filter,metric,value,M,K,seed",
      "1,0.01,ebds,mae,0.5,3,50,7",
      "1,0.01,ebds,kld,0.01,3,50,7",
      "1,0.01,kf,mae,0.4,3,50,7",
      "",
    ].join("\n"));
    const messages: string[] = [];
    const spy = vi.spyOn(process.stderr, "write").mockImplementation((chunk) => {
      messages.push(String(chunk));
      return true;
    });
    const code = run([
      "render", "--kind", "metrics", "--in", withGap, "--out", join(dir, "gap.svg"),
    ]);
    spy.mockRestore();
    expect(code).toBe(0);
    expect(messages.join("")).toContain("warning:");
  });
});
