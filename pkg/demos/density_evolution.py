#!/usr/bin/env python3
"""Dump the filtering density of a trained run at several time steps.

Uses the checkpoints produced by demos/quickstart_linear.py (run that
first), conditions them on one fresh observation sequence, and writes one
normalized (x, p) CSV per step under demos/out/density.  The CSVs are
exactly what the plotting frontend consumes:

    cd frontend && npm run build && node dist/cli.js render \
        --kind density --in ../demos/out/density/step*.csv --out density.svg
"""

import glob
import os
import subprocess
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

HERE = os.path.dirname(os.path.abspath(__file__))
CKPT = os.path.join(HERE, "out", "quickstart", "checkpoints")
DATA = os.path.join(HERE, "out", "quickstart", "train.npz")
OUT = os.path.join(HERE, "out", "density")


def main() -> int:
    if not glob.glob(os.path.join(CKPT, "step_*.bin")):
        print("no checkpoints found - run demos/quickstart_linear.py first")
        return 1
    os.makedirs(OUT, exist_ok=True)
    steps = sorted(
        int(os.path.basename(p)[5:8])
        for p in glob.glob(os.path.join(CKPT, "step_*.bin"))
    )
    for step in steps:
        out_csv = os.path.join(OUT, f"step{step}.csv")
        cmd = [
            sys.executable, "-m", "energyfilter.cli", "density-dump",
            "--checkpoint", CKPT, "--step", str(step),
            "--obs", DATA, "--obs-index", "0",
            "--grid=-10:10:4001", "--refine-rtol=1e-3", "--out", out_csv,
        ]
        subprocess.run(cmd, check=True, cwd=os.path.join(HERE, ".."))
        print(f"step {step}: {out_csv}")
    print(f"\n{len(steps)} density dumps under {OUT}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
