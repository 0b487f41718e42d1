#!/usr/bin/env python3
"""Greedy spanner vs. emulator size as the fault budget grows.

Writes one CSV row per (f, seed, algorithm) and prints a per-f summary of
mean sizes and the emulator/spanner ratio with its standard error.

    python scripts/size_tradeoff_sweep.py --n 200 --fs 1,2,4,8,16 --seeds 5
"""
import argparse
import math
import statistics
import sys
from pathlib import Path

from ftem.experiments import ExperimentSpec, rows_to_csv, run
from ftem.oracle import Method


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=200)
    ap.add_argument("--density", type=int, default=4, help="edges per vertex (m = density * n)")
    ap.add_argument("--k", type=int, default=3)
    ap.add_argument("--fs", default="1,2,4,8,16")
    ap.add_argument("--seeds", type=int, default=5)
    ap.add_argument("--weights", choices=("unit", "uniform", "distinct"), default="unit")
    ap.add_argument("--mode", choices=("approx", "exhaustive"), default="approx")
    ap.add_argument("--csv", type=Path, help="also write raw rows here")
    args = ap.parse_args(argv)

    fs = [int(x) for x in args.fs.split(",")]
    rows = []
    print(f"{'f':>3} {'spanner':>9} {'emulator':>9} {'em edges':>9} {'ratio':>7} {'se':>7}")
    for f in fs:
        ratios, sp, em, extra = [], [], [], []
        for seed in range(args.seeds):
            gen = f"gnm:n={args.n}:m={args.density * args.n}:seed={seed}:w={args.weights}"
            common = dict(f=f, k=args.k, seed=seed, mode=Method(args.mode.upper()))
            s = run(ExperimentSpec(gen, "spanner", **common))
            e = run(ExperimentSpec(gen, "emk", **common), s.graph)
            rows += [s.row(), e.row()]
            sp.append(s.emulator.size())
            em.append(e.emulator.size())
            extra.append(len(e.emulator.emulator_edges))
            ratios.append(em[-1] / sp[-1])
        se = statistics.stdev(ratios) / math.sqrt(len(ratios)) if len(ratios) > 1 else 0.0
        print(f"{f:>3} {statistics.mean(sp):>9.1f} {statistics.mean(em):>9.1f} "
              f"{statistics.mean(extra):>9.1f} {statistics.mean(ratios):>7.4f} {se:>7.4f}",
              flush=True)
    if args.csv:
        args.csv.write_text(rows_to_csv(rows))
    return 0


if __name__ == "__main__":
    sys.exit(main())
