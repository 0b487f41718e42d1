#!/usr/bin/env python3
"""Build and exhaustively verify emulators on many small random graphs.

Reports worst observed stretch (or additive surplus) per algorithm and
exits non-zero if any instance violates its guarantee.

    python scripts/stretch_check.py --graphs 50 --n 12 --fs 1,2 --ks 2,3
"""
import argparse
import sys
from collections import defaultdict

from ftem.experiments import ExperimentSpec, run


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--graphs", type=int, default=20)
    ap.add_argument("--n", type=int, default=12)
    ap.add_argument("--p", type=float, default=0.5)
    ap.add_argument("--fs", default="1,2")
    ap.add_argument("--ks", default="2,3")
    ap.add_argument("--algos", default="em5,emk,spanner,add2,add4")
    args = ap.parse_args(argv)

    fs = [int(x) for x in args.fs.split(",")]
    ks = [int(x) for x in args.ks.split(",")]
    worst = defaultdict(float)
    failures = 0
    for seed in range(args.graphs):
        for algo in args.algos.split(","):
            additive = algo.startswith("add")
            gen = f"gnp:n={args.n}:p={args.p}:seed={seed}:w={'unit' if additive else 'distinct'}"
            for f in fs:
                for k in ([3] if algo == "em5" or additive else ks):
                    res = run(ExperimentSpec(gen, algo, f, k=k, seed=seed, verify=True))
                    rep = res.report
                    measure = rep.worst_surplus if additive else rep.worst_stretch
                    key = (algo, f, None if additive else k)
                    worst[key] = max(worst[key], measure)
                    if not rep.passed:
                        failures += 1
                        print(f"FAIL {gen} {algo} f={f} k={k}: {rep.violations[0]}")
    for (algo, f, k), value in sorted(worst.items(), key=lambda kv: str(kv[0])):
        label = "surplus" if k is None else f"stretch (bound {2 * k - 1})"
        print(f"{algo:<8} f={f} {'' if k is None else f'k={k} '}worst {label}: {value:.3f}")
    print("PASS" if failures == 0 else f"FAIL ({failures} instances)")
    return 0 if failures == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
