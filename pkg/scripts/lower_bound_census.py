#!/usr/bin/env python3
"""Size of lower-bound instances next to the greedy spanner built on them.

The blow-up families need many edges in any fault-tolerant spanner; this
prints their sizes, the girth of the base, and how much the greedy
construction keeps.

    python scripts/lower_bound_census.py --fs 4,8,12
"""
import argparse
import sys

from ftem.builders import build_vft_spanner_greedy, choose_params
from ftem.constructions import girth, heawood_graph, lb_instance_stretch2k1, lb_instance_stretch3
from ftem.oracle import Method


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--fs", default="4,8")
    args = ap.parse_args(argv)
    base = heawood_graph()
    print(f"base: n={base.n} m={base.m} girth={girth(base)}")
    print(f"{'family':<10} {'f':>3} {'n':>5} {'m':>6} {'kept':>6}")
    for f in (int(x) for x in args.fs.split(",")):
        for name, G, k in (("stretch3", lb_instance_stretch3(f, base), 2),
                           ("sqrt-f", lb_instance_stretch2k1(f, base, 2), 2)):
            params = choose_params(G.n, f, k, check_mode=Method.APPROX)
            H = build_vft_spanner_greedy(G, f, k, params)
            print(f"{name:<10} {f:>3} {G.n:>5} {G.m:>6} {len(H.spanner_edges):>6}", flush=True)
    return 0


if __name__ == "__main__":
    sys.exit(main())
