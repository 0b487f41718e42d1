"""Build/verify/sweep entry points shared by the CLI and scripts."""
from __future__ import annotations

import csv
import io
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from itertools import product
from typing import Sequence

from .additive import additive2_params, additive4_params, build_additive
from .builders import (
    build_vft_5_emulator,
    build_vft_emulator,
    build_vft_spanner_greedy,
    choose_params,
)
from .constructions import parse_generator
from .graph import EmulatorGraph, WeightedGraph
from .oracle import Method
from .verify import VerificationReport, verify_additive, verify_multiplicative

ALGORITHMS = ("spanner", "em5", "emk", "add2", "add4")

CSV_COLUMNS = (
    "generator", "algorithm", "n", "m", "f", "k", "d", "spanner_edges",
    "emulator_edges", "total_edges", "verified", "seed", "ms",
)


@dataclass(frozen=True)
class ExperimentSpec:
    generator: str
    algorithm: str
    f: int
    k: int = 3
    seed: int = 0
    verify: bool = False
    mode: Method = Method.EXHAUSTIVE
    polylog_const: float = 1.0
    c_b: float = 1.0
    c: float = 1.0
    budget: int | None = None

    def __post_init__(self):
        if self.algorithm not in ALGORITHMS:
            raise ValueError(f"unknown algorithm {self.algorithm!r}; choose from {ALGORITHMS}")


@dataclass
class BuildResult:
    spec: ExperimentSpec
    graph: WeightedGraph
    emulator: EmulatorGraph
    d: float
    ms: float
    report: VerificationReport | None = None

    def row(self) -> dict:
        verified = "skip" if self.report is None else ("pass" if self.report.passed else "fail")
        return {
            "generator": self.spec.generator,
            "algorithm": self.spec.algorithm,
            "n": self.graph.n,
            "m": self.graph.m,
            "f": self.spec.f,
            "k": self.spec.k,
            "d": f"{self.d:.6g}",
            "spanner_edges": len(self.emulator.spanner_edges),
            "emulator_edges": len(self.emulator.emulator_edges),
            "total_edges": self.emulator.size(),
            "verified": verified,
            "seed": self.spec.seed,
            "ms": f"{self.ms:.1f}",
        }

    def summary(self) -> str:
        r = self.row()
        line = (f"n={r['n']} m={r['m']} spanner={r['spanner_edges']} "
                f"emulator={r['emulator_edges']} ms={r['ms']}")
        if self.report is not None:
            line += " " + ("PASS" if self.report.passed else "FAIL")
        return line


def generator_for_seed(generator: str, seed: int) -> str:
    """Random generator specs without an explicit seed take the cell seed."""
    if generator.startswith(("gnp", "gnm")) and "seed=" not in generator:
        return f"{generator}:seed={seed}"
    return generator


def build(spec: ExperimentSpec, G: WeightedGraph | None = None) -> EmulatorGraph:
    H, _ = _build(spec, G if G is not None else parse_generator(spec.generator))
    return H


def _build(spec: ExperimentSpec, G: WeightedGraph) -> tuple[EmulatorGraph, float]:
    algo = spec.algorithm
    if algo == "add2":
        ap = additive2_params(G.n, spec.f, spec.seed)
        return build_additive(G, ap), ap.d
    if algo == "add4":
        ap = additive4_params(G.n, spec.f, spec.seed)
        return build_additive(G, ap), ap.d
    k = 3 if algo == "em5" else spec.k
    params = choose_params(max(G.n, 2), spec.f, k, spec.polylog_const, spec.c,
                           c_b=spec.c_b, check_mode=spec.mode, seed=spec.seed)
    if spec.budget is not None:
        params = replace(params, subset_cap=spec.budget)
    if algo == "em5":
        return build_vft_5_emulator(G, spec.f, params), params.d
    if algo == "emk":
        return build_vft_emulator(G, spec.f, k, params), params.d
    return build_vft_spanner_greedy(G, spec.f, k, params), params.d


def verify_for(spec: ExperimentSpec, G: WeightedGraph, H: EmulatorGraph) -> VerificationReport:
    if spec.algorithm == "add2":
        return verify_additive(G, H, spec.f, 2, budget=spec.budget)
    if spec.algorithm == "add4":
        return verify_additive(G, H, spec.f, 4, budget=spec.budget)
    k = 3 if spec.algorithm == "em5" else spec.k
    return verify_multiplicative(G, H, spec.f, 2 * k - 1, budget=spec.budget)


def run(spec: ExperimentSpec, G: WeightedGraph | None = None) -> BuildResult:
    """Build (and optionally verify) one instance."""
    if G is None:
        G = parse_generator(spec.generator)
    start = time.perf_counter()
    H, d = _build(spec, G)
    ms = (time.perf_counter() - start) * 1000.0
    report = verify_for(spec, G, H) if spec.verify else None
    return BuildResult(spec, G, H, d, ms, report)


def _row(spec: ExperimentSpec) -> dict:
    return run(spec).row()


def sweep_specs(generator: str, algorithms: Sequence[str], fs: Sequence[int],
                ks: Sequence[int], seeds: Sequence[int], **common) -> list[ExperimentSpec]:
    """Cells in row order: generator seed, then f, k, algorithm."""
    return [
        ExperimentSpec(generator_for_seed(generator, seed), algo, f, k, seed, **common)
        for seed, f, k, algo in product(seeds, fs, ks, algorithms)
    ]


def sweep(specs: Sequence[ExperimentSpec], jobs: int = 1) -> list[dict]:
    if jobs <= 1:
        return [_row(s) for s in specs]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_row, specs))


def rows_to_csv(rows: Sequence[dict]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()
