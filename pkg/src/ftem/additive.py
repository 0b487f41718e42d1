"""Fault-tolerant +2 and +4 emulators for unweighted graphs.

Light vertices keep every incident edge, dense vertices keep edges to their
``ceil(d)`` smallest-id neighbors, and every vertex pair becomes an emulator
edge independently with probability ``p``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .builders import STREAM_ADDITIVE, make_rng
from .graph import EmulatorGraph, GraphValidationError, WeightedGraph, edge_key


@dataclass(frozen=True)
class AdditiveParams:
    f: int
    d: float
    p: float
    seed: int = 0

    @property
    def keep(self) -> int:
        """Neighbors retained per dense vertex."""
        return math.ceil(self.d - 1e-9)


def additive4_params(n: int, f: int, seed: int = 0) -> AdditiveParams:
    _check_f(f)
    d = (f * n) ** (1 / 3) if f <= math.sqrt(n) else 2.0 * f
    return AdditiveParams(f, d, _pair_probability(12, d, n), seed)


def additive2_params(n: int, f: int, seed: int = 0) -> AdditiveParams:
    _check_f(f)
    d = math.sqrt(f * n)
    return AdditiveParams(f, d, _pair_probability(6, d, n), seed)


def _check_f(f: int) -> None:
    if f < 1:
        raise ValueError("additive constructions need f >= 1")


def _pair_probability(scale: int, d: float, n: int) -> float:
    if n < 2:
        return 0.0
    return min(1.0, scale * d * math.log(n) / n)


def dense_vertices(G: WeightedGraph, d: float) -> list[int]:
    return [v for v in range(G.n) if G.degree(v) > d]


def build_additive(G: WeightedGraph, params: AdditiveParams) -> EmulatorGraph:
    if not G.is_unit:
        raise GraphValidationError("additive emulators need an unweighted graph")
    keep: set[tuple[int, int]] = set()
    for v in range(G.n):
        nbrs = sorted(G.neighbors(v))
        if len(nbrs) > params.d:
            nbrs = nbrs[: params.keep]
        keep.update(edge_key(v, x) for x in nbrs)
    # spanner edges in base file order
    spanner = [(u, v, w) for u, v, w in G.edges if edge_key(u, v) in keep]
    H = EmulatorGraph(G, spanner_edges=spanner)
    rng = make_rng(params.seed, STREAM_ADDITIVE)
    n = G.n
    if params.p >= 1.0:
        for s in range(n):
            for t in range(s + 1, n):
                H.add_emulator_edge(s, t)
        return H
    for s in range(n - 1):
        draws = rng.random(n - 1 - s)
        for offset in (draws < params.p).nonzero()[0]:
            H.add_emulator_edge(s, s + 1 + int(offset))
    return H


def build_additive4(G: WeightedGraph, f: int, seed: int = 0) -> EmulatorGraph:
    """f-VFT +4-emulator: ``d = (fn)^(1/3)`` (``2f`` once ``f > sqrt n``),
    ``p = min(1, 12 d ln n / n)``."""
    return build_additive(G, additive4_params(G.n, f, seed))


def build_additive2(G: WeightedGraph, f: int, seed: int = 0) -> EmulatorGraph:
    """f-VFT +2-emulator: ``d = (fn)^(1/2)``, ``p = min(1, 6 d ln n / n)``."""
    return build_additive(G, additive2_params(G.n, f, seed))
