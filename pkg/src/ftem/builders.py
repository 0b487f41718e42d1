"""Greedy fault-tolerant spanner and emulator constructions.

All three builders share one loop: scan the edges of ``G`` by nondecreasing
``(weight, file index)`` and keep an edge as a spanner edge when some fault
set forces it.  The emulator variants then flip a biased coin for each short
path the new edge completes and connect that path's endpoints on success.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Callable, Iterator

import numpy as np

from .graph import BudgetExceeded, EmulatorGraph, WeightedGraph
from .oracle import (
    DEFAULT_SUBSET_CAP,
    Method,
    WitnessResult,
    budget_from_env,
    exhaustive_witness,
    find_fault_set,
)

DEFAULT_PATH_CAP = 10**8

# RNG stream ids; a build draws from SeedSequence(seed, spawn_key=(stream,)).
STREAM_EM5 = 5
STREAM_EMK = 7
STREAM_ADDITIVE = 11


def make_rng(seed: int, stream: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(stream,)))


@dataclass(frozen=True)
class BuildParams:
    f: int
    k: int = 3
    d: float = 1.0
    b: int = 1
    check_mode: Method = Method.EXHAUSTIVE
    seed: int = 0
    polylog_constant: float = 1.0
    c_b: float = 1.0
    subset_cap: int = DEFAULT_SUBSET_CAP
    path_cap: int = DEFAULT_PATH_CAP
    simple_paths: bool = True

    def __post_init__(self):
        if self.f < 0:
            raise ValueError("f must be nonnegative")
        if self.k < 1:
            raise ValueError("k must be at least 1")
        if self.d < 1:
            raise ValueError("d must be at least 1")
        if self.b < 1:
            raise ValueError("bucket size b must be at least 1")

    @property
    def stretch(self) -> int:
        return 2 * self.k - 1

    @property
    def witness_bound(self) -> int:
        """Largest fault set a YES answer may carry under ``check_mode``."""
        if self.check_mode is Method.APPROX:
            return (2 * self.k - 2) * self.f
        return self.f


def choose_params(n: int, f: int, k: int, polylog_constant: float = 1.0, c: float = 1.0,
                  *, c_b: float = 1.0, check_mode: Method = Method.EXHAUSTIVE,
                  seed: int = 0, log_factor: bool = True) -> BuildParams:
    """Sampling scale ``d`` and bucket size ``b = ceil(c_b k d)``.

    ``d = max(polylog * f^e * n^(1/k), c f)`` with ``e = 1/2 - 1/(2k)`` for odd
    ``k`` and ``1/2`` for even ``k``; ``polylog = polylog_constant * ln n`` (or
    just the constant with ``log_factor=False``).  Approx mode scales ``d`` by
    ``2k - 2`` to pay for its larger witness sets.
    """
    if n < 2 or k < 1 or f < 0:
        raise ValueError("need n >= 2, k >= 1, f >= 0")
    exponent = 0.5 - 1.0 / (2 * k) if k % 2 == 1 else 0.5
    polylog = polylog_constant * (math.log(n) if log_factor else 1.0)
    d = max(polylog * f**exponent * n ** (1.0 / k), c * f)
    if check_mode is Method.APPROX:
        d *= max(1, 2 * k - 2)
    d = max(d, 1.0)
    b = max(1, math.ceil(c_b * k * d - 1e-9))
    return BuildParams(f=f, k=k, d=d, b=b, check_mode=check_mode, seed=seed,
                       polylog_constant=polylog_constant, c_b=c_b)


# ------------------------------------------------------------- local paths


@dataclass(frozen=True)
class LocalPath:
    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    @property
    def edges(self) -> list[tuple[int, int]]:
        vs = self.vertices
        return [(vs[i], vs[i + 1]) for i in range(len(vs) - 1)]

    @property
    def endpoints(self) -> tuple[int, int]:
        return self.vertices[0], self.vertices[-1]


def _outward(H: EmulatorGraph, prev: int, cur: int, depth: int,
             simple: bool, used: set[int]) -> Iterator[list[int]]:
    """Vertex sequences leaving ``cur`` through the bucket holding ``(cur, prev)``."""
    yield []
    if depth == 0:
        return
    bucket = H.bucket(cur, prev)
    for y in sorted(H.sp_adj[cur]):
        if y == prev or H.bucket(cur, y) != bucket:
            continue
        if simple and y in used:
            continue
        used.add(y)
        for rest in _outward(H, cur, y, depth - 1, simple, used):
            yield [y] + rest
        used.discard(y)


def enumerate_local_paths_through(H: EmulatorGraph, e: tuple[int, int], k: int, *,
                                  simple: bool = True,
                                  cap: int = DEFAULT_PATH_CAP) -> list[LocalPath]:
    """All local paths of at most ``k`` spanner edges that contain ``e``.

    Each path is reported once, oriented with the smaller endpoint first.
    With ``simple=False`` vertices may repeat but no edge is immediately
    retraced and ``e`` itself is not reused.
    """
    u, v = e
    if not H.has_spanner_edge(u, v):
        raise ValueError(f"({u}, {v}) is not a spanner edge")
    out: list[LocalPath] = []
    for left in _outward(H, v, u, k - 1, simple, {u, v}):
        room = k - 1 - len(left)
        for right in _outward(H, u, v, room, simple, {u, v, *left}):
            seq = tuple(reversed(left)) + (u, v) + tuple(right)
            if not simple and _reuses_edge(seq, u, v):
                continue
            if seq[0] > seq[-1]:
                seq = seq[::-1]
            out.append(LocalPath(seq))
            if len(out) > cap:
                raise BudgetExceeded(f"more than {cap} local paths through ({u}, {v})")
    out.sort(key=lambda p: (p.length, p.vertices))
    return out


def _reuses_edge(seq: tuple[int, ...], u: int, v: int) -> bool:
    key = (min(u, v), max(u, v))
    hits = sum(1 for a, b in zip(seq, seq[1:]) if (min(a, b), max(a, b)) == key)
    return hits > 1


# --------------------------------------------------------------- builders


def _oracle(G: WeightedGraph, params: BuildParams, k: int
            ) -> Callable[[EmulatorGraph, int, int, float], WitnessResult]:
    if params.check_mode is Method.APPROX:
        return lambda H, u, v, w: find_fault_set(G, H, u, v, k, params.f)
    cap = budget_from_env(params.subset_cap)
    stretch = 2 * k - 1
    return lambda H, u, v, w: exhaustive_witness(H, u, v, params.f, stretch * w, cap=cap)


def _greedy(G: WeightedGraph, params: BuildParams, k: int,
            on_add: Callable[[EmulatorGraph, int, int, tuple[int, ...]], None] | None
            ) -> EmulatorGraph:
    H = EmulatorGraph(G, bucket_size=params.b)
    check = _oracle(G, params, k)
    for _, (u, v, w) in G.sorted_edges():
        res = check(H, u, v, w)
        if not res:
            continue
        H.add_spanner_edge(u, v, w, witness=res.fault_set)
        if on_add is not None:
            on_add(H, u, v, res.fault_set)
    return H


def _sample_pair(H: EmulatorGraph, rng: np.random.Generator, prob: float,
                 s: int, t: int) -> None:
    # one draw per candidate regardless of outcome keeps the stream aligned
    hit = rng.random() < prob
    if hit and s != t and not H.has_spanner_edge(s, t):
        H.add_emulator_edge(s, t)


def build_vft_5_emulator(G: WeightedGraph, f: int, params: BuildParams) -> EmulatorGraph:
    """Greedy f-VFT 5-emulator: each new spanner edge ``(u, v)`` samples
    ``(s, t)`` for ``s, t`` neighbors of ``u, v`` outside the witness set."""
    params = replace(params, f=f, k=3)
    rng = make_rng(params.seed, STREAM_EM5)
    prob = params.d ** -2

    def sample(H: EmulatorGraph, u: int, v: int, F: tuple[int, ...]) -> None:
        faults = set(F)
        left = sorted(s for s in H.sp_adj[u] if s != v and s not in faults)
        right = sorted(t for t in H.sp_adj[v] if t != u and t not in faults)
        for s in left:
            for t in right:
                if s != t:
                    _sample_pair(H, rng, prob, s, t)

    return _greedy(G, params, 3, sample)


def build_vft_emulator(G: WeightedGraph, f: int, k: int, params: BuildParams) -> EmulatorGraph:
    """Greedy f-VFT (2k-1)-emulator with local path sampling.

    Every local path of ``2 <= j <= k`` edges completed by a new spanner edge
    connects its endpoints with probability ``d^-(j-1)``.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    params = replace(params, f=f, k=k)
    rng = make_rng(params.seed, STREAM_EMK)

    def sample(H: EmulatorGraph, u: int, v: int, F: tuple[int, ...]) -> None:
        for path in enumerate_local_paths_through(H, (u, v), k, simple=params.simple_paths,
                                                  cap=params.path_cap):
            if path.length < 2:
                continue
            s, t = path.endpoints
            _sample_pair(H, rng, params.d ** -(path.length - 1), s, t)

    return _greedy(G, params, k, sample)


def build_vft_spanner_greedy(G: WeightedGraph, f: int, k: int,
                             params: BuildParams) -> EmulatorGraph:
    """The plain VFT greedy spanner: the emulator loop with sampling removed."""
    params = replace(params, f=f, k=k)
    return _greedy(G, params, k, None)
