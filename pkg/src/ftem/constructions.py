"""Instance generators: blow-ups, projective-plane incidence graphs, random graphs."""
from __future__ import annotations

import math
from collections import deque
from itertools import combinations

import numpy as np

from .graph import INF, GraphValidationError, WeightedGraph

MAX_VERTICES = 10**7


def _require_unit(G: WeightedGraph) -> None:
    if not G.is_unit:
        raise GraphValidationError("construction expects an unweighted graph")


def blow_up(G: WeightedGraph, t: int) -> WeightedGraph:
    """Replace each vertex by ``t`` copies and each edge by ``K_{t,t}``.

    Copy ``i`` of vertex ``u`` gets id ``u * t + i``.
    """
    _require_unit(G)
    if t < 1:
        raise ValueError("t must be at least 1")
    if G.n * t > MAX_VERTICES:
        raise OverflowError(f"blow-up would have {G.n * t} vertices")
    edges = [
        (u * t + i, v * t + j, 1.0)
        for u, v, _ in G.edges
        for i in range(t)
        for j in range(t)
    ]
    return WeightedGraph(G.n * t, edges)


def girth(G: WeightedGraph) -> float:
    """Shortest cycle length (unweighted), ``inf`` for forests."""
    best = INF
    for root in range(G.n):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            x = queue.popleft()
            if 2 * dist[x] + 1 >= best:
                break
            for y in G.neighbors(x):
                if y not in dist:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif parent[x] != y:
                    best = min(best, dist[x] + dist[y] + 1)
    return best


def lb_instance_stretch3(f: int, base: WeightedGraph) -> WeightedGraph:
    """Stretch-3 lower-bound family: ``base`` (girth >= 6) blown up ``floor(f/4)`` times."""
    if f < 4:
        raise ValueError("need f >= 4 so that floor(f/4) >= 1")
    if girth(base) < 6:
        raise GraphValidationError("base graph must have girth at least 6")
    return blow_up(base, f // 4)


def lb_instance_stretch2k1(f: int, base: WeightedGraph, k: int) -> WeightedGraph:
    """Stretch-(2k-1) lower-bound family: ``ceil(sqrt f)`` copies of a girth >= 2k+2 base."""
    if f < 1 or k < 1:
        raise ValueError("need f >= 1 and k >= 1")
    if girth(base) < 2 * k + 2:
        raise GraphValidationError(f"base graph must have girth at least {2 * k + 2}")
    return blow_up(base, math.isqrt(f - 1) + 1)


def _is_prime(q: int) -> bool:
    return q >= 2 and all(q % p for p in range(2, math.isqrt(q) + 1))


def _projective_points(q: int) -> list[tuple[int, int, int]]:
    """Nonzero vectors of F_q^3 normalized so the first nonzero entry is 1."""
    pts = []
    for x in range(q):
        for y in range(q):
            pts.append((1, x, y))
    for y in range(q):
        pts.append((0, 1, y))
    pts.append((0, 0, 1))
    return pts


def projective_plane_incidence(q: int) -> WeightedGraph:
    """Point-line incidence graph of PG(2, q) for prime ``q``.

    Points get ids ``0..q^2+q``, lines the next ``q^2+q+1`` ids.
    """
    if not _is_prime(q):
        raise ValueError(f"q={q} is not prime; only prime fields are supported")
    pts = _projective_points(q)
    size = len(pts)
    edges = [
        (i, size + j, 1.0)
        for i, p in enumerate(pts)
        for j, line in enumerate(pts)
        if (p[0] * line[0] + p[1] * line[1] + p[2] * line[2]) % q == 0
    ]
    return WeightedGraph(2 * size, edges)


def heawood_graph() -> WeightedGraph:
    return projective_plane_incidence(2)


WEIGHT_MODES = ("unit", "uniform", "distinct")


def random_graph(n: int, *, p: float | None = None, m: int | None = None,
                 weight_mode: str = "unit", seed: int = 0,
                 weight_range: tuple[int, int] = (1, 10)) -> WeightedGraph:
    """Erdos-Renyi ``G(n, p)`` or uniform ``G(n, m)``, seeded.

    ``weight_mode``: ``unit``; ``uniform`` integers in ``weight_range``;
    ``distinct`` a random permutation of ``1..m``.
    """
    if (p is None) == (m is None):
        raise ValueError("give exactly one of p or m")
    if weight_mode not in WEIGHT_MODES:
        raise ValueError(f"unknown weight mode {weight_mode!r}")
    rng = np.random.default_rng(seed)
    pairs = list(combinations(range(n), 2))
    if p is not None:
        if not 0.0 <= p <= 1.0:
            raise ValueError("p must lie in [0, 1]")
        mask = rng.random(len(pairs)) < p
        chosen = [pr for pr, keep in zip(pairs, mask) if keep]
    else:
        if not 0 <= m <= len(pairs):
            raise ValueError(f"m must lie in [0, {len(pairs)}]")
        idx = np.sort(rng.choice(len(pairs), size=m, replace=False))
        chosen = [pairs[i] for i in idx]
    if weight_mode == "unit":
        weights = [1] * len(chosen)
    elif weight_mode == "uniform":
        lo, hi = weight_range
        weights = rng.integers(lo, hi + 1, size=len(chosen)).tolist()
    else:
        weights = (rng.permutation(len(chosen)) + 1).tolist()
    return WeightedGraph(n, [(u, v, float(w)) for (u, v), w in zip(chosen, weights)])


def parse_generator(spec: str) -> WeightedGraph:
    """Build a graph from ``pg2:q``, ``gnp:n=..:p=..:seed=..``,
    ``gnm:n=..:m=..:seed=..`` or ``blowup:f=..:k=..[:q=..]``.

    Random specs accept ``w=unit|uniform|distinct``.  ``blowup`` uses the
    PG(2, q) incidence graph (default ``q=2``) as its girth-6 base; ``k=2``
    selects the ``floor(f/4)`` family and any other ``k`` the
    ``ceil(sqrt f)`` one; ``family=floor|sqrt`` overrides.
    """
    head, *rest = spec.split(":")
    if head == "pg2":
        if len(rest) != 1:
            raise ValueError("expected pg2:q")
        return projective_plane_incidence(int(rest[0].removeprefix("q=")))
    opts: dict[str, str] = {}
    for item in rest:
        key, sep, val = item.partition("=")
        if not sep:
            raise ValueError(f"bad generator option {item!r} in {spec!r}")
        opts[key] = val
    if head in ("gnp", "gnm"):
        kwargs = dict(
            weight_mode=opts.get("w", "unit"),
            seed=int(opts.get("seed", 0)),
        )
        n = int(opts["n"])
        if head == "gnp":
            return random_graph(n, p=float(opts["p"]), **kwargs)
        return random_graph(n, m=int(opts["m"]), **kwargs)
    if head == "blowup":
        f = int(opts["f"])
        k = int(opts.get("k", 2))
        base = projective_plane_incidence(int(opts.get("q", 2)))
        family = opts.get("family", "floor" if k == 2 else "sqrt")
        if family == "floor":
            return lb_instance_stretch3(f, base)
        if family == "sqrt":
            return lb_instance_stretch2k1(f, base, k)
        raise ValueError(f"unknown blow-up family {family!r}")
    raise ValueError(f"unknown generator {head!r}")
