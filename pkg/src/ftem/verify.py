"""Exhaustive stretch verification and path-census counters.

The verifiers walk every fault set of size at most ``f`` and every surviving
vertex pair; nothing is sampled.  Instances beyond the check budget are
refused with :class:`BudgetExceeded`.
"""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from itertools import combinations
from typing import Callable, Iterable, Sequence

from .graph import (
    INF,
    BudgetExceeded,
    EmulatorGraph,
    WeightedGraph,
    edge_key,
    emulator_search,
    sssp,
)
from .oracle import budget_from_env, count_fault_sets

DEFAULT_CHECK_BUDGET = 10**9
MAX_REPORTED = 100


@dataclass
class Violation:
    fault_set: tuple[int, ...]
    u: int
    v: int
    got: float
    allowed: float
    kind: str  # "upper" or "lower"


@dataclass
class VerificationReport:
    checked_pairs: int = 0
    worst_stretch: float = 1.0
    worst_surplus: float = 0.0
    violation_count: int = 0
    violations: list[Violation] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.violation_count == 0

    def to_dict(self) -> dict:
        out = asdict(self)
        out["passed"] = self.passed
        for key in ("worst_stretch", "worst_surplus"):
            if out[key] == INF:
                out[key] = "inf"
        for viol in out["violations"]:
            for key in ("got", "allowed"):
                if viol[key] == INF:
                    viol[key] = "inf"
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def fault_sets(n: int, f: int) -> Iterable[tuple[int, ...]]:
    for size in range(min(f, n) + 1):
        yield from combinations(range(n), size)


def _scan(G: WeightedGraph, H: EmulatorGraph, f: int,
          allowed: Callable[[float], float], budget: int | None) -> VerificationReport:
    n = G.n
    budget = budget_from_env(DEFAULT_CHECK_BUDGET) if budget is None else budget
    work = count_fault_sets(n, f) * n * n
    if work > budget:
        raise BudgetExceeded(f"exhaustive verification needs {work} checks; budget is {budget}")
    report = VerificationReport()
    for F in fault_sets(n, f):
        dead = frozenset(F)
        alive = [x for x in range(n) if x not in dead]
        base = {s: sssp(G, dead, s) for s in alive}

        def em(s: int, t: int) -> float:
            return base[s].get(t, INF)

        for u in alive:
            hd = emulator_search(H, dead, u, em)
            gu = base[u]
            for v in alive:
                if v <= u:
                    continue
                g = gu.get(v, INF)
                h = hd.get(v, INF)
                report.checked_pairs += 1
                if h < g:
                    _record(report, Violation(F, u, v, h, g, "lower"))
                    continue
                if g == INF:
                    continue
                if g > 0:
                    report.worst_stretch = max(report.worst_stretch, h / g)
                report.worst_surplus = max(report.worst_surplus, h - g)
                if h > allowed(g):
                    _record(report, Violation(F, u, v, h, allowed(g), "upper"))
    return report


def _record(report: VerificationReport, viol: Violation) -> None:
    report.violation_count += 1
    if len(report.violations) < MAX_REPORTED:
        report.violations.append(viol)


def verify_multiplicative(G: WeightedGraph, H: EmulatorGraph, f: int, t: float, *,
                          budget: int | None = None) -> VerificationReport:
    """Check ``dist_{G-F} <= dist_{H-F} <= t * dist_{G-F}`` for all ``|F| <= f``."""
    return _scan(G, H, f, lambda g: t * g, budget)


def verify_additive(G: WeightedGraph, H: EmulatorGraph, f: int, c: float, *,
                    budget: int | None = None) -> VerificationReport:
    """Check ``dist_{G-F} <= dist_{H-F} <= dist_{G-F} + c`` for all ``|F| <= f``."""
    return _scan(G, H, f, lambda g: g + c, budget)


# ------------------------------------------------------------ path census


def _ranker(H: EmulatorGraph | WeightedGraph) -> tuple[list[dict[int, float]], Callable]:
    """Adjacency plus a tie-broken edge rank ``(weight, order index)``."""
    if isinstance(H, EmulatorGraph):
        order = {edge_key(u, v): i for i, (u, v, _) in enumerate(H.spanner_edges)}
        adj = H.sp_adj
    else:
        order = {edge_key(u, v): i for i, (u, v, _) in enumerate(H.edges)}
        adj = [H.neighbors(x) for x in range(H.n)]

    def rank(a: int, b: int) -> tuple[float, int]:
        return (adj[a][b], order[edge_key(a, b)])

    return adj, rank


def count_middle_heavy_3paths(H: EmulatorGraph | WeightedGraph) -> int:
    """3-edge paths ``(s, u, v, t)`` whose middle edge strictly outranks both ends."""
    adj, rank = _ranker(H)
    edges = H.spanner_edges if isinstance(H, EmulatorGraph) else H.edges
    total = 0
    for u, v, _ in edges:
        mid = rank(u, v)
        left = [s for s in adj[u] if s != v and rank(s, u) < mid]
        right = [t for t in adj[v] if t != u and rank(v, t) < mid]
        total += len(left) * len(right) - len(set(left) & set(right))
    return total


def count_alternating_kpaths(G: WeightedGraph | EmulatorGraph, k: int,
                             edge_simple: bool = True) -> int:
    """Alternating walks of ``k`` edges, each undirected walk counted once.

    Every even-numbered edge must outrank its neighbors in the walk.  With
    ``edge_simple`` no edge may repeat; otherwise any walk qualifies.
    """
    if k < 1:
        raise ValueError("k must be positive")
    adj, rank = _ranker(G)
    seen: set[tuple[int, ...]] = set()

    def extend(walk: list[int], used: set[tuple[int, int]], last: tuple[float, int]) -> None:
        i = len(walk)  # index of the edge about to be added
        if i == k + 1:
            key = tuple(walk)
            seen.add(min(key, key[::-1]))
            return
        x = walk[-1]
        for y in adj[x]:
            e = edge_key(x, y)
            if edge_simple and e in used:
                continue
            r = rank(x, y)
            if i % 2 == 0 and not r > last:
                continue
            if i % 2 == 1 and i > 1 and not r < last:
                continue
            used.add(e)
            walk.append(y)
            extend(walk, used, r)
            walk.pop()
            used.discard(e)

    for s in range(len(adj)):
        extend([s], set(), (0.0, -1))
    return len(seen)


# ------------------------------------------------------------ path predicates


def _vertices(path) -> tuple[int, ...]:
    return tuple(getattr(path, "vertices", path))


def _require_spanner(vs: Sequence[int], H: EmulatorGraph) -> None:
    for a, b in zip(vs, vs[1:]):
        if not H.has_spanner_edge(a, b):
            raise ValueError(f"({a}, {b}) is not a spanner edge")


def is_simple(path) -> bool:
    vs = _vertices(path)
    return len(set(vs)) == len(vs)


def is_local(path, H: EmulatorGraph) -> bool:
    vs = _vertices(path)
    _require_spanner(vs, H)
    return all(H.bucket(y, x) == H.bucket(y, z) for x, y, z in zip(vs, vs[1:], vs[2:]))


def is_alternating(path, H: EmulatorGraph) -> bool:
    """True if the path, read in either direction, alternates light/heavy."""
    vs = _vertices(path)
    _require_spanner(vs, H)

    def check(seq: Sequence[int]) -> bool:
        ranks = [H.rank(a, b) for a, b in zip(seq, seq[1:])]
        for i in range(1, len(ranks), 2):  # 0-based odd index = even-numbered edge
            if not ranks[i] > ranks[i - 1]:
                return False
            if i + 1 < len(ranks) and not ranks[i] > ranks[i + 1]:
                return False
        return True

    return check(vs) or check(vs[::-1])


def avoids_faults(path, H: EmulatorGraph) -> bool:
    vs = _vertices(path)
    _require_spanner(vs, H)
    members = set(vs)
    return all(
        not members.intersection(H.witness.get(edge_key(a, b), ()))
        for a, b in zip(vs, vs[1:])
    )


def is_sala(path, H: EmulatorGraph) -> bool:
    """Simple, alternating, local and avoiding every edge's witness fault set."""
    return (
        is_simple(path)
        and is_alternating(path, H)
        and is_local(path, H)
        and avoids_faults(path, H)
    )
