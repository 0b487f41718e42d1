"""Forced-edge checks: does some fault set push ``u``-``v`` past the stretch bound?

Two routes.  :func:`exhaustive_witness` enumerates every fault set of size at
most ``f`` (exact, exponential in ``f``).  :func:`find_fault_set` is the
polynomial greedy length-bounded cut on the unweighted view; it may answer YES
with a fault set up to ``(2k-2) f`` vertices large.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from math import comb

from .graph import (
    INF,
    BaseDistances,
    BudgetExceeded,
    EmulatorGraph,
    VertexError,
    WeightedGraph,
    emulator_dist,
    emulator_search,
)

DEFAULT_SUBSET_CAP = 10**7


class Verdict(str, Enum):
    YES = "YES"
    NO = "NO"


class Method(str, Enum):
    EXHAUSTIVE = "EXHAUSTIVE"
    APPROX = "APPROX"


@dataclass(frozen=True)
class WitnessResult:
    verdict: Verdict
    method: Method
    fault_set: tuple[int, ...] | None = None
    iterations: int = 0

    def __bool__(self) -> bool:
        return self.verdict is Verdict.YES


def budget_from_env(default: int) -> int:
    """``FTEM_BUDGET`` overrides every enumeration cap."""
    raw = os.environ.get("FTEM_BUDGET")
    if raw:
        return int(float(raw))
    return default


def count_fault_sets(pool: int, f: int) -> int:
    return sum(comb(pool, i) for i in range(min(f, pool) + 1))


def _check_pair(n: int, u: int, v: int) -> None:
    if not (0 <= u < n and 0 <= v < n):
        raise VertexError(f"vertex out of range in pair ({u}, {v})")
    if u == v:
        raise VertexError("endpoints must differ")


def exhaustive_witness(H: EmulatorGraph, u: int, v: int, f: int, bound: float, *,
                       cap: int | None = None) -> WitnessResult:
    """First fault set (by size, then lexicographically) with
    ``emulator_dist(H, F, u, v) > bound``, or NO if none of size <= f exists."""
    n = H.n
    _check_pair(n, u, v)
    cap = budget_from_env(DEFAULT_SUBSET_CAP) if cap is None else cap
    pool = [x for x in range(n) if x != u and x != v]
    total = count_fault_sets(len(pool), f)
    if total > cap:
        raise BudgetExceeded(
            f"{total} fault sets of size <= {f} exceed the subset cap {cap}; use approx mode"
        )
    for size in range(min(f, len(pool)) + 1):
        for F in combinations(pool, size):
            if emulator_dist(H, F, u, v, cutoff=bound) > bound:
                return WitnessResult(Verdict.YES, Method.EXHAUSTIVE, F)
    return WitnessResult(Verdict.NO, Method.EXHAUSTIVE)


def lex_shortest_path(H: EmulatorGraph, G: WeightedGraph, F: frozenset[int], u: int,
                      v: int, limit: float) -> list[tuple[int, int, bool]] | None:
    """Lexicographically smallest shortest ``u``-``v`` path in ``H - F`` (hop
    semantics), as ``(x, y, is_emulator)`` steps; None if longer than ``limit``."""
    em = BaseDistances(G, F, unit=True, cutoff=limit)
    to_v = emulator_search(H, F, v, em, unit=True, cutoff=limit)
    if u not in to_v:
        return None
    steps = []
    x = u
    while x != v:
        dx = to_v[x]
        best = None
        for y in H.sp_adj[x]:
            if y not in F and to_v.get(y, INF) == dx - 1 and (best is None or y < best[0]):
                best = (y, False)
        for y in H.em_adj[x]:
            if y in F or (best is not None and y >= best[0]):
                continue
            if to_v.get(y, INF) + em(x, y) == dx:
                best = (y, True)
        steps.append((x, best[0], best[1]))
        x = best[0]
    return steps


def _expand(G: WeightedGraph, em: BaseDistances, s: int, t: int) -> list[int]:
    """Lexicographically smallest shortest ``s``-``t`` hop path in ``G - F``."""
    to_t = em.row(t)
    path = [s]
    x = s
    while x != t:
        dx = to_t[x]
        x = min(y for y in G.neighbors(x) if to_t.get(y, INF) == dx - 1)
        path.append(x)
    return path


def find_fault_set(G: WeightedGraph, H: EmulatorGraph, u: int, v: int, k: int,
                   f: int) -> WitnessResult:
    """Greedy length-bounded vertex cut on the unweighted view.

    Repeatedly takes a shortest ``u``-``v`` path in ``H - F``, expands its
    emulator edges into shortest paths of ``G - F`` and faults every interior
    vertex, until the hop distance exceeds ``2k - 1``.  YES iff the final set
    has at most ``(2k - 2) f`` vertices.
    """
    n = H.n
    _check_pair(n, u, v)
    if H.has_edge(u, v):
        return WitnessResult(Verdict.NO, Method.APPROX)
    limit = 2 * k - 1
    allowed = (2 * k - 2) * f
    F: set[int] = set()
    iterations = 0
    while True:
        frozen = frozenset(F)
        steps = lex_shortest_path(H, G, frozen, u, v, limit)
        if steps is None:
            break
        iterations += 1
        em = BaseDistances(G, frozen, unit=True, cutoff=limit)
        for x, y, is_em in steps:
            inner = _expand(G, em, x, y)[1:-1] if is_em else []
            F.update(z for z in inner + [y] if z != u and z != v)
        if len(F) > allowed:
            # verdict is already NO; the set only grows from here
            return WitnessResult(Verdict.NO, Method.APPROX, iterations=iterations)
        if len(F) > n - 2:
            raise RuntimeError("fault set grew past n - 2 vertices")
    return WitnessResult(Verdict.YES, Method.APPROX, tuple(sorted(F)), iterations)
