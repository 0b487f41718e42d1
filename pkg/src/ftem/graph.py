"""Graph representation, fault-masked shortest paths and emulator distances.

Emulator edges carry no stored weight.  Under a fault set ``F`` an emulator
edge ``(s, t)`` is worth ``dist_{G - F}(s, t)``, so every emulator query is
answered against the base graph with the same vertices removed.
"""
from __future__ import annotations

import heapq
import math
from collections import deque
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Iterable, Sequence

INF = math.inf

Edge = tuple[int, int, float]


class GraphFormatError(ValueError):
    """Malformed edge-list text."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class GraphValidationError(ValueError):
    """A structural invariant of :class:`WeightedGraph` is violated."""


class VertexError(ValueError):
    """Query endpoint is out of range or inside the fault set."""


class BudgetExceeded(RuntimeError):
    """An exhaustive enumeration would exceed its configured cap."""


def edge_key(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


class WeightedGraph:
    """Undirected simple graph on vertices ``0..n-1`` with positive weights.

    Edge order is preserved; it is the tie-break order for equal weights.
    """

    __slots__ = ("n", "edges", "_adj", "_index")

    def __init__(self, n: int, edges: Iterable[Sequence[float]] = ()):
        if n < 0:
            raise GraphValidationError("vertex count must be nonnegative")
        self.n = int(n)
        adj: list[dict[int, float]] = [{} for _ in range(self.n)]
        index: dict[tuple[int, int], int] = {}
        out: list[Edge] = []
        for e in edges:
            u, v = int(e[0]), int(e[1])
            w = float(e[2]) if len(e) > 2 else 1.0
            _check_edge(self.n, u, v, w, index)
            index[edge_key(u, v)] = len(out)
            adj[u][v] = w
            adj[v][u] = w
            out.append((u, v, w))
        self.edges: tuple[Edge, ...] = tuple(out)
        self._adj = adj
        self._index = index

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> dict[int, float]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return edge_key(u, v) in self._index

    def weight(self, u: int, v: int) -> float:
        return self._adj[u][v]

    def edge_index(self, u: int, v: int) -> int:
        return self._index[edge_key(u, v)]

    @property
    def is_unit(self) -> bool:
        return all(w == 1.0 for _, _, w in self.edges)

    def unweighted(self) -> "WeightedGraph":
        """Same topology and edge order with every weight set to 1."""
        return WeightedGraph(self.n, ((u, v, 1.0) for u, v, _ in self.edges))

    def sorted_edges(self) -> list[tuple[int, Edge]]:
        """Edges in nondecreasing ``(weight, file index)`` order."""
        return sorted(enumerate(self.edges), key=lambda ie: (ie[1][2], ie[0]))

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, WeightedGraph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"WeightedGraph(n={self.n}, m={self.m})"


def _check_edge(n, u, v, w, index) -> None:
    if not (0 <= u < n and 0 <= v < n):
        raise GraphValidationError(f"vertex id out of range in edge ({u}, {v}); n={n}")
    if u == v:
        raise GraphValidationError(f"self-loop at vertex {u}")
    if not (w > 0) or math.isinf(w):
        raise GraphValidationError(f"edge ({u}, {v}) has nonpositive or non-finite weight {w}")
    if edge_key(u, v) in index:
        raise GraphValidationError(f"duplicate edge ({u}, {v})")


def make_fault_set(vertices: Iterable[int], f: int | None = None) -> frozenset[int]:
    """Normalize a fault set, enforcing the capacity bound when given."""
    fs = frozenset(int(x) for x in vertices)
    if f is not None and len(fs) > f:
        raise ValueError(f"fault set of size {len(fs)} exceeds bound f={f}")
    return fs


# ---------------------------------------------------------------- text format


def parse_graph(text: str) -> WeightedGraph:
    """Parse the edge-list format: first line ``n``, then ``u v [w]`` lines."""
    n = None
    edges: list[tuple[int, int, float]] = []
    seen: dict[tuple[int, int], int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 1:
                raise GraphFormatError("expected vertex count", lineno)
            try:
                n = int(parts[0])
            except ValueError:
                raise GraphFormatError(f"bad vertex count {parts[0]!r}", lineno) from None
            if n < 0:
                raise GraphFormatError("negative vertex count", lineno)
            continue
        if len(parts) not in (2, 3):
            raise GraphFormatError("expected 'u v' or 'u v w'", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
            w = float(parts[2]) if len(parts) == 3 else 1.0
        except ValueError:
            raise GraphFormatError(f"cannot parse {line!r}", lineno) from None
        try:
            _check_edge(n, u, v, w, seen)
        except GraphValidationError as exc:
            raise GraphValidationError(f"line {lineno}: {exc}") from None
        seen[edge_key(u, v)] = len(edges)
        edges.append((u, v, w))
    if n is None:
        raise GraphFormatError("empty input: missing vertex count")
    return WeightedGraph(n, edges)


def load_graph(source: str | Path) -> WeightedGraph:
    """Load from a path, or parse ``source`` directly if it contains a newline."""
    if isinstance(source, str) and "\n" in source:
        return parse_graph(source)
    return parse_graph(Path(source).read_text())


def format_weight(w: float) -> str:
    if float(w).is_integer():
        return str(int(w))
    return repr(float(w))


def format_graph(G: WeightedGraph) -> str:
    lines = [str(G.n)]
    lines += [f"{u} {v} {format_weight(w)}" for u, v, w in G.edges]
    return "\n".join(lines) + "\n"


# ------------------------------------------------------------- emulator graph


@dataclass
class EmulatorGraph:
    """Spanner edges (a subgraph of ``base``) plus weightless emulator edges.

    ``incident[v]`` lists the spanner edges at ``v`` in arrival order;
    the i-th of them (0-based) lives in bucket ``i // bucket_size``.
    """

    base: WeightedGraph
    bucket_size: int = 1
    spanner_edges: list[Edge] = field(default_factory=list)
    emulator_edges: list[tuple[int, int]] = field(default_factory=list)
    witness: dict[tuple[int, int], tuple[int, ...]] = field(default_factory=dict)

    def __post_init__(self) -> None:
        n = self.base.n
        self.sp_adj: list[dict[int, float]] = [{} for _ in range(n)]
        self.em_adj: list[set[int]] = [set() for _ in range(n)]
        # spanner-edge count when each emulator edge arrived
        self.emulator_since: list[int] = []
        self.incident: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        self._slot: dict[tuple[int, int], int] = {}
        edges, em = self.spanner_edges, self.emulator_edges
        self.spanner_edges, self.emulator_edges = [], []
        for u, v, w in edges:
            self.add_spanner_edge(u, v, w)
        for s, t in em:
            self.add_emulator_edge(s, t)

    @property
    def n(self) -> int:
        return self.base.n

    def add_spanner_edge(self, u: int, v: int, w: float | None = None,
                         witness: Iterable[int] | None = None) -> None:
        if not self.base.has_edge(u, v):
            raise GraphValidationError(f"spanner edge ({u}, {v}) is not in the base graph")
        bw = self.base.weight(u, v)
        if w is not None and w != bw:
            raise GraphValidationError(f"spanner edge ({u}, {v}) weight {w} != base weight {bw}")
        if v in self.sp_adj[u]:
            raise GraphValidationError(f"spanner edge ({u}, {v}) already present")
        key = edge_key(u, v)
        self.sp_adj[u][v] = bw
        self.sp_adj[v][u] = bw
        self._slot[(u, v)] = len(self.incident[u])
        self._slot[(v, u)] = len(self.incident[v])
        self.incident[u].append(key)
        self.incident[v].append(key)
        self.spanner_edges.append((u, v, bw))
        if witness is not None:
            self.witness[key] = tuple(sorted(witness))

    def add_emulator_edge(self, s: int, t: int) -> bool:
        """Insert ``(s, t)``; returns False if it was already an emulator edge."""
        if s == t:
            raise GraphValidationError(f"emulator self-loop at {s}")
        if not (0 <= s < self.n and 0 <= t < self.n):
            raise GraphValidationError(f"emulator edge ({s}, {t}) out of range")
        if t in self.em_adj[s]:
            return False
        self.em_adj[s].add(t)
        self.em_adj[t].add(s)
        self.emulator_edges.append(edge_key(s, t))
        self.emulator_since.append(len(self.spanner_edges))
        return True

    def has_spanner_edge(self, u: int, v: int) -> bool:
        return v in self.sp_adj[u]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.sp_adj[u] or v in self.em_adj[u]

    def bucket(self, v: int, other: int) -> int:
        """Bucket index at ``v`` of spanner edge ``(v, other)``."""
        return self._slot[(v, other)] // self.bucket_size

    def rank(self, u: int, v: int) -> tuple[float, int]:
        """Tie-broken weight of a spanner edge: ``(weight, base edge index)``."""
        return (self.sp_adj[u][v], self.base.edge_index(u, v))

    def prefix(self, count: int) -> "EmulatorGraph":
        """The graph as it stood when only ``count`` spanner edges existed."""
        em = [e for e, t in zip(self.emulator_edges, self.emulator_since) if t <= count]
        H = EmulatorGraph(self.base, bucket_size=self.bucket_size,
                          spanner_edges=self.spanner_edges[:count], emulator_edges=em)
        return H

    def size(self) -> int:
        return len(self.spanner_edges) + len(self.emulator_edges)

    def spanner_graph(self) -> WeightedGraph:
        return WeightedGraph(self.n, self.spanner_edges)

    @classmethod
    def from_graph(cls, G: WeightedGraph) -> "EmulatorGraph":
        """``G`` itself viewed as an emulator with only spanner edges."""
        return cls(G, spanner_edges=list(G.edges))


# ------------------------------------------------------------------ distances


def _check_query(n: int, F: frozenset[int], u: int, v: int) -> None:
    for x in (u, v):
        if not (0 <= x < n):
            raise VertexError(f"vertex {x} out of range 0..{n - 1}")
        if x in F:
            raise VertexError(f"vertex {x} is in the fault set")


def sssp(G: WeightedGraph, F: Iterable[int], src: int, *, unit: bool = False,
         cutoff: float = INF) -> dict[int, float]:
    """Single-source distances in ``G - F``; vertices beyond ``cutoff`` are omitted."""
    F = F if isinstance(F, frozenset) else frozenset(F)
    if unit:
        return _bfs(G, F, src, cutoff)
    dist = {src: 0.0}
    done: set[int] = set()
    heap = [(0.0, src)]
    while heap:
        d, x = heapq.heappop(heap)
        if x in done:
            continue
        done.add(x)
        for y, w in G.neighbors(x).items():
            if y in F or y in done:
                continue
            nd = d + w
            if nd <= cutoff and nd < dist.get(y, INF):
                dist[y] = nd
                heapq.heappush(heap, (nd, y))
    return dist


def _bfs(G: WeightedGraph, F: frozenset[int], src: int, cutoff: float) -> dict[int, float]:
    dist = {src: 0.0}
    queue = deque([src])
    while queue:
        x = queue.popleft()
        d = dist[x] + 1
        if d > cutoff:
            continue
        for y in G.neighbors(x):
            if y not in F and y not in dist:
                dist[y] = d
                queue.append(y)
    return dist


def graph_dist(G: WeightedGraph, F: Iterable[int], u: int, v: int) -> float:
    """Shortest ``u``-``v`` distance in ``G`` with the vertices of ``F`` deleted."""
    F = frozenset(F)
    _check_query(G.n, F, u, v)
    return sssp(G, F, u).get(v, INF)


class BaseDistances:
    """Per-fault-set cache of base-graph distances from emulator endpoints."""

    def __init__(self, G: WeightedGraph, F: frozenset[int], unit: bool = False,
                 cutoff: float = INF):
        self.G, self.F, self.unit, self.cutoff = G, F, unit, cutoff
        self._rows: dict[int, dict[int, float]] = {}

    def row(self, s: int) -> dict[int, float]:
        r = self._rows.get(s)
        if r is None:
            r = self._rows[s] = sssp(self.G, self.F, s, unit=self.unit, cutoff=self.cutoff)
        return r

    def __call__(self, s: int, t: int) -> float:
        return self.row(s).get(t, INF)


def emulator_search(H: EmulatorGraph, F: frozenset[int], src: int,
                    em_weight: Callable[[int, int], float], *, unit: bool = False,
                    cutoff: float = INF, target: int | None = None) -> dict[int, float]:
    """Dijkstra over ``H - F``; emulator edge weights come from ``em_weight``.

    Stops early once ``target`` is settled.  Distances above ``cutoff`` are
    never recorded.
    """
    dist = {src: 0.0}
    done: set[int] = set()
    heap = [(0.0, src)]
    sp_adj, em_adj = H.sp_adj, H.em_adj
    while heap:
        d, x = heapq.heappop(heap)
        if x in done:
            continue
        done.add(x)
        if x == target:
            break
        for y, w in sp_adj[x].items():
            if y in F or y in done:
                continue
            nd = d + (1.0 if unit else w)
            if nd <= cutoff and nd < dist.get(y, INF):
                dist[y] = nd
                heapq.heappush(heap, (nd, y))
        for y in em_adj[x]:
            if y in F or y in done:
                continue
            nd = d + em_weight(x, y)
            if nd <= cutoff and nd < dist.get(y, INF):
                dist[y] = nd
                heapq.heappush(heap, (nd, y))
    return dist


def emulator_dist(H: EmulatorGraph, F: Iterable[int], u: int, v: int, *,
                  cutoff: float = INF) -> float:
    """Distance in ``H - F`` with emulator edges reweighted to ``dist_{G-F}``.

    With a finite ``cutoff`` any distance above it is reported as infinity.
    """
    F = frozenset(F)
    _check_query(H.n, F, u, v)
    em = BaseDistances(H.base, F, cutoff=cutoff)
    return emulator_search(H, F, u, em, cutoff=cutoff, target=v).get(v, INF)


def hop_dist(H: EmulatorGraph, G: WeightedGraph, F: Iterable[int], u: int, v: int, *,
             cutoff: float = INF) -> float:
    """Unweighted emulator distance: unit spanner edges, emulator edges worth
    the hop count of the shortest path in ``G - F``."""
    F = frozenset(F)
    _check_query(H.n, F, u, v)
    em = BaseDistances(G, F, unit=True, cutoff=cutoff)
    return emulator_search(H, F, u, em, unit=True, cutoff=cutoff, target=v).get(v, INF)
