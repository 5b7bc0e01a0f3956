"""Simple undirected graphs on vertices 0..n-1 and their shortest-path metric.

Graphs are immutable. Distances are hop counts computed by one BFS per
source; pairs in different components get the ``UNREACHABLE`` sentinel,
which deliberately refuses arithmetic.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

from .errors import DuplicateEdge, FormatError, SelfLoop, VertexOutOfRange

Edge = tuple[int, int]


class _Unreachable:
    """Distance between vertices of different components."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "UNREACHABLE"

    def __reduce__(self):
        return (_Unreachable, ())


UNREACHABLE = _Unreachable()


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph. Build it with :func:`build_graph`."""

    n: int
    edges: tuple[Edge, ...]
    adjacency: tuple[frozenset[int], ...] = field(repr=False, compare=False)

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def closed_neighborhood(self, v: int) -> frozenset[int]:
        return self.adjacency[v] | {v}

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def vertices(self) -> range:
        return range(self.n)


def _check_vertex(u, n):
    if not isinstance(u, int) or isinstance(u, bool) or not 0 <= u < n:
        raise VertexOutOfRange(u, n)


def build_graph(n: int, edge_list: Iterable[Sequence[int]]) -> Graph:
    """Validate an edge list and build a graph.

    Edges are stored as ``(min, max)`` pairs in ascending order. Self-loops,
    repeated edges (in either orientation) and out-of-range endpoints raise.
    """
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"vertex count must be a non-negative integer, got {n!r}")
    seen: set[Edge] = set()
    adj: list[set[int]] = [set() for _ in range(n)]
    for pair in edge_list:
        u, v = pair
        _check_vertex(u, n)
        _check_vertex(v, n)
        if u == v:
            raise SelfLoop(u)
        e = (u, v) if u < v else (v, u)
        if e in seen:
            raise DuplicateEdge(*e)
        seen.add(e)
        adj[u].add(v)
        adj[v].add(u)
    return Graph(n, tuple(sorted(seen)), tuple(frozenset(a) for a in adj))


def complete_graph(n: int) -> Graph:
    return build_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


@dataclass(frozen=True)
class DistanceMatrix:
    n: int
    rows: tuple[tuple, ...]

    def __getitem__(self, key):
        u, v = key
        return self.rows[u][v]

    def finite(self, u: int, v: int) -> bool:
        return self.rows[u][v] is not UNREACHABLE


def bfs_distances(g: Graph, source: int) -> tuple:
    dist = [UNREACHABLE] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in g.adjacency[u]:
            if dist[w] is UNREACHABLE:
                dist[w] = du
                queue.append(w)
    return tuple(dist)


def apsp(g: Graph) -> DistanceMatrix:
    """All-pairs hop distances, one BFS per source."""
    return DistanceMatrix(g.n, tuple(bfs_distances(g, s) for s in range(g.n)))


def components(g: Graph) -> list[tuple[int, ...]]:
    """Connected components, each sorted, ordered by their smallest vertex."""
    seen = [False] * g.n
    blocks = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        block = [s]
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.adjacency[u]:
                if not seen[w]:
                    seen[w] = True
                    block.append(w)
                    stack.append(w)
        blocks.append(tuple(sorted(block)))
    return blocks


def is_connected(g: Graph) -> bool:
    return len(components(g)) <= 1


def bipartition(g: Graph) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """Two-colour the graph, or return None when it has an odd cycle.

    The smallest vertex of every component gets colour 0.
    """
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] != -1:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if color[w] == -1:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return None
    side0 = tuple(v for v in range(g.n) if color[v] == 0)
    side1 = tuple(v for v in range(g.n) if color[v] == 1)
    return side0, side1


def is_bipartite(g: Graph) -> bool:
    return bipartition(g) is not None


# -- text format -------------------------------------------------------------
#
#   n m
#   u v        (m lines, 0-based, u < v)
#
# Lines starting with '#' are ignored. The file must end with a newline.


def graph_to_text(g: Graph) -> str:
    out = [f"{g.n} {g.m}"]
    out.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(out) + "\n"


def _ints(line: str, count: int, lineno: int, what: str) -> list[int]:
    parts = line.split()
    if len(parts) != count:
        raise FormatError(f"expected {what}, got {line!r}", lineno)
    try:
        values = [int(p) for p in parts]
    except ValueError:
        raise FormatError(f"expected integers in {what}, got {line!r}", lineno) from None
    if any(x < 0 for x in values):
        raise FormatError(f"negative value in {what}: {line!r}", lineno)
    return values


def graph_from_text(text: str) -> Graph:
    if not text.endswith("\n"):
        raise FormatError("missing trailing newline")
    body = [
        (i, line)
        for i, line in enumerate(text.splitlines(), start=1)
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not body:
        raise FormatError("empty graph file: missing 'n m' header")
    lineno, header = body[0]
    n, m = _ints(header, 2, lineno, "header 'n m'")
    edge_lines = body[1:]
    if len(edge_lines) != m:
        raise FormatError(f"header announces {m} edges but {len(edge_lines)} edge lines follow", lineno)
    seen: set[Edge] = set()
    for lineno, line in edge_lines:
        u, v = _ints(line, 2, lineno, "edge 'u v'")
        if u == v:
            raise FormatError(f"self-loop {u} {v}", lineno)
        if u >= n or v >= n:
            raise FormatError(f"vertex out of range for n={n}: {line!r}", lineno)
        if u > v:
            raise FormatError(f"edge must be written with u < v: {line!r}", lineno)
        if (u, v) in seen:
            raise FormatError(f"duplicate edge {u} {v}", lineno)
        seen.add((u, v))
    return build_graph(n, seen)


def read_graph(path) -> Graph:
    return graph_from_text(Path(path).read_text())


def write_graph(g: Graph, path) -> None:
    Path(path).write_text(graph_to_text(g))
