"""Betweenness, lines and the de Bruijn-Erdos verdict in graph metrics.

Vertex ``b`` lies between ``a`` and ``c`` when d(a,b) + d(b,c) = d(a,c).
Three pairwise distinct vertices are collinear when one of them lies between
the other two, and the line generated by ``a`` and ``b`` is ``{a, b}`` plus
every vertex collinear with them. Triples involving an unreachable pair are
never collinear, so a pair split across components generates a line of size 2.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .errors import EqualEndpoints, TooSmall, VertexOutOfRange
from .graph import UNREACHABLE, DistanceMatrix, Graph, apsp


@dataclass(frozen=True)
class Line:
    """A line as its sorted member tuple. The generator pair is metadata only."""

    members: tuple[int, ...]
    generator: tuple[int, int] | None = field(default=None, compare=False)

    def __len__(self):
        return len(self.members)

    def __contains__(self, v):
        return v in self.members

    def __iter__(self):
        return iter(self.members)

    @property
    def member_set(self) -> frozenset[int]:
        return frozenset(self.members)


@dataclass(frozen=True)
class DbeVerdict:
    n: int
    universal_pair: tuple[int, int] | None
    distinct_line_count: int

    @property
    def holds(self) -> bool:
        return self.universal_pair is not None or self.distinct_line_count >= self.n


def _check(d: DistanceMatrix, *vs):
    for v in vs:
        if not 0 <= v < d.n:
            raise VertexOutOfRange(v, d.n)


def is_between(d: DistanceMatrix, a: int, b: int, c: int) -> bool:
    _check(d, a, b, c)
    ab, bc, ac = d[a, b], d[b, c], d[a, c]
    if ab is UNREACHABLE or bc is UNREACHABLE or ac is UNREACHABLE:
        return False
    return ab + bc == ac


def _collinear_unchecked(rows, a, b, c) -> bool:
    ab, bc, ac = rows[a][b], rows[b][c], rows[a][c]
    if ab is UNREACHABLE or bc is UNREACHABLE or ac is UNREACHABLE:
        return False
    return ab + bc == ac or ab + ac == bc or ac + bc == ab


def is_collinear(d: DistanceMatrix, a: int, b: int, c: int) -> bool:
    _check(d, a, b, c)
    if a == b or b == c or a == c:
        return False
    return _collinear_unchecked(d.rows, a, b, c)


def line_of(g: Graph, d: DistanceMatrix | None, a: int, b: int) -> Line:
    """The line generated by ``a`` and ``b``; pass ``d=None`` to compute distances."""
    if d is None:
        d = apsp(g)
    _check(d, a, b)
    if a == b:
        raise EqualEndpoints(f"line generator needs distinct vertices, got ({a}, {b})")
    rows = d.rows
    members = tuple(
        c for c in range(g.n) if c == a or c == b or _collinear_unchecked(rows, a, b, c)
    )
    return Line(members, (min(a, b), max(a, b)))


def _require_two(g: Graph):
    if g.n < 2:
        raise TooSmall(f"need at least 2 vertices, got {g.n}")


def iter_pair_lines(g: Graph, d: DistanceMatrix | None = None):
    """Yield ``line_of(a, b)`` for every pair a < b in lexicographic order."""
    if d is None:
        d = apsp(g)
    for a in range(g.n):
        for b in range(a + 1, g.n):
            yield line_of(g, d, a, b)


def all_lines(g: Graph, d: DistanceMatrix | None = None) -> list[Line]:
    """Distinct lines of ``g``, each tagged with its lexicographically first generator."""
    _require_two(g)
    seen: dict[tuple[int, ...], Line] = {}
    for line in iter_pair_lines(g, d):
        seen.setdefault(line.members, line)
    return list(seen.values())


def find_universal_line(g: Graph, d: DistanceMatrix | None = None) -> tuple[int, int] | None:
    """Lowest pair (a, b) whose line is the whole vertex set, if any."""
    _require_two(g)
    for line in iter_pair_lines(g, d):
        if len(line) == g.n:
            return line.generator
    return None


def check_dbe(g: Graph) -> DbeVerdict:
    _require_two(g)
    d = apsp(g)
    lines = all_lines(g, d)
    universal = next((ln.generator for ln in lines if len(ln) == g.n), None)
    count = len(lines)
    assert count <= comb(g.n, 2)
    return DbeVerdict(g.n, universal, count)
