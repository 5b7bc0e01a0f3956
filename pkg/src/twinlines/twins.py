"""Splitting into true twins, blob decomposition and recognition.

Splitting ``v`` adds a vertex ``v'`` with N(v') = N(v) + {v}, so ``v`` and
``v'`` become true twins (equal closed neighbourhoods). Repeated splitting of
a base graph H produces G together with a surjection f: V(G) -> V(H); the
preimage of a base vertex is its *blob*. Blobs of size one are trivial, the
others are rich.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable

from .errors import FormatError, InvalidPartition, SameBlob, VertexOutOfRange
from .graph import Graph, build_graph, graph_from_text, graph_to_text, is_bipartite


def split_vertex(g: Graph, v: int) -> Graph:
    """Return ``g`` plus a true twin of ``v``; the twin gets id ``g.n``."""
    if not 0 <= v < g.n:
        raise VertexOutOfRange(v, g.n)
    twin = g.n
    edges = list(g.edges)
    edges.append((v, twin))
    edges.extend((w, twin) for w in sorted(g.adjacency[v]))
    return build_graph(g.n + 1, edges)


def true_twin_classes(g: Graph) -> list[tuple[int, ...]]:
    """Classes of equal closed neighbourhoods, ordered by smallest member."""
    by_nbhd: dict[frozenset[int], list[int]] = {}
    for v in range(g.n):
        by_nbhd.setdefault(g.closed_neighborhood(v), []).append(v)
    return sorted((tuple(c) for c in by_nbhd.values()), key=lambda c: c[0])


def _contract(g: Graph, classes: list[tuple[int, ...]]) -> tuple[Graph, list[int]]:
    index = [0] * g.n
    for i, cls in enumerate(classes):
        for v in cls:
            index[v] = i
    edges = {
        (min(index[u], index[v]), max(index[u], index[v]))
        for u, v in g.edges
        if index[u] != index[v]
    }
    return build_graph(len(classes), edges), index


def twin_quotient(g: Graph) -> tuple[Graph, tuple[int, ...]]:
    """Contract true-twin classes until none remain.

    Returns the fixpoint graph and the composed map from vertices of ``g`` to
    vertices of the fixpoint. A single contraction already yields a twin-free
    graph; the loop only confirms the fixpoint.
    """
    f = list(range(g.n))
    current = g
    while True:
        classes = true_twin_classes(current)
        if len(classes) == current.n:
            return current, tuple(f)
        current, index = _contract(current, classes)
        f = [index[x] for x in f]


@dataclass(frozen=True)
class BlobPartition:
    """Map ``f`` from G-vertices onto the vertices of ``base``, with its blobs."""

    f: tuple[int, ...]
    blobs: tuple[tuple[int, ...], ...]
    base: Graph

    @classmethod
    def from_map(cls, f: Iterable[int], base: Graph) -> "BlobPartition":
        f = tuple(f)
        blobs: list[list[int]] = [[] for _ in range(base.n)]
        for v, x in enumerate(f):
            if not 0 <= x < base.n:
                raise InvalidPartition(f"vertex {v} maps to {x}, outside base of size {base.n}")
            blobs[x].append(v)
        return cls(f, tuple(tuple(b) for b in blobs), base)

    @property
    def rich_flags(self) -> tuple[bool, ...]:
        return tuple(len(b) >= 2 for b in self.blobs)

    def is_rich(self, x: int) -> bool:
        return len(self.blobs[x]) >= 2

    def trivial_neighbors(self, x: int) -> list[int]:
        """Trivial blobs adjacent to blob ``x`` in the base, ascending."""
        return sorted(y for y in self.base.adjacency[x] if len(self.blobs[y]) == 1)


def validate_partition(g: Graph, bp: BlobPartition) -> None:
    """Raise InvalidPartition unless ``bp`` is a blob decomposition of ``g``."""
    if len(bp.f) != g.n:
        raise InvalidPartition(f"map covers {len(bp.f)} vertices, graph has {g.n}")
    if len(bp.blobs) != bp.base.n:
        raise InvalidPartition("blob list does not match base vertex count")
    for x, blob in enumerate(bp.blobs):
        if not blob:
            raise InvalidPartition(f"map is not surjective: blob {x} is empty")
        if any(bp.f[v] != x for v in blob):
            raise InvalidPartition(f"blob {x} disagrees with the map")
    if sum(len(b) for b in bp.blobs) != g.n:
        raise InvalidPartition("blobs do not partition the vertex set")
    for v in range(g.n):
        x = bp.f[v]
        # N[v] must be exactly the union of the blobs closed-adjacent to f(v)
        expected = set(bp.blobs[x])
        for y in bp.base.adjacency[x]:
            expected.update(bp.blobs[y])
        if g.closed_neighborhood(v) != expected:
            raise InvalidPartition(f"closed neighbourhood of {v} is not a union of blobs around {x}")


def recognize_split_of_bipartite(g: Graph) -> BlobPartition | None:
    """Blob partition over a bipartite base, or None if ``g`` is not in the class.

    ``g`` is accepted exactly when its twin-quotient fixpoint is bipartite.
    The recovered base can be smaller than the one that generated ``g``: K3
    comes from K2 by one split but is recognised over K1.
    """
    base, f = twin_quotient(g)
    if not is_bipartite(base):
        return None
    return BlobPartition.from_map(f, base)


@dataclass(frozen=True)
class BlobStats:
    p: int
    k: int
    max_trivial_deg: int
    chosen_B: int | None


def blob_stats(g: Graph, bp: BlobPartition) -> BlobStats:
    validate_partition(g, bp)
    p = 0
    k = 0
    best, chosen = 0, None
    for x, blob in enumerate(bp.blobs):
        if len(blob) < 2:
            continue
        p += len(blob)
        t = len(bp.trivial_neighbors(x))
        if t:
            k += 1
        if t > best:
            best, chosen = t, x
    if chosen is None:
        # no rich blob has a trivial neighbour; still report the first rich blob
        chosen = next((x for x, b in enumerate(bp.blobs) if len(b) >= 2), None)
    return BlobStats(p, k, best, chosen)


def pullback_line(base_line: Iterable[int], bp: BlobPartition, u: int, v: int) -> tuple[int, ...]:
    """Lift the base line through f(u), f(v) to the line through u, v in G.

    The result holds ``u``, ``v`` and every vertex whose blob lies on the base
    line, except the other members of the blobs of ``u`` and ``v``.
    """
    fu, fv = bp.f[u], bp.f[v]
    if fu == fv:
        raise SameBlob(f"{u} and {v} are both in blob {fu}; their line is {{{u}, {v}}}")
    keep = set(base_line)
    if fu not in keep or fv not in keep:
        raise ValueError("base line must contain f(u) and f(v)")
    keep -= {fu, fv}
    return tuple(sorted({u, v}.union(z for z, x in enumerate(bp.f) if x in keep)))


@dataclass(frozen=True)
class SplitTrace:
    base_graph: Graph
    steps: tuple[int, ...]
    seed: int | None = None

    def replay(self) -> tuple[Graph, BlobPartition]:
        g = self.base_graph
        f = list(range(g.n))
        for v in self.steps:
            g = split_vertex(g, v)
            f.append(f[v])
        return g, BlobPartition.from_map(f, self.base_graph)

    def to_text(self) -> str:
        head, *edges = graph_to_text(self.base_graph).splitlines()
        out = [f"base {head}", *edges]
        out.extend(f"split {v}" for v in self.steps)
        out.append(f"seed {'none' if self.seed is None else self.seed}")
        return "\n".join(out) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "SplitTrace":
        lines = [
            (i, ln.strip())
            for i, ln in enumerate(text.splitlines(), start=1)
            if ln.strip() and not ln.lstrip().startswith("#")
        ]
        if not lines or not lines[0][1].startswith("base "):
            raise FormatError("trace must start with 'base n m'", lines[0][0] if lines else None)
        header = lines[0][1].split()
        try:
            m = int(header[2])
        except (IndexError, ValueError):
            raise FormatError("bad trace header", lines[0][0]) from None
        graph_lines = [" ".join(header[1:])] + [ln for _, ln in lines[1 : 1 + m]]
        base = graph_from_text("\n".join(graph_lines) + "\n")
        steps, seed, seen_seed = [], None, False
        for lineno, ln in lines[1 + m :]:
            word, _, rest = ln.partition(" ")
            if seen_seed:
                raise FormatError("content after 'seed' line", lineno)
            if word == "split":
                try:
                    steps.append(int(rest))
                except ValueError:
                    raise FormatError(f"bad split step {ln!r}", lineno) from None
            elif word == "seed":
                seen_seed = True
                seed = None if rest == "none" else int(rest)
            else:
                raise FormatError(f"unexpected trace line {ln!r}", lineno)
        if not seen_seed:
            raise FormatError("trace is missing its 'seed' line")
        return cls(base, tuple(steps), seed)


def random_bipartite(left: int, right: int, edge_prob: float, rng: random.Random) -> Graph:
    """Left side is 0..left-1, right side follows; each cross pair flips one coin."""
    edges = [
        (i, left + j)
        for i in range(left)
        for j in range(right)
        if rng.random() < edge_prob
    ]
    return build_graph(left + right, edges)


def generate_instance(left: int, right: int, edge_prob: float, splits: int, seed: int):
    """Random bipartite base followed by ``splits`` uniformly random splits.

    Randomness comes from ``random.Random(seed)`` (Mersenne Twister), so the
    same arguments always give the same graph. Returns ``(graph, trace,
    partition)`` where ``partition`` is the blob partition induced by the trace.
    """
    if left < 1 or right < 1:
        raise ValueError("both sides of the base need at least one vertex")
    if not 0.0 <= edge_prob <= 1.0:
        raise ValueError(f"edge probability must lie in [0, 1], got {edge_prob}")
    if splits < 0:
        raise ValueError("number of splits must be non-negative")
    rng = random.Random(seed)
    base = random_bipartite(left, right, edge_prob, rng)
    steps = []
    n = base.n
    for _ in range(splits):
        steps.append(rng.randrange(n))
        n += 1
    trace = SplitTrace(base, tuple(steps), seed)
    g, bp = trace.replay()
    return g, trace, bp


def blow_up(base: Graph, sizes: Iterable[int]) -> tuple[Graph, BlobPartition]:
    """Replace base vertex ``x`` by a clique of ``sizes[x]`` true twins.

    Vertex ids of the result are assigned blob by blob in base order.
    """
    sizes = list(sizes)
    if len(sizes) != base.n or any(s < 1 for s in sizes):
        raise ValueError("need one positive size per base vertex")
    f = [x for x, s in enumerate(sizes) for _ in range(s)]
    bp = BlobPartition.from_map(f, base)
    edges = []
    for x, blob in enumerate(bp.blobs):
        edges.extend((a, b) for i, a in enumerate(blob) for b in blob[i + 1 :])
    for x, y in base.edges:
        edges.extend((a, b) for a in bp.blobs[x] for b in bp.blobs[y])
    return build_graph(len(f), edges), bp
