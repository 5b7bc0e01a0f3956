"""Explicit witnesses that a graph has a universal line or at least n lines.

:func:`certify` follows the counting argument step by step and lists the
lines it uses. Lines between different blobs are obtained by lifting the
corresponding base line; :func:`verify_certificate` ignores all of that and
checks the listed sets against a brute-force enumeration of the lines of G.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from .errors import FormatError, NotInClass, TooSmall
from .graph import Graph, apsp, components
from .lines import iter_pair_lines, line_of
from .twins import BlobPartition, blob_stats, pullback_line, recognize_split_of_bipartite

KINDS = ("universal", "disconnected", "families")
FAMILY_NAMES = ("rich_pairs", "trivial_pairs", "rich_to_trivial")


@dataclass
class Certificate:
    kind: str
    n: int
    lines: list[tuple[int, ...]]
    families: dict[str, list[tuple[int, ...]]] = field(default_factory=dict)
    generators: list[tuple[int, int]] = field(default_factory=list)

    @property
    def claimed_count(self) -> int:
        return len(self.lines)

    def to_text(self) -> str:
        out = [f"certificate {self.kind} n={self.n} count={self.claimed_count}"]
        if self.families:
            for name in FAMILY_NAMES:
                out.append(f"# family {name}")
                out.extend(" ".join(map(str, s)) for s in self.families.get(name, []))
        else:
            out.extend(" ".join(map(str, s)) for s in self.lines)
        return "\n".join(out) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "Certificate":
        rows = [(i, ln.strip()) for i, ln in enumerate(text.splitlines(), start=1) if ln.strip()]
        if not rows:
            raise FormatError("empty certificate")
        lineno, header = rows[0]
        parts = header.split()
        if len(parts) != 4 or parts[0] != "certificate" or parts[1] not in KINDS:
            raise FormatError(f"bad certificate header {header!r}", lineno)
        try:
            n = int(parts[2].removeprefix("n="))
            count = int(parts[3].removeprefix("count="))
        except ValueError:
            raise FormatError(f"bad certificate header {header!r}", lineno) from None
        if not parts[2].startswith("n=") or not parts[3].startswith("count="):
            raise FormatError(f"bad certificate header {header!r}", lineno)
        lines, families, current = [], {}, None
        for lineno, row in rows[1:]:
            if row.startswith("#"):
                words = row[1:].split()
                if len(words) == 2 and words[0] == "family":
                    current = families.setdefault(words[1], [])
                continue
            try:
                members = tuple(int(x) for x in row.split())
            except ValueError:
                raise FormatError(f"bad member set {row!r}", lineno) from None
            lines.append(members)
            if current is not None:
                current.append(members)
        if count != len(lines):
            raise FormatError(f"header claims {count} lines, found {len(lines)}")
        return cls(parts[1], n, lines, families)


def _universal(g: Graph, d, a: int, b: int) -> Certificate:
    line = line_of(g, d, a, b)
    return Certificate("universal", g.n, [line.members], generators=[line.generator])


def _disconnected(g: Graph, d, blocks) -> Certificate:
    if g.n == 2:
        return _universal(g, d, 0, 1)
    where = {v: i for i, block in enumerate(blocks) for v in block}
    gens = [(a, b) for a in range(g.n) for b in range(a + 1, g.n) if where[a] != where[b]]
    lines = [(a, b) for a, b in gens]
    if len(blocks) == 2 and min(len(b) for b in blocks) == 1:
        big = max(blocks, key=len)
        extra = line_of(g, d, big[0], big[1])
        lines.append(extra.members)
        gens.append(extra.generator)
    return Certificate("disconnected", g.n, lines, generators=gens)


def _lift(g: Graph, bp: BlobPartition, base_d, u: int, v: int) -> tuple[int, ...]:
    fu, fv = bp.f[u], bp.f[v]
    if fu == fv:
        return (min(u, v), max(u, v))
    base_line = line_of(bp.base, base_d, fu, fv)
    return pullback_line(base_line.members, bp, u, v)


def certify(g: Graph) -> Certificate:
    """Build a certificate for a graph obtained from a bipartite graph by splits.

    Raises TooSmall for n < 2 and NotInClass when the twin quotient of ``g``
    is not bipartite.
    """
    if g.n < 2:
        raise TooSmall(f"need at least 2 vertices, got {g.n}")
    bp = recognize_split_of_bipartite(g)
    if bp is None:
        raise NotInClass("twin quotient is not bipartite")
    d = apsp(g)
    blocks = components(g)
    if len(blocks) > 1:
        return _disconnected(g, d, blocks)

    base = bp.base
    for x, y in base.edges:
        if not bp.is_rich(x) and not bp.is_rich(y):
            return _universal(g, d, bp.blobs[x][0], bp.blobs[y][0])

    stats = blob_stats(g, bp)
    if stats.p == g.n and g.n == 2:
        return _universal(g, d, 0, 1)

    base_d = apsp(base)
    rich = [v for v in range(g.n) if bp.is_rich(bp.f[v])]
    rich_pairs = [(u, v) for i, u in enumerate(rich) for v in rich[i + 1 :]]

    trivial_pairs = []
    rich_to_trivial = []
    if stats.p < g.n:
        around = [bp.blobs[y][0] for y in bp.trivial_neighbors(stats.chosen_B)]
        trivial_pairs = [(a, b) for i, a in enumerate(around) for b in around[i + 1 :]]
        for x, blob in enumerate(bp.blobs):
            if not bp.is_rich(x):
                continue
            nbrs = bp.trivial_neighbors(x)
            if not nbrs:
                continue
            partner = bp.blobs[nbrs[0]][0]
            rich_to_trivial.extend((u, partner) for u in blob)

    families = {}
    gens = []
    for name, pairs in zip(FAMILY_NAMES, (rich_pairs, trivial_pairs, rich_to_trivial)):
        families[name] = [_lift(g, bp, base_d, u, v) for u, v in pairs]
        gens.extend(pairs)
    lines = [s for name in FAMILY_NAMES for s in families[name]]
    return Certificate("families", g.n, lines, families, gens)


def verify_certificate(g: Graph, cert: Certificate) -> bool:
    """Check a certificate against a brute-force enumeration of the lines of ``g``."""
    if cert.kind not in KINDS or cert.n != g.n or g.n < 2:
        return False
    if not cert.lines:
        return False
    listed = [frozenset(s) for s in cert.lines]
    if any(len(s) != len(raw) for s, raw in zip(listed, cert.lines)):
        return False
    if len(set(listed)) != len(listed):
        return False
    genuine = {frozenset(line.members) for line in iter_pair_lines(g)}
    if any(s not in genuine for s in listed):
        return False
    if cert.kind == "universal":
        return len(listed) == 1 and listed[0] == frozenset(range(g.n))
    return len(listed) >= g.n


def read_certificate(path) -> Certificate:
    return Certificate.from_text(Path(path).read_text())


def write_certificate(cert: Certificate, path) -> None:
    Path(path).write_text(cert.to_text())
