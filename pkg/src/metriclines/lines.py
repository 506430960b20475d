"""Lines, their generator pairs, and generator graphs.

A line is keyed by its member set packed into a Python int (bit ``i`` set
iff point ``i`` is on the line).  That key is what deduplication hashes, and
ordering lines by it gives the canonical export order.
"""

from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass, field
from math import comb
from typing import Iterable, Iterator

import numpy as np

from .errors import (
    InternalInconsistency,
    NoDistances,
    PreconditionUnmet,
    TooFewPoints,
    UnknownLine,
)
from .space import BetweennessSpace, CheckResult

Pair = tuple[int, int]


def pack_bits(v: np.ndarray) -> int:
    return int.from_bytes(np.packbits(v, bitorder="little").tobytes(), "little")


def bits_to_points(bits: int) -> tuple[int, ...]:
    out = []
    i = 0
    while bits:
        if bits & 1:
            out.append(i)
        bits >>= 1
        i += 1
    return tuple(out)


def points_to_bits(points: Iterable[int]) -> int:
    bits = 0
    for p in points:
        bits |= 1 << p
    return bits


@dataclass(frozen=True)
class Line:
    """A line of an ``n``-point space; equality and hashing use ``members`` only."""

    members: int
    generator: Pair = field(compare=False)
    n: int = field(compare=False)

    @property
    def points(self) -> tuple[int, ...]:
        return bits_to_points(self.members)

    def __len__(self) -> int:
        return self.members.bit_count()

    def __contains__(self, p: int) -> bool:
        return bool(self.members >> p & 1)

    @property
    def is_universal(self) -> bool:
        return self.members == (1 << self.n) - 1

    def __repr__(self) -> str:
        return f"Line({list(self.points)}, generator={self.generator})"


def line(space: BetweennessSpace, a: int, b: int) -> Line:
    """The line generated by ``a`` and ``b``: both points plus every point
    collinear with them."""
    space._check_pair(a, b)
    bits = pack_bits(space.line_vector(a, b)) | (1 << a) | (1 << b)
    return Line(bits, (min(a, b), max(a, b)), space.n)


class LineSet:
    """All distinct lines of a space together with their generating pairs.

    Generator lists are in row-major pair order; lines iterate in increasing
    order of their bit key.
    """

    def __init__(self, n: int, generators: dict[int, list[Pair]]):
        self.n = n
        self._gens = {k: tuple(v) for k, v in generators.items()}
        self._keys = sorted(self._gens)
        self._pair_key = {p: k for k, ps in self._gens.items() for p in ps}

    def __len__(self) -> int:
        return len(self._keys)

    @property
    def count(self) -> int:
        return len(self._keys)

    def __iter__(self) -> Iterator[Line]:
        for k in self._keys:
            yield Line(k, self._gens[k][0], self.n)

    def __contains__(self, item) -> bool:
        key = item.members if isinstance(item, Line) else item
        return key in self._gens

    def lines(self) -> list[Line]:
        return list(self)

    def generators(self, ln: Line | int) -> tuple[Pair, ...]:
        key = ln.members if isinstance(ln, Line) else ln
        try:
            return self._gens[key]
        except KeyError:
            raise UnknownLine(f"{ln!r} is not a line of this space") from None

    def line_of(self, a: int, b: int) -> Line:
        pair = (min(a, b), max(a, b))
        key = self._pair_key[pair]
        return Line(key, self._gens[key][0], self.n)

    def keys(self) -> list[int]:
        return list(self._keys)

    def universal(self) -> Line | None:
        full = (1 << self.n) - 1
        if full in self._gens:
            return Line(full, self._gens[full][0], self.n)
        return None

    def to_json(self) -> list[dict]:
        return [
            {"members": list(bits_to_points(k)), "generators": [list(p) for p in self._gens[k]]}
            for k in self._keys
        ]

    @classmethod
    def from_json(cls, n: int, obj: list[dict]) -> "LineSet":
        return cls(n, {points_to_bits(e["members"]): [tuple(p) for p in e["generators"]] for e in obj})


def all_lines(space: BetweennessSpace) -> LineSet:
    """Compute every line, deduplicated, with its generating pairs.

    Each anchor row costs one vectorised ``n x n`` collinearity slice, so the
    whole computation is ``O(n^3)`` predicate evaluations.
    """
    n = space.n
    if n < 2:
        raise TooFewPoints("lines need at least two points")
    gens: dict[int, list[Pair]] = defaultdict(list)
    for a in range(n - 1):
        rows = np.packbits(space.collinear_matrix(a)[a + 1:], axis=1, bitorder="little")
        base = 1 << a
        for off, row in enumerate(rows):
            b = a + 1 + off
            key = int.from_bytes(row.tobytes(), "little") | base | (1 << b)
            gens[key].append((a, b))
    total = sum(len(v) for v in gens.values())
    if total != comb(n, 2):
        raise InternalInconsistency(f"generator sets cover {total} pairs, expected {comb(n, 2)}")
    return LineSet(n, gens)


def universal_line(space: BetweennessSpace, lines: LineSet | None = None) -> Line | None:
    """A line containing every point, generated by the least pair, or None."""
    if space.n < 2:
        raise TooFewPoints("lines need at least two points")
    if lines is not None:
        found = lines.universal()
        return found
    full = (1 << space.n) - 1
    for a in range(space.n - 1):
        for b in range(a + 1, space.n):
            ln = line(space, a, b)
            if ln.members == full:
                return ln
    return None


@dataclass(frozen=True)
class GeneratorGraph:
    """Pairs generating ``line`` (restricted to distance ``delta`` if given),
    viewed as a graph on all ``n`` points."""

    line: Line
    delta: int | None
    n: int
    edges: tuple[Pair, ...]

    def adjacency(self) -> dict[int, set[int]]:
        adj: dict[int, set[int]] = defaultdict(set)
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    @property
    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def vertices(self) -> tuple[int, ...]:
        """Vertices incident to at least one edge."""
        return tuple(sorted({p for e in self.edges for p in e}))


def generator_graph(space: BetweennessSpace, ln: Line, delta: int | None = None,
                    lines: LineSet | None = None) -> GeneratorGraph:
    from .metric import MetricSpace

    if delta is not None and not isinstance(space, MetricSpace):
        raise NoDistances("distance-filtered generator graphs need a metric space")
    lines = all_lines(space) if lines is None else lines
    edges = lines.generators(ln)
    if delta is not None:
        edges = tuple(e for e in edges if space.d(*e) == delta)
    return GeneratorGraph(Line(ln.members, ln.generator, space.n), delta, space.n, tuple(edges))


def check_no_high_degree(m, ln: Line, delta: int, lines: LineSet | None = None) -> CheckResult:
    """For ``2*delta > D``: the distance-``delta`` generator graph of ``ln`` is a
    matching.  A failure names a vertex of degree >= 2."""
    from .metric import diameter

    d = diameter(m).value
    if 2 * delta <= d:
        raise PreconditionUnmet(f"needs 2*delta > diameter, got delta={delta}, D={d}")
    g = generator_graph(m, ln, delta, lines)
    for v, deg in enumerate(g.degrees()):
        if deg > 1:
            return CheckResult(False, (v, tuple(e for e in g.edges if v in e)))
    return CheckResult(True)


def k_core_edges(edges: Iterable[Pair], k: int) -> tuple[Pair, ...]:
    """Edges of the maximal subgraph with minimum degree >= ``k``."""
    if k < 1:
        raise ValueError("k must be at least 1")
    edges = tuple(edges)
    adj: dict[int, set[int]] = defaultdict(set)
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    deg = {v: len(ns) for v, ns in adj.items()}
    removed: set[int] = set()
    queue = deque(sorted(v for v, d in deg.items() if d < k))
    removed.update(queue)
    while queue:
        v = queue.popleft()
        for u in adj[v]:
            if u in removed:
                continue
            deg[u] -= 1
            if deg[u] < k:
                removed.add(u)
                queue.append(u)
    return tuple(e for e in edges if e[0] not in removed and e[1] not in removed)


def prune_to_min_degree(g: GeneratorGraph, k: int) -> GeneratorGraph:
    """Repeatedly delete vertices of degree below ``k`` (the ``k``-core)."""
    return GeneratorGraph(g.line, g.delta, g.n, k_core_edges(g.edges, k))
