"""Graphs as metric generators: formats, BFS distances, and graph families."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import (
    Disconnected,
    DuplicateEdge,
    InternalInconsistency,
    MalformedGraph6,
    NTooSmall,
    PreconditionUnmet,
    SelfLoop,
    STooSmall,
)
from .metric import MetricSpace
from .space import BetweennessSpace


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on ``0..n-1`` with sorted neighbour lists."""

    n: int
    adjacency: tuple[tuple[int, ...], ...]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {u} {v} outside range({n})")
            if u == v:
                raise SelfLoop(u)
            if v in nbrs[u]:
                raise DuplicateEdge(u, v)
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(tuple(sorted(s)) for s in nbrs))

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    @property
    def num_edges(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def component(self, v: int) -> set[int]:
        seen = {v}
        queue = deque([v])
        while queue:
            u = queue.popleft()
            for w in self.adjacency[u]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        return seen

    def is_connected(self) -> bool:
        return self.n == 0 or len(self.component(0)) == self.n

    def to_json(self) -> dict:
        return {"n": self.n, "adjacency": [list(a) for a in self.adjacency]}

    @classmethod
    def from_json(cls, obj: dict) -> "Graph":
        adj = obj["adjacency"]
        n = int(obj.get("n", len(adj)))
        for u, ns in enumerate(adj):
            for v in ns:
                if u not in adj[v]:
                    raise ValueError(f"adjacency is not symmetric at {u} {v}")
        return cls.from_edges(n, [(u, v) for u, ns in enumerate(adj) for v in ns if u < v])


# -- graph6 --------------------------------------------------------------

_HEADER = ">>graph6<<"


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return chr(126) + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return chr(126) * 2 + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def to_graph6(g: Graph) -> str:
    bits = [1 if g.has_edge(i, j) else 0 for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = "".join(
        chr(63 + int("".join(map(str, bits[k:k + 6])), 2)) for k in range(0, len(bits), 6)
    )
    return _encode_n(g.n) + body


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 string (an optional ``>>graph6<<`` header is allowed)."""
    s = text.strip()
    offset = 0
    if s.startswith(_HEADER):
        s = s[len(_HEADER):]
        offset = len(_HEADER)
    if not s:
        raise MalformedGraph6(offset, "empty graph6 string")
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise MalformedGraph6(offset + i, f"byte {ch!r} out of range")
    vals = [ord(ch) - 63 for ch in s]
    if vals[0] != 63:
        n, pos = vals[0], 1
    elif len(vals) >= 4 and vals[1] != 63:
        n, pos = (vals[1] << 12) | (vals[2] << 6) | vals[3], 4
    elif len(vals) >= 8:
        n = 0
        for v in vals[2:8]:
            n = (n << 6) | v
        pos = 8
    else:
        raise MalformedGraph6(offset, "truncated vertex count")
    need_bits = n * (n - 1) // 2
    need = (need_bits + 5) // 6
    body = vals[pos:]
    if len(body) != need:
        raise MalformedGraph6(offset + pos + min(len(body), need),
                              f"expected {need} data bytes for n={n}, found {len(body)}")
    bits = []
    for v in body:
        bits.extend((v >> s) & 1 for s in range(5, -1, -1))
    if any(bits[need_bits:]):
        raise MalformedGraph6(offset + len(vals) - 1, "non-zero padding bits")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph.from_edges(n, edges)


def parse_edge_list(text: str, n: int | None = None) -> Graph:
    """One ``u v`` pair per line, 0-indexed; blank lines and ``#`` comments
    are skipped.  ``n`` defaults to one more than the largest vertex."""
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        parts = body.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'u v', got {raw!r}")
        edges.append((int(parts[0]), int(parts[1])))
    if n is None:
        n = 1 + max((max(e) for e in edges), default=-1)
    return Graph.from_edges(n, edges)


def to_edge_list(g: Graph) -> str:
    return "".join(f"{u} {v}\n" for u, v in g.edges())


# -- metric ----------------------------------------------------------------

def bfs_distances(g: Graph, source: int) -> list[int]:
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def graph_metric(g: Graph) -> MetricSpace:
    """Shortest-path metric of a connected unit-weight graph."""
    rows = []
    for s in range(g.n):
        row = bfs_distances(g, s)
        if min(row) < 0:
            raise Disconnected(g.component(s))
        rows.append(row)
    return MetricSpace(np.array(rows, dtype=np.int64).reshape(g.n, g.n), 1)


# -- families --------------------------------------------------------------

def gen_path(n: int) -> Graph:
    if n < 2:
        raise NTooSmall("path needs n >= 2")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def gen_cycle(n: int) -> Graph:
    if n < 3:
        raise NTooSmall("cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def gen_complete(n: int) -> Graph:
    if n < 2:
        raise NTooSmall("complete graph needs n >= 2")
    return Graph.from_edges(n, combinations(range(n), 2))


def icbrt_square(n: int) -> int:
    """floor(n ** (2/3)): the largest k with k**3 <= n**2."""
    target = n * n
    k = 0
    step = 1 << ((target.bit_length() + 2) // 3 + 1)
    while step:
        if (k + step) ** 3 <= target:
            k += step
        step >>= 1
    return k


def kpartite_parts(n: int) -> list[int]:
    k = icbrt_square(n)
    q, r = divmod(n, k)
    return [q + 1] * r + [q] * (k - r)


def gen_complete_kpartite(n: int) -> Graph:
    """Complete k-partite graph with ``k = floor(n^(2/3))`` near-equal parts,
    parts labelled consecutively (larger parts first)."""
    if n < 4:
        raise NTooSmall("kpartite family needs n >= 4")
    part = []
    for idx, size in enumerate(kpartite_parts(n)):
        part.extend([idx] * size)
    return Graph.from_edges(n, [(u, v) for u, v in combinations(range(n), 2) if part[u] != part[v]])


def gen_subdivided_path(s: int) -> Graph:
    """Path ``v_0 .. v_{s^3}`` plus, for each ``0 <= j < s^2``, a second route of
    ``s + 1`` edges between ``v_{js}`` and ``v_{js+s}``.

    Path vertices take labels ``0..s^3``; the ``s`` interior vertices of each
    extra route follow in order of ``j``, giving ``2 s^3 + 1`` vertices.
    """
    if s < 2:
        raise STooSmall("subdivided path needs s >= 2")
    top = s ** 3
    edges = [(i, i + 1) for i in range(top)]
    nxt = top + 1
    for j in range(s * s):
        route = [j * s, *range(nxt, nxt + s), j * s + s]
        nxt += s
        edges.extend(zip(route, route[1:]))
    return Graph.from_edges(nxt, edges)


def subdivided_path_order(s: int) -> int:
    return s ** 3 + 1 + s ** 2 * s


# -- walks -----------------------------------------------------------------

def induced_path_from_walk(g: Graph, walk: Sequence[int]) -> list[int]:
    """Shortcut a walk into an induced path with the same end points.

    From each vertex jump to the latest walk position holding one of its
    neighbours; a chord would contradict the choice of jump.
    """
    walk = list(walk)
    last = {v: i for i, v in enumerate(walk)}
    pos = last[walk[0]]
    path = [walk[0]]
    while walk[pos] != walk[-1]:
        v = walk[pos]
        nxt = max(i for i in range(pos + 1, len(walk)) if g.has_edge(v, walk[i]))
        pos = last[walk[nxt]]
        path.append(walk[pos])
    return path


def walk_intermediate_point(g: Graph, m: BetweennessSpace, walk: Sequence[int]) -> int:
    """A vertex of ``walk`` other than its end points that is not beyond either
    end of the pair ``(a, b) = (walk[0], walk[-1])``.

    The vertex is found on an induced path extracted from the walk.
    """
    walk = list(walk)
    for u, v in zip(walk, walk[1:]):
        if not g.has_edge(u, v):
            raise ValueError(f"{u} {v} is not an edge, so this is not a walk")
    a, b = walk[0], walk[-1]
    if a == b or m.d(a, b) < 2:
        raise PreconditionUnmet(f"needs distance >= 2 between the walk's ends {a}, {b}")
    for u in induced_path_from_walk(g, walk)[1:-1]:
        if not (m.between(u, a, b) or m.between(a, b, u)):
            return u
    raise InternalInconsistency(f"every interior vertex of the walk lies beyond {a} or {b}")


# -- corpus ----------------------------------------------------------------

def connected_graphs(n: int) -> Iterator[Graph]:
    """All connected graphs on ``n`` vertices up to isomorphism, in canonical
    labelling, ordered by graph6 string.

    Every connected graph has a vertex whose removal keeps it connected, so
    extending each connected ``(n-1)``-vertex graph by a vertex with every
    non-empty neighbourhood reaches all of them; nauty certificates remove
    duplicates.
    """
    if n < 1:
        raise NTooSmall("n must be positive")
    for code in _connected_codes(n):
        yield parse_graph6(code)


def _canonical_code(n: int, nbrs: list[list[int]]) -> str:
    import pynauty

    pg = pynauty.Graph(n, adjacency_dict={v: list(ns) for v, ns in enumerate(nbrs)})
    lab = pynauty.canon_label(pg)
    where = {v: i for i, v in enumerate(lab)}
    edges = [(where[u], where[v]) for u in range(n) for v in nbrs[u] if u < v]
    return to_graph6(Graph.from_edges(n, edges))


_CODE_CACHE: dict[int, list[str]] = {1: ["@"]}


def _connected_codes(n: int) -> list[str]:
    if n in _CODE_CACHE:
        return _CODE_CACHE[n]
    seen: set[str] = set()
    for code in _connected_codes(n - 1):
        g = parse_graph6(code)
        base = [list(a) for a in g.adjacency]
        for mask in range(1, 1 << (n - 1)):
            nbrs = [list(a) for a in base] + [[]]
            for v in range(n - 1):
                if mask >> v & 1:
                    nbrs[v].append(n - 1)
                    nbrs[n - 1].append(v)
            seen.add(_canonical_code(n, nbrs))
    _CODE_CACHE[n] = sorted(seen)
    return _CODE_CACHE[n]
