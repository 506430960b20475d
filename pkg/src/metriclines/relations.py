"""How two pairs that generate the same line relate to each other.

Besides the classifier, this module evaluates several proven structural
statements on concrete inputs.  Those checks return a
:class:`~metriclines.space.CheckResult` instead of raising, so a sweep can
count and report counterexamples (which would point at a bug in the
betweenness code).
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

import numpy as np

from .errors import (
    DifferentLines,
    DuplicatePoint,
    HypothesisUnmet,
    IdenticalPairs,
    OverlappingPairs,
)
from .lines import Line, LineSet, all_lines, generator_graph, k_core_edges, line
from .metric import MetricSpace, diameter
from .space import BetweennessSpace, CheckResult
from .betweenness import is_geodesic_set

Pair = tuple[int, int]


class PairRelationKind(enum.Enum):
    ALPHA = "alpha"
    BETA = "beta"
    GAMMA = "gamma"


ALPHA, BETA, GAMMA = PairRelationKind.ALPHA, PairRelationKind.BETA, PairRelationKind.GAMMA


@dataclass(frozen=True)
class InnerOuterSets:
    inner: frozenset[int]
    outer: frozenset[int]


def inner_outer(s: BetweennessSpace, a: int, b: int) -> InnerOuterSets:
    """``I(a, b)``: points strictly between a and b; ``O(a, b)``: points beyond
    a or beyond b."""
    s._check_pair(a, b)
    inner = s.inner_vector(a, b)
    outer = s.outer_vector(a, b) & ~inner
    return InnerOuterSets(
        frozenset(int(x) for x in np.flatnonzero(inner)),
        frozenset(int(x) for x in np.flatnonzero(outer)),
    )


def _distinct(points: Sequence[int]) -> None:
    if len(set(points)) != len(points):
        raise DuplicatePoint(f"points must be distinct, got {tuple(points)}")


def is_parallelogram(s: BetweennessSpace, quad: Sequence[int]) -> bool:
    """``[abc]``, ``[bcd]``, ``[cda]`` and ``[dab]`` all hold."""
    _distinct(quad)
    a, b, c, d = quad
    return s.between(a, b, c) and s.between(b, c, d) and s.between(c, d, a) and s.between(d, a, b)


def _pairs_4(p: Pair, q: Pair) -> None:
    if len(set(p)) != 2 or len(set(q)) != 2:
        raise DuplicatePoint("each pair needs two distinct points")
    if set(p) & set(q):
        raise OverlappingPairs(f"pairs {p} and {q} share a point")


def are_parallel(s: BetweennessSpace, p: Pair, q: Pair) -> bool:
    _pairs_4(p, q)
    (a, b), (c, d) = p, q
    return is_parallelogram(s, (a, b, c, d)) or is_parallelogram(s, (a, b, d, c))


def are_antipodal(s: BetweennessSpace, p: Pair, q: Pair) -> bool:
    _pairs_4(p, q)
    (a, b), (c, d) = p, q
    return is_parallelogram(s, (a, c, b, d))


def _related(s, p: Pair, q: Pair, io_p: InnerOuterSets, io_q: InnerOuterSets) -> set[PairRelationKind]:
    kinds = set()
    pts = set(p) | set(q)
    if is_geodesic_set(s, pts) is not None:
        kinds.add(ALPHA)
    if len(pts) == 4:
        if not io_p.inner and not io_q.inner and are_parallel(s, p, q):
            kinds.add(BETA)
        if not io_p.outer and not io_q.outer and are_antipodal(s, p, q):
            kinds.add(GAMMA)
    return kinds


def classify_pair_relation(s: BetweennessSpace, p: Pair, q: Pair) -> frozenset[PairRelationKind]:
    """All of alpha/beta/gamma that hold between two pairs generating one line.

    Overlapping pairs form a collinear 3-set, which counts as alpha.
    """
    p, q = tuple(p), tuple(q)
    if set(p) == set(q):
        raise IdenticalPairs(f"{p} and {q} are the same pair")
    if line(s, *p) != line(s, *q):
        raise DifferentLines(f"{p} and {q} generate different lines")
    return frozenset(_related(s, p, q, inner_outer(s, *p), inner_outer(s, *q)))


def check_center_lemma(s: BetweennessSpace, a: int, b: int, c: int, x: int) -> CheckResult:
    """If ``[axb]``, ``[bxc]`` and ``[cxa]`` then ``{a, b, c}`` is not collinear."""
    _distinct((a, b, c, x))
    if not (s.between(a, x, b) and s.between(b, x, c) and s.between(c, x, a)):
        raise HypothesisUnmet(f"x={x} is not between every two of {a}, {b}, {c}")
    col = s.collinear(a, b, c)
    return CheckResult(not col, (a, b, c, x) if col else None, detail=col)


@dataclass
class _LinePairs:
    pairs: tuple[Pair, ...]
    io: dict[Pair, InnerOuterSets]


def _line_pairs(s, ln: Line, lines: LineSet | None) -> _LinePairs:
    lines = all_lines(s) if lines is None else lines
    pairs = lines.generators(ln)
    return _LinePairs(pairs, {p: inner_outer(s, *p) for p in pairs})


def gamma_pairs(s: BetweennessSpace, ln: Line, lines: LineSet | None = None) -> list[Pair]:
    """Generators of ``ln`` that are gamma-related to some other generator."""
    lp = _line_pairs(s, ln, lines)
    return _kind_pairs(s, lp, GAMMA)


def _kind_pairs(s, lp: _LinePairs, kind: PairRelationKind) -> list[Pair]:
    # beta needs empty inner sets, gamma empty outer sets
    if kind is GAMMA:
        cand = [p for p in lp.pairs if not lp.io[p].outer]
    else:
        cand = [p for p in lp.pairs if not lp.io[p].inner]
    found = set()
    for p, q in combinations(cand, 2):
        if set(p) & set(q):
            continue
        if kind in _related(s, p, q, lp.io[p], lp.io[q]):
            found.update((p, q))
    return sorted(found)


def gamma_clique_check(s: BetweennessSpace, ln: Line, lines: LineSet | None = None) -> CheckResult:
    """For the gamma-pairs generating ``ln``: (a) none is also a beta-pair,
    (b) they are pairwise disjoint, (c) they are pairwise gamma-related.

    ``detail`` is the list of gamma-pairs.
    """
    lp = _line_pairs(s, ln, lines)
    gammas = _kind_pairs(s, lp, GAMMA)
    betas = set(_kind_pairs(s, lp, BETA))
    for p in gammas:
        if p in betas:
            return CheckResult(False, ("a", p), gammas)
    for p, q in combinations(gammas, 2):
        if set(p) & set(q):
            return CheckResult(False, ("b", p, q), gammas)
        if GAMMA not in _related(s, p, q, lp.io[p], lp.io[q]):
            return CheckResult(False, ("c", p, q), gammas)
    return CheckResult(True, None, gammas)


def _gamma_related(s, p: Pair, q: Pair) -> bool:
    if set(p) & set(q) or line(s, *p) != line(s, *q):
        return False
    return GAMMA in _related(s, p, q, inner_outer(s, *p), inner_outer(s, *q))


def gamma_no_mid_check(s: BetweennessSpace, pairs: Sequence[Pair]) -> CheckResult:
    """For pairwise gamma-related ``(a, b), (u, v), (x, y)`` (labelled as
    given) with ``[a x u]``: ``{a, y, u}`` is not collinear."""
    (a, b), (u, v), (x, y) = pairs
    for p, q in combinations(pairs, 2):
        if not _gamma_related(s, tuple(p), tuple(q)):
            raise HypothesisUnmet(f"{p} and {q} are not gamma-related")
    if not s.between(a, x, u):
        raise HypothesisUnmet(f"[{a} {x} {u}] does not hold")
    col = s.collinear(a, y, u)
    return CheckResult(not col, (a, y, u) if col else None, detail=col)


def parallelogram_metric_iff(m: MetricSpace, quad: Sequence[int]) -> bool:
    """Distance form of the parallelogram condition: opposite sides equal and
    both diagonals equal to the sum of adjacent sides."""
    _distinct(quad)
    a, b, c, d = quad
    return (
        m.d(a, b) == m.d(c, d)
        and m.d(a, d) == m.d(b, c)
        and m.d(a, c) == m.d(b, d) == m.d(a, b) + m.d(b, c)
    )


@dataclass
class StructureReport:
    """Checks on the half-diameter generator graph of one line.

    ``components`` lists the bipartition ``(A, B)`` of every component with
    at least two vertices.  ``violations`` holds ``(claim, points)`` tuples
    with claim one of ``"parity"``, ``"bipartite"``, ``"sides"``,
    ``"rigidity"``.
    """

    vacuous: bool
    half_diameter: int | None
    components: list[tuple[tuple[int, ...], tuple[int, ...]]] = field(default_factory=list)
    violations: list[tuple] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok


def bipartition(edges: Sequence[Pair]) -> tuple[list[tuple[list[int], list[int]]], tuple | None]:
    """Two-colour every component of the graph given by ``edges``.

    Returns the ``(A, B)`` sides per component (components ordered by least
    vertex, ``A`` holding that vertex) and an odd-cycle edge if one exists.
    """
    adj: dict[int, list[int]] = {}
    for u, v in edges:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    colour: dict[int, int] = {}
    comps = []
    conflict = None
    for root in sorted(adj):
        if root in colour:
            continue
        colour[root] = 0
        sides: tuple[list[int], list[int]] = ([root], [])
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if w not in colour:
                    colour[w] = 1 - colour[u]
                    sides[colour[w]].append(w)
                    queue.append(w)
                elif colour[w] == colour[u] and conflict is None:
                    conflict = (u, w)
        comps.append((sorted(sides[0]), sorted(sides[1])))
    return comps, conflict


def structure_claims_check(m: MetricSpace, ln: Line, lines: LineSet | None = None) -> StructureReport:
    """Evaluate the half-diameter structure of ``ln`` (``h = D/2``, ``H`` the
    generator graph of ``ln`` restricted to distance ``h``).

    * parity: for every edge ``uv`` of ``H`` and every other point ``x`` of
      ``ln`` with ``d(x, u)`` in ``{h, D}``, ``d(x, v) = 3h - d(x, u)``.  Chaining
      this step along a path is exactly the path-parity statement, so checking
      edges covers every path;
    * each component of ``H`` is bipartite, with distance ``D`` inside a side
      and ``h`` across;
    * on the maximal subgraph of minimum degree 2, all distances are ``h`` or ``D``.

    Odd ``D`` leaves ``H`` empty and the report vacuous.
    """
    big = diameter(m).value
    if big % 2:
        return StructureReport(True, None)
    h = big // 2
    lines = all_lines(m) if lines is None else lines
    g = generator_graph(m, ln, h, lines)
    rep = StructureReport(len(g.edges) <= 1, h)
    members = ln.points
    for u, v in g.edges:
        for p, q in ((u, v), (v, u)):
            for x in members:
                if x in (p, q):
                    continue
                dx = m.d(x, p)
                if dx in (h, big) and m.d(x, q) != 3 * h - dx:
                    rep.violations.append(("parity", (p, q, x)))
    comps, conflict = bipartition(g.edges)
    if conflict is not None:
        rep.violations.append(("bipartite", conflict))
    for side_a, side_b in comps:
        rep.components.append((tuple(side_a), tuple(side_b)))
        for side in (side_a, side_b):
            for x, y in combinations(side, 2):
                if m.d(x, y) != big:
                    rep.violations.append(("sides", (x, y)))
        for x in side_a:
            for y in side_b:
                if m.d(x, y) != h:
                    rep.violations.append(("sides", (x, y)))
    core = k_core_edges(g.edges, 2)
    core_pts = sorted({p for e in core for p in e})
    for x, y in combinations(core_pts, 2):
        if m.d(x, y) not in (h, big):
            rep.violations.append(("rigidity", (x, y)))
    return rep
