"""Constructive lower bounds: each function rebuilds the lines a counting
argument promises and hands them back as a checked certificate.

The arguments are case splits.  Every case produces its own explicit family
of lines, so each extractor evaluates all cases it can, keeps the one with the
most lines (ties go to the earliest case tried) and records every attempt in
the branch trace.  ``verified_distinct`` is always recomputed from the bit
keys of the emitted lines.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

import numpy as np

from . import bounds
from .betweenness import (
    anchored_poset,
    dilworth_decompose,
    is_geodesic_sequence,
    longest_geodesic,
)
from .errors import (
    DifferentLines,
    DuplicatePoint,
    InternalInconsistency,
    NotA3Metric,
    NotGammaFamily,
    NotGeodesic,
    PreconditionUnmet,
    TooFewPoints,
    UniversalLinePresent,
)
from .lines import Line, LineSet, all_lines, bits_to_points, k_core_edges, line
from .metric import MetricSpace, diameter, distance_set, subspace
from .relations import ALPHA, GAMMA, _related, bipartition, gamma_pairs, inner_outer
from .space import BetweennessSpace

Pair = tuple[int, int]


@dataclass
class WitnessReport:
    construction: str
    branch_trace: list[str]
    lines: list[Line]
    guaranteed_count: int
    verified_distinct: bool
    formula_value: Fraction | None = None
    formula_exact: bool = True

    @property
    def count(self) -> int:
        return len(self.lines)

    def to_json(self) -> dict:
        fv = None
        if self.formula_value is not None:
            fv = {"num": self.formula_value.numerator, "den": self.formula_value.denominator}
        return {
            "construction": self.construction,
            "branch_trace": list(self.branch_trace),
            "lines": [list(ln.points) for ln in self.lines],
            "guaranteed_count": self.guaranteed_count,
            "verified_distinct": self.verified_distinct,
            "formula_value": fv,
        }


def pairwise_distinct(lines: Sequence[Line]) -> bool:
    """True iff no two of ``lines`` have the same member set."""
    keys = sorted(ln.members for ln in lines)
    return all(x != y for x, y in zip(keys, keys[1:]))


@dataclass
class _Branch:
    tag: str
    lines: list[Line]
    guaranteed: int
    extra: dict = field(default_factory=dict)


def _report(construction: str, trace: list[str], branch: _Branch,
            formula: bounds.BoundFormula | None) -> WitnessReport:
    if branch.guaranteed > len(branch.lines):
        raise InternalInconsistency(
            f"branch {branch.tag} promises {branch.guaranteed} lines but built {len(branch.lines)}")
    value = formula.value() if formula is not None else None
    exact = formula.is_rational if formula is not None else True
    return WitnessReport(construction, trace, branch.lines, branch.guaranteed,
                         pairwise_distinct(branch.lines), value, exact)


def _best(branches: Iterable[_Branch], trace: list[str]) -> _Branch:
    best = None
    for br in branches:
        trace.append(f"{br.tag}: {len(br.lines)}")
        if best is None or len(br.lines) > len(best.lines):
            best = br
    if best is None:
        raise InternalInconsistency("no branch produced a witness")
    trace.append(f"selected {best.tag}")
    return best


def _lines_for(lines: LineSet, pairs: Iterable[Pair]) -> list[Line]:
    return [lines.line_of(a, b) for a, b in pairs]


def _require_no_universal(space: BetweennessSpace, lines: LineSet) -> None:
    u = lines.universal()
    if u is not None:
        raise UniversalLinePresent(f"line generated by {u.generator} contains every point")


# -- geodesics ---------------------------------------------------------------

def _geodesic_branch(space: BetweennessSpace, geo: Sequence[int], tag: str,
                     lines: LineSet | None = None) -> _Branch:
    out = []
    for p, nxt in zip(geo, geo[1:]):
        ln = lines.line_of(p, nxt) if lines is not None else line(space, p, nxt)
        off = ~ln.members & ((1 << space.n) - 1)
        if not off:
            raise UniversalLinePresent(f"line({p}, {nxt}) contains every point")
        q = (off & -off).bit_length() - 1  # least point off the line
        out.append(lines.line_of(p, q) if lines is not None else line(space, p, q))
    first, last = geo[0], geo[-1]
    out.append(lines.line_of(first, last) if lines is not None else line(space, first, last))
    return _Branch(tag, out, len(geo), {"geodesic": tuple(geo)})


def witness_from_geodesic(space: BetweennessSpace, geo: Sequence[int],
                          lines: LineSet | None = None) -> WitnessReport:
    """Lines ``line(p_i, q_i)`` for consecutive ``p_i, p_{i+1}`` (``q_i`` the
    least point off ``line(p_i, p_{i+1})``) together with ``line(p_1, p_k)``.

    These ``k`` lines are pairwise distinct whenever no line is universal.
    """
    geo = tuple(geo)
    if len(geo) < 2:
        raise TooFewPoints("a geodesic witness needs at least two points")
    if len(set(geo)) != len(geo):
        raise DuplicatePoint(f"geodesic {geo} repeats a point")
    for p in geo:
        if not 0 <= p < space.n:
            raise IndexError(f"point {p} out of range for n={space.n}")
    if not is_geodesic_sequence(space, geo):
        raise NotGeodesic(f"{geo} is not a geodesic sequence")
    if lines is not None:
        _require_no_universal(space, lines)
    br = _geodesic_branch(space, geo, f"geodesic k={len(geo)}", lines)
    trace = [br.tag]
    return _report("geodesic", trace, br, bounds.geodesic_bound(len(geo)))


# -- anchored posets -------------------------------------------------------

def _bucket_branches(lines: LineSet, anchor: int, ys: Sequence[int], tag: str) -> list[_Branch]:
    """Group ``line(anchor, y)`` by line.  Either keep one line per group, or
    take the biggest group ``A`` and all lines through two of its points."""
    groups: dict[int, list[int]] = {}
    for y in ys:
        groups.setdefault(lines.line_of(anchor, y).members, []).append(y)
    if not groups:
        return []
    distinct = [lines.line_of(anchor, g[0]) for g in groups.values()]
    out = [_Branch(f"{tag}:distinct-lines", distinct, len(distinct))]
    big = max(groups.values(), key=lambda g: (len(g), -g[0]))
    if len(big) >= 2:
        pairs = list(combinations(big, 2))
        out.append(_Branch(f"{tag}:bucket size={len(big)}", _lines_for(lines, pairs), len(pairs)))
    return out


def _poset_branches(space: BetweennessSpace, lines: LineSet, anchor: int, ground, tag: str,
                    antichain_buckets: bool) -> list[_Branch]:
    poset = anchored_poset(space, anchor, ground)
    if len(poset) == 0:
        return []
    chain, anti = dilworth_decompose(poset)
    out = [_geodesic_branch(space, (anchor, *chain), f"{tag}:chain", lines)]
    if antichain_buckets:
        out.extend(_bucket_branches(lines, anchor, anti, f"{tag}:antichain"))
    else:
        # points of the antichain are pairwise off each other's anchor line
        out.append(_Branch(f"{tag}:antichain", [lines.line_of(anchor, y) for y in anti], len(anti)))
    return out


def witness_pseudometric(rel: BetweennessSpace, lines: LineSet | None = None) -> WitnessReport:
    """Try every anchor ``a``: a long chain of the poset at ``a`` is a geodesic,
    and a large antichain either spreads over many lines ``line(a, y)`` or
    has a big group sharing one line, inside which no three points are
    collinear."""
    if rel.n < 2:
        raise TooFewPoints("need at least two points")
    lines = all_lines(rel) if lines is None else lines
    _require_no_universal(rel, lines)
    trace: list[str] = []
    branches = []
    for a in range(rel.n):
        branches.extend(_poset_branches(rel, lines, a, None, f"anchor={a}", True))
    best = _best(branches, trace)
    return _report("pseudometric", trace, best, bounds.pmb_bound(rel.n))


def default_threshold(n: int) -> int:
    """``ceil(n ** 0.9)`` by integer search."""
    return bounds.ceil_root_power(n, 9, 10)


def witness_metric(m: MetricSpace, threshold: int | None = None,
                   lines: LineSet | None = None) -> WitnessReport:
    """Split by a diameter pair ``(a, b)`` into the far sides ``X_a``, ``X_b``
    and the middle ``Y`` (points at half the diameter from both).

    A large far side is an anchored poset, so it yields a geodesic or an
    antichain whose anchor lines are distinct.  Otherwise the lines
    ``line(a, y)``, ``y`` in ``Y``, are either many or share a big group in which
    every pair is at full diameter across ``a``.
    """
    n = m.n
    if n < 2:
        raise TooFewPoints("need at least two points")
    lines = all_lines(m) if lines is None else lines
    _require_no_universal(m, lines)
    t = default_threshold(n) if threshold is None else int(threshold)
    big, (a, b) = diameter(m)
    d = m.dist
    xa = [int(x) for x in np.flatnonzero(2 * d[a] > big)]
    xb = [int(x) for x in np.flatnonzero(2 * d[b] > big)]
    y = [int(x) for x in np.flatnonzero((2 * d[a] == big) & (2 * d[b] == big))]
    # X_a and X_b may overlap, but anything outside both sits at exactly D/2
    if set(y) != set(range(n)) - set(xa) - set(xb):
        raise InternalInconsistency("middle set is not the complement of the far sides")

    # the case split of the counting argument, at threshold t
    if 2 * len(xa) > n - t:
        case = "X_a"
    elif 2 * len(xb) > n - t:
        case = "X_b"
    else:
        case = "Y"
    trace = [f"diameter={big} pair=({a},{b}) |X_a|={len(xa)} |X_b|={len(xb)} |Y|={len(y)}",
             f"threshold={t} case={case}"]
    branches = []
    branches.extend(_poset_branches(m, lines, a, xa, "X_a", False))
    branches.extend(_poset_branches(m, lines, b, xb, "X_b", False))
    branches.extend(_bucket_branches(lines, a, y, "Y"))
    best = _best(branches, trace)
    return _report("metric", trace, best, bounds.metric_bound(n))


# -- bounded number of distances ---------------------------------------------

def _sphere(m: MetricSpace, z: int, delta: int) -> list[int]:
    return [int(x) for x in np.flatnonzero(m.dist[z] == delta)]


def witness_bounded_distances(m: MetricSpace, lines: LineSet | None = None, *,
                              line_count: int | None = None,
                              force_construction: bool = False) -> WitnessReport:
    """Certificate for ``n / (5 w)`` lines, ``w`` the number of distances (0 included).

    When the space already has that many lines, all of them are returned
    (branch ``assumption-failed``).  Otherwise the structural construction
    runs: spheres beyond half the diameter, then the half-diameter generator
    graph of its richest line, pruned to minimum degree 3, whose bipartite
    sides carry pairwise distinct lines.

    ``line_count`` replaces the true number of lines in the decision (to
    exercise the construction on small inputs); ``force_construction`` skips
    the decision altogether.
    """
    n = m.n
    if n < 2:
        raise TooFewPoints("need at least two points")
    lines = all_lines(m) if lines is None else lines
    w = len(distance_set(m))
    formula = bounds.bounded_distances_bound(n, w)
    count = lines.count if line_count is None else int(line_count)
    trace = [f"n={n} w={w} m={count}"]
    if formula.satisfied_by(count) and not force_construction:
        trace.append("assumption-failed")
        every = list(lines)
        return _report("bounded_distances", trace, _Branch("assumption-failed", every, len(every)), formula)
    trace.append("construction")

    big, (a, b) = diameter(m)
    branches = []
    positive = [x for x in distance_set(m) if x > 0]
    if len(positive) == 1:
        every = list(lines)
        branches.append(_Branch("single-distance", every, comb(n, 2)))
    for delta in positive:
        if 2 * delta <= big:
            continue
        for z in (a, b):
            sph = _sphere(m, z, delta)
            if sph:
                branches.append(_Branch(f"sphere z={z} delta={delta}",
                                        [lines.line_of(z, x) for x in sph], len(sph)))
    if big % 2 == 0:
        branches.extend(_half_diameter_branch(m, lines, big // 2, trace))
    best = _best(branches, trace)
    return _report("bounded_distances", trace, best, formula)


def _half_diameter_branch(m: MetricSpace, lines: LineSet, h: int, trace: list[str]) -> list[_Branch]:
    best_key, best_edges = None, ()
    for key in lines.keys():
        edges = tuple(e for e in lines.generators(key) if m.d(*e) == h)
        if len(edges) > len(best_edges):
            best_key, best_edges = key, edges
    if best_key is None:
        return []
    core = k_core_edges(best_edges, 3)
    trace.append(f"half-diameter line {list(bits_to_points(best_key))}: "
                 f"{len(best_edges)} edges, {len(core)} after 3-core")
    if not core:
        return []
    comps, conflict = bipartition(core)
    if conflict is not None:
        raise InternalInconsistency(f"half-diameter generator graph has an odd cycle at {conflict}")
    pairs = []
    for side_a, side_b in comps:
        side = side_a if len(side_a) >= len(side_b) else side_b
        pairs.extend(combinations(side, 2))
    return [_Branch(f"core-sides components={len(comps)}", _lines_for(lines, pairs), len(pairs))]


# -- 3-metric spaces -----------------------------------------------------------

def _neighbourhood_branch(m: MetricSpace, lines: LineSet, tag: str) -> _Branch | None:
    """Lines of the unit sphere around a point of maximum degree, lifted back."""
    deg = (m.dist == 1).sum(axis=1)
    v = int(np.argmax(deg))
    nbrs = _sphere(m, v, 1)
    if len(nbrs) < 2:
        return None
    sub = subspace(m, nbrs)
    sub_lines = all_lines(sub)
    lifted = [lines.line_of(sub.index_map[x], sub.index_map[y]) for x, y in
              (ln.generator for ln in sub_lines)]
    return _Branch(f"{tag} v={v} |N|={len(nbrs)}", lifted, sub_lines.count)


def _richest_line(m: MetricSpace, lines: LineSet, delta: int) -> tuple[int | None, tuple[Pair, ...]]:
    best_key, best_edges = None, ()
    for key in lines.keys():
        edges = tuple(e for e in lines.generators(key) if m.d(*e) == delta)
        if len(edges) > len(best_edges):
            best_key, best_edges = key, edges
    return best_key, best_edges


def _distance_lines_branch(m: MetricSpace, lines: LineSet, delta: int, tag: str) -> _Branch | None:
    keys = []
    seen = set()
    for key in lines.keys():
        if key not in seen and any(m.d(*e) == delta for e in lines.generators(key)):
            seen.add(key)
            keys.append(key)
    if not keys:
        return None
    out = [Line(k, next(e for e in lines.generators(k) if m.d(*e) == delta), m.n) for k in keys]
    return _Branch(f"{tag}:many-lines", out, len(out))


def _matching(edges: Sequence[Pair]) -> None:
    seen = set()
    for u, v in edges:
        if u in seen or v in seen:
            raise InternalInconsistency(f"generator graph is not a matching at {(u, v)}")
        seen.update((u, v))


def witness_3metric(m: MetricSpace, lines: LineSet | None = None) -> WitnessReport:
    """Case split by the most common distance ``delta`` in {1, 2, 3}.

    * 1: the unit sphere of a max-degree point is a 2-metric subspace whose
      lines lift to distinct lines.
    * 2: the distance-2 generators of the richest line form a matching
      ``a_i b_i``; the lines ``line(a_i, a_j)`` are distinct.
    * 3: likewise with a matching at distance 3 and ``x_ij`` = ``a_j`` or
      ``b_j``, whichever is at distance 2 from ``a_i``.

    Every case with at least one pair is evaluated; the largest is kept.
    """
    n = m.n
    if n < 2:
        raise TooFewPoints("need at least two points")
    if int(m.dist.max()) > 3:
        raise NotA3Metric(f"distances must lie in {{0,1,2,3}}, found {int(m.dist.max())}")
    lines = all_lines(m) if lines is None else lines
    upper = m.dist[np.triu_indices(n, 1)]
    counts = {delta: int((upper == delta).sum()) for delta in (1, 2, 3)}
    majority = max(counts, key=lambda k: (counts[k], -k))
    trace = [f"pairs by distance {counts}", f"majority={majority}"]
    branches = []
    if counts[1]:
        br = _neighbourhood_branch(m, lines, "case1")
        if br is not None:
            branches.append(br)
    for delta in (2, 3):
        if not counts[delta]:
            continue
        tag = f"case{delta}"
        many = _distance_lines_branch(m, lines, delta, tag)
        if many is not None:
            branches.append(many)
        key, edges = _richest_line(m, lines, delta)
        _matching(edges)
        if len(edges) < 2:
            continue
        heads = [u for u, _ in edges]
        if delta == 2:
            pairs = list(combinations(heads, 2))
        else:
            pairs = []
            for i, j in combinations(range(len(edges)), 2):
                a_i = edges[i][0]
                a_j, b_j = edges[j]
                pairs.append((a_i, a_j if m.d(a_i, a_j) == 2 else b_j))
        branches.append(_Branch(f"{tag}:matching s={len(edges)}", _lines_for(lines, pairs), len(pairs)))
    if not branches:
        # two points: the single line
        every = list(lines)
        branches.append(_Branch("trivial", every, len(every)))
    best = _best(branches, trace)
    return _report("3metric", trace, best, None)


# -- graph metrics -----------------------------------------------------------

def _common_line(m: MetricSpace, pairs: Sequence[Pair], lines: LineSet | None) -> None:
    keys = {(lines.line_of(*p) if lines is not None else line(m, *p)).members for p in pairs}
    if len(keys) > 1:
        raise DifferentLines("the pairs do not all generate the same line")


def _normalise_pairs(pairs) -> list[Pair]:
    out = []
    for p in pairs:
        p = tuple(int(x) for x in p)
        if len(p) != 2 or p[0] == p[1]:
            raise DuplicatePoint(f"{p} is not a pair of distinct points")
        out.append(p)
    if len({frozenset(p) for p in out}) != len(out):
        raise DuplicatePoint("a pair is listed twice")
    return out


def witness_graph_alpha(m: MetricSpace, pairs: Sequence[Pair], lines: LineSet | None = None,
                        check: bool = True) -> WitnessReport:
    """Pairs at a common distance ``l >= 2``, all generating one line and
    pairwise alpha-related.

    With ``(a_1, b_1)`` as reference, the pairs not having ``a_1`` strictly
    inside (at most ``l - 1`` do) are oriented so that ``a_1`` comes first
    along each, grouped by ``d(a_1, b_k)``, and the far ends ``b_k`` of the
    largest group span pairwise distinct lines.
    """
    pairs = _normalise_pairs(pairs)
    q = len(pairs)
    if q == 0:
        raise PreconditionUnmet("need at least one pair")
    dists = {m.d(*p) for p in pairs}
    if len(dists) != 1:
        raise PreconditionUnmet(f"pairs are at different distances {sorted(dists)}")
    ell = dists.pop()
    if ell < 2:
        raise PreconditionUnmet("the common distance must be at least 2")
    if check:
        _common_line(m, pairs, lines)
        io = {p: inner_outer(m, *p) for p in pairs}
        for p, r in combinations(pairs, 2):
            if ALPHA not in _related(m, p, r, io[p], io[r]):
                raise PreconditionUnmet(f"pairs {p} and {r} are not alpha-related")
    lines = all_lines(m) if lines is None else lines
    big = diameter(m).value
    a1, _ = pairs[0]
    inside = [k for k, (x, y) in enumerate(pairs) if m.between(x, a1, y)]
    if len(inside) > ell - 1:
        raise InternalInconsistency(f"{len(inside)} pairs have {a1} strictly inside, at most {ell - 1} possible")
    oriented = []
    for k, (x, y) in enumerate(pairs):
        if k in inside:
            continue
        if y == a1 or m.between(a1, y, x):
            x, y = y, x
        if not (x == a1 or m.between(a1, x, y)):
            raise InternalInconsistency(f"pair {(x, y)} cannot be oriented away from {a1}")
        oriented.append((x, y))
    groups: dict[int, list[int]] = {}
    for x, y in oriented:
        groups.setdefault(m.d(a1, y), []).append(y)
    dist, far = max(groups.items(), key=lambda kv: (len(kv[1]), -kv[0]))
    if len(set(far)) != len(far):
        raise InternalInconsistency(f"far ends at distance {dist} from {a1} repeat")
    trace = [f"Q={q} l={ell} D={big}", f"inside={len(inside)} oriented={len(oriented)}",
             f"group d={dist} size={len(far)}"]
    plist = list(combinations(far, 2))
    br = _Branch("far-ends", _lines_for(lines, plist), len(plist))
    trace.append(br.tag)
    return _report("graph_alpha", trace, br, bounds.graph_alpha_bound(q, big))


def witness_graph_gamma(m: MetricSpace, pairs: Sequence[Pair], lines: LineSet | None = None,
                        check: bool = True) -> WitnessReport:
    """Pairwise gamma-related pairs of one line, all at some distance ``t``.

    For ``t = 2`` the first points are pairwise adjacent, so no three are
    collinear.  For larger ``t`` each ``a_i`` is paired with whichever of
    ``a_j``, ``b_j`` is at least ``t / 2`` away.
    """
    pairs = _normalise_pairs(pairs)
    q = len(pairs)
    if check:
        if q >= 2:
            try:
                _common_line(m, pairs, lines)
            except DifferentLines as exc:
                raise NotGammaFamily(str(exc)) from None
        io = {p: inner_outer(m, *p) for p in pairs}
        for p, r in combinations(pairs, 2):
            if set(p) & set(r) or GAMMA not in _related(m, p, r, io[p], io[r]):
                raise NotGammaFamily(f"pairs {p} and {r} are not gamma-related")
    lines = all_lines(m) if lines is None else lines
    if q == 0:
        raise NotGammaFamily("need at least one pair")
    dists = {m.d(*p) for p in pairs}
    if len(dists) != 1:
        raise InternalInconsistency(f"gamma-related pairs at different distances {sorted(dists)}")
    t = dists.pop()
    trace = [f"Q={q} t={t}"]
    if t == 2:
        plist = list(combinations([x for x, _ in pairs], 2))
        tag = "t=2:first-points"
    else:
        plist = []
        for i, j in combinations(range(q), 2):
            a_i = pairs[i][0]
            a_j, b_j = pairs[j]
            plist.append((a_i, a_j if 2 * m.d(a_j, a_i) >= t else b_j))
        tag = "t>2:special-pairs"
    br = _Branch(tag, _lines_for(lines, plist), len(plist))
    trace.append(tag)
    return _report("graph_gamma", trace, br, bounds.graph_gamma_bound(q))


def witness_graph(m: MetricSpace, lines: LineSet | None = None) -> WitnessReport:
    """Dispatcher for graph metrics.

    Candidates: a longest geodesic; for the most frequent distance ``d``,
    either the neighbourhood of a max-degree vertex (``d = 1``) or the lines
    generated at distance ``d`` together with the richest such line split
    into its gamma-pairs and its remaining (pairwise alpha-related) pairs.
    """
    n = m.n
    if n < 2:
        raise TooFewPoints("need at least two points")
    lines = all_lines(m) if lines is None else lines
    _require_no_universal(m, lines)
    big = diameter(m).value
    upper = m.dist[np.triu_indices(n, 1)]
    freq = Counter(int(x) for x in upper)
    d = max(freq, key=lambda k: (freq[k], -k))
    trace = [f"D={big} most frequent distance d={d} ({freq[d]} pairs)"]
    branches = [_geodesic_branch(m, longest_geodesic(m), "geodesic", lines)]
    if d == 1:
        br = _neighbourhood_branch(m, lines, "d=1:neighbourhood")
        if br is not None:
            branches.append(br)
    else:
        many = _distance_lines_branch(m, lines, d, f"d={d}")
        if many is not None:
            branches.append(many)
        key, edges = _richest_line(m, lines, d)
        if key is not None and len(edges) >= 2:
            ln = Line(key, edges[0], n)
            gam = set(gamma_pairs(m, ln, lines))
            g_pairs = [e for e in edges if e in gam]
            a_pairs = [e for e in edges if e not in gam]
            trace.append(f"richest line {list(ln.points)}: {len(edges)} pairs, {len(g_pairs)} gamma")
            if len(g_pairs) >= 2:
                rep = witness_graph_gamma(m, g_pairs, lines, check=False)
                branches.append(_Branch(f"d={d}:gamma Q={len(g_pairs)}", rep.lines, rep.guaranteed_count))
            if len(a_pairs) >= 2:
                rep = witness_graph_alpha(m, a_pairs, lines, check=False)
                branches.append(_Branch(f"d={d}:alpha Q={len(a_pairs)}", rep.lines, rep.guaranteed_count))
    best = _best(branches, trace)
    return _report("graph", trace, best, bounds.d_graph_bound(n, big))


WITNESS_KINDS = ("geodesic", "pseudometric", "metric", "bounded", "3metric", "graph")
