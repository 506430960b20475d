"""Pseudometric betweenness relations, geodesics and anchored posets."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_bipartite_matching

from .errors import (
    DuplicateInSequence,
    InternalInconsistency,
    M0Violation,
    M2Violation,
    M3Violation,
    NTooLarge,
    TooFewPoints,
)
from .space import BetweennessSpace, CheckResult


class BetweennessRelation(BetweennessSpace):
    """A ternary relation closed under reversal.

    ``triples`` holds one representative per reversal orbit, oriented so the
    first endpoint is the smaller one; ``(a, b, c)`` in the relation means
    ``[abc]`` (and therefore ``[cba]``).  Instances built through
    :func:`validate_axioms` satisfy M0-M3; the bare constructor only closes
    under reversal.
    """

    __slots__ = ("n", "triples", "_cube")

    def __init__(self, n: int, triples: Iterable[Sequence[int]] = ()):
        cube = np.zeros((n, n, n), dtype=bool)
        for t in triples:
            a, b, c = (int(x) for x in t)
            for p in (a, b, c):
                if not 0 <= p < n:
                    raise ValueError(f"triple {t} references a point outside range({n})")
            cube[a, b, c] = cube[c, b, a] = True
        self._init(cube)

    def _init(self, cube: np.ndarray) -> None:
        cube.setflags(write=False)
        self._cube = cube
        self.n = cube.shape[0]
        self.triples = frozenset(
            (int(a), int(b), int(c)) for a, b, c in np.argwhere(cube) if a < c
        )

    @classmethod
    def _from_cube(cls, cube: np.ndarray) -> "BetweennessRelation":
        rel = cls.__new__(cls)
        rel._init(cube | cube.transpose(2, 1, 0))
        return rel

    def __repr__(self) -> str:
        return f"BetweennessRelation(n={self.n}, orbits={len(self.triples)})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, BetweennessRelation):
            return NotImplemented
        return self.n == other.n and self.triples == other.triples

    def __hash__(self):
        return hash((self.n, self.triples))

    def __len__(self) -> int:
        return len(self.triples)

    def between(self, a: int, b: int, c: int) -> bool:
        return bool(self._cube[a, b, c])

    def between_matrix(self, a: int) -> np.ndarray:
        return self._cube[a].copy()

    def middle_matrix(self, b: int) -> np.ndarray:
        return self._cube[:, b, :].copy()

    def inner_vector(self, a: int, b: int) -> np.ndarray:
        return self._cube[a, :, b].copy()

    def outer_vector(self, a: int, b: int) -> np.ndarray:
        return self._cube[:, a, b] | self._cube[a, b, :]

    def line_vector(self, a: int, b: int) -> np.ndarray:
        c = self._cube
        v = c[a, b, :] | c[a, :, b] | c[:, a, b]
        v = v.copy()
        v[a] = v[b] = False
        return v

    def to_json(self) -> dict:
        return {"n": self.n, "triples": [list(t) for t in sorted(self.triples)]}

    @classmethod
    def from_json(cls, obj: dict) -> "BetweennessRelation":
        return validate_axioms(obj["triples"], int(obj["n"]))


def validate_axioms(triples: Iterable[Sequence[int]], n: int) -> BetweennessRelation:
    """Build a relation from raw triples (reversals implied) and check M0-M3.

    Raises the violation found first in lexicographic order of the witnessing
    points.
    """
    triples = [tuple(int(x) for x in t) for t in triples]
    for t in triples:
        if len(t) != 3:
            raise ValueError(f"expected a triple, got {t}")
        if len(set(t)) != 3:
            raise M0Violation(t)
    rel = BetweennessRelation(n, triples)
    cube = rel._cube

    m2 = np.argwhere(cube & cube.transpose(1, 0, 2))
    if m2.size:
        a, b, c = (int(x) for x in m2[0])
        raise M2Violation(a, b, c)

    bad = _first_m3_violation(cube)
    if bad is not None:
        raise M3Violation(*bad)
    return rel


def _first_m3_violation(cube: np.ndarray) -> tuple[int, int, int, int] | None:
    n = cube.shape[0]
    for a in range(n):
        ba = cube[a]
        for c in range(n):
            bs = np.flatnonzero(ba[:, c])
            ds = np.flatnonzero(ba[c, :])
            if bs.size == 0 or ds.size == 0:
                continue
            ok = ba[np.ix_(bs, ds)] & cube[:, c, :][np.ix_(bs, ds)]
            if not ok.all():
                i, j = np.argwhere(~ok)[0]
                return (a, int(bs[i]), c, int(ds[j]))
    return None


def fact_consequences(rel: BetweennessRelation) -> CheckResult:
    """Exhaustively confirm the basic geodesic facts on ``rel``.

    (a) ``[abc]`` and ``[acd]`` give the geodesic ``(a, b, c, d)``;
    (b) ``[abd]`` and ``[bcd]`` give the geodesic ``(a, b, c, d)``;
    (c) every subsequence of length >= 3 of such a geodesic is a geodesic.
    On a relation satisfying M0-M3 this always succeeds.
    """
    cube = rel._cube
    for x, y, z in np.argwhere(cube):
        x, y, z = int(x), int(y), int(z)
        # (a): [x y z] plays [abc], look for d with [x z d]
        quads = [("a", (x, y, z, int(d))) for d in np.flatnonzero(cube[x, z, :])]
        # (b): [x y z] plays [abd], look for c with [y c z]
        quads += [("b", (x, y, int(c), z)) for c in np.flatnonzero(cube[y, :, z])]
        for tag, quad in quads:
            if len(set(quad)) != 4:
                return CheckResult(False, (tag, quad))
            if not is_geodesic_sequence(rel, quad):
                return CheckResult(False, (tag, quad))
            for sub in itertools.combinations(quad, 3):
                if not is_geodesic_sequence(rel, sub):
                    return CheckResult(False, ("c", sub))
    return CheckResult(True)


def is_geodesic_sequence(rel: BetweennessSpace, seq: Sequence[int]) -> bool:
    """``[p_r p_s p_t]`` for every ``r < s < t``.

    Sequences of fewer than three points are vacuously geodesic.
    """
    seq = tuple(seq)
    if len(set(seq)) != len(seq):
        raise DuplicateInSequence(f"sequence {seq} repeats a point")
    return all(rel.between(*t) for t in itertools.combinations(seq, 3))


def is_geodesic_set(rel: BetweennessSpace, points: Iterable[int]) -> tuple[int, ...] | None:
    """Return an ordering of ``points`` that is a geodesic sequence, or None.

    Candidates for the first point are tried in increasing order; once the
    first point ``p`` is fixed, the remaining points of a geodesic are totally
    ordered by ``[p x y]``, so sorting them by the number of predecessors is
    the only ordering worth testing.
    """
    pts = sorted(set(points))
    if len(pts) < 3:
        raise ValueError("geodesic sets have at least three points")
    for p in pts:
        rest = [x for x in pts if x != p]
        order = sorted(rest, key=lambda y: (sum(rel.between(p, x, y) for x in rest), y))
        seq = (p, *order)
        if is_geodesic_sequence(rel, seq):
            return seq
    return None


# -- anchored posets and Dilworth ------------------------------------------

@dataclass(frozen=True, eq=False)
class AnchoredPoset:
    """Points other than ``anchor`` ordered by ``x < y`` iff ``[anchor x y]``.

    ``less[i, j]`` is the strict order between ``ground[i]`` and ``ground[j]``.
    """

    anchor: int
    ground: tuple[int, ...]
    less: np.ndarray

    def leq(self, x: int, y: int) -> bool:
        i, j = self.ground.index(x), self.ground.index(y)
        return i == j or bool(self.less[i, j])

    def __len__(self) -> int:
        return len(self.ground)


def anchored_poset(rel: BetweennessSpace, a: int, ground: Iterable[int] | None = None) -> AnchoredPoset:
    """The poset ``(V - {a}, <=)`` with ``x <= y`` iff ``x == y`` or ``[a x y]``.

    ``ground`` restricts the order to a subset (the anchor is always dropped).
    """
    if ground is None:
        pts = tuple(x for x in range(rel.n) if x != a)
    else:
        pts = tuple(sorted(set(ground) - {a}))
    idx = np.array(pts, dtype=np.intp)
    less = rel.between_matrix(a)[np.ix_(idx, idx)] if pts else np.zeros((0, 0), dtype=bool)
    if (less & less.T).any():
        i, j = np.argwhere(less & less.T)[0]
        raise InternalInconsistency(f"anchored order at {a} not antisymmetric on {pts[i]}, {pts[j]}")
    if pts:
        # float32 matmul goes through BLAS; path counts stay far below 2**24
        li = less.astype(np.float32)
        if ((li @ li > 0) & ~less).any():
            raise InternalInconsistency(f"anchored order at {a} not transitive")
    less.setflags(write=False)
    return AnchoredPoset(a, pts, less)


def _topological(less: np.ndarray) -> list[int]:
    # strictly more predecessors above in the order, so this sorts topologically
    preds = less.sum(axis=0)
    return sorted(range(less.shape[0]), key=lambda i: (int(preds[i]), i))


def longest_chain(poset: AnchoredPoset) -> list[int]:
    """Maximum chain, listed bottom to top.

    Among maximum chains the one whose sequence is lexicographically least is
    returned: each step picks the least point that still extends to a
    maximum chain.
    """
    m = len(poset.ground)
    if m == 0:
        return []
    less = poset.less
    height = np.ones(m, dtype=np.int64)  # longest chain starting at i
    for i in reversed(_topological(less)):
        row = less[i]
        if row.any():
            height[i] = 1 + height[row].max()
    cur = int(np.argmax(height))  # argmax returns the least index among ties
    chain = [cur]
    while height[cur] > 1:
        cur = int(np.flatnonzero(less[cur] & (height == height[cur] - 1))[0])
        chain.append(cur)
    return [poset.ground[i] for i in chain]


def maximum_antichain(poset: AnchoredPoset) -> tuple[int, ...]:
    """Maximum antichain via a minimum chain cover (bipartite matching) and
    Konig's theorem.

    The antichain read off the alternating-reachability set does not depend on
    which maximum matching the solver found, so the result is canonical.
    """
    m = len(poset.ground)
    if m == 0:
        return ()
    less = poset.less
    graph = csr_matrix(less.astype(np.int8))
    match_left = maximum_bipartite_matching(graph, perm_type="column")
    match_right = np.full(m, -1)
    for u, v in enumerate(match_left):
        if v >= 0:
            match_right[v] = u
    matched = int((match_left >= 0).sum())

    seen_left = np.zeros(m, dtype=bool)
    seen_right = np.zeros(m, dtype=bool)
    stack = [u for u in range(m) if match_left[u] < 0]
    for u in stack:
        seen_left[u] = True
    while stack:
        u = stack.pop()
        for v in np.flatnonzero(less[u]):
            if seen_right[v]:
                continue
            seen_right[v] = True
            w = match_right[v]
            if w >= 0 and not seen_left[w]:
                seen_left[w] = True
                stack.append(w)
    members = [i for i in range(m) if seen_left[i] and not seen_right[i]]
    if len(members) != m - matched:
        raise InternalInconsistency("Konig construction produced an antichain of the wrong size")
    sub = less[np.ix_(members, members)]
    if sub.any():
        raise InternalInconsistency("Konig construction produced comparable elements")
    return tuple(poset.ground[i] for i in members)


def dilworth_decompose(poset: AnchoredPoset) -> tuple[list[int], tuple[int, ...]]:
    """A maximum chain and a maximum antichain of ``poset``.

    One of them has at least ``ceil(sqrt(|ground|))`` elements; that is
    checked here.
    """
    chain = longest_chain(poset)
    anti = maximum_antichain(poset)
    m = len(poset.ground)
    big = max(len(chain), len(anti))
    if big * big < m:
        raise InternalInconsistency(f"chain {len(chain)} and antichain {len(anti)} both below sqrt({m})")
    return chain, anti


def longest_geodesic(rel: BetweennessSpace) -> tuple[int, ...]:
    """A geodesic sequence with the most points.

    A geodesic ``(p_1, ..., p_k)`` is exactly the anchor ``p_1`` followed by a
    chain of the poset anchored at ``p_1``, so the answer is the best anchor
    plus its longest chain.  "Length" counts points.  Without collinear
    triples the result is a 2-point sequence.
    """
    if rel.n < 2:
        raise TooFewPoints("geodesics need at least two points")
    best: tuple[int, ...] = ()
    for a in range(rel.n):
        seq = (a, *longest_chain(anchored_poset(rel, a)))
        if len(seq) > len(best):
            best = seq
    return best


# -- enumeration -------------------------------------------------------------

MAX_ENUMERATION_N = 5


def enumerate_pseudometric_betweennesses(n: int) -> Iterator[BetweennessRelation]:
    """Every pseudometric betweenness on ``{0, ..., n-1}`` (labelled), once each.

    Each 3-set carries at most one middle point (M1 with M2), so the search
    assigns one of four states per 3-set and prunes on M3 as soon as a 4-set
    has all four of its 3-sets decided.
    """
    if n > MAX_ENUMERATION_N:
        raise NTooLarge(f"enumeration is limited to n <= {MAX_ENUMERATION_N}")
    if n < 2:
        raise TooFewPoints("enumeration needs n >= 2")
    triples = list(itertools.combinations(range(n), 3))
    tindex = {t: i for i, t in enumerate(triples)}
    closing: list[list[tuple[int, ...]]] = [[] for _ in triples]
    for quad in itertools.combinations(range(n), 4):
        last = max(tindex[t] for t in itertools.combinations(quad, 3))
        closing[last].append(quad)

    state = [None] * len(triples)  # middle point or None

    def holds(a, b, c):
        return state[tindex[tuple(sorted((a, b, c)))]] == b

    def m3_ok(quad) -> bool:
        for a, b, c, d in itertools.permutations(quad):
            if holds(a, b, c) and holds(a, c, d):
                if not (holds(a, b, d) and holds(b, c, d)):
                    return False
        return True

    def rec(i: int):
        if i == len(triples):
            chosen = []
            for k, t in enumerate(triples):
                mid = state[k]
                if mid is not None:
                    lo, hi = (p for p in t if p != mid)
                    chosen.append((lo, mid, hi))
            yield BetweennessRelation(n, chosen)
            return
        for choice in (None, *triples[i]):
            state[i] = choice
            if all(m3_ok(q) for q in closing[i]):
                yield from rec(i + 1)
        state[i] = None

    yield from rec(0)

