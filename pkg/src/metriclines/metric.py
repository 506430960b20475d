"""Finite metric spaces with exact integer distances."""

from __future__ import annotations

import csv
import io
import math
import random
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .errors import (
    Asymmetric,
    EmptySubset,
    NonPositiveOffDiagonal,
    NonZeroDiagonal,
    NotSquare,
    TooFewPoints,
    TooManyPoints,
    TriangleViolation,
)
from .space import BetweennessSpace, offdiag_mask

MAX_POINTS = 4096
# keeps d(a,b) + d(b,c) well inside int64
MAX_DISTANCE = 2**61


class Diameter(NamedTuple):
    value: int
    pair: tuple[int, int]


class MetricSpace(BetweennessSpace):
    """An immutable ``n``-point metric space.

    Distances are non-negative integers; ``scale`` records the common
    denominator that was multiplied in when the input was rational, so the
    true distance of ``dist[i][j]`` is ``dist[i][j] / scale``.

    Use :func:`validate_metric` (or :meth:`from_rationals`) to build one;
    the constructor trusts its input.
    """

    __slots__ = ("n", "dist", "scale", "index_map")

    def __init__(self, dist: np.ndarray, scale: int = 1, index_map: tuple[int, ...] | None = None):
        dist = np.array(dist, dtype=np.int64)
        dist.setflags(write=False)
        self.dist = dist
        self.n = dist.shape[0]
        self.scale = scale
        self.index_map = tuple(range(self.n)) if index_map is None else tuple(index_map)

    def __repr__(self) -> str:
        return f"MetricSpace(n={self.n}, scale={self.scale})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, MetricSpace):
            return NotImplemented
        return self.scale == other.scale and np.array_equal(self.dist, other.dist)

    def __hash__(self):
        return hash((self.scale, self.dist.tobytes()))

    def d(self, a: int, b: int) -> int:
        return int(self.dist[a, b])

    # -- betweenness --------------------------------------------------------

    def between(self, a: int, b: int, c: int) -> bool:
        if a == b or b == c or a == c:
            return False
        d = self.dist
        return bool(d[a, c] == d[a, b] + d[b, c])

    def between_matrix(self, a: int) -> np.ndarray:
        da = self.dist[a]
        m = da[None, :] == da[:, None] + self.dist
        return m & offdiag_mask(self.n, a)

    def middle_matrix(self, b: int) -> np.ndarray:
        db = self.dist[b]
        m = self.dist == db[:, None] + db[None, :]
        return m & offdiag_mask(self.n, b)

    def line_vector(self, a: int, b: int) -> np.ndarray:
        da, db = self.dist[a], self.dist[b]
        dab = self.dist[a, b]
        v = (da == dab + db) | (dab == da + db) | (db == dab + da)
        v[a] = v[b] = False
        return v

    def inner_vector(self, a: int, b: int) -> np.ndarray:
        d = self.dist
        v = d[a] + d[b] == d[a, b]
        v[a] = v[b] = False
        return v

    def outer_vector(self, a: int, b: int) -> np.ndarray:
        d = self.dist
        dab = d[a, b]
        v = (d[b] == d[a] + dab) | (d[a] == dab + d[b])
        v[a] = v[b] = False
        return v

    # -- construction -------------------------------------------------------

    @classmethod
    def from_rationals(cls, matrix: Sequence[Sequence], *, max_points: int = MAX_POINTS) -> "MetricSpace":
        """Scale a matrix of rationals (ints, Fractions or ``"p/q"`` strings)
        by the least common denominator and validate it."""
        rows = [[Fraction(x) for x in row] for row in matrix]
        scale = 1
        for row in rows:
            for x in row:
                scale = math.lcm(scale, x.denominator)
        ints = [[int(x * scale) for x in row] for row in rows]
        return validate_metric(ints, scale, max_points=max_points)

    def to_json(self) -> dict:
        return {"n": self.n, "scale": self.scale, "dist": self.dist.tolist()}

    @classmethod
    def from_json(cls, obj: dict, *, max_points: int = MAX_POINTS) -> "MetricSpace":
        dist = obj["dist"]
        if "n" in obj and obj["n"] != len(dist):
            raise NotSquare(f"declared n={obj['n']} but matrix has {len(dist)} rows")
        if any(not isinstance(x, int) for row in dist for x in row):
            m = MetricSpace.from_rationals(dist, max_points=max_points)
            scale = int(obj.get("scale", 1))
            return validate_metric(m.dist, m.scale * scale, max_points=max_points)
        return validate_metric(dist, int(obj.get("scale", 1)), max_points=max_points)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerows(self.dist.tolist())
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text: str, scale: int = 1, *, max_points: int = MAX_POINTS) -> "MetricSpace":
        rows = [[int(x) for x in row] for row in csv.reader(io.StringIO(text)) if row]
        return validate_metric(rows, scale, max_points=max_points)


def validate_metric(matrix, scale: int = 1, *, max_points: int = MAX_POINTS) -> MetricSpace:
    """Check the metric axioms and return an immutable :class:`MetricSpace`.

    The first violation found in row-major ``(i, j, k)`` order is reported.
    """
    if isinstance(scale, bool) or not isinstance(scale, (int, np.integer)) or scale < 1:
        raise ValueError(f"scale must be a positive integer, got {scale!r}")
    rows = [list(r) for r in matrix]
    n = len(rows)
    if n < 1 or any(len(r) != n for r in rows):
        raise NotSquare(f"expected a non-empty square matrix, got {n} rows")
    if n > max_points:
        raise TooManyPoints(f"n={n} exceeds the limit of {max_points}")
    for r in rows:
        for x in r:
            if isinstance(x, bool) or not isinstance(x, (int, np.integer)):
                raise TypeError(f"distances must be integers, got {x!r}")
            if abs(int(x)) >= MAX_DISTANCE:
                raise ValueError(f"distance {x} too large")
    d = np.array(rows, dtype=np.int64)

    bad = np.flatnonzero(np.diag(d) != 0)
    if bad.size:
        raise NonZeroDiagonal(int(bad[0]))
    asym = np.argwhere(d != d.T)
    if asym.size:
        i, j = asym[0]
        raise Asymmetric(int(i), int(j))
    nonpos = np.argwhere((d <= 0) & ~np.eye(n, dtype=bool))
    if nonpos.size:
        i, j = nonpos[0]
        raise NonPositiveOffDiagonal(int(i), int(j))
    for i in range(n):
        # viol[j, k]: d[i, k] > d[i, j] + d[j, k]
        viol = d[i][None, :] > d[i][:, None] + d
        hit = np.argwhere(viol)
        if hit.size:
            j, k = hit[0]
            raise TriangleViolation(i, int(j), int(k))
    return MetricSpace(d, int(scale))


def between(m: BetweennessSpace, a: int, b: int, c: int) -> bool:
    """``[abc]``: b lies between a and c (points must be distinct)."""
    return m.between(a, b, c)


def collinear(m: BetweennessSpace, a: int, b: int, c: int) -> bool:
    return m.collinear(a, b, c)


def diameter(m: MetricSpace) -> Diameter:
    """Largest distance, with the lexicographically least pair attaining it."""
    if m.n < 2:
        raise TooFewPoints("diameter needs at least two points")
    flat = int(np.argmax(m.dist))
    i, j = divmod(flat, m.n)
    return Diameter(int(m.dist[i, j]), (min(i, j), max(i, j)))


def distance_set(m: MetricSpace) -> tuple[int, ...]:
    """All distances occurring in ``m``, including 0."""
    return tuple(int(x) for x in np.unique(m.dist))


def subspace(m: MetricSpace, points: Iterable[int]) -> MetricSpace:
    """Restriction to ``points`` (re-indexed in increasing order).

    ``index_map[i]`` of the result is the index in ``m`` of new point ``i``.
    """
    pts = sorted(set(points))
    if not pts:
        raise EmptySubset("subspace needs at least one point")
    idx = np.array(pts)
    sub = m.dist[np.ix_(idx, idx)]
    return MetricSpace(sub, m.scale, tuple(m.index_map[p] for p in pts))


def induced_betweenness(m: MetricSpace):
    """The metric betweenness of ``m`` as a :class:`BetweennessRelation`."""
    from .betweenness import BetweennessRelation

    n = m.n
    cube = np.zeros((n, n, n), dtype=bool)
    for a in range(n):
        cube[a] = m.between_matrix(a)
    return BetweennessRelation._from_cube(cube)


def random_metric(n: int, max_dist: int, rng: random.Random) -> MetricSpace:
    """Random integer metric: uniform symmetric weights in ``1..max_dist``
    repaired to the shortest-path closure (so all distances stay in range)."""
    w = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        for j in range(i + 1, n):
            w[i, j] = w[j, i] = rng.randint(1, max_dist)
    for k in range(n):
        w = np.minimum(w, w[:, k][:, None] + w[k][None, :])
    return validate_metric(w)
