"""Exception hierarchy.

Every error raised by the library derives from :class:`MetricLinesError`.
Errors that carry witnessing points expose them as attributes so callers
(and the CLI) can report the offending indices.
"""

from __future__ import annotations


class MetricLinesError(Exception):
    """Base class for all library errors."""


# -- metric validation ------------------------------------------------------

class InvalidMetric(MetricLinesError):
    pass


class NotSquare(InvalidMetric):
    pass


class NonZeroDiagonal(InvalidMetric):
    def __init__(self, i: int):
        super().__init__(f"dist[{i}][{i}] != 0")
        self.i = i


class Asymmetric(InvalidMetric):
    def __init__(self, i: int, j: int):
        super().__init__(f"dist[{i}][{j}] != dist[{j}][{i}]")
        self.i, self.j = i, j


class NonPositiveOffDiagonal(InvalidMetric):
    def __init__(self, i: int, j: int):
        super().__init__(f"dist[{i}][{j}] <= 0 for distinct points")
        self.i, self.j = i, j


class TriangleViolation(InvalidMetric):
    """dist[i][k] > dist[i][j] + dist[j][k]."""

    def __init__(self, i: int, j: int, k: int):
        super().__init__(f"triangle inequality fails: d({i},{k}) > d({i},{j}) + d({j},{k})")
        self.i, self.j, self.k = i, j, k

    @property
    def triple(self) -> tuple[int, int, int]:
        return (self.i, self.j, self.k)


class TooManyPoints(MetricLinesError):
    pass


# -- point arguments --------------------------------------------------------

class DuplicatePoint(MetricLinesError):
    pass


class SamePoint(DuplicatePoint):
    pass


class TooFewPoints(MetricLinesError):
    pass


class EmptySubset(MetricLinesError):
    pass


# -- betweenness axioms -----------------------------------------------------

class AxiomViolation(MetricLinesError):
    pass


class M0Violation(AxiomViolation):
    def __init__(self, triple):
        super().__init__(f"triple {tuple(triple)} has repeated points")
        self.triple = tuple(triple)


class M2Violation(AxiomViolation):
    def __init__(self, a: int, b: int, c: int):
        super().__init__(f"both [{a}{b}{c}] and [{b}{a}{c}] hold")
        self.points = (a, b, c)


class M3Violation(AxiomViolation):
    def __init__(self, a: int, b: int, c: int, d: int):
        super().__init__(
            f"[{a} {b} {c}] and [{a} {c} {d}] hold but [{a} {b} {d}] or [{b} {c} {d}] does not"
        )
        self.points = (a, b, c, d)


class DuplicateInSequence(MetricLinesError):
    pass


class NTooLarge(MetricLinesError):
    pass


class NTooSmall(MetricLinesError):
    pass


class STooSmall(MetricLinesError):
    pass


class InternalInconsistency(MetricLinesError):
    """A proven statement failed; points at a bug upstream."""


# -- lines ------------------------------------------------------------------

class UnknownLine(MetricLinesError):
    pass


class NoDistances(MetricLinesError):
    """Distance-filtered queries on a betweenness relation that has no metric."""


class PreconditionUnmet(MetricLinesError):
    pass


class HypothesisUnmet(PreconditionUnmet):
    pass


# -- graphs -----------------------------------------------------------------

class GraphFormatError(MetricLinesError):
    pass


class MalformedGraph6(GraphFormatError):
    def __init__(self, position: int, reason: str = "invalid graph6 data"):
        super().__init__(f"{reason} at position {position}")
        self.position = position


class SelfLoop(GraphFormatError):
    def __init__(self, v: int):
        super().__init__(f"self loop at vertex {v}")
        self.v = v


class DuplicateEdge(GraphFormatError):
    def __init__(self, u: int, v: int):
        super().__init__(f"duplicate edge {u} {v}")
        self.edge = (u, v)


class Disconnected(MetricLinesError):
    def __init__(self, component):
        super().__init__(f"graph is disconnected; component {sorted(component)}")
        self.component = frozenset(component)


# -- pair relations ---------------------------------------------------------

class OverlappingPairs(MetricLinesError):
    pass


class DifferentLines(MetricLinesError):
    pass


class IdenticalPairs(MetricLinesError):
    pass


# -- witnesses --------------------------------------------------------------

class UniversalLinePresent(MetricLinesError):
    pass


class NotGeodesic(MetricLinesError):
    pass


class NotA3Metric(MetricLinesError):
    pass


class NotGammaFamily(PreconditionUnmet):
    pass


class UniversalLineInFamily(MetricLinesError):
    pass
