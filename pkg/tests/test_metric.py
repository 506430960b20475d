import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import nx_distances
from metriclines import (
    MetricSpace,
    between,
    collinear,
    diameter,
    distance_set,
    gen_complete,
    gen_cycle,
    gen_path,
    graph_metric,
    induced_betweenness,
    random_metric,
    subspace,
    validate_axioms,
    validate_metric,
)
from metriclines.errors import (
    Asymmetric,
    EmptySubset,
    NonPositiveOffDiagonal,
    NonZeroDiagonal,
    NotSquare,
    TooFewPoints,
    TooManyPoints,
    TriangleViolation,
)

C5 = graph_metric(gen_cycle(5))
P4 = graph_metric(gen_path(4))
K4 = graph_metric(gen_complete(4))


def test_two_point_space():
    m = validate_metric([[0, 1], [1, 0]])
    assert m.n == 2 and m.scale == 1 and m.d(0, 1) == 1


def test_triangle_violation_reports_witness():
    with pytest.raises(TriangleViolation) as exc:
        validate_metric([[0, 5, 1], [5, 0, 1], [1, 1, 0]])
    assert exc.value.triple == (0, 2, 1)


def test_c5_matrix_valid():
    rows = [[min(abs(i - j), 5 - abs(i - j)) for j in range(5)] for i in range(5)]
    assert validate_metric(rows) == C5
    assert C5.dist.tolist() == nx_distances(gen_cycle(5))


@pytest.mark.parametrize("matrix, error", [
    ([], NotSquare),
    ([[0, 1]], NotSquare),
    ([[1, 1], [1, 0]], NonZeroDiagonal),
    ([[0, 1], [2, 0]], Asymmetric),
    ([[0, 0], [0, 0]], NonPositiveOffDiagonal),
    ([[0, -1], [-1, 0]], NonPositiveOffDiagonal),
])
def test_invalid_matrices(matrix, error):
    with pytest.raises(error):
        validate_metric(matrix)


def test_non_integer_entries_rejected():
    with pytest.raises(TypeError):
        validate_metric([[0, 1.5], [1.5, 0]])


def test_too_many_points():
    with pytest.raises(TooManyPoints):
        validate_metric(np.ones((5, 5), dtype=int) - np.eye(5, dtype=int), max_points=4)


def test_rationals_scaled_by_common_denominator():
    m = MetricSpace.from_rationals([[0, "1/2", "2/3"], ["1/2", 0, Fraction(1, 3)], [Fraction(2, 3), Fraction(1, 3), 0]])
    assert m.scale == 6
    assert m.dist.tolist() == [[0, 3, 4], [3, 0, 2], [4, 2, 0]]


def test_matrix_is_immutable():
    with pytest.raises(ValueError):
        C5.dist[0, 1] = 7


def test_between_examples():
    assert between(P4, 0, 1, 2)
    assert not between(P4, 0, 0, 2)
    assert not between(C5, 0, 1, 3)


def test_collinear_examples():
    assert collinear(P4, 0, 1, 2)
    assert not any(collinear(K4, a, b, c) for a, b, c in [(0, 1, 2), (1, 2, 3), (0, 2, 3)])
    assert not collinear(C5, 0, 2, 4)


def test_diameter():
    assert diameter(C5).value == 2
    assert diameter(validate_metric([[0, 7], [7, 0]])).value == 7
    assert diameter(P4) == (3, (0, 3))
    with pytest.raises(TooFewPoints):
        diameter(validate_metric([[0]]))


def test_distance_set():
    assert distance_set(C5) == (0, 1, 2)
    assert distance_set(K4) == (0, 1)
    assert distance_set(P4) == (0, 1, 2, 3)


def test_subspace():
    s = subspace(C5, [0, 1, 2])
    assert s.n == 3 and s.d(0, 2) == 2 and s.index_map == (0, 1, 2)
    assert subspace(C5, range(5)) == C5
    s = subspace(K4, [0, 1])
    assert s.dist.tolist() == [[0, 1], [1, 0]]
    s = subspace(C5, [4, 2])
    assert s.index_map == (2, 4)
    with pytest.raises(EmptySubset):
        subspace(C5, [])


def test_induced_betweenness_examples():
    assert len(induced_betweenness(K4).triples) == 0
    assert induced_betweenness(P4).triples == {(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)}
    c5 = induced_betweenness(C5)
    assert len(c5.triples) == 5
    assert all(c5.between(i, (i + 1) % 5, (i + 2) % 5) for i in range(5))
    assert c5.between(2, 1, 0)  # reversal


def test_json_and_csv_roundtrip():
    assert MetricSpace.from_json(C5.to_json()) == C5
    assert MetricSpace.from_csv(C5.to_csv()) == C5


def test_vectors_match_scalar_definitions():
    m = random_metric(9, 4, random.Random(5))
    for a in range(m.n):
        for b in range(m.n):
            if a == b:
                continue
            inner = [m.between(a, x, b) for x in range(m.n)]
            outer = [x not in (a, b) and (m.between(x, a, b) or m.between(a, b, x)) for x in range(m.n)]
            assert m.inner_vector(a, b).tolist() == inner
            assert m.outer_vector(a, b).tolist() == outer
            assert m.line_vector(a, b).tolist() == [i or o for i, o in zip(inner, outer)]


@st.composite
def metrics(draw):
    n = draw(st.integers(2, 8))
    seed = draw(st.integers(0, 2**32 - 1))
    return random_metric(n, draw(st.integers(1, 6)), random.Random(seed))


@settings(max_examples=150, deadline=None)
@given(metrics())
def test_random_metric_is_valid_and_induces_valid_betweenness(m):
    d = m.dist
    n = m.n
    for i in range(n):
        for j in range(n):
            for k in range(n):
                assert d[i, k] <= d[i, j] + d[j, k]
    validate_axioms(induced_betweenness(m).triples, n)


@settings(max_examples=100, deadline=None)
@given(metrics(), st.data())
def test_subspace_preserves_betweenness(m, data):
    pts = data.draw(st.sets(st.integers(0, m.n - 1), min_size=1))
    s = subspace(m, pts)
    idx = s.index_map
    for a in range(s.n):
        for b in range(s.n):
            for c in range(s.n):
                assert s.between(a, b, c) == m.between(idx[a], idx[b], idx[c])
