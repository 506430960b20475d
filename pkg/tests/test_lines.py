import random
from math import comb

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import brute_lines, line_sets, random_connected_graph
from metriclines import (
    LineSet,
    all_lines,
    diameter,
    distance_set,
    gen_complete,
    gen_cycle,
    gen_path,
    generator_graph,
    graph_metric,
    induced_betweenness,
    line,
    prune_to_min_degree,
    random_metric,
    universal_line,
    validate_metric,
)
from metriclines.errors import NoDistances, PreconditionUnmet, SamePoint, TooFewPoints, UnknownLine
from metriclines.lines import GeneratorGraph, bits_to_points, check_no_high_degree, points_to_bits

C4 = graph_metric(gen_cycle(4))
C5 = graph_metric(gen_cycle(5))
P4 = graph_metric(gen_path(4))
K4 = graph_metric(gen_complete(4))


def test_line_examples():
    assert line(C5, 0, 1).points == (0, 1, 2, 4)
    assert line(P4, 1, 2).points == (0, 1, 2, 3)
    assert line(P4, 1, 2).is_universal
    assert line(K4, 3, 1).points == (1, 3)
    assert line(K4, 3, 1).generator == (1, 3)
    with pytest.raises(SamePoint):
        line(C5, 2, 2)


def test_bit_helpers():
    assert bits_to_points(0b10110) == (1, 2, 4)
    assert points_to_bits([4, 1, 2]) == 0b10110
    assert bits_to_points(1 << 200 | 1) == (0, 200)


def test_all_lines_examples():
    lines = all_lines(C5)
    assert lines.count == 10
    assert sorted(len(ln) for ln in lines) == [3] * 5 + [4] * 5
    lines = all_lines(C4)
    assert lines.count == 1 and lines.universal() is not None
    assert len(lines.generators(lines.universal())) == 6
    for n in range(2, 8):
        lines = all_lines(graph_metric(gen_complete(n)))
        assert lines.count == comb(n, 2) and all(len(ln) == 2 for ln in lines)


def test_generators_partition_pairs():
    rng = random.Random(21)
    for _ in range(30):
        m = random_metric(rng.randint(2, 9), 5, rng)
        lines = all_lines(m)
        pairs = [p for ln in lines for p in lines.generators(ln)]
        assert len(pairs) == len(set(pairs)) == comb(m.n, 2)
        for ln in lines:
            for a, b in lines.generators(ln):
                assert line(m, a, b) == ln
                assert lines.line_of(b, a) == ln


def test_all_lines_matches_oracle_on_small_graphs(small_metrics):
    for m in small_metrics:
        assert set(line_sets(all_lines(m))) == brute_lines(m.dist.tolist())


@settings(max_examples=150, deadline=None)
@given(st.integers(2, 10), st.integers(1, 7), st.integers(0, 2**32 - 1))
def test_all_lines_matches_oracle_on_random_metrics(n, w, seed):
    m = random_metric(n, w, random.Random(seed))
    lines = all_lines(m)
    assert set(line_sets(lines)) == brute_lines(m.dist.tolist())
    # the betweenness relation alone determines the same lines
    assert lines.keys() == all_lines(induced_betweenness(m)).keys()


def test_lineset_json_roundtrip_and_unknown_line():
    lines = all_lines(C5)
    again = LineSet.from_json(5, lines.to_json())
    assert again.keys() == lines.keys()
    assert [again.generators(k) for k in again.keys()] == [lines.generators(k) for k in lines.keys()]
    with pytest.raises(UnknownLine):
        lines.generators(0b11111)


def test_universal_line():
    for n in range(2, 9):
        assert universal_line(graph_metric(gen_path(n))) is not None
    assert universal_line(C5) is None
    assert universal_line(validate_metric([[0, 3], [3, 0]])) is not None
    assert universal_line(C4).generator == (0, 1)
    with pytest.raises(TooFewPoints):
        universal_line(validate_metric([[0]]))


def test_generator_graph_examples():
    full = all_lines(C4).universal()
    g = generator_graph(C4, full, 2)
    assert set(g.edges) == {(0, 2), (1, 3)} and g.max_degree == 1
    assert len(generator_graph(C4, full).edges) == 6
    g = generator_graph(K4, line(K4, 0, 1), 1)
    assert g.edges == ((0, 1),)
    with pytest.raises(NoDistances):
        generator_graph(induced_betweenness(C4), full, 2)


def test_no_high_degree_examples():
    full = all_lines(C4).universal()
    assert check_no_high_degree(C4, full, 2).ok
    for ln in all_lines(C5):
        if len(ln) == 3:
            assert check_no_high_degree(C5, ln, 2).ok
    with pytest.raises(PreconditionUnmet):
        check_no_high_degree(C4, full, 1)


def test_no_high_degree_random_graphs():
    rng = random.Random(22)
    for _ in range(150):
        m = graph_metric(random_connected_graph(rng, rng.randint(2, 7), rng.random() * 0.6))
        lines = all_lines(m)
        big = diameter(m).value
        for ln in lines:
            for delta in distance_set(m):
                if 2 * delta > big:
                    assert check_no_high_degree(m, ln, delta, lines).ok


def _gg(edges) -> GeneratorGraph:
    n = 1 + max((max(e) for e in edges), default=0)
    return GeneratorGraph(line(K4, 0, 1), None, n, tuple(edges))


def test_prune_examples():
    tri = [(0, 1), (0, 2), (1, 2)]
    assert set(prune_to_min_degree(_gg(tri), 2).edges) == set(tri)
    star = [(0, 1), (0, 2), (0, 3), (0, 4)]
    assert prune_to_min_degree(_gg(star), 2).edges == ()
    c4_pendant = [(0, 1), (1, 2), (2, 3), (0, 3), (3, 4)]
    assert set(prune_to_min_degree(_gg(c4_pendant), 2).edges) == {(0, 1), (1, 2), (2, 3), (0, 3)}


@settings(max_examples=100, deadline=None)
@given(st.sets(st.tuples(st.integers(0, 11), st.integers(0, 11)).filter(lambda e: e[0] < e[1]),
               max_size=30), st.integers(1, 4))
def test_prune_matches_networkx_k_core(edges, k):
    edges = sorted(edges)
    got = set(prune_to_min_degree(_gg(edges), k).edges) if edges else set()
    h = nx.Graph(edges)
    want = {tuple(sorted(e)) for e in nx.k_core(h, k).edges()} if edges else set()
    assert got == want
