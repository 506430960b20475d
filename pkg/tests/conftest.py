"""Shared fixtures and slow-but-obvious oracles used across the test modules."""

from __future__ import annotations

import itertools
import random

import networkx as nx
import pytest

from metriclines import Graph, connected_graphs, graph_metric, to_graph6

# lines printed in the terminal summary by the acceptance module
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


# -- oracles -------------------------------------------------------------------

def nx_distances(g: Graph) -> list[list[int]]:
    """All-pairs distances through networkx, independent of our BFS."""
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    d = dict(nx.all_pairs_shortest_path_length(h))
    return [[d[i][j] for j in range(g.n)] for i in range(g.n)]


def brute_lines(dist) -> set[frozenset[int]]:
    """Distinct lines of a distance matrix from the definition, in pure Python."""
    n = len(dist)
    out = set()
    for a, b in itertools.combinations(range(n), 2):
        pts = {a, b}
        for c in range(n):
            if c in (a, b):
                continue
            dab, dac, dbc = dist[a][b], dist[a][c], dist[b][c]
            if dab == dac + dbc or dac == dab + dbc or dbc == dab + dac:
                pts.add(c)
        out.add(frozenset(pts))
    return out


def line_sets(lines) -> list[frozenset[int]]:
    return [frozenset(ln.points) for ln in lines]


def random_connected_graph(rng: random.Random, n: int, p: float) -> Graph:
    """Random spanning tree plus independent extra edges."""
    order = list(range(n))
    rng.shuffle(order)
    edges = {tuple(sorted((order[i], order[rng.randrange(i)]))) for i in range(1, n)}
    for a, b in itertools.combinations(range(n), 2):
        if rng.random() < p:
            edges.add((a, b))
    return Graph.from_edges(n, sorted(edges))


# -- corpora ---------------------------------------------------------------------

CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117}


@pytest.fixture(scope="session")
def corpus() -> dict[int, list[str]]:
    """graph6 records of all connected graphs on 2..8 vertices."""
    return {n: [to_graph6(g) for g in connected_graphs(n)] for n in range(2, 9)}


@pytest.fixture(scope="session")
def small_graphs() -> list[Graph]:
    """All connected graphs on 2..6 vertices."""
    return [g for n in range(2, 7) for g in connected_graphs(n)]


@pytest.fixture(scope="session")
def small_metrics(small_graphs):
    return [graph_metric(g) for g in small_graphs]
