from __future__ import annotations

import random
from pathlib import Path

import pytest

from triscope.graph import Graph, parse_clusters, parse_edge_list

DATA = Path(__file__).resolve().parent.parent / "data"


def make_graph(n: int, edges) -> Graph:
    return Graph(node_count=n, edges=frozenset(tuple(sorted(e)) for e in edges))


def complete_graph(n: int) -> Graph:
    return make_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return make_graph(n, edges)


def bridged_double_k4() -> Graph:
    k4a = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
    k4b = [(4, 5), (4, 6), (4, 7), (5, 6), (5, 7), (6, 7)]
    return make_graph(8, k4a + k4b + [(3, 4)])


@pytest.fixture(scope="session")
def karate() -> Graph:
    return parse_edge_list((DATA / "karate.edges").read_text()).graph


@pytest.fixture(scope="session")
def karate_clustered(karate: Graph) -> Graph:
    return parse_clusters((DATA / "karate.clusters").read_text(), karate)


@pytest.fixture(scope="session")
def football() -> Graph:
    return parse_edge_list((DATA / "football.edges").read_text()).graph


@pytest.fixture(scope="session")
def k4() -> Graph:
    return complete_graph(4)
