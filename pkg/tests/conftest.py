import random
from itertools import combinations

import networkx as nx
import pytest
from hypothesis import strategies as st

from cowkit.graph import Graph


def all_graphs(n):
    """Every labelled graph on ``n`` vertices."""
    pairs = list(combinations(range(n), 2))
    for m in range(1 << len(pairs)):
        yield Graph.from_edges(n, [p for i, p in enumerate(pairs) if m >> i & 1])


def random_graph(rng, n, p=None):
    p = rng.random() if p is None else p
    return Graph.from_edges(n, [(i, j) for i, j in combinations(range(n), 2) if rng.random() < p])


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def from_nx(h):
    index = {v: i for i, v in enumerate(sorted(h.nodes()))}
    return Graph.from_edges(len(index), [(index[u], index[v]) for u, v in h.edges()])


def isomorphic(g, h):
    return nx.is_isomorphic(to_nx(g), to_nx(h))


@st.composite
def graphs(draw, max_n=8, min_n=0):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    mask = draw(st.integers(0, (1 << len(pairs)) - 1)) if pairs else 0
    return Graph.from_edges(n, [p for i, p in enumerate(pairs) if mask >> i & 1])


CRITERIA: list = []  # acceptance lines, printed after the run


def pytest_terminal_summary(terminalreporter):
    if CRITERIA:
        terminalreporter.section("acceptance criteria")
        for line in sorted(CRITERIA, key=lambda t: int(t.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)


@pytest.fixture
def rng():
    return random.Random(20240611)
