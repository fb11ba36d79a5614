from itertools import combinations

import pytest
from hypothesis import given, settings

from conftest import graphs, isomorphic
from cowkit.graph import (Bipartition, Graph, GraphError, bipartite_complement, bipartition, check_bipartition,
                          complement, compose, delete_vertex, disjoint_union, false_twin_classes, induced,
                          is_clique, is_independent, join, neighborhood, substitute, universal_vertices)
from cowkit.fpt import gk
from cowkit.oracle import exact_cow
from cowkit.patterns import NET, K1, K2, K3

C4 = Graph.cycle(4)
C5 = Graph.cycle(5)
TWO_K2 = disjoint_union(K2, K2)


def test_rows_are_validated():
    with pytest.raises(GraphError):
        Graph(2, (0b10, 0))
    with pytest.raises(GraphError):
        Graph(1, (0b1,))
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(0, 3)])
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(1, 1)])


def test_more_than_64_vertices():
    g = Graph.cycle(100)
    assert g.m == 100
    assert g.has_edge(99, 0) and not g.has_edge(50, 52)
    assert complement(complement(g)) == g


def test_complement_examples():
    assert isomorphic(complement(C4), TWO_K2)
    assert complement(K3) == Graph.empty(3)


@given(graphs())
def test_complement_is_involution(g):
    assert complement(complement(g)) == g


def test_induced_examples():
    for s in combinations(range(5), 4):
        assert isomorphic(induced(C5, s)[0], Graph.path(4))
    assert induced(C5, range(5))[0] == C5
    assert induced(Graph.complete(4), {0, 1})[0] == K2


def test_induced_index_map():
    h, index = induced(Graph.path(5), [4, 1, 2])
    assert index == {1: 0, 2: 1, 4: 2}
    assert h.edges() == [(0, 1)]


def test_independence_and_cliques():
    assert is_independent(C4, {0, 2})
    assert not is_independent(K3, {0, 1})
    for g in (C4, K3, NET):
        assert is_independent(g, set())
        assert all(is_independent(g, {v}) for v in range(g.n))


@given(graphs(max_n=7))
def test_clique_is_independent_in_complement(g):
    comp = complement(g)
    for s in range(1 << g.n):
        vs = [v for v in range(g.n) if s >> v & 1]
        assert is_clique(g, vs) == is_independent(comp, vs)


def test_universal_vertices():
    star = Graph.complete_bipartite(1, 3)
    assert universal_vertices(star) == {0}
    assert universal_vertices(C5) == frozenset()
    assert universal_vertices(Graph.complete(4)) == {0, 1, 2, 3}


def test_false_twin_classes():
    assert false_twin_classes(C4) == [frozenset({0, 2}), frozenset({1, 3})]
    assert false_twin_classes(Graph.path(4)) == [frozenset({v}) for v in range(4)]
    assert false_twin_classes(Graph.empty(3)) == [frozenset({0, 1, 2})]


@given(graphs())
def test_false_twins_are_non_adjacent(g):
    for cls in false_twin_classes(g):
        assert is_independent(g, cls)


def test_compose():
    g2 = compose(disjoint_union(K2, K1), K1, "join")
    assert isomorphic(g2, gk(2))
    assert compose(K1, K1, "join") == K2
    assert compose(K2, K2, "disjoint_union") == TWO_K2
    with pytest.raises(GraphError):
        compose(K1, K1, "product")


def test_substitute_complete_split():
    for a in range(1, 4):
        for b in range(1, 4):
            g, block = substitute(K2, {0: Graph.complete(a), 1: Graph.empty(b)})
            q, s = block[0], block[1]
            assert is_clique(g, q) and is_independent(g, s)
            assert all(g.has_edge(u, v) for u in q for v in s)
            assert g.n == a + b


def test_substitute_identity_and_gk():
    assert substitute(NET, {})[0] == NET
    assert substitute(NET, {v: K1 for v in range(NET.n)})[0] == NET
    g3 = gk(3).with_labels(None)
    g, _ = substitute(g3, {0: K2})
    assert g.n == 9
    assert exact_cow(g)[0] == 3


@settings(max_examples=60)
@given(graphs(max_n=5, min_n=1), graphs(max_n=3, min_n=1))
def test_substitute_commutes_with_complement(frame, part):
    parts = {0: part, frame.n - 1: Graph.empty(2)}
    left, _ = substitute(frame, parts)
    right, _ = substitute(complement(frame), {v: complement(h) for v, h in parts.items()})
    assert complement(left) == right


def test_bipartition_examples():
    assert bipartition(C4) == Bipartition(frozenset({0, 2}), frozenset({1, 3}))
    assert bipartition(K3) is None
    g = disjoint_union(Graph.path(4), K1)
    assert 4 in bipartition(g).x_side


@given(graphs())
def test_bipartition_is_valid(g):
    b = bipartition(g)
    if b is not None:
        check_bipartition(g, b)


def test_bipartite_complement_examples():
    c6, c8 = Graph.cycle(6), Graph.cycle(8)
    three_k2 = disjoint_union(TWO_K2, K2)
    assert isomorphic(bipartite_complement(c6, bipartition(c6)), three_k2)
    assert isomorphic(bipartite_complement(c8, bipartition(c8)), c8)
    k23 = Graph.complete_bipartite(2, 3)
    assert bipartite_complement(k23, bipartition(k23)) == Graph.empty(5)


@given(graphs())
def test_bipartite_complement_involution(g):
    b = bipartition(g)
    if b is not None:
        assert bipartite_complement(bipartite_complement(g, b), b) == g


def test_bad_bipartition_rejected():
    with pytest.raises(GraphError):
        check_bipartition(C4, Bipartition(frozenset({0, 1}), frozenset({2, 3})))


def test_misc_queries():
    assert neighborhood(C4, 0) == {1, 3}
    assert delete_vertex(C5, 0) == Graph.path(4)
    assert join(K1, K2) == K3
    with pytest.raises(GraphError):
        neighborhood(C4, 4)
