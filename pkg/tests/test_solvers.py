import pytest
from hypothesis import given, settings

from conftest import graphs, random_graph
from cowkit.graph import Graph, disjoint_union, join
from cowkit.oracle import exact_cow, verify_witness
from cowkit.fpt import kernelize
from cowkit.patterns import K1, K2, K3, NET, split_partition
from cowkit.solvers import (ClassificationError, chain_width, dispatch, pairs_share_non_neighbour, pseudo_split_width,
                            split_width, triangle_free_2k2_width)

C4 = Graph.cycle(4)
C5 = Graph.cycle(5)


def check(g, res):
    assert res.width == len(res.witness) == exact_cow(g)[0]
    assert verify_witness(g, res.witness)


def test_chain_examples():
    p4 = Graph.path(4)
    res = chain_width(p4)
    assert res.width == 3 and res.method == "chain"
    check(p4, res)
    # x = {0, 1}, y = {2, 3}; N(0) is empty, N(1) = {2, 3}
    g = Graph.from_edges(4, [(1, 2), (1, 3)])
    res = chain_width(g)
    assert res.width == 2
    check(g, res)
    with pytest.raises(ClassificationError):
        chain_width(Graph.cycle(6))


def test_tiny_graphs():
    assert chain_width(K2).width == 0
    assert chain_width(Graph.empty(2)).width == 1
    assert chain_width(K1).width == 0
    assert chain_width(Graph.empty(0)).width == 0


def test_triangle_free_examples():
    res = triangle_free_2k2_width(C5)
    assert res.width == 5 and res.method == "c5_component"
    g = disjoint_union(C5, K1)
    res = triangle_free_2k2_width(g)
    assert res.width == 5
    assert all(5 in s for s in res.witness)
    check(g, res)
    res = triangle_free_2k2_width(C4)
    assert res.width == 2
    with pytest.raises(ClassificationError):
        triangle_free_2k2_width(K3)


def test_split_examples():
    # q1=0, q2=1, s1=2, s2=3
    g = Graph.from_edges(4, [(0, 1), (0, 2), (1, 3)])
    res = split_width(g)
    assert res.width == 3
    check(g, res)
    g = Graph.from_edges(4, [(0, 1)])
    check(g, split_width(g))
    g = disjoint_union(K3, K1)
    res = split_width(g)
    assert res.width == 3
    check(g, res)
    with pytest.raises(ClassificationError):
        split_width(C4)


def test_pseudo_split_examples():
    res = pseudo_split_width(C5)
    assert res.width == 5
    # q = 5 joined to the cycle, s = 6 isolated
    g = Graph.from_edges(7, [(i, (i + 1) % 5) for i in range(5)] + [(5, i) for i in range(5)])
    res = pseudo_split_width(g)
    assert res.width == 6 and res.method == "pseudo_split"
    check(g, res)
    p3 = Graph.path(3)
    assert pseudo_split_width(p3) == split_width(p3)
    with pytest.raises(ClassificationError):
        pseudo_split_width(C4)


def test_dispatch_examples():
    res = dispatch(Graph.complete(5))
    assert res.width == 0 and res.method == "reduction"
    res = dispatch(C5)
    assert res.width == 5 and res.method == "c5_component"


def test_dispatch_on_split_graphs(rng):
    seen = 0
    while seen < 30:
        g = random_graph(rng, 8)
        part = split_partition(g)
        if part is None:
            continue
        seen += 1
        check(g, dispatch(g))
        kernel = kernelize(g)[0]
        kp = split_partition(kernel)
        k = split_width(kernel).width
        q = len(kp.clique)
        assert k == (q if pairs_share_non_neighbour(kernel, kp.clique, kp.stable) else q + 1)


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=8))
def test_dispatch_matches_oracle(g):
    check(g, dispatch(g))


def test_pair_condition():
    # every stable pair has a common non-neighbour in the clique
    g = Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 4)])
    assert pairs_share_non_neighbour(g, frozenset({0, 1, 2}), frozenset({3, 4}))
    assert not pairs_share_non_neighbour(g, frozenset({0, 1}), frozenset({3, 4}))


def test_dispatch_falls_back():
    p5 = Graph.path(5)
    res = dispatch(p5)
    assert res.method == "fpt" and res.width == 4
    check(p5, res)
    assert split_width(NET).method == "split"
    g = disjoint_union(Graph.complete(4), Graph.complete(4))
    res = dispatch(g)
    assert res.method == "fpt" and res.width == 16
    assert verify_witness(g, res.witness)


def test_dispatch_reduces_joins_completely():
    g = join(C4, C4)
    res = dispatch(g)
    assert res.method == "reduction" and res.width == 4
    check(g, res)
