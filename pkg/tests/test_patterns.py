from itertools import product

import pytest
from hypothesis import given, settings

from conftest import graphs, isomorphic
from cowkit.fpt import gk
from cowkit.graph import Graph, bipartition, disjoint_union, is_clique, is_independent, join, substitute
from cowkit.patterns import (MORE, NET, WIDTH_OBSTRUCTIONS, K1, K2, K3, catalog, chain_ordering,
                             contains_induced, lookup, pseudo_split_partition, small_width_class,
                             split_partition)

C4 = Graph.cycle(4)
C5 = Graph.cycle(5)
C6 = Graph.cycle(6)
TWO_K2 = disjoint_union(K2, K2)


def has(g, name):
    return contains_induced(g, lookup(name)) is not None


def test_catalog_names():
    names = [p.name for p in catalog()]
    for required in ("K2+K1", "C4", "2K2", "P4", "K3+K1", "(K2+K1)⋆2K1", "C4⋆2K1", "Net", "C5", "C8",
                     "3K2", "K3", "P5", "G[1]", "G[2]", "G[3]"):
        assert required in names
    assert [f"F{i}" for i in range(1, 15)] == [n for n in names if n.startswith("F")]
    assert lookup("C4*2K1").name == "C4⋆2K1"


def test_catalog_constructions():
    assert isomorphic(lookup("G[3]").graph, join(disjoint_union(NET, K1), K1))
    assert isomorphic(lookup("F1").graph, TWO_K2)
    f14 = lookup("F14").graph
    assert isomorphic(f14, join(C4, C4))
    # C4⋆C4 has 4 + 4 + 16 = 24 edges
    assert (f14.n, f14.m) == (8, 24)
    assert isomorphic(lookup("F2").graph, C5)
    net = lookup("Net").graph
    assert net.m == 6 and sorted(net.degree(v) for v in range(6)) == [1, 1, 1, 3, 3, 3]


def test_contains_induced_examples():
    emb = contains_induced(C6, TWO_K2)
    assert emb is not None
    hosts = [emb[i] for i in range(4)]
    for i in range(4):
        for j in range(i + 1, 4):
            assert TWO_K2.has_edge(i, j) == C6.has_edge(hosts[i], hosts[j])
    assert contains_induced(C5, Graph.path(4)) is not None
    assert contains_induced(Graph.path(4), C4) is None
    assert contains_induced(K1, K2) is None
    assert contains_induced(C4, Graph.empty(0)) == {}


def _bipartite_by_sides(n):
    for a in range(1, n):
        pairs = list(product(range(a), range(a, n)))
        for m in range(1 << len(pairs)):
            yield Graph.from_edges(n, [p for i, p in enumerate(pairs) if m >> i & 1])


@pytest.mark.parametrize("n", range(2, 8))
def test_chain_graphs_are_2k2_free(n):
    for g in _bipartite_by_sides(n):
        assert (chain_ordering(g) is not None) == (contains_induced(g, TWO_K2) is None)


def test_chain_ordering_examples():
    b, order = chain_ordering(Graph.path(4))
    assert b.x_side == {0, 2} and order.order == (0, 2)
    assert chain_ordering(TWO_K2) is None
    assert chain_ordering(C6) is None


def test_split_examples():
    part = split_partition(Graph.path(3))
    assert part.clique in ({0, 1}, {1, 2})
    assert split_partition(C4) is None
    part = split_partition(disjoint_union(K3, K1))
    assert part.clique == {0, 1, 2} and part.stable == {3}


def test_pseudo_split_examples():
    part = pseudo_split_partition(C5)
    assert part.clique == part.stable == frozenset() and sorted(part.cycle) == [0, 1, 2, 3, 4]
    g = join(K2, C5)
    part = pseudo_split_partition(g)
    assert part.clique == {0, 1} and part.stable == frozenset()
    assert sorted(part.cycle) == [2, 3, 4, 5, 6]
    p3 = Graph.path(3)
    sp, ps = split_partition(p3), pseudo_split_partition(p3)
    assert (ps.clique, ps.stable, ps.cycle) == (sp.clique, sp.stable, ())


@settings(max_examples=300, deadline=None)
@given(graphs(max_n=8))
def test_recognition_equivalences(g):
    ch = chain_ordering(g)
    assert (ch is not None) == (bipartition(g) is not None and not has(g, "2K2"))
    sp = split_partition(g)
    assert (sp is not None) == (not has(g, "2K2") and not has(g, "C4") and not has(g, "C5"))
    ps = pseudo_split_partition(g)
    assert (ps is not None) == (not has(g, "2K2") and not has(g, "C4"))
    if sp is not None:
        assert is_clique(g, sp.clique) and is_independent(g, sp.stable)
        assert sp.clique | sp.stable == frozenset(range(g.n))
    if ps is not None:
        cyc = set(ps.cycle)
        assert is_clique(g, ps.clique) and is_independent(g, ps.stable)
        assert all(g.has_edge(q, c) for q in ps.clique for c in cyc)
        assert not any(g.has_edge(s, c) for s in ps.stable for c in cyc)
    if ch is not None:
        order = ch[1].order
        assert all(g.rows[a] & ~g.rows[c] == 0 for a, c in zip(order, order[1:]))


def test_small_width_examples():
    cs = substitute(K2, {0: Graph.complete(2), 1: Graph.empty(3)})[0]
    for method in ("forbidden", "structural"):
        assert small_width_class(cs, method) == 1
        assert small_width_class(C5, method) == MORE
        assert small_width_class(gk(3).with_labels(None), method) == 3
        assert small_width_class(Graph.complete(4), method) == 0
        assert small_width_class(C4, method) == 2
    with pytest.raises(ValueError):
        small_width_class(C4, "guess")


def test_obstruction_lists():
    assert [len(WIDTH_OBSTRUCTIONS[k]) for k in (1, 2, 3)] == [2, 5, 14]
