"""Named small graphs, induced-subgraph search and class recognition."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Union

from .fpt import decide_k, gk
from .graph import (Bipartition, Graph, bipartition, bits, disjoint_union,
                    is_clique, is_independent, join, to_mask)

MORE = 4  # small_width_class result meaning "complete width at least 4"


@dataclass(frozen=True)
class Pattern:
    name: str
    graph: Graph


@dataclass(frozen=True)
class ChainOrdering:
    order: tuple  # x_side vertices with nested neighbourhoods


@dataclass(frozen=True)
class SplitPartition:
    clique: frozenset
    stable: frozenset


@dataclass(frozen=True)
class PseudoSplitPartition:
    clique: frozenset
    stable: frozenset
    cycle: tuple  # five vertices in cyclic order, or empty


def _g(n: int, edges: str) -> Graph:
    """Graph from 1-based edge tokens like ``"12 23 31"``."""
    return Graph.from_edges(n, [(int(e[0], 16) - 1, int(e[1], 16) - 1) for e in edges.split()])


K1 = Graph.empty(1)
K2 = Graph.complete(2)
K3 = Graph.complete(3)
NET = _g(6, "12 23 31 14 25 36")

# Vertex numbering follows the drawings; 'a' is vertex 10.
_F = {
    "F1": _g(4, "12 34"),
    "F2": _g(5, "12 23 34 45 51"),
    "F3": _g(5, "12 23 34 45 51 24"),
    "F4": _g(5, "12 34 13 32 24 41"),
    "F5": _g(5, "31 12 23 34 41 45"),
    "F6": _g(6, "12 23 34 41 45 36"),
    "F7": _g(6, "12 23 34 41 13 24 45 36"),
    "F8": _g(6, "51 12 23 34 45 25 53"),
    "F9": _g(6, "51 12 23 34 45 25 53 26 63"),
    "F10": _g(6, "51 12 23 34 45 25 53 16 64 26 63"),
    "F11": _g(6, "12 23 34 45 56 61 42 26 41 13 36"),
    "F12": _g(6, "12 23 34 41 13 24 45 36 56 15 26"),
    "F13": _g(7, "12 23 34 41 13 24 56 37 74 57 76 25 54 16 63 15 26"),
    "F14": _g(8, "13 14 15 16 17 18 23 24 25 26 27 28 35 36 37 38 45 46 47 48 57 58 67 68"),
}


@lru_cache(maxsize=None)
def _catalog() -> dict[str, Graph]:
    c4 = Graph.cycle(4)
    two_k1 = Graph.empty(2)
    k2k1 = disjoint_union(K2, K1)
    named = {
        "K2+K1": k2k1,
        "C4": c4,
        "2K2": disjoint_union(K2, K2),
        "P4": Graph.path(4),
        "K3+K1": disjoint_union(K3, K1),
        "(K2+K1)⋆2K1": join(k2k1, two_k1),
        "C4⋆2K1": join(c4, two_k1),
    }
    named.update(_F)
    named.update({
        "Net": NET,
        "C5": Graph.cycle(5),
        "C8": Graph.cycle(8),
        "3K2": disjoint_union(disjoint_union(K2, K2), K2),
        "K3": K3,
        "P5": Graph.path(5),
        "G[1]": gk(1).with_labels(None),
        "G[2]": gk(2).with_labels(None),
        "G[3]": gk(3).with_labels(None),
    })
    return named


WIDTH_OBSTRUCTIONS = {
    1: ("K2+K1", "C4"),
    2: ("2K2", "P4", "K3+K1", "(K2+K1)⋆2K1", "C4⋆2K1"),
    3: tuple(f"F{i}" for i in range(1, 15)),
}


def catalog() -> list[Pattern]:
    return [Pattern(name, g) for name, g in _catalog().items()]


def lookup(name: str) -> Pattern:
    name = name.replace("*", "⋆")
    return Pattern(name, _catalog()[name])


# induced subgraph search --------------------------------------------------

def contains_induced(g: Graph, p: Union[Pattern, Graph]) -> Optional[dict[int, int]]:
    """An embedding of ``p`` as an induced subgraph of ``g`` (pattern -> host vertex).

    Backtracking with forward checking; the next pattern vertex is always
    the one with the fewest remaining candidates.
    """
    pg = p.graph if isinstance(p, Pattern) else p
    k, n = pg.n, g.n
    if k > n:
        return None
    if k == 0:
        return {}
    full = g.full_mask
    non = [full & ~r & ~(1 << v) for v, r in enumerate(g.rows)]
    gdeg = [r.bit_count() for r in g.rows]
    domains = []
    for q in range(k):
        d, nd = pg.rows[q].bit_count(), k - 1 - pg.rows[q].bit_count()
        dom = 0
        for v in range(n):
            if gdeg[v] >= d and n - 1 - gdeg[v] >= nd:
                dom |= 1 << v
        if not dom:
            return None
        domains.append(dom)
    image = [-1] * k

    def search(todo: list[int]) -> bool:
        if not todo:
            return True
        q = min(todo, key=lambda t: (domains[t].bit_count(), t))
        rest = [t for t in todo if t != q]
        saved = domains[:]
        for v in bits(domains[q]):
            image[q] = v
            ok = True
            for t in rest:
                nd = saved[t] & (g.rows[v] if pg.rows[q] >> t & 1 else non[v])
                if not nd:
                    ok = False
                    break
                domains[t] = nd
            if ok and search(rest):
                return True
            domains[:] = saved
        return False

    if search(list(range(k))):
        return {q: image[q] for q in range(k)}
    return None


def first_obstruction(g: Graph, names) -> Optional[tuple[str, dict[int, int]]]:
    for name in names:
        emb = contains_induced(g, _catalog()[name])
        if emb is not None:
            return name, emb
    return None


# class recognition --------------------------------------------------------

def chain_ordering(g: Graph) -> Optional[tuple[Bipartition, ChainOrdering]]:
    """Bipartition plus an x_side order with nested neighbourhoods, if ``g`` is a chain graph."""
    b = bipartition(g)
    if b is None:
        return None
    order = sorted(b.x_side, key=lambda v: (g.degree(v), v))
    for a, c in zip(order, order[1:]):
        if g.rows[a] & ~g.rows[c]:
            return None
    return b, ChainOrdering(tuple(order))


def split_partition(g: Graph) -> Optional[SplitPartition]:
    """Split partition with a maximum clique, by the degree-sequence test."""
    if g.n == 0:
        return SplitPartition(frozenset(), frozenset())
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    deg = [g.degree(v) for v in order]
    m = max(i + 1 for i in range(g.n) if deg[i] >= i)
    if sum(deg[:m]) != m * (m - 1) + sum(deg[m:]):
        return None
    q = to_mask(order[:m])
    s = g.full_mask & ~q
    for v in bits(s):
        if g.rows[v] & q == q:
            q |= 1 << v
            s &= ~(1 << v)
    part = SplitPartition(frozenset(bits(q)), frozenset(bits(s)))
    assert is_clique(g, part.clique) and is_independent(g, part.stable)
    return part


def pseudo_split_partition(g: Graph) -> Optional[PseudoSplitPartition]:
    """Clique / stable set / induced C5 partition, or ``None`` if not (2K2, C4)-free.

    Any induced C5 of a pseudo-split graph is the whole cycle part, so the
    first one found fixes the partition; the rest is read off adjacency to it.
    """
    emb = contains_induced(g, _catalog()["C5"])
    if emb is None:
        sp = split_partition(g)
        if sp is None:
            return None
        return PseudoSplitPartition(sp.clique, sp.stable, ())
    cyc = to_mask(emb.values())
    q = s = 0
    for v in bits(g.full_mask & ~cyc):
        hits = g.rows[v] & cyc
        if hits == cyc:
            q |= 1 << v
        elif not hits:
            s |= 1 << v
        else:
            return None
    if not is_clique(g, bits(q)) or not is_independent(g, bits(s)):
        return None
    return PseudoSplitPartition(frozenset(bits(q)), frozenset(bits(s)),
                                tuple(emb[i] for i in range(5)))


def is_triangle_free_2k2_free(g: Graph) -> bool:
    return (contains_induced(g, _catalog()["K3"]) is None
            and contains_induced(g, _catalog()["2K2"]) is None)


def small_width_class(g: Graph, method: str = "forbidden") -> int:
    """Smallest ``k <= 3`` with complete width at most ``k``, else ``MORE``."""
    if method == "forbidden":
        if g.is_complete():
            return 0
        for k in (1, 2, 3):
            if first_obstruction(g, WIDTH_OBSTRUCTIONS[k]) is None:
                return k
        return MORE
    if method == "structural":
        for k in range(4):
            if decide_k(g, k) is not None:
                return k
        return MORE
    raise ValueError(f"unknown method {method!r}")
