"""Biclique cover to complete width, with certificates carried both ways.

Given a bipartite ``G`` with sides ``X`` and ``Y``, the instance ``G'`` is
the bipartite complement of ``G`` plus two apexes: ``x`` adjacent to
``Y + {y}`` and ``y`` adjacent to ``X + {x}``.  Then ``G`` has a cover by
``k`` bicliques iff ``G'`` has a witness of ``k + 2`` sets (both sides of
``G`` non-empty).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import Bipartition, Graph, GraphError, bipartite_complement, check_bipartition
from .oracle import BicliqueCover, Witness, verify_cover, verify_witness


class ReductionError(GraphError):
    """A certificate handed to a translation does not verify."""


@dataclass(frozen=True)
class ReducedInstance:
    g_prime: Graph
    k_prime: int
    x_apex: int
    y_apex: int
    source_bipartition: Bipartition
    index_map: dict  # source vertex -> g_prime vertex

    @property
    def source_k(self) -> int:
        return self.k_prime - 2

    def x_prime(self) -> frozenset:
        return frozenset(self.index_map[v] for v in self.source_bipartition.x_side) | {self.x_apex}

    def y_prime(self) -> frozenset:
        return frozenset(self.index_map[v] for v in self.source_bipartition.y_side) | {self.y_apex}


def _check_instance(r: ReducedInstance, source: Graph) -> None:
    g = r.g_prime
    x, y = r.source_bipartition.masks()
    xa, ya = r.x_apex, r.y_apex
    assert g.rows[xa] == y | 1 << ya
    assert g.rows[ya] == x | 1 << xa
    bc = bipartite_complement(source, r.source_bipartition)
    low = source.full_mask
    assert all(g.rows[v] & low == bc.rows[v] for v in range(source.n))


def biclique_to_cow(g: Graph, b: Bipartition, k: int) -> ReducedInstance:
    """Build ``G'`` and ``k' = k + 2``; vertices of ``g`` keep their indices."""
    check_bipartition(g, b)
    if k < 0:
        raise GraphError(f"k must be non-negative, got {k}")
    n = g.n
    xa, ya = n, n + 1
    x, y = b.masks()
    bc = bipartite_complement(g, b)
    rows = list(bc.rows)
    for v in range(n):
        rows[v] |= 1 << (ya if x >> v & 1 else xa)
    rows.append(y | 1 << ya)
    rows.append(x | 1 << xa)
    labels = None
    if g.labels is not None:
        labels = g.labels + ("x'", "y'")
    r = ReducedInstance(Graph(n + 2, tuple(rows), labels), k + 2, xa, ya, b,
                        {v: v for v in range(n)})
    _check_instance(r, g)
    return r


def _source(r: ReducedInstance) -> Graph:
    keep = r.g_prime.full_mask & ~(1 << r.x_apex) & ~(1 << r.y_apex)
    rows = tuple(row & keep for row in r.g_prime.rows[:r.x_apex])
    return bipartite_complement(Graph(r.x_apex, rows), r.source_bipartition)


def cover_to_witness(c: BicliqueCover, r: ReducedInstance) -> Witness:
    """Each biclique becomes one independent set; ``X'`` and ``Y'`` close the list."""
    verdict = verify_cover(_source(r), c, r.source_bipartition)
    if not verdict:
        raise ReductionError(f"invalid biclique cover: {verdict.detail}")
    w = [frozenset(r.index_map[v] for v in xs | ys) for xs, ys in c.bicliques]
    return w + [r.x_prime(), r.y_prime()]


def witness_to_cover(w: Sequence, r: ReducedInstance) -> BicliqueCover:
    """Turn a witness of ``G'`` back into a biclique cover of the source.

    The set holding ``x`` together with some vertex of ``X`` lies inside
    ``X'``, so it is replaced by ``X'`` and ``x`` is removed from every
    other set; likewise for ``y``.  The two apex sets are dropped and each
    remaining set splits into its ``X`` and ``Y`` parts.  Parts with an
    empty side cover no edge and are discarded.
    """
    verdict = verify_witness(r.g_prime, w)
    if not verdict:
        raise ReductionError(f"witness does not verify on G': {verdict.detail}")
    sets = [set(s) for s in w]
    apex_sets = set()
    for apex, side in ((r.x_apex, r.x_prime()), (r.y_apex, r.y_prime())):
        home = next((i for i, s in enumerate(sets)
                     if apex in s and len(s) > 1 and i not in apex_sets), None)
        for i, s in enumerate(sets):
            if i == home:
                sets[i] = set(side)
            else:
                s.discard(apex)
        if home is not None:
            apex_sets.add(home)
    back = {gv: sv for sv, gv in r.index_map.items()}
    b = r.source_bipartition
    bicliques = []
    for i, s in enumerate(sets):
        if i in apex_sets:
            continue
        src = {back[v] for v in s}
        xs, ys = frozenset(src & b.x_side), frozenset(src & b.y_side)
        if xs and ys:
            bicliques.append((xs, ys))
    cover = BicliqueCover(tuple(bicliques))
    final = verify_cover(_source(r), cover, b)
    assert final, final.detail
    return cover


def apex_sets_normalized(w: Sequence, r: ReducedInstance) -> bool:
    """True iff ``x`` and ``y`` each occur in exactly one set, namely ``X'`` and ``Y'``."""
    xs = [s for s in w if r.x_apex in s]
    ys = [s for s in w if r.y_apex in s]
    return xs == [r.x_prime()] and ys == [r.y_prime()]


__all__ = ["ReducedInstance", "ReductionError", "biclique_to_cow", "cover_to_witness",
           "witness_to_cover", "apex_sets_normalized"]
