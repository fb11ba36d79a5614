"""Brute-force exact solvers and certificate checkers.

Everything else in the package is tested against these.  The searches are
plain iterative deepening over set covers; sizes are capped so a call
either returns the true optimum or refuses.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence, Union

from .graph import Bipartition, Graph, GraphError, bits, check_bipartition, complement, to_mask

Witness = list  # list[frozenset[int]]

DEFAULT_LIMIT_N = 16
DEFAULT_LIMIT_EDGES = 24
NAIVE_LIMIT_N = 6


class SizeLimitExceeded(GraphError):
    """The instance is larger than the configured brute-force limit."""


def limit_n() -> int:
    env = os.environ.get("COWKIT_LIMIT_N")
    return int(env) if env else DEFAULT_LIMIT_N


def limit_edges() -> int:
    env = os.environ.get("COWKIT_LIMIT_EDGES")
    return int(env) if env else DEFAULT_LIMIT_EDGES


@dataclass(frozen=True)
class CliqueCover:
    cliques: tuple


@dataclass(frozen=True)
class BicliqueCover:
    bicliques: tuple  # of (frozenset, frozenset)

    def __len__(self):
        return len(self.bicliques)


@dataclass(frozen=True)
class Verdict:
    ok: bool
    detail: str = ""

    def __bool__(self):
        return self.ok


OK = Verdict(True)


# maximal independent sets ------------------------------------------------

def maximal_cliques(rows: Sequence[int], n: int) -> list[int]:
    """Maximal cliques as bitmasks (Bron-Kerbosch with Tomita pivoting)."""
    out: list[int] = []

    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(r)
            return
        px = p | x
        pivot = max(bits(px), key=lambda u: (rows[u] & p).bit_count())
        for v in bits(p & ~rows[pivot]):
            expand(r | 1 << v, p & rows[v], x & rows[v])
            p &= ~(1 << v)
            x |= 1 << v

    if n:
        expand(0, (1 << n) - 1, 0)
    else:
        out.append(0)
    return sorted(out)


def maximal_independent_sets(g: Graph) -> list[int]:
    return maximal_cliques(complement(g).rows, g.n)


# set-cover search ---------------------------------------------------------

def _min_cover(universe: int, candidates: list[int], elem_candidates: list[list[int]],
               pick: str = "constrained") -> list[int]:
    """Fewest candidate masks whose union contains ``universe``.

    ``candidates`` are bitmasks over element indices, ``elem_candidates[e]``
    lists the candidate indices covering element ``e``.  Iterative
    deepening; failed (remaining, depth) states are memoised.
    """
    if not universe:
        return []
    failed: set[tuple[int, int]] = set()

    def search(remaining: int, depth: int, chosen: list[int]) -> Optional[list[int]]:
        if not remaining:
            return chosen
        if depth == 0 or (remaining, depth) in failed:
            return None
        if pick == "constrained":
            elem = min(bits(remaining), key=lambda e: len(elem_candidates[e]))
        else:
            elem = (remaining & -remaining).bit_length() - 1
        for c in elem_candidates[elem]:
            found = search(remaining & ~candidates[c], depth - 1, chosen + [c])
            if found is not None:
                return found
        failed.add((remaining, depth))
        return None

    depth = 1
    while True:
        found = search(universe, depth, [])
        if found is not None:
            return found
        depth += 1


def exact_cow(g: Graph, limit: Optional[int] = None) -> tuple[int, Witness]:
    """Complete width of ``g`` with a witness of maximal independent sets."""
    limit = limit_n() if limit is None else limit
    if g.n > limit:
        raise SizeLimitExceeded(f"exact_cow refuses n={g.n} (limit {limit})")
    pairs = g.non_edges()
    if not pairs:
        return 0, []
    mis = maximal_independent_sets(g)
    covers = []
    elem_candidates: list[list[int]] = [[] for _ in pairs]
    for ci, s in enumerate(mis):
        c = 0
        for pi, (u, v) in enumerate(pairs):
            if s >> u & 1 and s >> v & 1:
                c |= 1 << pi
                elem_candidates[pi].append(ci)
        covers.append(c)
    chosen = _min_cover((1 << len(pairs)) - 1, covers, elem_candidates)
    return len(chosen), [frozenset(bits(mis[c])) for c in chosen]


def _all_cliques(g: Graph) -> list[int]:
    out = [0]
    for v in range(g.n):
        out += [c | 1 << v for c in out if g.rows[v] & c == c]
    return out


def exact_ecc_direct(g: Graph, limit: Optional[int] = None) -> tuple[int, CliqueCover]:
    """Edge clique cover number by a search that never touches the complement.

    Cliques are grown vertex by vertex, maximal ones kept, and the search
    branches on the lowest-numbered uncovered edge.
    """
    limit = limit_n() if limit is None else limit
    if g.n > limit:
        raise SizeLimitExceeded(f"exact_ecc refuses n={g.n} (limit {limit})")
    edges = g.edges()
    if not edges:
        return 0, CliqueCover(())
    cliques = _all_cliques(g)
    maximal = [c for c in cliques
               if not any(not c >> v & 1 and g.rows[v] & c == c for v in range(g.n))]
    covers = []
    elem_candidates: list[list[int]] = [[] for _ in edges]
    for ci, c in enumerate(maximal):
        m = 0
        for ei, (u, v) in enumerate(edges):
            if c >> u & 1 and c >> v & 1:
                m |= 1 << ei
                elem_candidates[ei].append(ci)
        covers.append(m)
    chosen = _min_cover((1 << len(edges)) - 1, covers, elem_candidates, pick="lowest")
    return len(chosen), CliqueCover(tuple(frozenset(bits(maximal[c])) for c in chosen))


def exact_ecc(g: Graph, limit: Optional[int] = None) -> tuple[int, CliqueCover]:
    """Edge clique cover number of ``g`` via the complement's complete width."""
    k, w = exact_cow(complement(g), limit)
    return k, CliqueCover(tuple(w))


def naive_cow(g: Graph) -> int:
    """Complete width by breadth-first search over every independent set.

    No maximality restriction; intended only as a check on ``exact_cow``.
    """
    if g.n > NAIVE_LIMIT_N:
        raise SizeLimitExceeded(f"naive_cow refuses n={g.n} (limit {NAIVE_LIMIT_N})")
    pairs = g.non_edges()
    target = (1 << len(pairs)) - 1
    if not target:
        return 0
    comp = complement(g)
    indep = [s for s in _all_cliques(comp) if s]
    gains = set()
    for s in indep:
        c = 0
        for pi, (u, v) in enumerate(pairs):
            if s >> u & 1 and s >> v & 1:
                c |= 1 << pi
        gains.add(c)
    frontier = {0}
    seen = {0}
    level = 0
    while True:
        level += 1
        nxt = set()
        for state in frontier:
            for c in gains:
                t = state | c
                if t == target:
                    return level
                if t not in seen:
                    seen.add(t)
                    nxt.add(t)
        frontier = nxt


# bicliques ----------------------------------------------------------------

def maximal_bicliques(g: Graph, b: Bipartition) -> list[tuple[int, int]]:
    """All maximal bicliques ``(x_mask, y_mask)`` with both sides non-empty."""
    x, y = b.masks()
    closed: set[int] = set()
    frontier = {g.rows[v] for v in bits(x) if g.rows[v]}
    while frontier:
        closed |= frontier
        nxt = set()
        for a in frontier:
            for c in closed:
                m = a & c
                if m and m not in closed:
                    nxt.add(m)
        frontier = nxt
    out = []
    for ymask in closed:
        xmask = 0
        for v in bits(x):
            if g.rows[v] & ymask == ymask:
                xmask |= 1 << v
        out.append((xmask, ymask))
    return sorted(out)


def exact_biclique_cover(g: Graph, b: Bipartition,
                         limit: Optional[int] = None) -> tuple[int, BicliqueCover]:
    """Bipartite dimension of ``g`` with a cover by maximal bicliques."""
    check_bipartition(g, b)
    limit = limit_edges() if limit is None else limit
    edges = g.edges()
    if len(edges) > limit:
        raise SizeLimitExceeded(f"exact_biclique_cover refuses m={len(edges)} (limit {limit})")
    if not edges:
        return 0, BicliqueCover(())
    bicl = maximal_bicliques(g, b)
    covers = []
    elem_candidates: list[list[int]] = [[] for _ in edges]
    for ci, (xm, ym) in enumerate(bicl):
        m = 0
        both = xm | ym
        for ei, (u, v) in enumerate(edges):
            if both >> u & 1 and both >> v & 1:
                m |= 1 << ei
                elem_candidates[ei].append(ci)
        covers.append(m)
    chosen = _min_cover((1 << len(edges)) - 1, covers, elem_candidates)
    return len(chosen), BicliqueCover(tuple(
        (frozenset(bits(bicl[c][0])), frozenset(bits(bicl[c][1]))) for c in chosen))


# verification -------------------------------------------------------------

def _fmt(s) -> str:
    return "{" + ", ".join(str(v) for v in sorted(s)) + "}"


def verify_witness(g: Graph, w: Sequence) -> Verdict:
    masks = []
    for i, s in enumerate(w):
        if any(not 0 <= v < g.n for v in s):
            return Verdict(False, f"set {i} {_fmt(s)} has a vertex out of range")
        m = to_mask(s)
        for v in bits(m):
            if g.rows[v] & m:
                u = bits(g.rows[v] & m)[0]
                return Verdict(False, f"set {i} {_fmt(s)} is not independent: edge {min(u, v)}-{max(u, v)}")
        masks.append(m)
    for u, v in g.non_edges():
        pair = 1 << u | 1 << v
        if not any(m & pair == pair for m in masks):
            return Verdict(False, f"non-adjacent pair {{{u}, {v}}} is not covered")
    return OK


def verify_cover(g: Graph, c: Union[CliqueCover, BicliqueCover],
                 b: Optional[Bipartition] = None) -> Verdict:
    covered: set[tuple[int, int]] = set()
    if isinstance(c, CliqueCover):
        for i, q in enumerate(c.cliques):
            if any(not 0 <= v < g.n for v in q):
                return Verdict(False, f"clique {i} {_fmt(q)} has a vertex out of range")
            for u, v in combinations(sorted(q), 2):
                if not g.rows[u] >> v & 1:
                    return Verdict(False, f"clique {i} {_fmt(q)} misses edge {u}-{v}")
                covered.add((u, v))
    elif isinstance(c, BicliqueCover):
        if b is not None:
            check_bipartition(g, b)
        for i, (xs, ys) in enumerate(c.bicliques):
            if any(not 0 <= v < g.n for v in xs | ys):
                return Verdict(False, f"biclique {i} has a vertex out of range")
            if not xs or not ys or xs & ys:
                return Verdict(False, f"biclique {i} ({_fmt(xs)}, {_fmt(ys)}) needs two disjoint non-empty sides")
            if b is not None and not (xs <= b.x_side and ys <= b.y_side):
                return Verdict(False, f"biclique {i} does not respect the bipartition")
            for u in xs:
                for v in ys:
                    if not g.rows[u] >> v & 1:
                        return Verdict(False, f"biclique {i} ({_fmt(xs)}, {_fmt(ys)}) misses edge {min(u, v)}-{max(u, v)}")
                    covered.add((min(u, v), max(u, v)))
    else:
        raise TypeError(f"cannot verify {type(c).__name__}")
    for e in g.edges():
        if e not in covered:
            return Verdict(False, f"edge {e[0]}-{e[1]} is not covered")
    return OK
