"""Immutable simple graphs stored as one adjacency bitmask per vertex.

Vertices are the integers ``0..n-1``.  Row ``i`` is a Python ``int`` whose
bit ``j`` is set iff ``i`` and ``j`` are adjacent.  Python integers grow as
needed, so the same representation serves machine-word sized graphs and
larger ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Mapping, Optional, Sequence

VertexSet = frozenset  # frozenset[int]


class GraphError(ValueError):
    """Raised for out-of-range vertices and malformed structures."""


def bits(mask: int) -> list[int]:
    """Indices of the set bits of ``mask`` in increasing order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    n: int
    rows: tuple[int, ...]
    labels: Optional[tuple[str, ...]] = None

    def __post_init__(self):
        if self.n < 0 or len(self.rows) != self.n:
            raise GraphError("row count does not match vertex count")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.rows):
            if row & ~full:
                raise GraphError(f"row {v} has bits beyond vertex {self.n - 1}")
            if row >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            for u in bits(row):
                if not self.rows[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")
        if self.labels is not None and len(self.labels) != self.n:
            raise GraphError("label count does not match vertex count")

    # construction -------------------------------------------------------

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]],
                   labels: Optional[Sequence[str]] = None) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows), tuple(labels) if labels is not None else None)

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls(n, tuple(full & ~(1 << v) for v in range(n)))

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def complete_bipartite(cls, a: int, b: int) -> "Graph":
        return cls.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])

    # queries ------------------------------------------------------------

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def _check(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range for n={self.n}")

    def has_edge(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return bool(self.rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.rows[u] >> (u + 1) << (u + 1))]

    def non_edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, v in combinations(range(self.n), 2) if not self.rows[u] >> v & 1]

    @property
    def m(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def name(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def is_complete(self) -> bool:
        return all(r.bit_count() == self.n - 1 for r in self.rows)

    def with_labels(self, labels: Optional[Sequence[str]]) -> "Graph":
        return Graph(self.n, self.rows, tuple(labels) if labels is not None else None)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


@dataclass(frozen=True)
class Bipartition:
    x_side: frozenset
    y_side: frozenset

    def masks(self) -> tuple[int, int]:
        return to_mask(self.x_side), to_mask(self.y_side)


def _vertex_mask(g: Graph, s: Iterable[int]) -> int:
    m = 0
    for v in s:
        g._check(v)
        m |= 1 << v
    return m


def neighborhood(g: Graph, v: int) -> frozenset:
    g._check(v)
    return frozenset(bits(g.rows[v]))


def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph(g.n, tuple(full & ~r & ~(1 << v) for v, r in enumerate(g.rows)), g.labels)


def induced(g: Graph, s: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced by ``s``, re-indexed in increasing vertex order.

    Returns the graph and the old->new index map.
    """
    keep = bits(_vertex_mask(g, s))
    index = {old: new for new, old in enumerate(keep)}
    rows = []
    for old in keep:
        r = 0
        for u in bits(g.rows[old]):
            if u in index:
                r |= 1 << index[u]
        rows.append(r)
    labels = tuple(g.labels[v] for v in keep) if g.labels is not None else None
    return Graph(len(keep), tuple(rows), labels), index


def delete_vertex(g: Graph, v: int) -> Graph:
    return induced(g, (u for u in range(g.n) if u != v))[0]


def is_independent(g: Graph, s: Iterable[int]) -> bool:
    m = _vertex_mask(g, s)
    return all(not g.rows[v] & m for v in bits(m))


def is_clique(g: Graph, s: Iterable[int]) -> bool:
    m = _vertex_mask(g, s)
    return all((g.rows[v] | 1 << v) & m == m for v in bits(m))


def universal_vertices(g: Graph) -> frozenset:
    return frozenset(v for v in range(g.n) if g.rows[v].bit_count() == g.n - 1)


def false_twin_classes(g: Graph) -> list[frozenset]:
    """Vertices grouped by identical open neighbourhood, ordered by smallest member."""
    groups: dict[int, list[int]] = {}
    for v in range(g.n):
        groups.setdefault(g.rows[v], []).append(v)
    return sorted((frozenset(c) for c in groups.values()), key=min)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    rows = list(g.rows) + [r << g.n for r in h.rows]
    labels = None
    if g.labels is not None or h.labels is not None:
        labels = tuple(g.name(v) for v in range(g.n)) + tuple(h.name(v) for v in range(h.n))
    return Graph(g.n + h.n, tuple(rows), labels)


def join(g: Graph, h: Graph) -> Graph:
    u = disjoint_union(g, h)
    left = g.full_mask
    right = h.full_mask << g.n
    rows = tuple(r | (right if v < g.n else left) for v, r in enumerate(u.rows))
    return Graph(u.n, rows, u.labels)


def compose(g: Graph, h: Graph, mode: str) -> Graph:
    if mode == "join":
        return join(g, h)
    if mode == "disjoint_union":
        return disjoint_union(g, h)
    raise GraphError(f"unknown composition mode {mode!r}")


def substitute(g: Graph, parts: Mapping[int, Graph]) -> tuple[Graph, dict[int, tuple[int, ...]]]:
    """Replace every vertex ``v`` of ``g`` by the graph ``parts[v]``.

    Vertices missing from ``parts`` stay as single vertices.  Vertices of
    different parts are adjacent iff their originals were.  Returns the new
    graph and a map from each old vertex to the tuple of its new vertices.
    """
    block: dict[int, tuple[int, ...]] = {}
    offset = 0
    for v in range(g.n):
        size = parts[v].n if v in parts else 1
        block[v] = tuple(range(offset, offset + size))
        offset += size
    rows = [0] * offset
    for v in range(g.n):
        part = parts.get(v)
        base = block[v][0] if block[v] else 0
        outside = 0
        for u in bits(g.rows[v]):
            outside |= to_mask(block[u])
        for i, nv in enumerate(block[v]):
            inner = (part.rows[i] << base) if part is not None else 0
            rows[nv] = inner | outside
    return Graph(offset, tuple(rows)), block


def bipartition(g: Graph) -> Optional[Bipartition]:
    """A proper 2-colouring, or ``None`` if ``g`` has an odd cycle.

    Each component's smallest vertex goes to ``x_side``; isolated vertices
    therefore always land on ``x_side``.
    """
    colour = [-1] * g.n
    for start in range(g.n):
        if colour[start] != -1:
            continue
        colour[start] = 0
        stack = [start]
        while stack:
            v = stack.pop()
            for u in bits(g.rows[v]):
                if colour[u] == -1:
                    colour[u] = 1 - colour[v]
                    stack.append(u)
                elif colour[u] == colour[v]:
                    return None
    return Bipartition(frozenset(v for v in range(g.n) if colour[v] == 0),
                       frozenset(v for v in range(g.n) if colour[v] == 1))


def check_bipartition(g: Graph, b: Bipartition) -> None:
    x, y = _vertex_mask(g, b.x_side), _vertex_mask(g, b.y_side)
    if x & y or x | y != g.full_mask:
        raise GraphError("bipartition sides must partition the vertex set")
    for v in bits(x):
        if g.rows[v] & x:
            raise GraphError(f"x_side is not independent (vertex {v})")
    for v in bits(y):
        if g.rows[v] & y:
            raise GraphError(f"y_side is not independent (vertex {v})")


def bipartite_complement(g: Graph, b: Bipartition) -> Graph:
    check_bipartition(g, b)
    x, y = b.masks()
    rows = tuple((y if (x >> v & 1) else x) & ~r for v, r in enumerate(g.rows))
    return Graph(g.n, rows, g.labels)
