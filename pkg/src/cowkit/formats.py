"""graph6 and edge-list codecs."""

from __future__ import annotations

import re

from .graph import Graph, GraphError

HEADER = ">>graph6<<"
_SMALL = 62
_MEDIUM = 258047


class ParseError(GraphError):
    """Malformed graph text; ``offset`` is the 0-based byte position when known."""

    def __init__(self, message: str, offset: int | None = None):
        self.offset = offset
        if offset is not None:
            message = f"{message} at byte {offset}"
        super().__init__(message)


def _size_bytes(n: int) -> list[int]:
    if n <= _SMALL:
        return [n]
    if n <= _MEDIUM:
        return [63] + [(n >> s) & 63 for s in (12, 6, 0)]
    return [63, 63] + [(n >> s) & 63 for s in (30, 24, 18, 12, 6, 0)]


def emit_graph6(g: Graph) -> str:
    """graph6 text of ``g`` (no header, no newline)."""
    out = _size_bytes(g.n)
    acc = nbits = 0
    for j in range(1, g.n):
        row = g.rows[j]
        for i in range(j):
            acc = acc << 1 | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc)
                acc = nbits = 0
    if nbits:
        out.append(acc << (6 - nbits))
    return bytes(b + 63 for b in out).decode("ascii")


def parse_graph6(text: str) -> Graph:
    """Inverse of :func:`emit_graph6`; an optional header and trailing newline are allowed."""
    line = text.rstrip("\r\n")
    base = 0
    if line.startswith(HEADER):
        line = line[len(HEADER):]
        base = len(HEADER)
    if not line:
        raise ParseError("empty graph6 string", base)
    data = []
    for i, ch in enumerate(line):
        c = ord(ch)
        if not 63 <= c <= 126:
            raise ParseError(f"invalid graph6 byte {ch!r}", base + i)
        data.append(c - 63)
    if data[0] != 63:
        n, pos = data[0], 1
    elif len(data) >= 2 and data[1] == 63:
        if len(data) < 8:
            raise ParseError("truncated size field", base + len(data))
        n, pos = 0, 8
        for d in data[2:8]:
            n = n << 6 | d
    else:
        if len(data) < 4:
            raise ParseError("truncated size field", base + len(data))
        n, pos = 0, 4
        for d in data[1:4]:
            n = n << 6 | d
    need = (n * (n - 1) // 2 + 5) // 6
    have = len(data) - pos
    if have < need:
        raise ParseError(f"truncated adjacency data: expected {need} bytes, got {have}",
                         base + len(data))
    if have > need:
        raise ParseError("trailing data after adjacency bits", base + pos + need)
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if data[pos + k // 6] >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph(n, tuple(rows))


_INT = re.compile(r"-?\d+")


def parse_edge_list(text: str) -> Graph:
    """Lines ``u v`` with an optional leading ``n <count>``; ``#`` starts a comment."""
    declared = None
    edges = []
    first = True
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        if first and tok[0] == "n":
            first = False
            if len(tok) != 2 or not _INT.fullmatch(tok[1]) or int(tok[1]) < 0:
                raise ParseError(f"line {lineno}: malformed vertex count {line!r}")
            declared = int(tok[1])
            continue
        first = False
        if len(tok) != 2 or not all(_INT.fullmatch(t) for t in tok):
            raise ParseError(f"line {lineno}: expected two integers, got {line!r}")
        u, v = int(tok[0]), int(tok[1])
        if u < 0 or v < 0:
            raise ParseError(f"line {lineno}: negative vertex index")
        if u == v:
            raise ParseError(f"line {lineno}: self-loop at vertex {u}")
        edges.append((u, v))
    top = max((max(e) for e in edges), default=-1) + 1
    if declared is not None and top > declared:
        raise ParseError(f"vertex {top - 1} exceeds declared n={declared}")
    return Graph.from_edges(declared if declared is not None else top, edges)


def emit_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def parse_graph(text: str, fmt: str = "auto") -> Graph:
    """``auto`` picks the edge-list reader when any line contains whitespace."""
    if fmt == "auto":
        body = text.strip("\r\n")
        spaced = any(re.search(r"\s", ln.strip()) for ln in body.splitlines())
        fmt = "edgelist" if spaced or "#" in body else "graph6"
    if fmt == "graph6":
        return parse_graph6(text.strip())
    if fmt == "edgelist":
        return parse_edge_list(text)
    raise ValueError(f"unknown format {fmt!r}")
