"""Kernelization and the fixed-parameter decision procedure.

A graph without universal vertices and without non-adjacent false twins
has complete width at most ``k`` iff it is an induced subgraph of the
prototype ``G[k]``: vertices are the subsets of ``{1..k}``, adjacent when
disjoint.  ``decide_k`` reduces, rejects kernels above ``2**k`` vertices,
then searches for such a labelling.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Union

from .graph import Graph, GraphError, bits, induced
from .oracle import Witness

GK_LIMIT = 10
FPT_K_CEILING = 16


@dataclass(frozen=True)
class RemoveUniversal:
    v: int


@dataclass(frozen=True)
class MergeFalseTwins:
    kept: int
    removed: int


@dataclass(frozen=True)
class TwinUniversalDecrement:
    kept: int
    removed: int


Step = Union[RemoveUniversal, MergeFalseTwins, TwinUniversalDecrement]


@dataclass(frozen=True)
class KernelTrace:
    """Reduction steps in application order, over original vertex ids."""
    n: int
    steps: tuple = ()
    parameter_delta: int = 0

    def removed(self) -> set[int]:
        out = set()
        for s in self.steps:
            out.add(s.v if isinstance(s, RemoveUniversal) else s.removed)
        return out

    def survivors(self) -> list[int]:
        gone = self.removed()
        return [v for v in range(self.n) if v not in gone]

    def replay(self, g: Graph) -> Graph:
        return induced(g, self.survivors())[0]

    def lift(self, witness) -> list[frozenset]:
        """Carry a witness of the kernel (original ids) back to the input graph."""
        sets = [set(s) for s in witness]
        for step in reversed(self.steps):
            if isinstance(step, MergeFalseTwins):
                for s in sets:
                    if step.kept in s:
                        s.add(step.removed)
            elif isinstance(step, TwinUniversalDecrement):
                sets.insert(0, {step.kept, step.removed})
        return [frozenset(s) for s in sets]

    def summary(self) -> dict:
        names = {RemoveUniversal: "remove_universal", MergeFalseTwins: "merge_false_twins",
                 TwinUniversalDecrement: "twin_universal_decrement"}
        steps = []
        for s in self.steps:
            if isinstance(s, RemoveUniversal):
                steps.append([names[RemoveUniversal], s.v])
            else:
                steps.append([names[type(s)], s.kept, s.removed])
        return {"steps": steps, "parameter_delta": self.parameter_delta}


@dataclass(frozen=True)
class LabelAssignment:
    k: int
    labels: dict = field(default_factory=dict)  # vertex -> frozenset of 1..k

    def witness(self) -> list[frozenset]:
        return [frozenset(v for v, lab in self.labels.items() if i in lab)
                for i in range(1, self.k + 1)]


@dataclass(frozen=True)
class SolveResult:
    width: int
    witness: list
    method: str
    reduction_prefix: KernelTrace


# prototype family ---------------------------------------------------------

def _subset_label(mask: int) -> str:
    return "{" + ",".join(str(i + 1) for i in bits(mask)) + "}"


def gk(k: int, limit: int = GK_LIMIT) -> Graph:
    """``G[k]``; vertex ``m`` is the subset whose bit ``i`` stands for ``i+1``."""
    if not 1 <= k <= limit:
        raise GraphError(f"k must lie in 1..{limit}, got {k}")
    size = 1 << k
    rows = []
    for a in range(size):
        r = 0
        for b in range(size):
            if a != b and not a & b:
                r |= 1 << b
        rows.append(r)
    return Graph(size, tuple(rows), tuple(_subset_label(m) for m in range(size)))


def gk_witness(k: int) -> list[frozenset]:
    return [frozenset(m for m in range(1 << k) if m >> i & 1) for i in range(k)]


# kernelization ------------------------------------------------------------

def kernelize(g: Graph, k: int = 0) -> tuple[Graph, int, KernelTrace]:
    """Apply the universal-vertex and false-twin rules to a fixpoint.

    Universal vertices are stripped first.  For non-adjacent twins ``u, v``
    the larger index ``u`` is removed; if ``v`` is then universal the
    width drops by one (the pair ``{u, v}`` needs its own set).
    Returns ``(kernel, k - delta, trace)``; the kernel's vertices are the
    trace survivors in increasing order.
    """
    rows = g.rows
    alive = g.full_mask
    steps: list[Step] = []
    delta = 0
    while True:
        changed = False
        for v in bits(alive):
            if rows[v] & alive == alive & ~(1 << v):
                steps.append(RemoveUniversal(v))
                alive &= ~(1 << v)
                changed = True
        if changed:
            continue
        seen: dict[int, int] = {}
        for u in bits(alive):
            key = rows[u] & alive
            if key in seen:
                v = seen[key]
                rest = alive & ~(1 << u) & ~(1 << v)
                if key == rest:
                    steps.append(TwinUniversalDecrement(v, u))
                    delta += 1
                else:
                    steps.append(MergeFalseTwins(v, u))
                alive &= ~(1 << u)
                changed = True
                break
            seen[key] = u
        if not changed:
            break
    trace = KernelTrace(g.n, tuple(steps), delta)
    kernel = induced(g, bits(alive))[0]
    return kernel, k - delta, trace


# labelling search ---------------------------------------------------------

def _greedy_clique(g: Graph, mask: int) -> int:
    clique = 0
    for u in bits(mask):
        if g.rows[u] & clique == clique:
            clique |= 1 << u
    return clique


def find_labelling(g: Graph, k: int) -> Optional[list[int]]:
    """Distinct non-empty labels in ``[1, 2**k)`` with adjacency == disjointness.

    The next vertex is the one with the fewest usable coordinates (ties:
    higher degree, lower index).  A candidate label must miss every
    labelled neighbour and meet every labelled non-neighbour.  Coordinates
    not yet used by any label are interchangeable, so a label may only open
    new coordinates as the next contiguous block.  After each assignment:

    * every unlabelled vertex must still be able to meet its labelled
      non-neighbours using coordinates its labelled neighbours leave free;
    * a labelled vertex needs one free coordinate per member of any clique
      among its unlabelled non-neighbours (clique members are pairwise
      disjoint, so they cannot share one).
    """
    n = g.n
    if n == 0:
        return []
    if k <= 0 or n > (1 << k) - 1:
        return None
    deg = [g.degree(v) for v in range(n)]
    non = [g.full_mask & ~r & ~(1 << v) for v, r in enumerate(g.rows)]
    label = [0] * n
    taken: set[int] = set()
    blocked = [0] * n  # union of labels of labelled neighbours

    def consistent(placed: int) -> bool:
        open_ = g.full_mask & ~placed
        for u in bits(open_):
            free = ~blocked[u]
            for w in bits(placed & non[u]):
                if not label[w] & free:
                    return False
        for w in bits(placed):
            clique = _greedy_clique(g, open_ & non[w])
            if clique:
                free = 0
                for u in bits(clique):
                    free |= ~blocked[u]
                if (label[w] & free).bit_count() < clique.bit_count():
                    return False
        return True

    def search(placed: int, used: int) -> bool:
        if placed == g.full_mask:
            return True
        low = (1 << used) - 1
        v = min(bits(g.full_mask & ~placed),
                key=lambda u: ((low & ~blocked[u]).bit_count(), -deg[u], u))
        non_nbrs = [label[w] for w in bits(placed & non[v])]
        allowed = low & ~blocked[v]
        sub = allowed
        while True:
            if all(sub & w for w in non_nbrs):
                for extra in range(k - used + 1):
                    lab = sub | ((1 << extra) - 1) << used
                    if not lab or lab in taken:
                        continue
                    label[v] = lab
                    taken.add(lab)
                    saved = blocked[:]
                    for u in bits(g.rows[v] & ~placed):
                        blocked[u] |= lab
                    now = placed | 1 << v
                    if consistent(now) and search(now, used + extra):
                        return True
                    blocked[:] = saved
                    taken.discard(lab)
            if not sub:
                break
            sub = (sub - 1) & allowed
        return False

    return label if search(0, 0) else None


def kernel_witness(kernel: Graph, origin: list[int], k: int) -> Optional[list[frozenset]]:
    """Witness of at most ``k`` sets for an already reduced graph, over ``origin`` ids."""
    if kernel.n > (1 << max(k, 0)):
        return None
    labels = find_labelling(kernel, k)
    if labels is None:
        return None
    sets = [frozenset(origin[v] for v in range(kernel.n) if labels[v] >> i & 1) for i in range(k)]
    return [s for s in sets if s]


def decide_k(g: Graph, k: int) -> Optional[Witness]:
    """A witness of at most ``k`` sets, or ``None`` if complete width exceeds ``k``."""
    kernel, k_rem, trace = kernelize(g, k)
    if k_rem < 0:
        return None
    w = kernel_witness(kernel, trace.survivors(), k_rem)
    return None if w is None else trace.lift(w)


def labelling_of(g: Graph, k: int) -> Optional[LabelAssignment]:
    """Label assignment of a reduced graph into ``G[k]`` (labels over 1..k)."""
    raw = find_labelling(g, k)
    if raw is None:
        return None
    return LabelAssignment(k, {v: frozenset(i + 1 for i in bits(lab)) for v, lab in enumerate(raw)})


class Unsolved(RuntimeError):
    """No solver could settle the instance within its configured limits."""


def fpt_cow(g: Graph, k_ceiling: int = FPT_K_CEILING) -> "SolveResult":
    kernel, _, trace = kernelize(g, 0)
    origin = trace.survivors()
    k = 0
    while (1 << k) < kernel.n:
        k += 1
    while k <= k_ceiling:
        w = kernel_witness(kernel, origin, k)
        if w is not None:
            lifted = trace.lift(w)
            return SolveResult(len(lifted), lifted, "fpt", trace)
        k += 1
    raise Unsolved(f"complete width exceeds the fpt ceiling {k_ceiling + trace.parameter_delta}")
