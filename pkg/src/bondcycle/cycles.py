"""Longest cycles, cycle spectra, Hamiltonicity and the Dirac bound."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .bonds import InfeasibleError
from .graph import EdgeSet, Graph, GraphError, bits, min_degree, reachable, vertex_connectivity_at_least

CYCLE_SPECTRUM_MAX_N = 24


@dataclass(frozen=True)
class Cycle:
    """Simple cycle given by its vertex order; the closing edge is implicit."""

    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices)

    @property
    def edge_set(self) -> EdgeSet:
        vs = self.vertices
        return frozenset(
            (a, b) if a < b else (b, a) for a, b in zip(vs, vs[1:] + vs[:1])
        )

    def to_json(self) -> dict:
        return {"vertices": list(self.vertices), "length": self.length}


def validate_cycle(g: Graph, vertices: Sequence[int]) -> Cycle:
    vs = tuple(vertices)
    if len(vs) < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    if len(set(vs)) != len(vs):
        raise GraphError("cycle repeats a vertex")
    for a, b in zip(vs, vs[1:] + vs[:1]):
        if not g.has_edge(a, b):
            raise GraphError(f"({a}, {b}) is not an edge of the graph")
    return Cycle(vs)


def _cycle_search(
    g: Graph,
    on_cycle: Callable[[list[int]], None],
    floor: Callable[[], int],
    max_len: int | None = None,
) -> None:
    """Enumerate simple cycles, each once, from their minimum vertex.

    A cycle is reported only when its second vertex is smaller than its last,
    which fixes the direction.  Paths whose optimistic length (current length
    plus vertices still reachable from the head) is below ``floor()`` are cut,
    as are paths longer than ``max_len``.
    """
    n, adj = g.n, g.adj
    if max_len is None:
        max_len = n
    path: list[int] = []

    def extend(start: int, head: int, visited: int, allowed: int) -> None:
        length = len(path)
        free = allowed & ~visited
        spare = free.bit_count()
        if length + spare < floor():
            return
        # on small remainders the BFS costs more than it prunes
        if spare > 6 and length + reachable(g, head, free | (1 << head)).bit_count() - 1 < floor():
            return
        if length >= 3 and adj[head] >> start & 1 and path[1] < head:
            on_cycle(path)
        if length == max_len:
            return
        for w in bits(adj[head] & free):
            path.append(w)
            extend(start, w, visited | (1 << w), allowed)
            path.pop()

    for start in range(n):
        allowed = ((1 << n) - 1) >> (start + 1) << (start + 1)
        if n - start < max(floor(), 3):
            break
        path.append(start)
        extend(start, start, 1 << start, allowed)
        path.pop()


def circumference(g: Graph) -> tuple[int, Cycle] | None:
    """Exact longest cycle length and a witness, or None for acyclic graphs."""
    best: list = [0, None]

    class _Done(Exception):
        pass

    def on_cycle(path: list[int]) -> None:
        if len(path) > best[0]:
            best[0], best[1] = len(path), tuple(path)
            if best[0] == g.n:
                raise _Done

    try:
        _cycle_search(g, on_cycle, lambda: best[0] + 1)
    except _Done:
        pass
    if best[1] is None:
        return None
    return best[0], Cycle(best[1])


def cycles_of_length(g: Graph, length: int, limit: int | None = None) -> list[Cycle]:
    """Every cycle of exactly ``length`` (each once), stopping after ``limit``."""
    found: list[Cycle] = []

    class _Enough(Exception):
        pass

    def on_cycle(path: list[int]) -> None:
        if len(path) == length:
            found.append(Cycle(tuple(path)))
            if limit is not None and len(found) >= limit:
                raise _Enough

    try:
        _cycle_search(g, on_cycle, lambda: length, max_len=length)
    except _Enough:
        pass
    return found


def longest_cycles(g: Graph) -> tuple[int, list[Cycle]]:
    """Circumference and every longest cycle in one pass; (0, []) if acyclic."""
    best = [0]
    found: list[tuple[int, ...]] = []

    def on_cycle(path: list[int]) -> None:
        if len(path) > best[0]:
            best[0] = len(path)
            found.clear()
        if len(path) == best[0]:
            found.append(tuple(path))

    _cycle_search(g, on_cycle, lambda: best[0])
    return best[0], [Cycle(vs) for vs in found]


def all_longest_cycles(g: Graph) -> list[Cycle]:
    length, cycles = longest_cycles(g)
    if not length:
        raise GraphError("graph is acyclic")
    return cycles


@dataclass
class CycleSpectrum:
    lengths: list[int]
    witnesses: dict[int, Cycle] = field(repr=False)

    def to_json(self) -> dict:
        return {
            "lengths": self.lengths,
            "witnesses": {str(k): c.to_json() for k, c in self.witnesses.items()},
        }


def cycle_spectrum(g: Graph) -> CycleSpectrum:
    if g.n > CYCLE_SPECTRUM_MAX_N:
        raise InfeasibleError(f"cycle spectrum is limited to n <= {CYCLE_SPECTRUM_MAX_N}, got {g.n}")
    res = circumference(g)
    if res is None:
        return CycleSpectrum([], {})
    top, witness = res
    witnesses = {top: witness}
    for length in range(3, top):
        hit = cycles_of_length(g, length, limit=1)
        if hit:
            witnesses[length] = hit[0]
    return CycleSpectrum(sorted(witnesses), dict(sorted(witnesses.items())))


def is_hamiltonian(g: Graph) -> tuple[bool, Cycle | None]:
    if g.n < 3:
        return False, None
    hit = cycles_of_length(g, g.n, limit=1)
    return (True, hit[0]) if hit else (False, None)


def dirac_bound(g: Graph) -> int:
    """min(n, 2 * min degree); a lower bound on the circumference of 2-connected graphs."""
    if not vertex_connectivity_at_least(g, 2):
        raise GraphError("the Dirac bound needs a 2-connected graph")
    return min(g.n, 2 * min_degree(g))


def cycle_edge_mask(g: Graph, cycle: Cycle | Iterable[int]) -> int:
    vs = cycle.vertices if isinstance(cycle, Cycle) else tuple(cycle)
    return g.edge_mask(zip(vs, vs[1:] + vs[:1]))
