"""Bonds: validation, exact largest bond, co-spectrum, dual Hamiltonicity and
the explicit bonds of generalized Petersen graphs."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .generators import PetersenLabels, check_petersen_params, petersen
from .graph import (
    EdgeSet,
    Graph,
    GraphError,
    VertexSet,
    bits,
    components,
    cut_mask,
    mask_connected,
    reachable,
)

CO_SPECTRUM_MAX_N = 24


class InfeasibleError(RuntimeError):
    """An exact search was refused because the input exceeds its size guard."""


class BondError(GraphError):
    """A proposed bipartition is not a bond."""


@dataclass(frozen=True)
class Bond:
    x: VertexSet
    y: VertexSet
    cut: EdgeSet
    size: int

    def to_json(self) -> dict:
        return {
            "x": self.x.to_list(),
            "size": self.size,
            "cut": [list(e) for e in sorted(self.cut)],
        }


def _require_connected(g: Graph) -> None:
    if not mask_connected(g, g.all_vertices):
        raise GraphError("bonds are only defined here for connected graphs")


def _bond_from_mask(g: Graph, x: int) -> Bond:
    y = g.all_vertices & ~x
    cut = frozenset(g.edges_of_mask(cut_mask(g, x)))
    return Bond(VertexSet(x), VertexSet(y), cut, len(cut))


def validate_bond(g: Graph, x: VertexSet | Iterable[int]) -> Bond:
    """Return the bond ``[X, V - X]``; raise :class:`BondError` naming a
    disconnected side otherwise."""
    _require_connected(g)
    xm = x.mask if isinstance(x, VertexSet) else VertexSet(x).mask
    if xm >> g.n:
        raise GraphError("vertex set exceeds the graph")
    ym = g.all_vertices & ~xm
    if not xm or not ym:
        raise BondError("both sides of a bond must be nonempty")
    if not mask_connected(g, xm):
        raise BondError(f"G[X] is disconnected for X={VertexSet(xm).to_list()}")
    if not mask_connected(g, ym):
        raise BondError(f"G[Y] is disconnected for Y={VertexSet(ym).to_list()}")
    return _bond_from_mask(g, xm)


def is_minimal_cut(g: Graph, bond: Bond) -> bool:
    """Deleting the cut leaves exactly two components, and restoring any one
    cut edge reconnects the graph."""
    cut = bond.cut
    adj = [0] * g.n
    for u, v in g.edges:
        if (u, v) not in cut:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
    h = Graph(g.n, (), tuple(adj))
    if len(components(h, g.all_vertices)) != 2:
        return False
    for u, v in cut:
        h_adj = list(adj)
        h_adj[u] |= 1 << v
        h_adj[v] |= 1 << u
        if reachable(Graph(g.n, (), tuple(h_adj)), 0, g.all_vertices) != g.all_vertices:
            return False
    return True


def _bfs_order(g: Graph) -> list[int]:
    order = [0]
    seen = 1
    i = 0
    while i < len(order):
        for w in bits(g.adj[order[i]] & ~seen):
            seen |= 1 << w
            order.append(w)
        i += 1
    return order


def _search(g: Graph, visit: Callable[[int, int], None], bound_floor: Callable[[], int] | None) -> None:
    """Depth-first assignment of vertices to sides X (holding vertex 0) and Y.

    Vertices are decided in breadth-first order from vertex 0, X before Y.
    A branch is abandoned when a side's decided vertices can no longer be
    joined through undecided ones, or, when ``bound_floor`` is given, when
    the cut-size upper bound falls below ``bound_floor()``.  ``visit(x, size)``
    is called for every connected bipartition reached.

    The upper bound counts edges a connected completion must keep inside the
    sides: with e_X, e_Y the edges inside the decided parts, c_X, c_Y their
    component counts and u undecided vertices, any completion has at least
    e_X + e_Y + c_X + c_Y + u - 2 internal edges.
    """
    n, m, adj = g.n, g.m, g.adj
    order = _bfs_order(g)
    full = g.all_vertices

    def n_components(mask: int) -> int:
        c = 0
        while mask:
            low = mask & -mask
            mask &= ~reachable(g, low.bit_length() - 1, mask)
            c += 1
        return c

    def joinable(side: int, undecided: int) -> bool:
        if not side:
            return True
        low = side & -side
        return side & ~reachable(g, low.bit_length() - 1, side | undecided) == 0

    def rec(depth: int, xm: int, ym: int, ex: int, ey: int) -> None:
        undecided = full & ~xm & ~ym
        if bound_floor is not None:
            floor = bound_floor()
            ub = m - ex - ey - (n - depth) + 1 - (ym != 0)
            if ub < floor:
                return
            # exact component counts only tighten the bound on larger graphs
            if n > 10 and ub - (n_components(xm) - 1) - (n_components(ym) - (ym != 0)) < floor:
                return
        if not joinable(xm, undecided) or not joinable(ym, undecided):
            return
        if depth == n:
            if ym:
                visit(xm, m - ex - ey)
            return
        v = order[depth]
        bit = 1 << v
        rec(depth + 1, xm | bit, ym, ex + (adj[v] & xm).bit_count(), ey)
        rec(depth + 1, xm, ym | bit, ex, ey + (adj[v] & ym).bit_count())

    rec(1, 1, 0, 0, 0)


def bond_upper_bound(g: Graph) -> int:
    _require_connected(g)
    return g.m - g.n + 2


class _Stop(Exception):
    pass


def _largest_bond_mask(g: Graph) -> tuple[int, int]:
    if g.n < 2:
        raise GraphError("a largest bond needs at least two vertices")
    _require_connected(g)
    best = [0, 0]
    ceiling = g.m - g.n + 2

    def visit(x: int, size: int) -> None:
        if size > best[0]:
            best[0], best[1] = size, x
            if size == ceiling:
                raise _Stop

    try:
        _search(g, visit, lambda: best[0] + 1)
    except _Stop:
        pass
    return best[1], best[0]


def largest_bond(g: Graph) -> Bond:
    """Exact maximum bond by branch and bound.

    Returns the first optimum met in the fixed search order, which makes the
    result deterministic.  The search stops early when it reaches the
    ``m - n + 2`` ceiling.
    """
    x, _ = _largest_bond_mask(g)
    return _bond_from_mask(g, x)


def largest_bond_size(g: Graph) -> int:
    return _largest_bond_mask(g)[1]


def all_largest_bond_masks(g: Graph) -> list[int]:
    """X-side masks (X holds vertex 0) of every bond of size c*(G), sorted."""
    if g.n < 2:
        raise GraphError("a largest bond needs at least two vertices")
    _require_connected(g)
    best = [0]
    found: list[int] = []

    def visit(x: int, size: int) -> None:
        if size > best[0]:
            best[0] = size
            found.clear()
        if size == best[0]:
            found.append(x)

    _search(g, visit, lambda: best[0])
    return sorted(found)


def all_largest_bonds(g: Graph) -> list[Bond]:
    return [_bond_from_mask(g, x) for x in all_largest_bond_masks(g)]


class Certificate(enum.Enum):
    CERTIFIED_OPTIMAL = "CERTIFIED-OPTIMAL"
    UNKNOWN = "UNKNOWN"


def certified_largest_bond(g: Graph, candidate: Bond) -> Certificate:
    """CERTIFIED_OPTIMAL when ``candidate`` meets the ``m - n + 2`` ceiling."""
    checked = validate_bond(g, candidate.x)
    if checked.size != candidate.size or checked.cut != candidate.cut:
        raise BondError("candidate's recorded cut does not match its partition")
    if checked.size == bond_upper_bound(g):
        return Certificate.CERTIFIED_OPTIMAL
    return Certificate.UNKNOWN


@dataclass
class CoSpectrum:
    sizes: list[int]
    witnesses: dict[int, Bond] = field(repr=False)

    def to_json(self) -> dict:
        return {
            "sizes": self.sizes,
            "witnesses": {str(s): b.to_json() for s, b in self.witnesses.items()},
        }


def connected_bipartitions(g: Graph) -> Iterable[tuple[int, int]]:
    """All (X mask, cut size) with vertex 0 in X and both sides connected."""
    _require_connected(g)
    if g.n < 2:
        return []
    out: list[tuple[int, int]] = []
    _search(g, lambda x, size: out.append((x, size)), None)
    return out


def co_spectrum(g: Graph) -> CoSpectrum:
    """Set of all bond sizes, with one witness (smallest X mask) per size."""
    if g.n > CO_SPECTRUM_MAX_N:
        raise InfeasibleError(f"co-spectrum enumeration is limited to n <= {CO_SPECTRUM_MAX_N}, got {g.n}")
    first: dict[int, int] = {}
    for x, size in connected_bipartitions(g):
        if size not in first or x < first[size]:
            first[size] = x
    return CoSpectrum(sorted(first), {s: _bond_from_mask(g, first[s]) for s in sorted(first)})


@dataclass(frozen=True)
class TwoTreeWitness:
    a: VertexSet
    b: VertexSet
    bond: Bond


def is_two_tree_partition(g: Graph, a: int) -> bool:
    b = g.all_vertices & ~a
    if not a or not b:
        return False
    return all(
        mask_connected(g, side) and g.induced_edge_count(side) == side.bit_count() - 1
        for side in (a, b)
    )


def is_dual_hamiltonian(g: Graph) -> TwoTreeWitness | None:
    """Two-tree witness when c*(G) = m - n + 2, else None.

    A bond of size m - n + 2 leaves exactly n - 2 edges inside two connected
    sides, so both sides are trees; that is re-checked before returning.
    """
    if g.n < 2:
        return None
    x, size = _largest_bond_mask(g)
    if size != bond_upper_bound(g):
        return None
    if not is_two_tree_partition(g, x):
        raise AssertionError("optimal bond of size m-n+2 does not split into two trees")
    bond = _bond_from_mask(g, x)
    return TwoTreeWitness(bond.x, bond.y, bond)


def petersen_bond_step1(n: int, k: int, t: int, labels: PetersenLabels | None = None,
                        g: Graph | None = None) -> Bond:
    """Bond with A = {x_1..x_t}; it has size t + 2."""
    check_petersen_params(n, k)
    if not 1 <= t <= n - k:
        raise GraphError(f"t must satisfy 1 <= t <= n-k = {n - k}, got {t}")
    if g is None or labels is None:
        g, labels = petersen(n, k)
    bond = validate_bond(g, [labels.x(i) for i in range(1, t + 1)])
    if bond.size != t + 2:
        raise AssertionError(f"step-1 bond has size {bond.size}, expected {t + 2}")
    return bond


def petersen_bond_step2(n: int, k: int, i: int, labels: PetersenLabels | None = None,
                        g: Graph | None = None) -> Bond:
    """Bond with A = {x_1..x_{n-k}} + {y_1..y_i}; it has size n - k + i + 2."""
    check_petersen_params(n, k)
    if not 1 <= i <= k:
        raise GraphError(f"i must satisfy 1 <= i <= k = {k}, got {i}")
    if g is None or labels is None:
        g, labels = petersen(n, k)
    a = [labels.x(j) for j in range(1, n - k + 1)] + [labels.y(j) for j in range(1, i + 1)]
    bond = validate_bond(g, a)
    if bond.size != n - k + i + 2:
        raise AssertionError(f"step-2 bond has size {bond.size}, expected {n - k + i + 2}")
    return bond


def petersen_bond_of_size(n: int, k: int, target: int) -> Bond:
    check_petersen_params(n, k)
    if not 3 <= target <= n + 2:
        raise GraphError(f"bond size must lie in 3..{n + 2}, got {target}")
    g, labels = petersen(n, k)
    if target <= n - k + 2:
        return petersen_bond_step1(n, k, target - 2, labels, g)
    return petersen_bond_step2(n, k, target - (n - k + 2), labels, g)

