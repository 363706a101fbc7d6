"""Immutable simple graphs on vertices 0..n-1 backed by neighbour bitsets."""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator

MAX_VERTICES = 62


class GraphError(ValueError):
    """Raised for malformed graphs or invalid arguments to graph operations."""


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class VertexSet:
    """A subset of ``0..n-1`` stored as an integer bitmask."""

    __slots__ = ("mask",)

    def __init__(self, members: Iterable[int] | int = 0):
        if isinstance(members, int):
            if members < 0:
                raise GraphError("vertex mask must be non-negative")
            self.mask = members
        else:
            mask = 0
            for v in members:
                if v < 0:
                    raise GraphError(f"negative vertex id {v}")
                mask |= 1 << v
            self.mask = mask

    def __iter__(self) -> Iterator[int]:
        return bits(self.mask)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, v: int) -> bool:
        return v >= 0 and bool(self.mask >> v & 1)

    def __bool__(self) -> bool:
        return self.mask != 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, VertexSet):
            return self.mask == other.mask
        if isinstance(other, (set, frozenset)):
            return set(self) == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.mask)

    def __or__(self, other: VertexSet) -> VertexSet:
        return VertexSet(self.mask | other.mask)

    def __and__(self, other: VertexSet) -> VertexSet:
        return VertexSet(self.mask & other.mask)

    def __sub__(self, other: VertexSet) -> VertexSet:
        return VertexSet(self.mask & ~other.mask)

    def __repr__(self) -> str:
        return f"VertexSet({sorted(self)})"

    def complement(self, n: int) -> VertexSet:
        return VertexSet(((1 << n) - 1) & ~self.mask)

    def issubset(self, other: VertexSet) -> bool:
        return self.mask & ~other.mask == 0

    def to_list(self) -> list[int]:
        return list(bits(self.mask))


Edge = tuple[int, int]
EdgeSet = frozenset  # frozenset[Edge] of canonical (u, v) pairs, u < v


class Graph:
    """Simple undirected graph.

    ``edges`` is the sorted tuple of canonical pairs ``(u, v)`` with ``u < v``
    and ``adj[v]`` is the neighbour bitmask of ``v``.  Each edge also has an
    index into ``edges`` so that edge subsets can be handled as bitmasks
    (see :meth:`edge_mask`).
    """

    __slots__ = ("n", "edges", "adj", "_index")

    def __init__(self, n: int, edges: tuple[Edge, ...], adj: tuple[int, ...]):
        # trusted constructor; use make_graph for validation
        self.n = n
        self.edges = edges
        self.adj = adj
        self._index: dict[Edge, int] | None = None

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def all_vertices(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and 0 <= v < self.n and bool(self.adj[u] >> v & 1)

    @property
    def edge_index(self) -> dict[Edge, int]:
        if self._index is None:
            self._index = {e: i for i, e in enumerate(self.edges)}
        return self._index

    def edge_mask(self, pairs: Iterable[Edge]) -> int:
        index = self.edge_index
        mask = 0
        for u, v in pairs:
            key = (u, v) if u < v else (v, u)
            try:
                mask |= 1 << index[key]
            except KeyError:
                raise GraphError(f"{key} is not an edge of the graph") from None
        return mask

    def edges_of_mask(self, mask: int) -> list[Edge]:
        return [self.edges[i] for i in bits(mask)]

    def induced_edge_count(self, mask: int) -> int:
        return sum((self.adj[v] & mask).bit_count() for v in bits(mask)) // 2

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def make_graph(n: int, edge_list: Iterable[Edge]) -> Graph:
    """Build a canonical :class:`Graph`, collapsing duplicate and reversed pairs."""
    if not isinstance(n, int) or n < 1:
        raise GraphError(f"vertex count must be a positive integer, got {n!r}")
    if n > MAX_VERTICES:
        raise GraphError(f"at most {MAX_VERTICES} vertices are supported, got {n}")
    adj = [0] * n
    pairs = set()
    for u, v in edge_list:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has a vertex outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        if u > v:
            u, v = v, u
        pairs.add((u, v))
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(sorted(pairs)), tuple(adj))


def graph_from_adjacency(n: int, adj: Iterable[int]) -> Graph:
    adj = tuple(adj)
    edges = tuple((u, v) for u in range(n) for v in bits(adj[u] >> (u + 1) << (u + 1)))
    return Graph(n, edges, adj)


def reachable(g: Graph, start: int, within: int) -> int:
    """Bitmask of vertices reachable from ``start`` inside the vertex mask ``within``."""
    adj = g.adj
    seen = frontier = 1 << start
    while frontier:
        nxt = 0
        while frontier:
            low = frontier & -frontier
            nxt |= adj[low.bit_length() - 1]
            frontier ^= low
        frontier = nxt & within & ~seen
        seen |= frontier
    return seen


def mask_connected(g: Graph, mask: int) -> bool:
    """True iff ``G[mask]`` is connected; ``mask`` must be nonzero."""
    low = mask & -mask
    return reachable(g, low.bit_length() - 1, mask) == mask


def components(g: Graph, mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        comp = reachable(g, low.bit_length() - 1, mask)
        out.append(comp)
        mask &= ~comp
    return out


def _as_mask(g: Graph, s: VertexSet | Iterable[int] | int) -> int:
    if isinstance(s, VertexSet):
        mask = s.mask
    elif isinstance(s, int):
        mask = s
    else:
        mask = VertexSet(s).mask
    if mask >> g.n:
        raise GraphError(f"vertex set {VertexSet(mask)!r} exceeds 0..{g.n - 1}")
    return mask


def is_connected(g: Graph) -> bool:
    return mask_connected(g, g.all_vertices)


def is_connected_induced(g: Graph, s: VertexSet | Iterable[int]) -> bool:
    """True iff the subgraph induced by ``s`` is connected (one vertex counts)."""
    mask = _as_mask(g, s)
    if not mask:
        raise GraphError("induced connectivity of the empty set is undefined")
    return mask_connected(g, mask)


def vertex_connectivity_at_least(g: Graph, k: int) -> bool:
    """Exhaustive check that ``g`` is k-connected, for k in 1..3.

    Requires at least k+1 vertices and that deleting any fewer than k vertices
    leaves the graph connected.
    """
    if k not in (1, 2, 3):
        raise GraphError(f"only k in 1..3 is supported, got {k}")
    n = g.n
    if n < k + 1:
        return False
    full = g.all_vertices
    if not mask_connected(g, full):
        return False
    if k >= 2:
        for v in range(n):
            if not mask_connected(g, full & ~(1 << v)):
                return False
    if k >= 3:
        for u, v in combinations(range(n), 2):
            if not mask_connected(g, full & ~(1 << u) & ~(1 << v)):
                return False
    return True


def min_degree(g: Graph) -> int:
    return min(a.bit_count() for a in g.adj)


def cut_mask(g: Graph, x: int) -> int:
    """Edge-index bitmask of edges with exactly one endpoint in vertex mask ``x``."""
    mask = 0
    for i, (u, v) in enumerate(g.edges):
        if (x >> u ^ x >> v) & 1:
            mask |= 1 << i
    return mask


def cut_edges(g: Graph, x: VertexSet | Iterable[int]) -> EdgeSet:
    mask = _as_mask(g, x)
    if not mask or mask == g.all_vertices:
        raise GraphError("cut side must be a nonempty proper subset of the vertices")
    return frozenset(g.edges_of_mask(cut_mask(g, mask)))


def cut_size(g: Graph, x: int) -> int:
    """Number of edges leaving vertex mask ``x`` (no validation)."""
    outside = ~x
    return sum((g.adj[v] & outside).bit_count() for v in bits(x))
