"""Graph families: generalized Petersen graphs, the 2-connected counterexample
family, and exhaustive labeled-graph streams for small n."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .graph import (
    Graph,
    GraphError,
    bits,
    cut_size,
    is_connected,
    make_graph,
    mask_connected,
    min_degree,
    vertex_connectivity_at_least,
)

ENUMERATION_MAX_N = 7


@dataclass(frozen=True)
class PetersenLabels:
    """``outer[i - 1]`` is the vertex id of x_i and ``inner[i - 1]`` that of y_i."""

    n: int
    k: int
    outer: tuple[int, ...]
    inner: tuple[int, ...]

    def x(self, i: int) -> int:
        return self.outer[(i - 1) % self.n]

    def y(self, i: int) -> int:
        return self.inner[(i - 1) % self.n]

    def mapping(self) -> dict[str, int]:
        out = {f"x{i + 1}": v for i, v in enumerate(self.outer)}
        out.update({f"y{i + 1}": v for i, v in enumerate(self.inner)})
        return out


def check_petersen_params(n: int, k: int) -> None:
    if n < 3:
        raise GraphError(f"P(n,k) needs n >= 3, got n={n}")
    if not 1 <= k or not 2 * k < n:
        raise GraphError(f"P(n,k) needs 1 <= k < n/2, got n={n}, k={k}")
    if 2 * n > 62:
        raise GraphError(f"P({n},{k}) has {2 * n} vertices; at most 62 are supported")


def petersen(n: int, k: int) -> tuple[Graph, PetersenLabels]:
    """Generalized Petersen graph P(n, k) with x_i -> i-1 and y_i -> n+i-1."""
    check_petersen_params(n, k)
    outer = tuple(range(n))
    inner = tuple(range(n, 2 * n))
    edges = []
    for i in range(n):
        edges.append((outer[i], outer[(i + 1) % n]))
        edges.append((outer[i], inner[i]))
        edges.append((inner[i], inner[(i + k) % n]))
    g = make_graph(2 * n, edges)
    assert g.m == 3 * n and all(g.degree(v) == 3 for v in range(g.n))
    return g, PetersenLabels(n, k, outer, inner)


@dataclass(frozen=True)
class CounterexampleLabels:
    hubs: tuple[int, int, int]
    side_paths: tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]
    y_path: tuple[int, int, int, int]
    s: int

    @property
    def y_mask(self) -> int:
        return sum(1 << v for v in self.y_path)

    def mapping(self) -> dict[str, int]:
        out = {f"h{j}": v for j, v in enumerate(self.hubs)}
        out.update({f"y{j}": v for j, v in enumerate(self.y_path)})
        for j, path in enumerate(self.side_paths):
            for t, v in enumerate(path):
                out[f"s{j}_{t + 1}"] = v
        return out


# y-vertex -> hub indices it is joined to (3 + 2 + 2 + 3 = 10 cross edges)
_CROSS = ((0, 1, 2), (0, 2), (0, 2), (0, 1, 2))


def counterexample_2connected(s: int) -> tuple[Graph, CounterexampleLabels]:
    """Triangle with each side subdivided ``s`` times plus a 4-vertex path Y
    joined to the corners by ten edges.

    The subdivided triangle is the unique longest cycle and misses the
    Y-vs-rest bond.  The claimed structural properties are checked here.
    """
    if s < 5:
        raise GraphError(f"subdivision count must be >= 5, got {s}")
    if 3 * s + 7 > 62:
        raise GraphError(f"subdivision count {s} gives more than 62 vertices")
    hubs = (0, 1, 2)
    y_path = (3, 4, 5, 6)
    nxt = 7
    sides = []
    edges = []
    for j in range(3):
        path = tuple(range(nxt, nxt + s))
        nxt += s
        sides.append(path)
        chain = (hubs[j], *path, hubs[(j + 1) % 3])
        edges.extend(zip(chain, chain[1:]))
    edges.extend(zip(y_path, y_path[1:]))
    for y, targets in zip(y_path, _CROSS):
        edges.extend((hubs[h], y) for h in targets)
    g = make_graph(nxt, edges)
    labels = CounterexampleLabels(hubs, tuple(sides), y_path, s)

    if g.n != 3 * s + 7 or g.m != 3 * s + 16:
        raise AssertionError("counterexample has wrong vertex or edge count")
    if not vertex_connectivity_at_least(g, 2) or vertex_connectivity_at_least(g, 3):
        raise AssertionError("counterexample must be 2-connected but not 3-connected")
    ym = labels.y_mask
    if not (mask_connected(g, ym) and mask_connected(g, g.all_vertices & ~ym)):
        raise AssertionError("Y-vs-rest partition is not a bond")
    if cut_size(g, ym) != 10:
        raise AssertionError("Y-vs-rest bond must have size 10")
    return g, labels


class GraphFilter(enum.Flag):
    NONE = 0
    CONNECTED = enum.auto()
    BICONNECTED = enum.auto()
    TRICONNECTED = enum.auto()
    MIN_DEGREE_3 = enum.auto()


def _pair_bits(n: int) -> list[tuple[int, int]]:
    # edge-mask bit order: (0,1), (0,2), ..., (n-2, n-1)
    return list(combinations(range(n), 2))


def enumerate_graphs(n: int, filter: GraphFilter = GraphFilter.NONE) -> Iterator[Graph]:
    """Yield every labeled simple graph on ``n`` vertices passing ``filter``.

    All ``2**(n*(n-1)/2)`` edge masks are visited in increasing order; no
    isomorphism reduction is done.
    """
    if not 1 <= n <= ENUMERATION_MAX_N:
        raise GraphError(f"exhaustive enumeration supports 1 <= n <= {ENUMERATION_MAX_N}, got {n}")
    pairs = _pair_bits(n)
    incident = [0] * n
    for i, (u, v) in enumerate(pairs):
        incident[u] |= 1 << i
        incident[v] |= 1 << i
    need_deg = 0
    if filter & (GraphFilter.TRICONNECTED | GraphFilter.MIN_DEGREE_3):
        need_deg = 3
    elif filter & GraphFilter.BICONNECTED:
        need_deg = 2
    elif filter & GraphFilter.CONNECTED and n > 1:
        need_deg = 1
    if need_deg >= n:
        return

    for emask in range(1 << len(pairs)):
        if need_deg and any((emask & inc).bit_count() < need_deg for inc in incident):
            continue
        adj = [0] * n
        edges = []
        for i in bits(emask):
            u, v = pairs[i]
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            edges.append((u, v))
        g = Graph(n, tuple(sorted(edges)), tuple(adj))
        if filter & GraphFilter.TRICONNECTED:
            if not vertex_connectivity_at_least(g, 3):
                continue
        elif filter & GraphFilter.BICONNECTED:
            if not vertex_connectivity_at_least(g, 2):
                continue
        elif filter & GraphFilter.CONNECTED:
            if not is_connected(g):
                continue
        if filter & GraphFilter.MIN_DEGREE_3 and min_degree(g) < 3:
            continue
        yield g
