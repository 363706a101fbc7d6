"""graph6 (short form, n <= 62), whitespace edge lists and DOT output."""

from __future__ import annotations

from .bonds import Bond
from .cycles import Cycle
from .graph import MAX_VERTICES, Graph, GraphError, make_graph


class Graph6Error(GraphError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class EdgeListError(GraphError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


def _upper_pairs(n: int):
    # column-major upper triangle: (0,1), (0,2), (1,2), (0,3), ...
    for j in range(1, n):
        for i in range(j):
            yield i, j


def write_graph6(g: Graph) -> str:
    if g.n > MAX_VERTICES:
        raise GraphError(f"graph6 short form holds at most {MAX_VERTICES} vertices")
    out = [chr(g.n + 63)]
    group = width = 0
    for i, j in _upper_pairs(g.n):
        group = group << 1 | (g.adj[i] >> j & 1)
        width += 1
        if width == 6:
            out.append(chr(group + 63))
            group = width = 0
    if width:
        out.append(chr((group << (6 - width)) + 63))
    return "".join(out)


def parse_graph6(line: str) -> Graph:
    text = line.rstrip("\r\n")
    if text.startswith(">>graph6<<"):
        text = text[len(">>graph6<<"):]
    if not text:
        raise Graph6Error("empty graph6 string", 0)
    for pos, ch in enumerate(text):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"byte {ch!r} outside the printable range 63..126", pos)
    n = ord(text[0]) - 63
    if n == 63:
        raise Graph6Error("multi-byte graph6 sizes (n > 62) are not supported", 0)
    if n == 0:
        raise Graph6Error("graph6 string encodes an empty graph", 0)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(text) < 1 + nbytes:
        raise Graph6Error(f"truncated: {n} vertices need {nbytes} data bytes", len(text))
    if len(text) > 1 + nbytes:
        raise Graph6Error("trailing characters after graph6 data", 1 + nbytes)
    edges = []
    for idx, (i, j) in enumerate(_upper_pairs(n)):
        byte = ord(text[1 + idx // 6]) - 63
        if byte >> (5 - idx % 6) & 1:
            edges.append((i, j))
    if nbits % 6:
        last = ord(text[nbytes]) - 63
        if last & ((1 << (6 - nbits % 6)) - 1):
            raise Graph6Error("nonzero padding bits", nbytes)
    return make_graph(n, edges)


def write_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "n" or not parts[1].isdigit():
                raise EdgeListError(f"expected 'n <count>', got {line!r}", lineno)
            n = int(parts[1])
            if not 1 <= n <= MAX_VERTICES:
                raise EdgeListError(f"vertex count {n} outside 1..{MAX_VERTICES}", lineno)
            continue
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise EdgeListError(f"expected 'u v', got {line!r}", lineno)
        u, v = int(parts[0]), int(parts[1])
        for w in (u, v):
            if w >= n:
                raise EdgeListError(f"vertex {w} out of range 0..{n - 1}", lineno)
        if u == v:
            raise EdgeListError(f"self-loop at vertex {u}", lineno)
        edges.append((u, v))
    if n is None:
        raise EdgeListError("missing 'n <count>' header", 0)
    return make_graph(n, edges)


_SIDE_COLORS = ("lightblue", "lightsalmon")


def write_dot(
    g: Graph,
    cycle: Cycle | None = None,
    bond: Bond | None = None,
    labels: dict[int, str] | None = None,
    name: str = "G",
) -> str:
    """DOT text; cycle edges are drawn bold, bond cut edges dashed and the two
    bond sides filled with different colours."""
    cycle_edges = frozenset()
    if cycle is not None:
        cycle_edges = cycle.edge_set
        if not cycle_edges <= set(g.edges):
            raise GraphError("highlighted cycle uses edges absent from the graph")
    cut = frozenset()
    if bond is not None:
        cut = bond.cut
        if not cut <= set(g.edges):
            raise GraphError("highlighted bond uses edges absent from the graph")
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        attrs = []
        if labels and v in labels:
            attrs.append(f'label="{labels[v]}"')
        if bond is not None:
            color = _SIDE_COLORS[0] if v in bond.x else _SIDE_COLORS[1]
            attrs.append(f'style=filled fillcolor="{color}"')
        lines.append(f"  {v}" + (f" [{' '.join(attrs)}]" if attrs else "") + ";")
    for u, v in g.edges:
        styles = []
        if (u, v) in cycle_edges:
            styles.append("bold")
        if (u, v) in cut:
            styles.append("dashed")
        attr = f' [style="{",".join(styles)}"]' if styles else ""
        lines.append(f"  {u} -- {v}{attr};")
    lines.append("}")
    return "\n".join(lines) + "\n"
