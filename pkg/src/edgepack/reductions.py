"""Instance transformations between string sets and graphs.

A 2-regular string of width m with ones at bits i < j is the edge
(i-1, j-1) on m vertices, so a 2-regular set and a simple graph are the same
object read two ways.
"""

from __future__ import annotations

from typing import Optional

from edgepack.errors import InvalidInputError, NotRegularError
from edgepack.graph import Graph
from edgepack.strings import BitString, StringSet


def meis2_to_graph(w: StringSet) -> Graph:
    if not w.is_regular(2):
        bad = next(x for x in w if x.popcount() != 2)
        raise NotRegularError(f"member {bad} is not 2-regular")
    edges = []
    for x in w:
        i, j = sorted(x.ones())
        edges.append((i - 1, j - 1))
    return Graph.from_edges(w.width, edges)


def graph_to_meis2(g: Graph, width: Optional[int] = None) -> StringSet:
    m = g.n if width is None else width
    if m < g.n:
        raise InvalidInputError(f"width {m} smaller than vertex count {g.n}")
    if m < 1:
        raise InvalidInputError("width must be >= 1")
    return StringSet(m, tuple(BitString.from_ones(m, (u + 1, v + 1)) for u, v in g.edges))


def p1b_to_pcb_gadget(g: Graph, c: int) -> Graph:
    """Append ``c - 1`` new vertices, each joined to every original vertex."""
    if c < 2:
        raise InvalidInputError(f"gadget needs c >= 2, got {c}")
    extra = [(v, g.n + k) for k in range(c - 1) for v in range(g.n)]
    return Graph.from_edges(g.n + c - 1, list(g.edges) + extra)
