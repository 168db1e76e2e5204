"""Simple undirected graphs, edge selections and the partial-c-bounded predicates.

Vertices are dense ids ``0..n-1`` and every edge is stored as ``(u, v)`` with
``u < v``. Everything iterates lowest-index-first, so all results are
deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from edgepack.errors import FormatError, InvalidInputError, IsolatedVertexError

Edge = tuple[int, int]


def normalize_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[Edge, ...]
    adjacency: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise InvalidInputError(f"vertex count must be >= 0, got {self.n}")
        seen = set()
        for u, v in self.edges:
            if u == v:
                raise InvalidInputError(f"self-loop at vertex {u}")
            if u > v:
                raise InvalidInputError(f"edge ({u},{v}) not stored as u<v")
            if not (0 <= u and v < self.n):
                raise InvalidInputError(f"edge ({u},{v}) out of range for n={self.n}")
            if (u, v) in seen:
                raise InvalidInputError(f"duplicate edge ({u},{v})")
            seen.add((u, v))
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        object.__setattr__(self, "edges", tuple(sorted(self.edges)))
        object.__setattr__(self, "adjacency", tuple(tuple(sorted(a)) for a in adj))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        """Build a graph from pairs in any orientation; duplicates are still rejected."""
        return cls(n, tuple(normalize_edge(int(u), int(v)) for u, v in edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def isolated_vertices(self) -> list[int]:
        return [v for v, a in enumerate(self.adjacency) if not a]

    def require_isolate_free(self) -> None:
        iso = self.isolated_vertices()
        if iso:
            raise IsolatedVertexError(f"graph has isolated vertices: {iso[:10]}")

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the image graph under ``v -> perm[v]``."""
        return Graph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges))

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            stack, comp = [s], []
            while stack:
                x = stack.pop()
                comp.append(x)
                for y in self.adjacency[x]:
                    if not seen[y]:
                        seen[y] = True
                        stack.append(y)
            comps.append(sorted(comp))
        return comps

    def induced(self, vertices: Sequence[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph relabeled to ``0..k-1``; also returns the new->old map."""
        old = sorted(vertices)
        index = {v: i for i, v in enumerate(old)}
        edges = [(index[u], index[v]) for u, v in self.edges if u in index and v in index]
        return Graph.from_edges(len(old), edges), old

    def is_forest(self) -> bool:
        return self.m == self.n - len(self.components())

    def is_tree(self) -> bool:
        return self.n >= 1 and self.m == self.n - 1 and len(self.components()) == 1


def drop_isolated(g: Graph) -> Graph:
    """Remove isolated vertices, relabeling the rest in order."""
    keep = [v for v in range(g.n) if g.adjacency[v]]
    return g.induced(keep)[0]


@dataclass(frozen=True)
class EdgeSelection:
    parent: Graph
    chosen: tuple[Edge, ...]
    degree: tuple[int, ...] = field(init=False, compare=False)

    def __post_init__(self) -> None:
        chosen = tuple(sorted(set(normalize_edge(u, v) for u, v in self.chosen)))
        parent_edges = set(self.parent.edges)
        deg = [0] * self.parent.n
        for e in chosen:
            if e not in parent_edges:
                raise InvalidInputError(f"edge {e} is not an edge of the parent graph")
            deg[e[0]] += 1
            deg[e[1]] += 1
        object.__setattr__(self, "chosen", chosen)
        object.__setattr__(self, "degree", tuple(deg))

    def __len__(self) -> int:
        return len(self.chosen)

    def as_graph(self) -> Graph:
        return Graph(self.parent.n, self.chosen)


@dataclass(frozen=True)
class Verdict:
    """``ok`` or the lexicographically smallest violating edge."""

    violation: Optional[Edge] = None

    @property
    def ok(self) -> bool:
        return self.violation is None

    def __bool__(self) -> bool:
        return self.ok

    def __str__(self) -> str:
        if self.ok:
            return "ok"
        u, v = self.violation
        return f"violation({u},{v})"


def is_partial_c_bounded(sel: EdgeSelection, c: int) -> Verdict:
    if c < 1:
        raise InvalidInputError(f"c must be >= 1, got {c}")
    deg = sel.degree
    for u, v in sel.chosen:
        if deg[u] > c and deg[v] > c:
            return Verdict((u, v))
    return Verdict()


def is_star_forest(sel: EdgeSelection) -> bool:
    """True iff every connected component of the chosen edges is a star.

    Checked structurally (acyclic, at most one vertex of degree >= 2 per
    component) rather than through the degree test, so the two can be
    compared against each other.
    """
    g = sel.as_graph()
    for comp in g.components():
        k = len(comp)
        edges = sum(g.degree(v) for v in comp) // 2
        if edges != k - 1:
            return False
        if sum(1 for v in comp if g.degree(v) >= 2) > 1:
            return False
    return True


def is_dominating_set(g: Graph, d: Iterable[int]) -> bool:
    members = set(d)
    return all(v in members or any(w in members for w in g.adjacency[v]) for v in range(g.n))


def pcb_upper_bounds(n: int, c: int) -> tuple[int, int]:
    """(charging bound ``c*n``, quoted bound ``c*(n-c)``).

    Only the first is unconditional; the second holds for ``n >= 2c+1``.
    """
    if n < 1:
        raise InvalidInputError(f"n must be >= 1, got {n}")
    if c < 1:
        raise InvalidInputError(f"c must be >= 1, got {c}")
    return c * n, c * (n - c)


def tight_bound_applicable(n: int, c: int) -> bool:
    return n >= 2 * c + 1


# ---------------------------------------------------------------- text format


def parse_graph(text: str) -> Graph:
    """Parse ``p <n> <m>`` followed by ``m`` lines ``e <u> <v>``."""
    n = m = None
    edges: list[Edge] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            if parts[0] == "p" and len(parts) == 3:
                if n is not None:
                    raise FormatError(f"line {lineno}: duplicate problem line")
                n, m = int(parts[1]), int(parts[2])
                if n < 0 or m < 0:
                    raise FormatError(f"line {lineno}: negative size")
            elif parts[0] == "e" and len(parts) == 3:
                if n is None:
                    raise FormatError(f"line {lineno}: edge before problem line")
                u, v = int(parts[1]), int(parts[2])
                if not (0 <= u < n and 0 <= v < n):
                    raise FormatError(f"line {lineno}: vertex out of range 0..{n - 1}")
                if u == v:
                    raise FormatError(f"line {lineno}: self-loop")
                edges.append(normalize_edge(u, v))
            else:
                raise FormatError(f"line {lineno}: unrecognized line {raw!r}")
        except ValueError as exc:
            if isinstance(exc, FormatError):
                raise
            raise FormatError(f"line {lineno}: bad integer in {raw!r}") from None
    if n is None:
        raise FormatError("missing problem line 'p <n> <m>'")
    if len(edges) != m:
        raise FormatError(f"problem line declares {m} edges, found {len(edges)}")
    if len(set(edges)) != len(edges):
        raise FormatError("duplicate edge")
    return Graph(n, tuple(edges))


def format_graph(g: Graph, comments: Sequence[str] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(f"p {g.n} {g.m}")
    lines.extend(f"e {u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def load_graph(path: str) -> Graph:
    with open(path) as fh:
        return parse_graph(fh.read())


def save_graph(g: Graph, path: str) -> None:
    with open(path, "w") as fh:
        fh.write(format_graph(g))
