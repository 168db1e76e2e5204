"""Seeded instance generators. All randomness comes from ``random.Random(spec.seed)``."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Optional, Union

from edgepack.errors import InvalidInputError
from edgepack.graph import Graph
from edgepack.strings import BitString, StringSet

KINDS = (
    "random-graph",
    "random-tree",
    "bipartite-extremal",
    "random-2regular-strings",
    "path",
    "cycle",
    "star",
    "double-star",
    "complete",
)

REJECTION_TRIES = 20


@dataclass(frozen=True)
class GenSpec:
    """What to generate.

    ``n`` is the vertex count for every graph kind except ``double-star``,
    which is fixed by ``c``. ``random-graph`` uses ``m`` edges (default
    ``2n``) and ``min_degree``; the 2-regular string kind uses ``width``
    and ``count``.
    """

    kind: str
    n: int = 0
    m: Optional[int] = None
    min_degree: int = 0
    c: int = 1
    width: int = 0
    count: int = 0
    seed: int = 0


@dataclass
class Generated:
    instance: Union[Graph, StringSet]
    notes: list[str] = field(default_factory=list)


def generate(spec: GenSpec) -> Union[Graph, StringSet]:
    return generate_with_notes(spec).instance


def generate_with_notes(spec: GenSpec) -> Generated:
    if spec.kind not in KINDS:
        raise InvalidInputError(f"unknown kind {spec.kind!r}; expected one of {', '.join(KINDS)}")
    rng = random.Random(spec.seed)
    builder = _BUILDERS[spec.kind]
    return builder(spec, rng)


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise InvalidInputError(msg)


def _random_graph(spec: GenSpec, rng: random.Random) -> Generated:
    n, k = spec.n, spec.min_degree
    _need(n >= 1, "random-graph needs n >= 1")
    _need(0 <= k < n, f"min-degree {k} infeasible on {n} vertices")
    pairs = list(combinations(range(n), 2))
    m = 2 * n if spec.m is None else spec.m
    m = min(m, len(pairs))
    _need(m >= 0, "edge count must be >= 0")
    notes = []
    for attempt in range(REJECTION_TRIES):
        edges = set(rng.sample(pairs, m))
        deg = [0] * n
        for u, v in edges:
            deg[u] += 1
            deg[v] += 1
        if min(deg) >= k:
            if attempt:
                notes.append(f"rejected {attempt} samples below min-degree {k}")
            return Generated(Graph.from_edges(n, edges), notes)
    # augmentation: give each deficient vertex random new neighbours,
    # preferring other deficient vertices
    added = 0
    for v in range(n):
        while deg[v] < k:
            free = [w for w in range(n) if w != v and (min(v, w), max(v, w)) not in edges]
            short = [w for w in free if deg[w] < k]
            w = rng.choice(short or free)
            edges.add((min(v, w), max(v, w)))
            deg[v] += 1
            deg[w] += 1
            added += 1
    notes.append(
        f"rejection sampling failed {REJECTION_TRIES} times; augmented with {added} edges to reach min-degree {k}"
    )
    return Generated(Graph.from_edges(n, edges), notes)


def _random_tree(spec: GenSpec, rng: random.Random) -> Generated:
    n = spec.n
    _need(n >= 1, "random-tree needs n >= 1")
    if n == 1:
        return Generated(Graph(1, ()))
    if n == 2:
        return Generated(Graph(2, ((0, 1),)))
    code = [rng.randrange(n) for _ in range(n - 2)]
    return Generated(Graph.from_edges(n, prufer_decode(code, n)))


def prufer_decode(code: list[int], n: int) -> list[tuple[int, int]]:
    degree = [1] * n
    for x in code:
        degree[x] += 1
    edges = []
    for x in code:
        leaf = next(v for v in range(n) if degree[v] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = (w for w in range(n) if degree[w] == 1)
    edges.append((u, v))
    return edges


def _bipartite_extremal(spec: GenSpec, rng: random.Random) -> Generated:
    c, n = spec.c, spec.n
    _need(c >= 1 and n > c, f"bipartite-extremal needs 1 <= c < n, got c={c}, n={n}")
    return Generated(complete_bipartite(c, n - c))


def _random_2regular(spec: GenSpec, rng: random.Random) -> Generated:
    m, count = spec.width, spec.count
    _need(m >= 2, "2-regular strings need width >= 2")
    _need(0 <= count <= comb(m, 2), f"at most {comb(m, 2)} distinct 2-regular strings of width {m}")
    pairs = rng.sample(list(combinations(range(1, m + 1), 2)), count)
    return Generated(StringSet(m, tuple(BitString.from_ones(m, p) for p in pairs)))


def path(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    _need(n >= 3, "cycle needs n >= 3")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def star(leaves: int) -> Graph:
    """K_{1,leaves} with center 0."""
    return Graph.from_edges(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def double_star(c: int) -> Graph:
    """Centers 0 and 1 joined by an edge, each with ``c`` leaves of its own."""
    _need(c >= 1, "double-star needs c >= 1")
    edges = [(0, 1)]
    edges += [(0, 2 + i) for i in range(c)]
    edges += [(1, 2 + c + i) for i in range(c)]
    return Graph.from_edges(2 * c + 2, edges)


def complete(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def _fixed(fn, check):
    def build(spec: GenSpec, rng: random.Random) -> Generated:
        check(spec)
        return Generated(fn(spec))

    return build


_BUILDERS = {
    "random-graph": _random_graph,
    "random-tree": _random_tree,
    "bipartite-extremal": _bipartite_extremal,
    "random-2regular-strings": _random_2regular,
    "path": _fixed(lambda s: path(s.n), lambda s: _need(s.n >= 1, "path needs n >= 1")),
    "cycle": _fixed(lambda s: cycle(s.n), lambda s: None),
    "star": _fixed(lambda s: star(s.n - 1), lambda s: _need(s.n >= 2, "star needs n >= 2")),
    "double-star": _fixed(lambda s: double_star(s.c), lambda s: None),
    "complete": _fixed(lambda s: complete(s.n), lambda s: _need(s.n >= 1, "complete needs n >= 1")),
}


def random_isolate_free(n: int, rng: random.Random, p: float = 0.5, max_edges: Optional[int] = None) -> Graph:
    """G(n, p) conditioned on having no isolated vertex.

    With ``max_edges`` set, surplus edges are dropped at random, skipping any
    edge whose removal would isolate an endpoint.
    """
    _need(n >= 2, "isolate-free graphs need n >= 2")
    _need(max_edges is None or 2 * max_edges >= n, f"{n} vertices need more than {max_edges} edges")
    pairs = list(combinations(range(n), 2))
    while True:
        edges = [e for e in pairs if rng.random() < p]
        g = Graph.from_edges(n, edges)
        if g.isolated_vertices():
            continue
        if max_edges is None or len(edges) <= max_edges:
            return g
        deg = g.degrees()
        rng.shuffle(edges)
        kept = []
        for i, (u, v) in enumerate(edges):
            if len(kept) + len(edges) - i > max_edges and deg[u] > 1 and deg[v] > 1:
                deg[u] -= 1
                deg[v] -= 1
            else:
                kept.append((u, v))
        if len(kept) <= max_edges:
            return Graph.from_edges(n, kept)


def labeled_graphs(n: int):
    """Every labeled simple graph on ``n`` vertices, by edge bitmask."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph.from_edges(n, (pairs[i] for i in range(len(pairs)) if mask >> i & 1))
