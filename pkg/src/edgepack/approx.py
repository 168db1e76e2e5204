"""Approximation algorithms for c = 1 and c = 2.

c = 1: a greedy dominating set of at most n/2 vertices, turned into a star
forest with n - |D| edges (a 2-approximation, since any star forest has fewer
than n edges).

c = 2: a random L/R bipartition in which every L vertex keeps up to two
edges into R; expected size sum_v 1 - (2 + d_v) / 2^(d_v + 1), which is at
least 11n/16 when the minimum degree is 3. The derandomized version fixes
sides greedily by exact conditional expectation.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from edgepack.errors import InvalidInputError, NotDominatingError, NotPartialBoundedError
from edgepack.graph import Edge, EdgeSelection, Graph, is_dominating_set, is_partial_c_bounded, is_star_forest
from edgepack.report import SolveReport, pcb_report

L, R = "L", "R"
LEFT_CAP = 2


@dataclass(frozen=True)
class DominatingSet:
    parent: Graph
    members: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "members", tuple(sorted(set(self.members))))
        if not is_dominating_set(self.parent, self.members):
            raise NotDominatingError(f"{list(self.members)} does not dominate the graph")

    def __len__(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class Bipartition:
    parent: Graph
    side: tuple[str, ...]
    selected: EdgeSelection


def greedy_min_dominating(g: Graph) -> DominatingSet:
    g.require_isolate_free()
    in_d = [False] * g.n
    for u in range(g.n):
        if not any(in_d[v] for v in g.adjacency[u]):
            in_d[u] = True
    members = [v for v in range(g.n) if in_d[v]]
    # members is a maximal independent set, so its complement dominates too
    if 2 * len(members) > g.n:
        members = [v for v in range(g.n) if not in_d[v]]
    return DominatingSet(g, tuple(members))


def ds_to_star_forest(g: Graph, d: DominatingSet) -> EdgeSelection:
    """Attach every vertex outside ``d`` to its lowest-index dominator."""
    g.require_isolate_free()
    if not is_dominating_set(g, d.members):
        raise NotDominatingError("not a dominating set")
    members = set(d.members)
    chosen = []
    for u in range(g.n):
        if u in members:
            continue
        center = next(v for v in g.adjacency[u] if v in members)
        chosen.append((min(u, center), max(u, center)))
    return EdgeSelection(g, tuple(chosen))


def star_forest_to_ds(g: Graph, sel: EdgeSelection) -> DominatingSet:
    """Star centers plus untouched vertices; a one-edge star's center is its lower endpoint."""
    if not is_partial_c_bounded(sel, 1) or not is_star_forest(sel):
        raise NotPartialBoundedError("selection is not a star forest")
    deg = sel.degree
    members = {v for v in range(g.n) if deg[v] != 1}
    for u, v in sel.chosen:
        if deg[u] == 1 and deg[v] == 1:
            members.add(u)
    return DominatingSet(g, tuple(members))


def approx_p1b(g: Graph) -> SolveReport:
    t0 = time.perf_counter()
    d = greedy_min_dominating(g)
    sel = ds_to_star_forest(g, d)
    return pcb_report(g, 1, "approx-p1b", sel.chosen, (time.perf_counter() - t0) * 1e3)


# ----------------------------------------------------------------- c = 2


def expected_left_degree(d: int) -> Fraction:
    """Expected number of edges kept by a degree-``d`` vertex under a fair random split."""
    if d < 1:
        raise InvalidInputError(f"degree must be >= 1, got {d}")
    return 1 - Fraction(2 + d, 2 ** (d + 1))


def expected_selected(g: Graph) -> Fraction:
    return sum((expected_left_degree(d) for d in g.degrees()), Fraction(0))


def select_from_sides(g: Graph, side: Sequence[str]) -> EdgeSelection:
    """Scan edges lexicographically; each L endpoint keeps at most two edges into R."""
    kept = [0] * g.n
    chosen: list[Edge] = []
    for u, v in g.edges:
        for a, b in ((u, v), (v, u)):
            if side[a] == L and side[b] == R and kept[a] < LEFT_CAP:
                kept[a] += 1
                chosen.append((u, v))
    return EdgeSelection(g, tuple(chosen))


def _bipartition(g: Graph, side: Sequence[str]) -> Bipartition:
    side = tuple(side)
    return Bipartition(g, side, select_from_sides(g, side))


def approx_p2b_randomized(g: Graph, seed: int) -> Bipartition:
    """Fair coin per vertex from ``random.Random(seed)``, in vertex order (1 bit each)."""
    g.require_isolate_free()
    rng = random.Random(seed)
    return _bipartition(g, [L if rng.getrandbits(1) else R for _ in range(g.n)])


def _expected_capped(fixed_right: int, undecided: int) -> Fraction:
    """E[min(2, fixed_right + Bin(undecided, 1/2))]."""
    if fixed_right >= 2:
        return Fraction(2)
    if fixed_right == 1:
        return 2 - Fraction(1, 2**undecided)
    return 2 - Fraction(2 + undecided, 2**undecided)


def _term(v: int, side: list, g: Graph) -> Fraction:
    """Conditional expectation of vertex v's kept-edge count."""
    if side[v] == R:
        return Fraction(0)
    right = sum(1 for w in g.adjacency[v] if side[w] == R)
    undecided = sum(1 for w in g.adjacency[v] if side[w] is None)
    e = _expected_capped(right, undecided)
    return e if side[v] == L else e / 2


def approx_p2b_derandomized(g: Graph) -> Bipartition:
    """Method of conditional expectations over vertices 0..n-1; ties go to L.

    Only the terms of v and its neighbours change when v is fixed, so each
    step re-evaluates just those, O(|V|*|E|) rational operations overall.
    """
    g.require_isolate_free()
    side: list = [None] * g.n
    for v in range(g.n):
        touched = (v,) + g.adjacency[v]
        scores = {}
        for s in (L, R):
            side[v] = s
            scores[s] = sum((_term(x, side, g) for x in touched), Fraction(0))
        side[v] = L if scores[L] >= scores[R] else R
    return _bipartition(g, side)


def conditional_expectation_trace(g: Graph) -> list[Fraction]:
    """Total conditional expectation after each step of the derandomization.

    Entry 0 is the unconditional expectation and the last entry equals the
    final selected size; the sequence never decreases.
    """
    bp = approx_p2b_derandomized(g)
    side: list = [None] * g.n
    trace = [sum((_term(x, side, g) for x in range(g.n)), Fraction(0))]
    for v in range(g.n):
        side[v] = bp.side[v]
        trace.append(sum((_term(x, side, g) for x in range(g.n)), Fraction(0)))
    return trace


def p2b_report(g: Graph, bp: Bipartition, method: str, elapsed_ms: float, seed=None) -> SolveReport:
    return pcb_report(g, 2, method, bp.selected.chosen, elapsed_ms, seed)


def priority_edges(g: Graph) -> tuple[Edge, ...]:
    """Edges with an endpoint of degree <= 2 in ``g``; legal in any selection."""
    return tuple(e for e in g.edges if min(g.degree(e[0]), g.degree(e[1])) <= LEFT_CAP)


def force_priority_edges(g: Graph, m: EdgeSelection) -> EdgeSelection:
    """Swap priority edges into ``m`` without shrinking it or breaking P2B.

    For a missing priority edge (u, v) with u the low-degree endpoint: if v
    has a chosen non-priority edge, swap it out (v's degree is unchanged);
    otherwise every chosen edge at v is a priority edge and stays legal, so
    (u, v) is simply added.
    """
    if m.parent != g:
        raise InvalidInputError("selection belongs to a different graph")
    if not is_partial_c_bounded(m, 2):
        raise NotPartialBoundedError(f"input selection is not P2B: {is_partial_c_bounded(m, 2)}")
    prio = set(priority_edges(g))
    chosen = set(m.chosen)
    for e in sorted(prio - chosen):
        a, b = e
        v = b if g.degree(a) <= LEFT_CAP else a
        out = sorted(f for f in chosen if v in f and f not in prio)
        if out:
            chosen.discard(out[0])
        chosen.add(e)
    return EdgeSelection(g, tuple(chosen))
