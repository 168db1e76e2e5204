"""Exact solvers: exhaustive search (the oracle for everything else), the
polynomial tree DP, minimum dominating set, and exact MEIS."""

from __future__ import annotations

import time
from itertools import combinations
from typing import Optional

from edgepack.errors import CapExceededError, InvalidInputError, NotATreeError
from edgepack.graph import Edge, Graph
from edgepack.report import SolveReport, pcb_report
from edgepack.strings import StringSet, is_expressible

DEFAULT_EDGE_CAP = 22
DEFAULT_MEIS_CAP = 16


def _check_c(c: int) -> None:
    if c < 1:
        raise InvalidInputError(f"c must be >= 1, got {c}")


def max_pcb_edges(g: Graph, c: int, cap: int = DEFAULT_EDGE_CAP) -> tuple[Edge, ...]:
    """Maximum partial-c-bounded edge subset by branch and bound.

    Edges are decided in lexicographic order, include-branch first, and the
    incumbent is replaced only on strict improvement. Among all optima this
    returns the one whose sorted edge list is lexicographically smallest.

    Feasibility is hereditary (dropping edges only lowers degrees), so a
    branch is cut as soon as an inclusion creates an edge with both endpoints
    above ``c``. The bound: each future edge needs an endpoint whose final
    degree stays ``<= c``, so vertex ``v`` can absorb at most
    ``c - deg(v)`` of them.
    """
    _check_c(c)
    if g.m > cap:
        raise CapExceededError(f"{g.m} edges exceeds brute-force cap {cap}")
    edges = g.edges
    m = len(edges)
    deg = [0] * g.n
    rem = g.degrees()
    nbrs: list[list[int]] = [[] for _ in range(g.n)]
    current: list[Edge] = []
    best: list = [-1, ()]

    def can_add(u: int, v: int) -> bool:
        du, dv = deg[u] + 1, deg[v] + 1
        if du > c and dv > c:
            return False
        if du == c + 1 and any(deg[w] > c for w in nbrs[u]):
            return False
        if dv == c + 1 and any(deg[w] > c for w in nbrs[v]):
            return False
        return True

    def bound(k: int) -> int:
        absorb = 0
        for v in range(g.n):
            room = c - deg[v]
            if room > 0:
                absorb += room if room < rem[v] else rem[v]
        return min(m - k, absorb)

    def search(k: int) -> None:
        size = len(current)
        if size > best[0]:
            best[0], best[1] = size, tuple(current)
        if k == m or size + bound(k) <= best[0]:
            return
        u, v = edges[k]
        rem[u] -= 1
        rem[v] -= 1
        if can_add(u, v):
            deg[u] += 1
            deg[v] += 1
            nbrs[u].append(v)
            nbrs[v].append(u)
            current.append((u, v))
            search(k + 1)
            current.pop()
            nbrs[u].pop()
            nbrs[v].pop()
            deg[u] -= 1
            deg[v] -= 1
        search(k + 1)
        rem[u] += 1
        rem[v] += 1

    search(0)
    return best[1]


def max_pcb_bruteforce(g: Graph, c: int, cap: int = DEFAULT_EDGE_CAP) -> SolveReport:
    g.require_isolate_free()
    t0 = time.perf_counter()
    chosen = max_pcb_edges(g, c, cap)
    return pcb_report(g, c, "brute", chosen, (time.perf_counter() - t0) * 1e3)


def opt_pcb(g: Graph, c: int, cap: int = DEFAULT_EDGE_CAP) -> int:
    """Optimum value only; isolated vertices are tolerated (they carry no edges)."""
    return len(max_pcb_edges(g, c, cap))


def min_dominating_set(g: Graph) -> tuple[int, ...]:
    """Smallest dominating set, first in combinations order among minima."""
    full = (1 << g.n) - 1
    closed = [(1 << v) | sum(1 << w for w in g.adjacency[v]) for v in range(g.n)]
    for k in range(g.n + 1):
        for combo in combinations(range(g.n), k):
            covered = 0
            for v in combo:
                covered |= closed[v]
            if covered == full:
                return combo
    return tuple(range(g.n))


def domination_number(g: Graph) -> int:
    return len(min_dominating_set(g))


# ------------------------------------------------------------------ tree DP
#
# Per vertex v, relative to the edge to its parent:
#   A(v): best count in v's subtree, parent edge not chosen;
#   B(v): parent edge chosen and v's final degree <= c;
#   C(v): parent edge chosen and v's final degree > c (parent must stay <= c).
# Values exclude the parent edge itself. None marks an infeasible state.
#
# Children are folded left to right into two knapsack rows indexed by the
# number of chosen child edges: ``low`` (v ends at degree <= c, so a chosen
# child may take B or C) and ``high`` (v ends above c, so chosen children
# must take B). ``high`` carries a final bucket for counts >= c+1.


def _mx(*xs: Optional[int]) -> Optional[int]:
    vals = [x for x in xs if x is not None]
    return max(vals) if vals else None


def _add(x: Optional[int], y: int) -> Optional[int]:
    return None if x is None else x + y


def _tree_order(t: Graph, root: int) -> tuple[list[int], list[int], list[list[int]]]:
    parent = [-1] * t.n
    children: list[list[int]] = [[] for _ in range(t.n)]
    order = [root]
    seen = [False] * t.n
    seen[root] = True
    for v in order:
        for w in t.adjacency[v]:
            if not seen[w]:
                seen[w] = True
                parent[w] = v
                children[v].append(w)
                order.append(w)
    return order, parent, children


def tree_dp_edges(t: Graph, c: int, root: int = 0) -> tuple[int, tuple[Edge, ...]]:
    """Optimal value and witness on a tree, in O(n*c)."""
    _check_c(c)
    if not t.is_tree():
        raise NotATreeError("input is not a connected tree")
    order, parent, children = _tree_order(t, root)
    A: list[Optional[int]] = [None] * t.n
    B: list[Optional[int]] = [None] * t.n
    C: list[Optional[int]] = [None] * t.n
    low_rows: list[list[list[Optional[int]]]] = [[] for _ in range(t.n)]
    high_rows: list[list[list[Optional[int]]]] = [[] for _ in range(t.n)]

    for v in reversed(order):
        low: list[Optional[int]] = [0] + [None] * c
        high: list[Optional[int]] = [0] + [None] * (c + 1)
        low_rows[v].append(low)
        high_rows[v].append(high)
        for w in children[v]:
            take_any = _mx(B[w], C[w]) + 1
            take_low = B[w] + 1
            a = A[w]
            new_low = [_mx(_add(low[0], a))]
            for q in range(1, c + 1):
                new_low.append(_mx(_add(low[q], a), _add(low[q - 1], take_any)))
            new_high = [_mx(_add(high[0], a))]
            for q in range(1, c + 1):
                new_high.append(_mx(_add(high[q], a), _add(high[q - 1], take_low)))
            new_high.append(_mx(_add(high[c + 1], a), _add(high[c], take_low), _add(high[c + 1], take_low)))
            low, high = new_low, new_high
            low_rows[v].append(low)
            high_rows[v].append(high)
        A[v] = _mx(*low, high[c + 1])
        B[v] = _mx(*low[:c])
        C[v] = _mx(high[c], high[c + 1])

    chosen: list[Edge] = []
    state = {root: "A"}
    for v in order:
        low, high = low_rows[v][-1], high_rows[v][-1]
        s = state[v]
        if s == "A":
            target = A[v]
            cands = [("low", q) for q in range(c + 1)] + [("high", c + 1)]
        elif s == "B":
            target = B[v]
            cands = [("low", q) for q in range(c)]
        else:
            target = C[v]
            cands = [("high", c), ("high", c + 1)]
        table, q = next(
            (tb, q) for tb, q in cands if (low if tb == "low" else high)[q] == target
        )
        rows = low_rows[v] if table == "low" else high_rows[v]
        for i in range(len(children[v]), 0, -1):
            w = children[v][i - 1]
            val, prev = rows[i][q], rows[i - 1]
            if prev[q] is not None and prev[q] + A[w] == val:
                state[w] = "A"
                continue
            chosen.append((min(v, w), max(v, w)))
            if table == "low":
                state[w] = "B" if C[w] is None or B[w] >= C[w] else "C"
                q -= 1
            else:
                state[w] = "B"
                if q <= c or not (prev[c + 1] is not None and prev[c + 1] + B[w] + 1 == val):
                    q -= 1
    return A[root], tuple(sorted(chosen))


def max_pcb_tree(t: Graph, c: int) -> SolveReport:
    t.require_isolate_free()
    t0 = time.perf_counter()
    _, chosen = tree_dp_edges(t, c)
    return pcb_report(t, c, "tree-dp", chosen, (time.perf_counter() - t0) * 1e3)


# --------------------------------------------------------------------- MEIS


def _is_ei(w: StringSet, idx: list[int]) -> bool:
    for k in idx:
        rest = [j for j in idx if j != k]
        if rest and is_expressible(w.subset(rest), w.members[k]):
            return False
    return True


def max_meis_bruteforce(w: StringSet, cap: int = DEFAULT_MEIS_CAP) -> tuple[int, StringSet]:
    """Largest expressible-independent subset.

    Independence is downward closed, so a branch dies as soon as the partial
    subset stops being independent. Witness: lexicographically smallest
    index set among the optima.
    """
    if len(w) > cap:
        raise CapExceededError(f"{len(w)} strings exceeds MEIS cap {cap}")
    n = len(w)
    current: list[int] = []
    best: list = [-1, []]

    def search(k: int) -> None:
        if len(current) > best[0]:
            best[0], best[1] = len(current), list(current)
        if k == n or len(current) + (n - k) <= best[0]:
            return
        current.append(k)
        if _is_ei(w, current):
            search(k + 1)
        current.pop()
        search(k + 1)

    search(0)
    return best[0], w.subset(best[1])
