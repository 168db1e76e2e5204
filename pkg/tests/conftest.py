"""Independent oracles shared by the test modules.

These deliberately avoid the library's search code: plain subset
enumeration and the raw definitions only.
"""

from fractions import Fraction
from itertools import combinations, product

import pytest

from edgepack.graph import Graph


def naive_opt_pcb(g: Graph, c: int) -> int:
    edges = g.edges
    best = 0
    for mask in range(1 << len(edges)):
        chosen = [e for i, e in enumerate(edges) if mask >> i & 1]
        if len(chosen) <= best:
            continue
        deg = [0] * g.n
        for u, v in chosen:
            deg[u] += 1
            deg[v] += 1
        if all(deg[u] <= c or deg[v] <= c for u, v in chosen):
            best = len(chosen)
    return best


def naive_gamma(g: Graph) -> int:
    for k in range(g.n + 1):
        for d in combinations(range(g.n), k):
            ds = set(d)
            if all(v in ds or ds & set(g.neighbors(v)) for v in range(g.n)):
                return k
    return g.n


def enumerate_bipartition_expectation(g: Graph) -> Fraction:
    """Exact E[kept edges] of the random L/R split, over all 2^n side vectors."""
    total = Fraction(0)
    for sides in product("LR", repeat=g.n):
        for u in range(g.n):
            if sides[u] == "L":
                total += min(2, sum(1 for w in g.neighbors(u) if sides[w] == "R"))
    return total / 2**g.n


@pytest.fixture
def k4() -> Graph:
    return Graph.from_edges(4, combinations(range(4), 2))


@pytest.fixture
def c4() -> Graph:
    return Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)])


# ------------------------------------------------------- acceptance summary

ACCEPTANCE: dict[int, tuple[str, str]] = {}


class _Criterion:
    def __init__(self, number: int, title: str):
        self.number, self.title, self.detail = number, title, ""

    def __enter__(self):
        ACCEPTANCE[self.number] = (f"criterion {self.number:2d} FAIL  {self.title}", "did not finish")
        return self

    def __exit__(self, exc_type, exc, tb):
        status = "PASS" if exc_type is None else "FAIL"
        detail = self.detail if exc_type is None else f"{exc_type.__name__}: {exc}"
        line = f"criterion {self.number:2d} {status}  {self.title}"
        ACCEPTANCE[self.number] = (line, detail)
        print(f"\n{line}" + (f"  [{detail}]" if detail else ""))
        return False


@pytest.fixture
def criterion():
    return _Criterion


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        line, detail = ACCEPTANCE[k]
        terminalreporter.write_line(line + (f"  [{detail}]" if detail else ""))
