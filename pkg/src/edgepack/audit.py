"""Claim auditor: each claimed relation is checked as an input/output relation
between brute-force optima, over exhaustively enumerated small graphs plus a
seeded random sample, and every failure is stored as a replayable instance.

Claims
------
duality
    max star-forest size + domination number == n.
gadget
    optimum on the universal-vertex gadget == P1B optimum + (c-1) * n.
upper-bound
    P_cB optimum <= c * (n - c) for n >= 2c + 1.
upper-bound-unguarded
    the same bound with the n >= 2c + 1 guard dropped.
meis-p2b
    MEIS optimum of the 2-regular string image == P2B optimum.
tree-recurrence
    the printed three-class tree recurrence, read literally, == tree optimum.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import asdict, dataclass, field
from itertools import product
from typing import Callable, Iterator, Optional

from edgepack.errors import CapExceededError, InvalidInputError
from edgepack.exact import DEFAULT_EDGE_CAP, _tree_order, domination_number, max_meis_bruteforce, opt_pcb
from edgepack.generators import complete, labeled_graphs, prufer_decode, random_isolate_free
from edgepack.graph import Graph
from edgepack.reductions import graph_to_meis2, p1b_to_pcb_gadget

EXHAUSTIVE_MAX_N = 5
MEIS_EDGE_CAP = 12
MAX_AUDIT_N = 7


@dataclass(frozen=True)
class Counterexample:
    claim: str
    c: int
    n: int
    edges: tuple
    observed: int
    predicted: int

    def graph(self) -> Graph:
        return Graph.from_edges(self.n, self.edges)

    def replay(self) -> tuple[int, int]:
        return CLAIMS[self.claim].evaluate(self.graph(), self.c)


@dataclass
class ClaimResult:
    claim: str
    description: str
    relation: str
    census: dict = field(default_factory=dict)
    counterexamples: list[Counterexample] = field(default_factory=list)

    @property
    def verdict(self) -> str:
        return "counterexamples" if self.counterexamples else "confirmed"


@dataclass
class AuditReport:
    max_n: int
    seed: int
    samples: int
    results: list[ClaimResult] = field(default_factory=list)
    partial: bool = False

    def result(self, claim: str) -> ClaimResult:
        return next(r for r in self.results if r.claim == claim)

    def to_dict(self) -> dict:
        return {
            "max_n": self.max_n,
            "seed": self.seed,
            "samples": self.samples,
            "partial": self.partial,
            "claims": [
                {
                    "claim": r.claim,
                    "description": r.description,
                    "relation": r.relation,
                    "verdict": r.verdict,
                    "census": r.census,
                    "counterexamples": [
                        {**asdict(cx), "edges": [list(e) for e in cx.edges]} for cx in r.counterexamples
                    ],
                }
                for r in self.results
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    def to_text(self, show: int = 5) -> str:
        lines = [f"audit max_n={self.max_n} seed={self.seed} samples={self.samples}"
                 + (" PARTIAL (budget exceeded)" if self.partial else "")]
        for r in self.results:
            lines.append("")
            lines.append(f"[{r.claim}] {r.description}")
            lines.append(f"  relation: observed {r.relation} predicted")
            lines.append(f"  instances: {r.census.get('instances', 0)}  census: {json.dumps(r.census, sort_keys=True)}")
            lines.append(f"  verdict: {r.verdict}" + (f" ({len(r.counterexamples)})" if r.counterexamples else ""))
            for cx in r.counterexamples[:show]:
                lines.append(
                    f"    c={cx.c} n={cx.n} edges={[list(e) for e in cx.edges]} "
                    f"observed={cx.observed} predicted={cx.predicted}"
                )
            if len(r.counterexamples) > show:
                lines.append(f"    ... {len(r.counterexamples) - show} more in the JSON block")
        return "\n".join(lines) + "\n"


# ------------------------------------------------------------------- claims


def _duality(g: Graph, c: int) -> tuple[int, int]:
    return opt_pcb(g, 1) + domination_number(g), g.n


def _gadget(g: Graph, c: int) -> tuple[int, int]:
    return opt_pcb(p1b_to_pcb_gadget(g, c), c), opt_pcb(g, 1) + (c - 1) * g.n


def _upper_bound(g: Graph, c: int) -> tuple[int, int]:
    return opt_pcb(g, c), c * (g.n - c)


def _meis_p2b(g: Graph, c: int) -> tuple[int, int]:
    size, _ = max_meis_bruteforce(graph_to_meis2(g))
    return size, opt_pcb(g, 2)


def _tree_recurrence(g: Graph, c: int) -> tuple[int, int]:
    return literal_tree_recurrence(g, c), opt_pcb(g, c)


@dataclass(frozen=True)
class Claim:
    id: str
    description: str
    relation: str  # "==" or "<="
    evaluate: Callable[[Graph, int], tuple[int, int]]

    def holds(self, observed: int, predicted: int) -> bool:
        return observed == predicted if self.relation == "==" else observed <= predicted


CLAIMS = {
    c.id: c
    for c in (
        Claim("duality", "opt_P1B(g) + gamma(g) = n", "==", _duality),
        Claim("gadget", "opt_PcB(gadget(g, c)) = opt_P1B(g) + (c-1)*n", "==", _gadget),
        Claim("upper-bound", "opt_PcB(g) <= c*(n-c) for n >= 2c+1", "<=", _upper_bound),
        Claim("upper-bound-unguarded", "opt_PcB(g) <= c*(n-c) for every n", "<=", _upper_bound),
        Claim("meis-p2b", "MEIS(strings(g)) = opt_P2B(g)", "==", _meis_p2b),
        Claim("tree-recurrence", "three-class tree recurrence (literal reading) = tree optimum", "==", _tree_recurrence),
    )
}
DEFAULT_CLAIMS = tuple(CLAIMS)


def literal_tree_recurrence(t: Graph, c: int, root: int = 0) -> int:
    """The three-class knapsack recurrence exactly as printed.

    ``f[q]`` is the best count in the subtree of u over its first i children
    when u has q chosen child edges. A child extends by an edge in its
    ``< c`` or ``> c`` class while ``q <= c``, and only in its ``< c`` class
    once ``q > c``. The ``= c`` class never extends. ``q`` counts child edges
    only, and legality is checked when a child is added rather than against
    u's final degree. Kept for auditing; ``exact.tree_dp_edges`` is the
    solver.
    """
    order, _, children = _tree_order(t, root)
    g1: list[Optional[int]] = [None] * t.n
    g2: list[Optional[int]] = [None] * t.n
    g3: list[Optional[int]] = [None] * t.n

    def mx(*xs):
        vals = [x for x in xs if x is not None]
        return max(vals) if vals else None

    for u in reversed(order):
        f: dict[int, Optional[int]] = {0: 0}
        for i, v in enumerate(children[u], 1):
            any_class = mx(g1[v], g2[v], g3[v])
            nf: dict[int, Optional[int]] = {}
            for q in range(i + 1):
                skip = f.get(q)
                best = None if skip is None else skip + any_class
                prev = f.get(q - 1) if q >= 1 else None
                ext = mx(g1[v], g3[v]) if q <= c else g1[v]
                if prev is not None and ext is not None:
                    best = mx(best, prev + 1 + ext)
                nf[q] = best
            f = nf
        g1[u] = mx(*(val for q, val in f.items() if q < c))
        g2[u] = f.get(c)
        g3[u] = mx(*(val for q, val in f.items() if q > c))
    return mx(g1[root], g2[root], g3[root])


# --------------------------------------------------------------- instances


def _graph_instances(max_n: int, rng: random.Random, samples: int, max_edges: int) -> Iterator[Graph]:
    for n in range(2, min(max_n, EXHAUSTIVE_MAX_N) + 1):
        for g in labeled_graphs(n):
            if not g.isolated_vertices() and g.m <= max_edges:
                yield g
    for n in range(EXHAUSTIVE_MAX_N + 1, max_n + 1):
        for _ in range(samples):
            yield random_isolate_free(n, rng, max_edges=max_edges)


def _tree_instances(max_n: int, rng: random.Random, samples: int) -> Iterator[Graph]:
    for n in range(2, min(max_n, EXHAUSTIVE_MAX_N) + 1):
        for code in product(range(n), repeat=n - 2):
            yield Graph.from_edges(n, prufer_decode(list(code), n))
    for n in range(EXHAUSTIVE_MAX_N + 1, 2 * max_n + 1):
        for _ in range(samples):
            yield Graph.from_edges(n, prufer_decode([rng.randrange(n) for _ in range(n - 2)], n))


def _plan(claim: str, max_n: int, rng: random.Random, samples: int):
    """Yield (graph, c) pairs for one claim."""
    if claim == "duality":
        for g in _graph_instances(max_n, rng, samples, DEFAULT_EDGE_CAP):
            yield g, 1
    elif claim == "gadget":
        for c in (2, 3):
            for g in _graph_instances(max_n, rng, samples, DEFAULT_EDGE_CAP - (c - 1) * max_n):
                if g.m + (c - 1) * g.n <= DEFAULT_EDGE_CAP:
                    yield g, c
    elif claim in ("upper-bound", "upper-bound-unguarded"):
        guarded = claim == "upper-bound"
        for c in (1, 2):
            lo = 2 * c + 1 if guarded else 2
            for n in range(lo, max_n + 1):
                yield complete(n), c
            for g in _graph_instances(max_n, rng, samples, DEFAULT_EDGE_CAP):
                if g.n >= lo:
                    yield g, c
    elif claim == "meis-p2b":
        for g in _graph_instances(max_n, rng, samples, MEIS_EDGE_CAP):
            yield g, 2
    elif claim == "tree-recurrence":
        for c in (1, 2, 3):
            for t in _tree_instances(max_n, rng, samples):
                yield t, c
    else:
        raise InvalidInputError(f"unknown claim {claim!r}")


def audit_claims(
    max_n: int = 5,
    claims=DEFAULT_CLAIMS,
    samples: int = 30,
    seed: int = 0,
    budget_s: Optional[float] = None,
) -> AuditReport:
    """Audit the selected claims. Stops early and marks the report partial
    if ``budget_s`` seconds elapse."""
    if not 2 <= max_n <= MAX_AUDIT_N:
        raise InvalidInputError(f"max_n must be in 2..{MAX_AUDIT_N}, got {max_n}")
    report = AuditReport(max_n=max_n, seed=seed, samples=samples)
    start = time.perf_counter()
    for claim_id in claims:
        if claim_id not in CLAIMS:
            raise InvalidInputError(f"unknown claim {claim_id!r}; expected one of {', '.join(CLAIMS)}")
        claim = CLAIMS[claim_id]
        rng = random.Random(f"{seed}:{claim_id}")
        result = ClaimResult(claim.id, claim.description, claim.relation)
        per_c: dict[str, int] = {}
        count = 0
        n_seen: list[int] = []
        for g, c in _plan(claim_id, max_n, rng, samples):
            if budget_s is not None and time.perf_counter() - start > budget_s:
                report.partial = True
                break
            try:
                observed, predicted = claim.evaluate(g, c)
            except CapExceededError:
                continue
            count += 1
            n_seen.append(g.n)
            per_c[str(c)] = per_c.get(str(c), 0) + 1
            if not claim.holds(observed, predicted):
                result.counterexamples.append(Counterexample(claim.id, c, g.n, g.edges, observed, predicted))
        result.census = {
            "instances": count,
            "per_c": per_c,
            "n_range": [min(n_seen), max(n_seen)] if n_seen else None,
            "exhaustive_up_to_n": min(max_n, EXHAUSTIVE_MAX_N),
            "samples_per_larger_n": samples,
            "seed": seed,
        }
        report.results.append(result)
        if report.partial:
            break
    return report
