"""Uniform solver output. Validity is always recomputed from the witness."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any, Optional, Sequence

from edgepack.graph import Edge, EdgeSelection, Graph, is_partial_c_bounded, tight_bound_applicable, pcb_upper_bounds

# Fixed JSON key order.
FIELDS = (
    "problem",
    "method",
    "c",
    "n",
    "m",
    "value",
    "witness",
    "seed",
    "elapsed_ms",
    "bounds",
    "validity",
)


@dataclass(frozen=True)
class SolveReport:
    problem: str
    method: str
    c: Optional[int]
    n: int
    m: int
    value: int
    witness: tuple
    seed: Optional[int]
    elapsed_ms: float
    bounds: Optional[dict]
    validity: str

    @property
    def ok(self) -> bool:
        return self.validity == "ok"

    def selection(self, g: Graph) -> EdgeSelection:
        return EdgeSelection(g, self.witness)

    def to_dict(self, timing: bool = True) -> dict[str, Any]:
        d = {}
        for k in FIELDS:
            v = getattr(self, k)
            if k == "witness":
                v = [list(e) if isinstance(e, tuple) else e for e in v]
            if k == "elapsed_ms" and not timing:
                continue
            d[k] = v
        return d

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.to_dict(timing), separators=(",", ":"))


def bounds_for(n: int, c: int) -> dict:
    if n < 1:
        return {"charging": 0, "paper": 0, "paper_bound_applicable": False}
    charging, tight = pcb_upper_bounds(n, c)
    return {"charging": charging, "paper": tight, "paper_bound_applicable": tight_bound_applicable(n, c)}


def pcb_report(
    g: Graph,
    c: int,
    method: str,
    chosen: Sequence[Edge],
    elapsed_ms: float = 0.0,
    seed: Optional[int] = None,
) -> SolveReport:
    sel = EdgeSelection(g, tuple(chosen))
    return SolveReport(
        problem="pcb",
        method=method,
        c=c,
        n=g.n,
        m=g.m,
        value=len(sel.chosen),
        witness=sel.chosen,
        seed=seed,
        elapsed_ms=round(elapsed_ms, 3),
        bounds=bounds_for(g.n, c),
        validity=str(is_partial_c_bounded(sel, c)),
    )
