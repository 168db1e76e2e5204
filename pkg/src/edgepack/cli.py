"""Command-line interface.

Exit codes: 0 success, 1 usage, 2 parse error, 3 invalid input, 4 cap exceeded.
Reports go to stdout and diagnostics to stderr. ``--json`` prints one
object per line with a fixed key order (see ``report.FIELDS``).
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Optional, Sequence

from edgepack import approx, exact
from edgepack.audit import DEFAULT_CLAIMS, audit_claims
from edgepack.errors import CapExceededError, EdgePackError, FormatError, InvalidInputError
from edgepack.generators import KINDS, GenSpec, generate_with_notes
from edgepack.graph import EdgeSelection, Graph, format_graph, parse_graph
from edgepack.reductions import graph_to_meis2, meis2_to_graph, p1b_to_pcb_gadget
from edgepack.report import SolveReport, pcb_report
from edgepack.strings import (
    BitString,
    format_formula,
    format_strings,
    is_expressible_independent,
    find_formula,
    parse_strings,
)

METHODS = ("auto", "brute", "tree-dp", "approx-p1b", "approx-p2b-rand", "approx-p2b-det")


class UsageError(EdgePackError):
    exit_code = 1


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(f"{self.prog}: {message}")


def _read(path: str) -> str:
    try:
        if path == "-":
            return sys.stdin.read()
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc.strerror}") from None


def _seed(text: str) -> int:
    value = int(text)
    if not -(2**63) <= value < 2**64:
        raise argparse.ArgumentTypeError("seed must fit in 64 bits")
    return value


# ------------------------------------------------------------------ solving


def solve_forest(g: Graph, c: int) -> tuple:
    """Tree DP on every component of a forest; witness edges in original labels."""
    if not g.is_forest():
        raise InvalidInputError("tree-dp needs a forest input")
    chosen = []
    for comp in g.components():
        sub, old = g.induced(comp)
        _, edges = exact.tree_dp_edges(sub, c)
        chosen.extend((old[u], old[v]) for u, v in edges)
    return tuple(sorted(chosen))


def solve(g: Graph, c: int, method: str, seed: Optional[int] = None, cap: int = exact.DEFAULT_EDGE_CAP) -> SolveReport:
    if c < 1:
        raise InvalidInputError(f"c must be >= 1, got {c}")
    g.require_isolate_free()
    if method == "auto":
        if g.is_forest():
            method = "tree-dp"
        elif g.m <= cap:
            method = "brute"
        elif c == 1:
            method = "approx-p1b"
        elif c == 2:
            method = "approx-p2b-det"
        else:
            raise CapExceededError(f"{g.m} edges exceeds brute-force cap {cap} and no approximation exists for c={c}")
    t0 = time.perf_counter()
    if method == "brute":
        chosen = exact.max_pcb_edges(g, c, cap)
    elif method == "tree-dp":
        chosen = solve_forest(g, c)
    elif method == "approx-p1b":
        _require_c(method, c, 1)
        chosen = approx.ds_to_star_forest(g, approx.greedy_min_dominating(g)).chosen
    elif method == "approx-p2b-rand":
        _require_c(method, c, 2)
        seed = 0 if seed is None else seed
        chosen = approx.approx_p2b_randomized(g, seed).selected.chosen
    elif method == "approx-p2b-det":
        _require_c(method, c, 2)
        chosen = approx.approx_p2b_derandomized(g).selected.chosen
    else:
        raise UsageError(f"unknown method {method!r}")
    elapsed = (time.perf_counter() - t0) * 1e3
    return pcb_report(g, c, method, chosen, elapsed, seed if method == "approx-p2b-rand" else None)


def _require_c(method: str, c: int, want: int) -> None:
    if c != want:
        raise UsageError(f"{method} only supports c={want}")


def _emit(report: SolveReport, args) -> None:
    if args.json:
        print(report.to_json(timing=not args.no_timing))
        return
    print(f"problem: {report.problem}  method: {report.method}  c: {report.c}")
    print(f"n: {report.n}  m: {report.m}  value: {report.value}")
    if report.bounds:
        b = report.bounds
        tail = "" if b["paper_bound_applicable"] else " (n < 2c+1: not applicable)"
        print(f"bounds: charging {b['charging']}  c(n-c) {b['paper']}{tail}")
    if report.seed is not None:
        print(f"seed: {report.seed}")
    print(f"validity: {report.validity}")
    if not args.no_timing:
        print(f"elapsed_ms: {report.elapsed_ms}")
    for w in report.witness:
        print(f"e {w[0]} {w[1]}" if isinstance(w, tuple) else w)


def cmd_solve(args) -> int:
    g = parse_graph(_read(args.input))
    _emit(solve(g, args.c, args.method, args.seed, args.cap), args)
    return 0


def cmd_check(args) -> int:
    g = parse_graph(_read(args.input))
    sub = parse_graph(_read(args.subgraph))
    if sub.n > g.n:
        raise InvalidInputError(f"subgraph has {sub.n} vertices, graph has {g.n}")
    sel = EdgeSelection(g, sub.edges)
    report = pcb_report(g, args.c, "check", sel.chosen)
    _emit(report, args)
    return 0


# --------------------------------------------------------------------- MEIS


def _meis_report(method: str, w, witness, validity: str, elapsed_ms: float = 0.0) -> SolveReport:
    return SolveReport(
        problem="meis",
        method=method,
        c=None,
        n=w.width,
        m=len(w),
        value=len(witness),
        witness=tuple(str(s) for s in witness),
        seed=None,
        elapsed_ms=round(elapsed_ms, 3),
        bounds=None,
        validity=validity,
    )


def _ei_validity(w) -> str:
    verdict = is_expressible_independent(w)
    if verdict.ok:
        return "ok"
    return f"expressible({verdict.member} = {format_formula(verdict.formula)})"


def cmd_meis(args) -> int:
    if args.action == "from-graph":
        g = parse_graph(_read(args.input))
        sys.stdout.write(format_strings(graph_to_meis2(g, args.width)))
        return 0
    w = parse_strings(_read(args.input))
    if args.action == "to-graph":
        sys.stdout.write(format_graph(meis2_to_graph(w)))
    elif args.action == "check":
        _emit(_meis_report("check", w, w.members, _ei_validity(w)), args)
    elif args.action == "solve":
        t0 = time.perf_counter()
        size, best = exact.max_meis_bruteforce(w, args.cap)
        _emit(_meis_report("brute", w, best.members, _ei_validity(best), (time.perf_counter() - t0) * 1e3), args)
    elif args.action == "express":
        if args.target is None:
            raise UsageError("meis express needs --target")
        target = BitString.parse(args.target)
        f = find_formula(w, target)
        if args.json:
            print(json.dumps({"target": str(target), "expressible": f is not None,
                              "formula": None if f is None else format_formula(f)}, separators=(",", ":")))
        else:
            print(format_formula(f) if f is not None else "not expressible")
    return 0


def cmd_reduce(args) -> int:
    g = parse_graph(_read(args.input))
    sys.stdout.write(format_graph(p1b_to_pcb_gadget(g, args.c)))
    return 0


def cmd_gen(args) -> int:
    spec = GenSpec(
        kind=args.kind,
        n=args.n,
        m=args.m,
        min_degree=args.min_degree,
        c=args.c,
        width=args.width,
        count=args.count,
        seed=args.seed,
    )
    out = generate_with_notes(spec)
    notes = [f"gen {spec.kind} seed={spec.seed}"] + out.notes
    for note in out.notes:
        print(note, file=sys.stderr)
    if isinstance(out.instance, Graph):
        sys.stdout.write(format_graph(out.instance, notes))
    else:
        sys.stdout.write(format_strings(out.instance, notes))
    return 0


def cmd_audit(args) -> int:
    report = audit_claims(args.max_n, args.claims or DEFAULT_CLAIMS, args.samples, args.seed, args.budget)
    sys.stdout.write(report.to_text())
    if args.json:
        print(report.to_json())
    if report.partial:
        print("audit budget exceeded; census above covers the partial run", file=sys.stderr)
        return CapExceededError.exit_code
    return 0


BENCH_CASES = (
    ("random-tree", dict(n=200), 2, ("tree-dp",)),
    ("random-tree", dict(n=2000), 3, ("tree-dp",)),
    ("random-graph", dict(n=8, m=16, min_degree=3), 2, ("brute", "approx-p2b-rand", "approx-p2b-det")),
    ("random-graph", dict(n=10, m=20, min_degree=1), 1, ("brute", "approx-p1b")),
    ("random-graph", dict(n=200, m=600, min_degree=3), 2, ("approx-p2b-rand", "approx-p2b-det")),
    ("random-graph", dict(n=1000, m=3000, min_degree=1), 1, ("approx-p1b",)),
)


def cmd_bench(args) -> int:
    rows = []
    for kind, params, c, methods in BENCH_CASES:
        g = generate_with_notes(GenSpec(kind=kind, seed=args.seed, **params)).instance
        for method in methods:
            r = solve(g, c, method, args.seed)
            rows.append((f"{kind}({','.join(f'{k}={v}' for k, v in params.items())})", r))
            if r.validity != "ok":
                print(f"invalid witness from {method}: {r.validity}", file=sys.stderr)
                return 3
    if args.json:
        for _, r in rows:
            d = r.to_dict(timing=not args.no_timing)
            d.pop("witness")
            print(json.dumps(d, separators=(",", ":")))
        return 0
    header = f"{'instance':<42} {'n':>5} {'m':>5} {'c':>2} {'method':<16} {'value':>6} {'c*n':>6} {'ms':>9}"
    print(header)
    print("-" * len(header))
    for name, r in rows:
        ms = "-" if args.no_timing else f"{r.elapsed_ms:.2f}"
        print(f"{name:<42} {r.n:>5} {r.m:>5} {r.c:>2} {r.method:<16} {r.value:>6} {r.bounds['charging']:>6} {ms:>9}")
    return 0


# ------------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="edgepack", description="Partial degree bounded edge packing toolkit")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def output_flags(sp):
        sp.add_argument("--json", action="store_true", help="one JSON object per line")
        sp.add_argument("--no-timing", action="store_true", help="omit elapsed time (for golden comparisons)")

    s = sub.add_parser("solve", help="maximum partial-c-bounded subgraph")
    s.add_argument("--input", required=True)
    s.add_argument("--c", type=int, required=True)
    s.add_argument("--method", choices=METHODS, default="auto")
    s.add_argument("--seed", type=_seed, default=None)
    s.add_argument("--cap", type=int, default=exact.DEFAULT_EDGE_CAP, help="brute-force edge cap")
    output_flags(s)
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("check", help="validate a claimed subgraph")
    s.add_argument("--input", required=True)
    s.add_argument("--c", type=int, required=True)
    s.add_argument("--subgraph", required=True)
    output_flags(s)
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("meis", help="expressible-independent string sets")
    s.add_argument("action", choices=("check", "solve", "to-graph", "from-graph", "express"))
    s.add_argument("--input", required=True)
    s.add_argument("--width", type=int, default=None, help="string width for from-graph")
    s.add_argument("--target", default=None, help="target string for express")
    s.add_argument("--cap", type=int, default=exact.DEFAULT_MEIS_CAP)
    output_flags(s)
    s.set_defaults(func=cmd_meis)

    s = sub.add_parser("reduce", help="instance transformations")
    s.add_argument("reduction", choices=("p1b-to-pcb",))
    s.add_argument("--input", required=True)
    s.add_argument("--c", type=int, required=True)
    s.set_defaults(func=cmd_reduce)

    s = sub.add_parser("gen", help="generate an instance")
    s.add_argument("kind", choices=KINDS)
    s.add_argument("--n", type=int, default=0)
    s.add_argument("--m", type=int, default=None)
    s.add_argument("--min-degree", type=int, default=0)
    s.add_argument("--c", type=int, default=1)
    s.add_argument("--width", type=int, default=0)
    s.add_argument("--count", type=int, default=0)
    s.add_argument("--seed", type=_seed, default=0)
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("audit", help="check claimed relations on small instances")
    s.add_argument("--max-n", type=int, default=5)
    s.add_argument("--claims", nargs="*", default=None, choices=DEFAULT_CLAIMS)
    s.add_argument("--samples", type=int, default=30, help="random instances per n above the exhaustive range")
    s.add_argument("--seed", type=_seed, default=0)
    s.add_argument("--budget", type=float, default=None, help="seconds before stopping with a partial report")
    s.add_argument("--json", action="store_true", help="append the machine-readable block")
    s.set_defaults(func=cmd_audit)

    s = sub.add_parser("bench", help="generators x solvers timing table")
    s.add_argument("--seed", type=_seed, default=0)
    output_flags(s)
    s.set_defaults(func=cmd_bench)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except EdgePackError as exc:
        print(f"edgepack: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
