import json

import pytest

from edgepack.cli import main
from edgepack.generators import complete, complete_bipartite, cycle, path
from edgepack.graph import format_graph, parse_graph
from edgepack.report import FIELDS
from edgepack.strings import parse_strings


@pytest.fixture
def write(tmp_path):
    def _write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)

    return _write


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--json")
    assert code == 0, err
    return [json.loads(line) for line in out.splitlines()]


def test_solve_k24_brute(capsys, write):
    f = write("k24.g", format_graph(complete_bipartite(2, 4)))
    (rep,) = run_json(capsys, "solve", "--input", f, "--c", "2", "--method", "brute")
    assert list(rep) == list(FIELDS)
    assert rep["value"] == 8
    assert rep["bounds"] == {"charging": 12, "paper": 8, "paper_bound_applicable": True}
    assert rep["validity"] == "ok"


def test_solve_path_tree_dp(capsys, write):
    f = write("p5.g", format_graph(path(5)))
    (rep,) = run_json(capsys, "solve", "--input", f, "--c", "1", "--method", "tree-dp")
    assert rep["value"] == 3


def test_solve_forest_auto_sums_components(capsys, write):
    f = write("forest.g", "p 7 5\ne 0 1\ne 1 2\ne 3 4\ne 4 5\ne 5 6\n")
    (rep,) = run_json(capsys, "solve", "--input", f, "--c", "1")
    assert rep["method"] == "tree-dp"
    assert rep["value"] == 2 + 2
    assert rep["validity"] == "ok"


@pytest.mark.parametrize(
    "method, c", [("approx-p1b", 1), ("approx-p2b-rand", 2), ("approx-p2b-det", 2), ("brute", 3), ("auto", 2)]
)
def test_solve_methods_emit_valid_witnesses(capsys, write, method, c):
    f = write("k6.g", format_graph(complete(6)))
    (rep,) = run_json(capsys, "solve", "--input", f, "--c", str(c), "--method", method, "--seed", "9")
    assert rep["validity"] == "ok"
    assert rep["value"] == len(rep["witness"])
    assert rep["seed"] == (9 if method == "approx-p2b-rand" else None)


def test_solve_auto_falls_back_to_approximation(capsys, write):
    f = write("k8.g", format_graph(complete(8)))
    (rep,) = run_json(capsys, "solve", "--input", f, "--c", "2")
    assert rep["method"] == "approx-p2b-det"
    code, _, err = run(capsys, "solve", "--input", f, "--c", "3")
    assert code == 4 and "cap" in err


def test_solve_text_output(capsys, write):
    f = write("c5.g", format_graph(cycle(5)))
    code, out, _ = run(capsys, "solve", "--input", f, "--c", "2", "--no-timing")
    assert code == 0
    assert "value: 5" in out and "validity: ok" in out and "elapsed_ms" not in out


def test_check_reports_violation_with_exit_0(capsys, write):
    g = write("k4.g", format_graph(complete(4)))
    sub = write("sub.g", format_graph(complete(4)))
    (rep,) = run_json(capsys, "check", "--input", g, "--c", "2", "--subgraph", sub)
    assert rep["validity"] == "violation(0,1)"
    ok = write("ok.g", "p 4 2\ne 0 1\ne 2 3\n")
    (rep,) = run_json(capsys, "check", "--input", g, "--c", "2", "--subgraph", ok)
    assert rep["validity"] == "ok"


def test_check_rejects_foreign_edges(capsys, write):
    g = write("p3.g", format_graph(path(3)))
    sub = write("sub.g", "p 3 1\ne 0 2\n")
    code, _, _ = run(capsys, "check", "--input", g, "--c", "1", "--subgraph", sub)
    assert code == 3


def test_exit_codes(capsys, write):
    assert run(capsys, "solve", "--c", "1")[0] == 1
    assert run(capsys, "frobnicate")[0] == 1
    bad = write("bad.g", "p 3 1\ne 0 9\n")
    assert run(capsys, "solve", "--input", bad, "--c", "1")[0] == 2
    assert run(capsys, "solve", "--input", "/nonexistent/x.g", "--c", "1")[0] == 2
    iso = write("iso.g", "p 3 1\ne 0 1\n")
    code, out, err = run(capsys, "solve", "--input", iso, "--c", "1")
    assert code == 3 and out == "" and "isolated" in err
    k4 = write("k4.g", format_graph(complete(4)))
    assert run(capsys, "solve", "--input", k4, "--c", "1", "--method", "tree-dp")[0] == 3
    assert run(capsys, "solve", "--input", k4, "--c", "1", "--method", "approx-p2b-det")[0] == 1
    k8 = write("k8.g", format_graph(complete(8)))
    assert run(capsys, "solve", "--input", k8, "--c", "2", "--method", "brute")[0] == 4
    mixed = write("mixed.s", "10\n101\n")
    assert run(capsys, "meis", "check", "--input", mixed)[0] == 3


def test_meis_subcommands(capsys, write):
    s = write("w.s", "10\n01\n11\n")
    (rep,) = run_json(capsys, "meis", "check", "--input", s)
    assert rep["problem"] == "meis"
    assert rep["validity"] == "expressible(11 = (or s0 s1))"
    (rep,) = run_json(capsys, "meis", "solve", "--input", s)
    assert rep["value"] == 2 and rep["witness"] == ["10", "01"] and rep["validity"] == "ok"
    code, out, _ = run(capsys, "meis", "express", "--input", s, "--target", "00")
    assert code == 0 and out.strip() == "(and s1 s0)"


def test_meis_graph_translation(capsys, write):
    s = write("tri.s", "110\n011\n101\n")
    code, out, _ = run(capsys, "meis", "to-graph", "--input", s)
    assert code == 0 and parse_graph(out) == complete(3)
    g = write("p4.g", format_graph(path(4)))
    code, out, _ = run(capsys, "meis", "from-graph", "--input", g)
    assert [str(x) for x in parse_strings(out)] == ["1100", "0110", "0011"]


def test_reduce(capsys, write):
    g = write("c3.g", format_graph(cycle(3)))
    code, out, _ = run(capsys, "reduce", "p1b-to-pcb", "--input", g, "--c", "2")
    assert code == 0 and parse_graph(out) == complete(4)


def test_gen_prints_graph_format(capsys):
    code, out, _ = run(capsys, "gen", "bipartite-extremal", "--c", "2", "--n", "6")
    assert code == 0 and parse_graph(out) == complete_bipartite(2, 4)
    code, out, _ = run(capsys, "gen", "random-2regular-strings", "--width", "5", "--count", "4", "--seed", "3")
    assert code == 0 and len(parse_strings(out)) == 4
    code, _, _ = run(capsys, "gen", "cycle", "--n", "2")
    assert code == 3


def test_audit_command(capsys):
    code, out, _ = run(capsys, "audit", "--max-n", "4", "--claims", "upper-bound-unguarded", "--json")
    assert code == 0
    *text, block = out.strip().splitlines()
    assert "[upper-bound-unguarded]" in "\n".join(text)
    data = json.loads(block)
    assert data["claims"][0]["verdict"] == "counterexamples"


def test_audit_budget_exit_code(capsys):
    code, _, err = run(capsys, "audit", "--max-n", "5", "--claims", "gadget", "--budget", "0")
    assert code == 4 and "budget" in err


def test_bench_runs(capsys):
    code, out, _ = run(capsys, "bench", "--json", "--no-timing")
    assert code == 0
    rows = [json.loads(line) for line in out.splitlines()]
    assert rows and all(r["validity"] == "ok" for r in rows)
