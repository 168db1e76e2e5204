import json
import random
from itertools import combinations

import pytest
from conftest import naive_opt_pcb

from edgepack.audit import CLAIMS, Counterexample, audit_claims, literal_tree_recurrence
from edgepack.errors import InvalidInputError, NotRegularError
from edgepack.exact import max_meis_bruteforce, opt_pcb
from edgepack.generators import GenSpec, complete, cycle, generate, labeled_graphs, path
from edgepack.graph import Graph
from edgepack.reductions import graph_to_meis2, meis2_to_graph, p1b_to_pcb_gadget
from edgepack.strings import StringSet


def S(*items):
    return StringSet.parse_many(items)


def test_triangle_strings_to_graph():
    assert meis2_to_graph(S("110", "011", "101")) == complete(3)


def test_translation_round_trip_all_graphs_n_le_5():
    for n in range(1, 6):
        for g in labeled_graphs(n):
            if g.m == 0:
                continue
            assert meis2_to_graph(graph_to_meis2(g)) == g


def test_translation_round_trip_strings():
    rng = random.Random(3)
    for _ in range(50):
        w = generate(GenSpec("random-2regular-strings", width=6, count=rng.randint(1, 15), seed=rng.getrandbits(32)))
        back = graph_to_meis2(meis2_to_graph(w))
        assert set(back.members) == set(w.members)


def test_translation_rejects_non_regular():
    with pytest.raises(NotRegularError):
        meis2_to_graph(S("111", "011"))
    with pytest.raises(InvalidInputError):
        graph_to_meis2(path(4), width=3)


def test_meis_equals_p2b_on_path():
    w = S("1100", "0110", "0011")
    assert meis2_to_graph(w) == path(4)
    assert max_meis_bruteforce(w)[0] == opt_pcb(path(4), 2) == naive_opt_pcb(path(4), 2)


def test_gadget_examples():
    assert p1b_to_pcb_gadget(cycle(3), 2) == complete(4)
    g = p1b_to_pcb_gadget(path(3), 3)
    assert (g.n, g.m) == (5, 8)
    with pytest.raises(InvalidInputError):
        p1b_to_pcb_gadget(path(3), 1)


def test_gadget_arithmetic():
    rng = random.Random(4)
    for _ in range(50):
        n = rng.randint(1, 8)
        pairs = list(combinations(range(n), 2))
        g = Graph.from_edges(n, rng.sample(pairs, rng.randint(0, len(pairs))))
        for c in (2, 3, 4):
            h = p1b_to_pcb_gadget(g, c)
            assert h.n - g.n == c - 1
            assert h.m - g.m == (c - 1) * n


# -------------------------------------------------------------------- audit


@pytest.fixture(scope="module")
def report():
    return audit_claims(max_n=5)


def test_duality_confirmed(report):
    r = report.result("duality")
    assert r.verdict == "confirmed"
    assert r.census["instances"] > 700


def test_upper_bound_guarded_confirmed(report):
    assert report.result("upper-bound").verdict == "confirmed"


def test_upper_bound_unguarded_reports_triangle(report):
    r = report.result("upper-bound-unguarded")
    tri = [cx for cx in r.counterexamples if cx.c == 2 and cx.n == 3 and len(cx.edges) == 3]
    assert tri and (tri[0].observed, tri[0].predicted) == (3, 2)


def test_gadget_reports_c3_to_k4(report):
    r = report.result("gadget")
    hits = [cx for cx in r.counterexamples if cx.c == 2 and cx.graph() == cycle(3)]
    assert len(hits) == 1
    assert (hits[0].observed, hits[0].predicted) == (4, 5)


def test_meis_p2b_confirmed(report):
    assert report.result("meis-p2b").verdict == "confirmed"


def test_tree_recurrence_observations_replay(report):
    r = report.result("tree-recurrence")
    assert r.census["instances"] > 0
    for cx in r.counterexamples:
        assert cx.predicted == naive_opt_pcb(cx.graph(), cx.c)


def test_every_counterexample_replays(report):
    for r in report.results:
        for cx in r.counterexamples:
            assert cx.replay() == (cx.observed, cx.predicted)


def test_report_serializations(report):
    data = json.loads(report.to_json())
    assert [c["claim"] for c in data["claims"]] == list(CLAIMS)
    first = data["claims"][1]["counterexamples"][0]
    cx = Counterexample(first["claim"], first["c"], first["n"], tuple(map(tuple, first["edges"])), first["observed"], first["predicted"])
    assert cx.replay() == (cx.observed, cx.predicted)
    text = report.to_text()
    for claim in CLAIMS:
        assert f"[{claim}]" in text


def test_audit_is_deterministic():
    a = audit_claims(max_n=6, claims=["duality", "tree-recurrence"], samples=5, seed=3)
    b = audit_claims(max_n=6, claims=["duality", "tree-recurrence"], samples=5, seed=3)
    assert a.to_json() == b.to_json()


def test_audit_budget_marks_partial():
    r = audit_claims(max_n=5, claims=["gadget"], budget_s=0.0)
    assert r.partial


def test_audit_rejects_bad_arguments():
    with pytest.raises(InvalidInputError):
        audit_claims(max_n=8)
    with pytest.raises(InvalidInputError):
        audit_claims(max_n=4, claims=["nope"])


def test_literal_recurrence_on_path_rooted_at_end():
    # 0-1-2 rooted at 0: the middle vertex has exactly c=1 child edge, so the
    # literal recurrence cannot extend it to the root
    assert literal_tree_recurrence(path(3), 1) == 1
    assert opt_pcb(path(3), 1) == 2
