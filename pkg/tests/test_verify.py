import json
import random
from fractions import Fraction

import pytest

from metriclines import (
    gen_complete,
    gen_cycle,
    gen_path,
    graph_metric,
    scaling_fit,
    scan_corpus,
    to_graph6,
    validate_metric,
    verify_bounds,
    verify_conjecture,
)
from metriclines import bounds
from metriclines.errors import UniversalLineInFamily
from metriclines.verify import LemmaTally, lemma_suite, random_metrics, read_corpus


def test_conjecture_examples():
    assert verify_conjecture(graph_metric(gen_cycle(5))) == {"universal": False, "line_count": 10, "holds": True}
    res = verify_conjecture(graph_metric(gen_path(4)))
    assert res["universal"] and res["holds"]
    res = verify_conjecture(validate_metric([[0, 2], [2, 0]]))
    assert res["universal"] and res["holds"]


def _entry(rep, name):
    return next(b for b in rep.bounds if b.name == name)


def test_bounds_examples():
    rep = verify_bounds(graph_metric(gen_cycle(5)), graph=True)
    e = _entry(rep, "bounded_distances")
    assert e.formula.value() == Fraction(1, 3) and e.satisfied and e.asserted
    assert not rep.asserted_failures
    assert {b.name for b in rep.bounds} == {"pseudometric", "metric", "bounded_distances",
                                           "graph_diameter", "graph"}
    rep = verify_bounds(graph_metric(gen_complete(4)))
    e = _entry(rep, "bounded_distances")
    assert e.formula.value() == Fraction(2, 5) and rep.line_count == 6 and e.satisfied
    # only the bounded-distances bound is a hard assertion
    assert [b.name for b in rep.bounds if b.asserted] == ["bounded_distances"]


def test_bounds_skip_universal_only_families():
    rep = verify_bounds(graph_metric(gen_path(5)), graph=True)
    assert {b.name for b in rep.bounds} == {"bounded_distances", "graph_diameter"}


def test_bounds_json_is_exact():
    rep = verify_bounds(graph_metric(gen_cycle(5)), "c5", graph=True)
    obj = json.loads(json.dumps(rep.to_json()))
    assert obj["id"] == "c5"
    for b in obj["bounds"]:
        assert isinstance(b["formula_value"]["num"], int) and isinstance(b["formula_value"]["den"], int)


def test_bound_formulas_cross_multiply():
    f = bounds.metric_bound(50)  # sqrt(25) = 5
    assert f.is_rational and f.value() == 5 and f.threshold() == 5
    assert f.satisfied_by(5) and not f.satisfied_by(4)
    f = bounds.metric_bound(8)  # 2
    assert f.value() == 2
    f = bounds.metric_bound(10)  # sqrt 5
    assert not f.is_rational and f.value() == Fraction(2236067977, 10**9)
    assert f.threshold() == 3
    f = bounds.pmb_bound(16)  # (128) ** (1/5), between 2 and 3
    assert f.threshold() == 3 and f.satisfied_by(3) and not f.satisfied_by(2)
    f = bounds.d_graph_bound(16, 1)  # 2**(-7/3) * 16**(4/3) = 2**3
    assert f.is_rational and f.value() == 8


def test_iroot_and_ceil_root_power():
    for x in range(0, 3000):
        for k in (1, 2, 3, 5, 7):
            r = bounds.iroot(x, k)
            assert r**k <= x < (r + 1) ** k
    assert bounds.iroot(10**60 + 1, 3) == 10**20
    for n in range(1, 100):
        t = bounds.ceil_root_power(n, 9, 10)
        assert t**10 >= n**9 > (t - 1) ** 10


def test_lemma_suite_small_graphs(small_graphs, small_metrics):
    tally = LemmaTally()
    rng = random.Random(61)
    for g, m in zip(small_graphs, small_metrics):
        lemma_suite(m, g, rng=rng, tally=tally)
    assert tally.total_failures == 0
    assert tally.checked["walk_intermediate"] > 0 and tally.checked["parallelogram_iff"] > 0


def test_lemma_tally_merge():
    a, b = LemmaTally(), LemmaTally()
    a.record("x", True)
    b.record("x", False, (1, 2))
    a.merge(b)
    assert a.checked == {"x": 2} and a.total_failures == 1


def test_random_metrics_deterministic():
    one = [m.dist.tolist() for m in random_metrics(20, seed=5)]
    two = [m.dist.tolist() for m in random_metrics(20, seed=5)]
    assert one == two
    assert all(2 <= len(d) <= 12 and max(map(max, d)) <= 6 for d in one)


def test_read_corpus_formats():
    assert read_corpus("Bw\n\nCF\n", "graph6") == ["Bw", "CF"]
    assert read_corpus("0 1\n1 2\n\n0 1\n", "edgelist") == ["0 1\n1 2", "0 1"]
    text = json.dumps([{"dist": [[0, 1], [1, 0]]}, {"dist": [[0]]}])
    assert len(read_corpus(text, "matrix-json")) == 2
    lines = '{"dist": [[0, 1], [1, 0]]}\n{"dist": [[0, 2], [2, 0]]}\n'
    assert len(read_corpus(lines, "matrix-json")) == 2


def test_scan_six_vertex_corpus(corpus):
    res = scan_corpus(corpus[6], "graph6", ("conjecture", "bounds", "witnesses"))
    agg = res.aggregate
    assert agg["instances"] == 112
    assert agg["conjecture_violations"] == agg["asserted_bound_violations"] == 0
    assert agg["witness_failures"] == agg["parse_errors"] == agg["library_errors"] == 0
    assert not res.failed
    assert agg["min_margin"]["bound"] == "bounded_distances"


def test_scan_parse_error_is_collected():
    res = scan_corpus(["Bw", "B!", to_graph6(gen_cycle(5))], "graph6")
    assert res.aggregate["parse_errors"] == 1 and res.aggregate["instances"] == 3
    assert res.reports[1]["error"]["kind"] == "parse"
    assert res.reports[2]["line_count"] == 10


def test_scan_disconnected_graph_is_rejected_on_input():
    res = scan_corpus(["B?"], "graph6")  # three isolated vertices
    assert res.aggregate["parse_errors"] == 1
    assert res.reports[0]["error"]["type"] == "Disconnected"


def test_scan_empty_corpus():
    res = scan_corpus([], "graph6")
    assert res.aggregate["instances"] == 0 and not res.failed


def test_scan_path_and_out_file(tmp_path, corpus):
    src = tmp_path / "c5.g6"
    src.write_text("\n".join(corpus[5]) + "\n")
    out = tmp_path / "out.json"
    res = scan_corpus(str(src), "graph6", out=str(out))
    assert json.loads(out.read_text())["aggregate"]["instances"] == 21
    assert res.dumps() == out.read_text()


def test_scan_rejects_unknown_check():
    with pytest.raises(ValueError):
        scan_corpus(["Bw"], "graph6", ("nope",))


def test_scaling_fit_small():
    fit = scaling_fit("kpartite", [27, 64, 125])
    assert fit.ns == [27, 64, 125] and fit.counts == [63, 216, 550]
    assert 1.1 <= fit.slope <= 1.6 and fit.consistent
    obj = fit.to_json()
    assert obj["consistent_with_4_3"] is True
    fit = scaling_fit("subdivided-path", [2, 3, 4])
    assert fit.ns == [17, 55, 129]
    assert fit.counts == sorted(set(fit.counts))


def test_scaling_fit_errors():
    with pytest.raises(ValueError):
        scaling_fit("kpartite", [27, 64])
    with pytest.raises(ValueError):
        scaling_fit("nope", [1, 2, 3])
    with pytest.raises(UniversalLineInFamily):
        scaling_fit("kpartite", [8, 12, 27])
