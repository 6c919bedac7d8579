import json

import pytest

from hyperconv.errors import SizeTooLarge, UnknownLaw
from hyperconv.harness import (IN_SCOPE_STATEMENTS, REGISTRY, LawRecord, ScopeConfig,
                               count_preorders_bruteforce, count_topologies_bruteforce,
                               enumerate_spaces, get_law, law_ids, preorders, replay, run_laws)
from hyperconv.harness import laws as laws_module
from hyperconv.harness.explore import search_reflection
from hyperconv.space import sierpinski


def test_enumeration_counts():
    assert [sum(1 for _ in enumerate_spaces(n, t0_only=True)) for n in range(1, 5)] == [1, 3, 19, 219]
    assert [len(preorders(n)) for n in range(1, 5)] == [1, 4, 29, 355]


def test_enumeration_matches_bruteforce():
    for n in range(1, 5):
        assert len(preorders(n)) == count_preorders_bruteforce(n)
        assert sum(1 for _ in enumerate_spaces(n, True)) == count_preorders_bruteforce(n, True)
    for n in range(1, 4):
        assert len(preorders(n)) == count_topologies_bruteforce(n)


def test_enumerated_spaces_are_distinct():
    for n in range(1, 4):
        seen = {X.opens for X in enumerate_spaces(n)}
        assert len(seen) == len(preorders(n))


def test_enumeration_limits():
    with pytest.raises(SizeTooLarge):
        preorders(6)
    with pytest.raises(ValueError):
        preorders(0)


def test_registry_matches_statements():
    anchors = sorted(rec.anchor for rec in REGISTRY.values())
    assert anchors == sorted(IN_SCOPE_STATEMENTS)
    assert len(set(anchors)) == len(anchors)
    assert law_ids() == sorted(REGISTRY)


def test_unknown_law():
    with pytest.raises(UnknownLaw):
        get_law("deliberately-broken-oracle")
    with pytest.raises(UnknownLaw):
        run_laws(ScopeConfig(max_points=2), only=["deliberately-broken-oracle"])
    with pytest.raises(UnknownLaw):
        run_laws(ScopeConfig(max_points=2, exclude=(("nope", "why"),)), only=["mesh"])


def test_small_runs_pass():
    report = run_laws(ScopeConfig(max_points=3), only=["prop-refine", "mesh", "reduced-ideal"])
    assert report.ok
    assert all(o.status == "pass" and o.instances > 0 for o in report.laws)
    assert run_laws(ScopeConfig(depth=8), only=["thm-transfer-compact"]).ok


def test_report_is_deterministic():
    cfg = ScopeConfig(max_points=3, seed=7)
    only = ["prop-refine", "scaling", "cover-numbers"]
    a, b = run_laws(cfg, only), run_laws(cfg, only)
    assert a.to_json() == b.to_json()
    data = json.loads(a.to_json(timing=True))
    assert set(data) == {"report", "timing"} and data["report"] == a.body()


def test_skip_and_exclusion():
    report = run_laws(ScopeConfig(max_points=1), only=["discrete-example"])
    assert report.laws[0].status == "skipped" and not report.ok
    cfg = ScopeConfig(max_points=1, exclude=(("discrete-example", "needs two points"),))
    report = run_laws(cfg, only=["discrete-example"])
    assert report.laws[0].status == "excluded" and report.ok
    assert report.laws[0].reason == "needs two points"


def test_counterexamples_replay(monkeypatch):
    def instances(config):
        return [{"n": n} for n in range(5)]

    def check(inst):
        return inst["n"] % 2 == 0, {"n": inst["n"]}

    def explode(inst):
        raise RuntimeError("boom")

    monkeypatch.setitem(REGISTRY, "zz-even", LawRecord("zz-even", "even numbers", "general",
                                                     instances, check))
    monkeypatch.setitem(REGISTRY, "zz-boom", LawRecord("zz-boom", "always raises", "general",
                                                     instances, explode))
    report = run_laws(ScopeConfig(max_points=2), only=["zz-even", "zz-boom"])
    boom, even = report.laws
    assert not report.ok
    assert even.failed == 2 and even.passed == 3
    for ce in even.counterexamples:
        ok, _ = replay("zz-even", json.loads(json.dumps(ce["instance"])))
        assert not ok
    assert boom.errors == 5 and boom.status == "fail"
    assert "RuntimeError" in boom.counterexamples[0]["detail"]["error"]


def test_law_checks_replay_from_json():
    law = get_law("scaling")
    inst = next(iter(law.instances(ScopeConfig(depth=8))))
    assert replay("scaling", json.loads(json.dumps(inst)))[0]


def test_build_filter_kinds():
    from fractions import Fraction
    from hyperconv.space import discrete
    from hyperconv.transfer import RealModel, SymbolicFilter
    X = discrete(2)
    got = laws_module.build_filter(X, {"kind": "principal", "vector": ["3/2", "0"]}, 4)
    want = SymbolicFilter.principal_at(RealModel(X), [Fraction(3, 2), Fraction(0)], 4)
    assert got.equals(want)
    pinned = laws_module.build_filter(X, {"kind": "pinned", "lo": 2, "hi": 3}, 4)
    assert (Fraction(5, 2), Fraction(5, 2)) in pinned.deepest
    with pytest.raises(ValueError):
        laws_module.build_filter(X, {"kind": "mystery"}, 4)


def test_explore_on_sierpinski():
    res = search_reflection(sierpinski(), sierpinski(), seed=0)
    assert res["candidates"] > 0
    assert res["matches"] >= 1
