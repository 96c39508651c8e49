import json
from fractions import Fraction

import pytest

from arctanlog import verify
from arctanlog.closedform.catalog import pi
from arctanlog.constexpr import ConstExpr
from arctanlog.errors import UnknownSuite
from arctanlog.quadrature import IntegralSpec
from arctanlog.special import PSI
from arctanlog.verify import (FLAGGED, Const, Quad, Report, VerificationTask, compare, registry,
                              run_suite, select)


def test_lemma_group_all_pass(ctx):
    report = run_suite("lemma2.2/*", ctx)
    assert len(report.verdicts) == 14
    assert report.summary() == {"pass": 14, "fail": 0, "flagged": 0, "skipped": 0}


def test_bare_prefix_selects_group():
    assert select("lemma2.2") == select("lemma2.2/*")


def test_singular_display_is_flagged(ctx):
    v = run_suite("thm3.2/example/k1-tside", ctx).verdicts
    assert [x.status for x in v] == ["flagged"]
    assert "SingularTerm" in v[0].notes


def test_intro_is_skipped(ctx):
    report = run_suite("intro/*", ctx)
    assert {v.status for v in report.verdicts} == {"skipped"}
    assert report.ok


def test_divergent_series_flagged(ctx):
    v = run_suite("sec4/qz1/x=sqrt3/series", ctx).verdicts[0]
    assert v.status == "flagged"


def test_compare_tolerance_semantics(ctx):
    a = Const("pi", pi)
    b = Const("pi + 1e-40", pi + ConstExpr.rational(Fraction(1, 10 ** 40)))
    assert compare(a, b, "1e-30", ctx).status == "pass"
    assert compare(a, b, "1e-45", ctx).status == "fail"
    assert compare(a, b, "1e-45", ctx, expectation=FLAGGED).status == "flagged"
    v = compare(a, b, "1e-30", ctx, expectation=FLAGGED)
    assert v.status == "pass" and "did not reproduce" in v.notes


def test_compare_errors_become_verdicts(ctx):
    bad = Quad(IntegralSpec(2, 2, 0, 0))
    boom = Const("boom", ConstExpr.symbol(PSI(1, 0)))
    v = compare(bad, boom, "1e-30", ctx)
    assert v.status == "fail" and v.notes


def test_unknown_suite(ctx):
    with pytest.raises(UnknownSuite):
        run_suite("nope", ctx)


def test_task_validation():
    with pytest.raises(ValueError):
        VerificationTask("x", Const("0", ConstExpr()), None)
    with pytest.raises(ValueError):
        VerificationTask("x", Const("0", ConstExpr()), Const("0", ConstExpr()), tolerance="0")
    with pytest.raises(ValueError):
        VerificationTask("x", None, None, expectation="maybe")


def test_json_schema(ctx):
    report = run_suite("thm3.1/*", ctx)
    d = json.loads(report.to_json(include_timing=False))
    assert set(d) == {"suite", "precision_bits", "tasks", "summary"}
    assert set(d["summary"]) == {"pass", "fail", "flagged", "skipped"}
    for t in d["tasks"]:
        assert set(t) == {"task_id", "status", "lhs", "rhs", "abs_diff", "tolerance", "notes"}
    assert "timing" in json.loads(report.to_json())
    assert report.ok


def test_text_table(ctx):
    text = run_suite("lemma2.2/eq2/*", ctx).to_text()
    assert text.splitlines()[0] == "suite 'lemma2.2/eq2/*' at 256 bits"
    assert "pass=7 fail=0 flagged=0 skipped=0" in text


def test_repeat_is_identical(ctx):
    a = run_suite("thm2.12/*", ctx).to_json(include_timing=False)
    b = run_suite("thm2.12/*", ctx).to_json(include_timing=False)
    assert a == b


def test_registry_coverage():
    ids = [t.task_id for t in registry()]
    assert len(ids) == len(set(ids)) >= 200
    for prefix in ("lemma2.2", "lemma2.8", "thm2.11", "thm2.12", "thm3.1", "thm3.8", "thm3.9",
                   "sec4", "prop4.1", "prop4.2", "constants"):
        assert select(prefix + "/*"), prefix
    lemma = [i for i in ids if i.startswith("lemma") and "errata" not in i]
    assert len(lemma) == 84
    for k in range(5):
        assert f"thm3.5/eq1/k={k}/tside-shifted" in ids


def test_verdict_round_trip():
    r = Report("x", 256, [verify.Verdict("a", "pass", "1", "1", "0", "1e-30", "")])
    assert r.summary()["pass"] == 1 and r.by_id()["a"].status == "pass"
