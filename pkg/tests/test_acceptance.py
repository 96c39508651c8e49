"""Acceptance criteria, each run at its stated tolerance.

Every test prints one PASS/FAIL line and the same lines are repeated in the
terminal summary.  Nothing here is relaxed to make a criterion green.
"""

import json
import re
import time
from fractions import Fraction as F

from conftest import ACCEPTANCE_LINES

from arctanlog.cli import main
from arctanlog.closedform import arctan_power_integral, covered_specs, lemma_I, logpow_integral
from arctanlog.constexpr import ConstExpr
from arctanlog.errors import ArctanLogError
from arctanlog.numerics import PrecisionContext
from arctanlog.quadrature import IntegralSpec, integrate_I
from arctanlog.reference_values import FAMILY_EXAMPLES
from arctanlog.series import FAMILY_IDS, H_SIDE, T_SIDE, SumFamily, euler_sum, hd_identity_check, milgram_sum
from arctanlog.verify import registry, run_suite, structure_violations


def report(n: int, ok: bool, detail: str):
    line = f"{'PASS' if ok else 'FAIL'} criterion {n}: {detail}"
    ACCEPTANCE_LINES[n] = line
    print(line)
    assert ok, line


def test_criterion_1_lemma_closed_forms():
    ctx = PrecisionContext(256)
    start = time.perf_counter()
    cases = covered_specs(k_max=6)
    bad = []
    for label, k, spec in cases:
        diff = abs(lemma_I(spec).evaluate(ctx) - integrate_I(spec, ctx).value)
        if not diff < 1e-30:
            bad.append(f"{label}/k={k}")
    secs = time.perf_counter() - start
    ok = len(cases) == 84 and not bad and secs < 300
    report(1, ok, f"{len(cases) - len(bad)}/{len(cases)} closed forms within 1e-30 in {secs:.1f}s"
           + (f"; mismatches: {', '.join(bad)}" if bad else ""))


def test_criterion_2_recurrence_engine():
    ctx = PrecisionContext(256)
    bad, shape = [], []
    count = 0
    for a in range(9):
        for q in range(5):
            for r in range(1, 5):
                count += 1
                diff = abs(logpow_integral(a, q, r).evaluate(ctx)
                           - integrate_I(IntegralSpec(a, 0, q, r), ctx).value)
                if not diff < 1e-28:
                    bad.append((a, q, r))
                if structure_violations(a, q, r):
                    shape.append((a, q, r))
    report(2, not bad and not shape,
           f"{count - len(bad)}/{count} values within 1e-28, {count - len(shape)}/{count} structure checks")


def test_criterion_3_exact_coefficient_vectors():
    expected = {
        (4, 2, 2): ConstExpr.pi_poly([48, 0, -6, 1]) / 384,
        (5, 3, 3): ConstExpr.pi_poly([-48, 0, 12, 0, 1]) / 8192,
        (6, 4, 2): ConstExpr.pi_poly([-3840, 0, 480, 0, -10, 1]) / 10240,
        (7, 5, 2): ConstExpr.pi_poly([46080, -23040, 0, 960, 0, -12, 1]) / 49152,
    }
    hits = [arctan_power_integral(*key) == value for key, value in expected.items()]
    report(3, all(hits), f"{sum(hits)}/4 coefficient vectors equal as rationals")


def test_criterion_4_example_values():
    ctx = PrecisionContext(256)
    bad = []
    for (fid, k), value in sorted(FAMILY_EXAMPLES.items()):
        h, _ = euler_sum(SumFamily(fid, H_SIDE, k), ctx)
        if not abs(h - value.evaluate(ctx)) < 1e-18:
            bad.append(f"{fid}/k={k}")
    flagged = [v for v in run_suite("*/example/*-tside", ctx).verdicts
               if v.task_id == "thm3.2/example/k1-tside"]
    flag_ok = len(flagged) == 1 and flagged[0].status == "flagged"
    n = len(FAMILY_EXAMPLES)
    ok = n >= 24 and not bad and flag_ok
    report(4, ok, f"{n - len(bad)}/{n} printed example values match the h-side within 1e-18"
           + f"; singular t-side display {'flagged' if flag_ok else 'NOT flagged'}"
           + (f"; mismatches: {', '.join(bad)}" if bad else ""))


def test_criterion_5_cross_side():
    ctx = PrecisionContext(256)
    bad = []
    total = 0
    for fid in FAMILY_IDS:
        for k in range(5):
            total += 1
            h, hb = euler_sum(SumFamily(fid, H_SIDE, k), ctx)
            try:
                t, tb = milgram_sum(SumFamily(fid, T_SIDE, k), ctx)
            except ArctanLogError as exc:
                bad.append(f"{fid}/k={k} ({type(exc).__name__})")
                continue
            diff = abs(h - t)
            if not (diff <= hb.bound + tb.bound and diff <= 1e-18):
                bad.append(f"{fid}/k={k}")
    report(5, not bad, f"{total - len(bad)}/{total} h-side/t-side pairs agree at the same k"
           + (f"; mismatches: {', '.join(bad)}" if bad else ""))


def test_criterion_6_exact_identities():
    start = time.perf_counter()
    checks = hd_identity_check(1000)
    secs = time.perf_counter() - start
    report(6, all(checks) and secs < 30,
           f"{sum(checks)}/{len(checks)} rational identities exact for n, j <= 1000 in {secs:.1f}s")


def test_criterion_7_abel_policy():
    ctx = PrecisionContext(256)
    verdicts = run_suite("sec4/*", ctx).verdicts + run_suite("prop4.2/*", ctx).verdicts
    tasks = {t.task_id: t for t in registry()}
    fails = [v.task_id for v in verdicts if v.status == "fail"]
    loose = [v.task_id for v in verdicts
             if float(v.tolerance) > (1e-30 if v.task_id.endswith("/function") else 1e-18)]
    unflagged = [v.task_id for v in verdicts
                 if v.status == "flagged" and tasks[v.task_id].expectation != "flagged_known_issue"]
    funcs = [v for v in verdicts if v.task_id.endswith("/function")]
    eqs = {v.task_id.split("/")[1] for v in verdicts if v.task_id.startswith("prop4.2/")}
    ok = not fails and not loose and not unflagged and all(v.status == "pass" for v in funcs) \
        and eqs == {f"eq{i}" for i in range(1, 7)}
    report(7, ok, f"{len(verdicts)} tasks, {len(funcs)} function values, {len(fails)} fail, "
           f"{sum(v.status == 'flagged' for v in verdicts)} divergent series flagged")


def test_criterion_8_constants():
    ctx = PrecisionContext(256)
    verdicts = run_suite("constants/BETA(4)/*", ctx).verdicts + run_suite("constants/W3/*", ctx).verdicts
    ok = len(verdicts) >= 3 and all(v.status == "pass" and float(v.tolerance) <= 1e-70 for v in verdicts)
    report(8, ok, ", ".join(f"{v.task_id} {v.status} ({v.abs_diff})" for v in verdicts))


_TIMING = re.compile(r',\n  "timing": \{[^}]*\}')


def _verify_all(tmp_path, name, *extra):
    out = tmp_path / name
    code = main(["verify", "--suite", "all", "--format", "json", "--out", str(out), *extra])
    return code, out.read_text()


def test_criterion_9_determinism(tmp_path, capsys):
    code1, first = _verify_all(tmp_path, "a.json")
    code2, second = _verify_all(tmp_path, "b.json")
    code3, high = _verify_all(tmp_path, "c.json", "--prec", "512")
    capsys.readouterr()
    same = _TIMING.sub("", first) == _TIMING.sub("", second)
    lo = {t["task_id"]: t["status"] for t in json.loads(first)["tasks"]}
    hi = {t["task_id"]: t["status"] for t in json.loads(high)["tasks"]}
    flips = [i for i in lo if lo[i] == "pass" and hi.get(i) == "fail"]
    ok = same and not flips and (code1, code2, code3) == (0, 0, 0)
    report(9, ok, f"{len(lo)} tasks; repeat JSON {'identical' if same else 'DIFFERS'}; "
           f"{len(flips)} pass->fail flips at 512 bits")
