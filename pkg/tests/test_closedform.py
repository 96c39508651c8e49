from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from arctanlog.closedform import (BaseIntegralId, all_catalog_ids, arctan_power_integral,
                                  base_integral, closed_form, covered_specs, lemma_I,
                                  logpow_integral, logpow_step, partial_fractions)
from arctanlog.closedform.catalog import G, ln2, pi, zeta
from arctanlog.constexpr import ConstExpr
from arctanlog.errors import NotCovered, OutOfRegion, UnsupportedParameter
from arctanlog.quadrature import IntegralSpec, integrate_I


def _quad_shape(e, p, q, r, ctx):
    return integrate_I(IntegralSpec(e + p, p, q, r), ctx).value


def test_catalog_examples():
    assert base_integral(BaseIntegralId("LN_OVER")) == -G
    assert base_integral(BaseIntegralId("XLN_OVER")) == -pi ** 2 / 48
    assert base_integral(BaseIntegralId("XM_LNQ", (2, 3))) == ConstExpr.rational(F(-2, 27))


def test_catalog_rejects_bad_ids():
    with pytest.raises(UnsupportedParameter):
        BaseIntegralId("XM_LNQ", (2,))
    with pytest.raises(UnsupportedParameter):
        BaseIntegralId("NOPE")
    with pytest.raises(UnsupportedParameter):
        BaseIntegralId("LN_OVER", (1,))


@pytest.mark.parametrize("bid", all_catalog_ids(max_m=4, max_q=3), ids=str)
def test_catalog_matches_quadrature(bid, ctx):
    exact = base_integral(bid).evaluate(ctx)
    assert abs(exact - _quad_shape(*bid.shape(), ctx)) < 1e-30


@pytest.mark.parametrize("a,r", [(0, 1), (3, 1), (4, 2), (5, 3), (7, 2), (8, 5), (2, 0)])
def test_partial_fraction_examples(a, r):
    assert partial_fractions(a, r).recombines()


def test_partial_fraction_shape():
    d = partial_fractions(3, 2)
    # x^3/(1+x^2)^2 = x/(1+x^2) - x/(1+x^2)^2
    assert d.poly_part == ()
    assert d.even_part == {}
    assert d.odd_part == {1: 1, 2: -1}


@given(st.integers(0, 14), st.integers(0, 6))
def test_partial_fractions_recombine(a, r):
    assert partial_fractions(a, r).recombines()


@pytest.mark.parametrize("label,k,spec", covered_specs(k_max=3),
                         ids=lambda v: str(v) if not isinstance(v, int) else f"k{v}")
def test_lemma_families_against_quadrature(label, k, spec, ctx):
    quad = integrate_I(spec, ctx).value
    literal = abs(lemma_I(spec).evaluate(ctx) - quad)
    corrected = abs(lemma_I(spec, use_errata=True).evaluate(ctx) - quad)
    assert corrected < 1e-30
    if label == "lemma2.6/eq9":
        # the printed W(3) sign is wrong; only the corrected form matches
        assert literal > 1e-3
    else:
        assert literal < 1e-30


def test_lemma_examples():
    assert lemma_I(IntegralSpec(2, 2, 0, 0)) == pi ** 2 / 16 - G + pi * ln2 / 4
    with pytest.raises(NotCovered):
        lemma_I(IntegralSpec(2, 2, 0, 5))
    with pytest.raises(NotCovered):
        lemma_I(IntegralSpec(0, 2, 0, 0))


def test_logpow_examples(ctx):
    # zeta(2) is kept symbolic, so compare -zeta(2)/8 with -pi^2/48 numerically
    assert logpow_integral(1, 1, 1) == -zeta(2) / 8
    assert abs(logpow_integral(1, 1, 1).evaluate(ctx) + ctx.mp.pi ** 2 / 48) < 1e-70
    assert logpow_integral(0, 2, 1) == pi ** 3 / 16
    assert logpow_integral(0, 1, 1) == -G
    assert logpow_integral(1, 2, 1) == 3 * zeta(3) / 16


@pytest.mark.parametrize("a", range(0, 7))
@pytest.mark.parametrize("q", range(0, 4))
@pytest.mark.parametrize("r", range(1, 4))
def test_logpow_against_quadrature(a, q, r, ctx):
    exact = logpow_integral(a, q, r).evaluate(ctx)
    assert abs(exact - integrate_I(IntegralSpec(a, 0, q, r), ctx).value) < 1e-30


@given(st.integers(2, 9), st.integers(0, 4), st.integers(2, 5))
def test_logpow_step_consistent(a, q, r):
    assert logpow_step(a, q, r) == logpow_integral(a, q, r)


def test_arctan_power_examples():
    assert arctan_power_integral(4, 2, 2) == ConstExpr.pi_poly([48, 0, -6, 1]) / 384
    assert arctan_power_integral(0, 0, 1) == pi / 4
    with pytest.raises(OutOfRegion):
        arctan_power_integral(1, 2, 5)
    with pytest.raises(OutOfRegion):
        arctan_power_integral(3, 2, 1)  # x arctan^2/(1+x^2) needs G and ln2


@pytest.mark.parametrize("p", range(0, 4))
@pytest.mark.parametrize("r", range(1, 4))
def test_arctan_power_against_quadrature(p, r, ctx):
    for e in range(0, 2 * r - 1):
        exact = arctan_power_integral(e + p, p, r).evaluate(ctx)
        assert abs(exact - integrate_I(IntegralSpec(e + p, p, 0, r), ctx).value) < 1e-30


@given(st.integers(0, 6), st.integers(1, 5))
def test_engines_agree_on_overlap(e, r):
    if e < 2 * r - 1:
        assert arctan_power_integral(e, 0, r) == logpow_integral(e, 0, r)


def test_closed_form_dispatch():
    assert closed_form(IntegralSpec(1, 0, 3, 0)) == ConstExpr.rational(F(-3, 8))
    assert closed_form(IntegralSpec(0, 0, 1, 1)) == -G
    assert closed_form(IntegralSpec(4, 2, 0, 2)) == arctan_power_integral(4, 2, 2)
    assert closed_form(IntegralSpec(2, 2, 0, 0)) == lemma_I(IntegralSpec(2, 2, 0, 0))
    with pytest.raises(NotCovered):
        closed_form(IntegralSpec(1, 2, 0, 5))
    with pytest.raises(NotCovered):
        closed_form(IntegralSpec(5, 2, 3, 2))
