from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from arctanlog.closedform import lemma_I
from arctanlog.errors import SingularTerm, UnsupportedParameter
from arctanlog.quadrature import IntegralSpec, integrate_I
from arctanlog.reference_values import FAMILY_EXAMPLES
from arctanlog.series import (FAMILY_IDS, H_SIDE, T_SIDE, SumFamily, TailBound, accelerate,
                              arctan_ratio_derivative, arctan_ratio_value, euler_sum,
                              family_integral, family_sum, hd_identity_check, milgram_layout,
                              milgram_power_sum, milgram_sum, odd_harmonic_power_sum,
                              cumulative_harmonic_power_sum, qz_prefactor, series_I, sum_layout)
from arctanlog.special import odd_harmonic


def test_family_example_values(ctx):
    v, tail = euler_sum(SumFamily("TH1_EVEN", H_SIDE, 1), ctx)
    assert abs(v - FAMILY_EXAMPLES[("TH1_EVEN", 1)].evaluate(ctx)) < 1e-60
    assert tail.method == "accelerated_alternating"
    assert tail.bound <= ctx.tolerance
    v, _ = euler_sum(SumFamily("TH4_EVEN", H_SIDE, 1), ctx)
    assert abs(v - FAMILY_EXAMPLES[("TH4_EVEN", 1)].evaluate(ctx)) < 1e-60


def test_h_side_matches_closed_form(ctx):
    for fid in ("TH1_ODD", "TH2_EVEN", "TH8_EVEN"):
        for k in range(3):
            v, _ = euler_sum(SumFamily(fid, H_SIDE, k), ctx)
            assert abs(v - lemma_I(family_integral(fid, k)).evaluate(ctx)) < 1e-60


@pytest.mark.parametrize("abcd", [(2, 2, 0, 0), (4, 2, 1, 1), (5, 3, 1, 0), (1, 1, 2, 1), (3, 1, 0, 3)])
def test_series_I_matches_quadrature(abcd, ctx):
    spec = IntegralSpec(*abcd)
    v, tail = series_I(spec, ctx)
    assert abs(v - integrate_I(spec, ctx).value) < 1e-60
    assert tail.terms_used > 0


def test_series_I_needs_arctan():
    with pytest.raises(UnsupportedParameter):
        series_I(IntegralSpec(1, 0, 1, 1))


def test_singular_t_side_display():
    with pytest.raises(SingularTerm):
        milgram_sum(SumFamily("TH2_ODD", T_SIDE, 1))
    with pytest.raises(SingularTerm):
        family_sum(SumFamily("TH1_ODD", T_SIDE, 0))


def test_milgram_sum_needs_t_side():
    with pytest.raises(UnsupportedParameter):
        milgram_sum(SumFamily("TH5", H_SIDE, 1))


def test_bad_family_rejected():
    with pytest.raises(UnsupportedParameter):
        SumFamily("TH3", H_SIDE, 0)
    with pytest.raises(UnsupportedParameter):
        SumFamily("TH5", "X_SIDE", 0)
    with pytest.raises(UnsupportedParameter):
        SumFamily("TH5", H_SIDE, -1)
    with pytest.raises(ValueError):
        TailBound(3, 0, "guess")


SHIFTABLE = [f for f in FAMILY_IDS if not f.startswith("TH1")]


@settings(max_examples=12)
@given(st.sampled_from(SHIFTABLE), st.integers(0, 3))
def test_t_side_shifted_by_arctan_power(fid, k):
    from arctanlog.numerics import DEFAULT_CONTEXT as ctx
    p = family_integral(fid, 0).p
    h, hb = euler_sum(SumFamily(fid, H_SIDE, k), ctx)
    t, tb = milgram_sum(SumFamily(fid, T_SIDE, k + p), ctx)
    assert abs(h - t) <= hb.bound + tb.bound + ctx.tolerance


def test_first_family_example_form(ctx):
    # 1/2 sum (-1)^n t_n(1)/((n+1)(2n+2k+1)) at k+2 gives the h-side at k
    for k in range(3):
        h, _ = euler_sum(SumFamily("TH1_ODD", H_SIDE, k), ctx)
        t, _ = sum_layout(milgram_layout(1, F(1, 2), 1, 2, 2 * (k + 2) - 1, 1), ctx)
        assert abs(h - t) < 1e-60


def test_accelerate_known_sums(ctx):
    mp = ctx.mp
    v, tail = accelerate(lambda k: F(1, k + 1), ctx)
    assert abs(v - mp.log(2)) < 1e-70
    v, _ = accelerate(lambda k: F(1, 2 * k + 1), ctx)
    assert abs(v - mp.pi / 4) < 1e-70
    assert tail.bound <= ctx.tolerance


@settings(max_examples=15)
@given(st.integers(1, 6), st.integers(1, 40))
def test_tail_bound_is_sound(p, shift):
    from arctanlog.numerics import DEFAULT_CONTEXT as ctx
    mp = ctx.mp
    # sum (-1)^k/(k+shift)^p is the Lerch transcendent at z = -1
    exact = mp.lerchphi(-1, p, shift)
    v, tail = accelerate(lambda k: F(1, (k + shift) ** p), ctx, target_eps=mp.mpf("1e-40"))
    assert abs(v - exact) <= tail.bound + ctx.tolerance


def test_target_eps_below_tolerance(ctx):
    with pytest.raises(ValueError):
        accelerate(lambda k: F(1, k + 1), ctx, target_eps=ctx.mp.mpf(2) ** -400)


def test_power_sum_examples(ctx):
    mp = ctx.mp
    v, _ = milgram_power_sum(2, 1, ctx)
    assert abs(qz_prefactor(2) * v - mp.pi ** 2 / 16) < 1e-70  # (pi/4)^2
    v, _ = milgram_power_sum(3, F(1, 3), ctx)
    x = 1 / mp.sqrt(3)
    assert abs(qz_prefactor(3) * v - arctan_ratio_value(3, x, ctx)) < 1e-66


def test_power_sum_derivative(ctx):
    mp = ctx.mp
    y = F(1, 3)
    x = 1 / mp.sqrt(3)
    v, _ = milgram_power_sum(4, y, ctx, derivative=True)
    # y d/dy f(sqrt y) = x f'(x) / 2
    assert abs(qz_prefactor(4) * v - x * arctan_ratio_derivative(4, x, ctx) / 2) < 1e-65
    with pytest.raises(UnsupportedParameter):
        milgram_power_sum(4, 1, ctx, derivative=True)
    with pytest.raises(UnsupportedParameter):
        milgram_power_sum(2, 3, ctx)


def test_harmonic_power_sums(ctx):
    mp = ctx.mp
    v, _ = odd_harmonic_power_sum(1, ctx)
    assert abs(v - (mp.pi / 4) ** 2) < 1e-70
    x = 1 / mp.sqrt(3)
    v, _ = cumulative_harmonic_power_sum(F(1, 3), ctx)
    assert abs(v - mp.atan(x) ** 3 / (3 * x ** 3)) < 1e-66


def test_hd_identity_small():
    assert all(hd_identity_check(50))
    assert odd_harmonic(3) == F(1) + F(1, 3) + F(1, 5)
    with pytest.raises(ValueError):
        hd_identity_check(0)
