from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, strategies as st

from arctanlog.numerics import (
    DEFAULT_CONTEXT, PrecisionContext, accelerated_alternating, convert, decimal_string,
    mp_for_bits, pairwise_sum, rational_arith, to_bigfloat,
)

rationals = st.fractions(max_denominator=10**6).filter(lambda f: abs(f) < 10**6)


def test_rational_arith_examples():
    assert rational_arith(Fraction(1, 2), Fraction(1, 3), "add") == Fraction(5, 6)
    assert Fraction(2, 4) == Fraction(1, 2) and Fraction(2, 4).denominator == 2
    assert rational_arith(Fraction(1, 7), Fraction(7), "mul") == 1


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        rational_arith(Fraction(1), Fraction(0), "div")


def test_unknown_op():
    with pytest.raises(ValueError):
        rational_arith(Fraction(1), Fraction(1), "pow")


@given(rationals, rationals, rationals)
def test_rational_ring_laws(a, b, c):
    add = lambda x, y: rational_arith(x, y, "add")  # noqa: E731
    mul = lambda x, y: rational_arith(x, y, "mul")  # noqa: E731
    assert add(add(a, b), c) == add(a, add(b, c))
    assert mul(a, add(b, c)) == add(mul(a, b), mul(a, c))
    r = add(a, b)
    assert r.denominator > 0


def test_to_bigfloat_examples(ctx):
    assert to_bigfloat(Fraction(1, 2), ctx) == ctx.mp.mpf("0.5")
    third = to_bigfloat(Fraction(1, 3), ctx)
    assert abs(third - ctx.mp.mpf(1) / 3) <= ctx.mp.ldexp(1, -256)
    zero = to_bigfloat(Fraction(0), ctx)
    assert zero == 0 and ctx.mp.sign(zero) == 0


@given(rationals, rationals)
def test_to_bigfloat_monotone(a, b):
    lo, hi = sorted((a, b))
    assert to_bigfloat(lo, DEFAULT_CONTEXT) <= to_bigfloat(hi, DEFAULT_CONTEXT)


def test_context_validation():
    with pytest.raises(ValueError):
        PrecisionContext(32)
    with pytest.raises(ValueError):
        PrecisionContext(128, 64)
    c = PrecisionContext(256, 32)
    assert c.working_bits == 288
    assert c.tolerance == c.mp.ldexp(1, -224)


def test_contexts_are_private():
    before = mpmath.mp.prec
    a = mp_for_bits(400)
    assert a.prec == 400 and mpmath.mp.prec == before
    assert mp_for_bits(400) is a


def test_convert_is_deterministic(ctx):
    x = Fraction(22, 7)
    assert convert(x, ctx.mp) == convert(x, ctx.mp)
    assert convert(convert(x, mp_for_bits(600)), ctx.mp) == convert(x, ctx.mp)


def test_pairwise_sum_is_order_fixed(ctx):
    vals = [ctx.mp.mpf(1) / (i + 1) for i in range(100)]
    assert pairwise_sum(vals, ctx.mp.zero) == pairwise_sum(list(vals), ctx.mp.zero)
    assert pairwise_sum([], 0) == 0


def test_decimal_string_width(ctx):
    s = decimal_string(ctx.mp.pi, 40)
    assert s.startswith("3.14159265358979323846264338327950288419")
    assert len(s.replace(".", "")) == 40


def test_accelerated_alternating_ln2():
    mp = mp_for_bits(320)
    value, bound = accelerated_alternating(lambda k: mp.mpf(1) / (k + 1), 90, mp)
    assert abs(value - mp.log(2)) <= bound
    assert bound < mp.mpf(10) ** -65
