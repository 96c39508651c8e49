import math
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, strategies as st

from arctanlog.errors import PoleError
from arctanlog.numerics import PrecisionContext
from arctanlog.special import (
    BETA, CATALAN_G, GAMMA_EULER, HARMONIC, HURWITZ, LI_HALF, LN2, PI, PSI, W3, ZETA,
    ConstantSymbol, bernoulli, constant, cross_check, digamma, harmonic, harmonic_frac,
    hurwitz_zeta, li_half_log_expansion, milgram_row, milgram_t, odd_harmonic, polygamma,
    w3_alternating, w3_trilog,
)

# independent oracle values (mpmath at 60 digits)
ORACLE = {
    "W3": "0.57007740708876897819560975759007455106314580991873",
    "LI_HALF(4)": "0.51747906167389938633075816189886294562237747514138",
    "BETA(4)": "0.98894455174110533610842263322837782131586088706273",
    "CATALAN_G": "0.91596559417721901505460351493238411077414937428167",
}


def close(x, y, tol=mpmath.mpf("1e-45")):
    return abs(mpmath.mpf(x) - mpmath.mpf(y)) < tol


@pytest.mark.parametrize("name", sorted(ORACLE))
def test_frozen_constants(ctx, name):
    assert close(constant(ConstantSymbol.from_name(name), ctx), ORACLE[name])


def test_against_mpmath(ctx):
    with mpmath.workdps(80):
        checks = [
            (PI, mpmath.pi), (LN2, mpmath.log(2)), (GAMMA_EULER, mpmath.euler),
            (ZETA(3), mpmath.zeta(3)), (ZETA(5), mpmath.zeta(5)),
            (BETA(3), mpmath.pi ** 3 / 32), (LI_HALF(3), mpmath.polylog(3, 0.5)),
            (PSI(1, Fraction(1, 4)), mpmath.psi(1, 0.25)),
            (PSI(0, Fraction(1, 3)), mpmath.psi(0, mpmath.mpf(1) / 3)),
            (HURWITZ(4, Fraction(3, 4)), mpmath.zeta(4, 0.75)),
        ]
        for sym, ref in checks:
            assert abs(constant(sym, ctx) - ref) < mpmath.mpf(10) ** -70, sym


def test_zeta2_identity(ctx):
    assert abs(constant(ZETA(2), ctx) - constant(PI, ctx) ** 2 / 6) < ctx.tolerance


def test_w3_two_series(ctx):
    a, b = w3_alternating(ctx.working_bits), w3_trilog(ctx.working_bits)
    assert abs(a - b) < mpmath.mpf(10) ** -80


@pytest.mark.parametrize("q", [1, 2, 3])
def test_beta_polygamma_identity(ctx, q):
    s = 2 * q
    lhs = constant(PSI(s - 1, Fraction(1, 4)), ctx) - constant(PSI(s - 1, Fraction(3, 4)), ctx)
    rhs = 2 ** (4 * q) * math.factorial(s - 1) * constant(BETA(s), ctx)
    assert abs(lhs - rhs) / abs(rhs) < ctx.tolerance


@pytest.mark.parametrize("sym", [PI, LN2, GAMMA_EULER, CATALAN_G, ZETA(3), ZETA(4), BETA(4),
                                 LI_HALF(2), LI_HALF(3), LI_HALF(4), W3])
def test_cross_check_routes(ctx, sym):
    other = cross_check(sym, ctx)
    assert other is not None
    assert abs(constant(sym, ctx) - other) < mpmath.mpf(10) ** -70


def test_li_half_expansion_matches_power_series():
    from arctanlog.special import li_half
    for n in (2, 3, 4, 5):
        assert abs(li_half_log_expansion(n, 300) - li_half(n, 300)) < mpmath.mpf(2) ** -290


def test_polygamma_pole():
    with pytest.raises(PoleError):
        constant(PSI(1, Fraction(-2)), PrecisionContext(128))
    with pytest.raises(PoleError):
        harmonic_frac(Fraction(-3), PrecisionContext(128))


def test_symbol_validation():
    for bad in (lambda: ZETA(1), lambda: BETA(1), lambda: ConstantSymbol("NOPE"),
                lambda: HURWITZ(1, Fraction(1, 2)), lambda: PSI(-1, 1)):
        with pytest.raises(ValueError):
            bad()


@pytest.mark.parametrize("sym", [PI, ZETA(3), PSI(3, Fraction(3, 4)), HURWITZ(4, Fraction(1, 4)),
                                 HARMONIC(Fraction(-1, 2)), LI_HALF(4)])
def test_symbol_name_roundtrip(sym):
    assert ConstantSymbol.from_name(sym.name) == sym


def test_harmonic_examples():
    assert harmonic(0) == 0
    assert harmonic(4) == Fraction(25, 12)
    assert harmonic(10) == Fraction(7381, 2520)
    assert odd_harmonic(0) == 0
    assert odd_harmonic(2) == Fraction(4, 3)
    assert odd_harmonic(5) == harmonic(10) - harmonic(5) / 2


@given(st.integers(0, 300))
def test_odd_harmonic_identity(n):
    assert odd_harmonic(n) == harmonic(2 * n) - harmonic(n) / 2


def test_harmonic_frac_examples(ctx):
    ln2 = constant(LN2, ctx)
    assert harmonic_frac(0, ctx) == 0
    assert abs(harmonic_frac(Fraction(1, 2), ctx) - (2 - 2 * ln2)) < ctx.tolerance
    assert abs(harmonic_frac(Fraction(-1, 2), ctx) + 2 * ln2) < ctx.tolerance
    assert abs(harmonic_frac(7, ctx) - ctx.mpf(harmonic(7))) < ctx.tolerance


def test_harmonic_frac_integers(ctx):
    for n in range(0, 101, 7):
        assert abs(harmonic_frac(Fraction(n), ctx) - ctx.mpf(harmonic(n))) < ctx.tolerance


def test_harmonic_frac_uses_digamma(ctx):
    x = Fraction(-3, 4)
    expected = digamma(x + 1, ctx.working_bits) - digamma(1, ctx.working_bits)
    assert abs(harmonic_frac(x, ctx) - expected) < ctx.tolerance


def test_milgram_examples():
    assert milgram_t(0, 1) == 2
    assert milgram_t(1, 1) == Fraction(8, 3)
    assert milgram_t(0, 4) == Fraction(2, 3)
    assert milgram_t(5, 0) == 1


def test_milgram_nested_definition():
    # brute-force nested sums for small k and depth
    def nested(k, n):
        if n == 0:
            return Fraction(1)
        return sum((nested(m, n - 1) / (m + Fraction(n, 2)) for m in range(k + 1)), Fraction(0))

    for n in range(1, 5):
        for k in range(6):
            assert milgram_t(k, n) == nested(k, n)


def test_milgram_identities_exact():
    t1 = milgram_row(1, 1001)
    assert all(t1[n] == 2 * odd_harmonic(n + 1) for n in range(1001))
    t2 = milgram_row(2, 1000)
    acc = Fraction(0)
    for j in range(1, 1001):
        acc += odd_harmonic(j) / j
        assert t2[j - 1] == 2 * acc


@given(st.integers(1, 6), st.integers(0, 60))
def test_milgram_positive_nondecreasing(n, k):
    assert milgram_t(k, n) > 0
    assert milgram_t(k + 1, n) >= milgram_t(k, n)


def test_memo_transparency():
    ctx = PrecisionContext(200)
    first = constant(ZETA(7), ctx)
    assert constant(ZETA(7), ctx) == first
    assert hurwitz_zeta(7, 1, ctx.working_bits) == first


def test_bernoulli_values():
    assert bernoulli(1) == Fraction(-1, 2)
    assert bernoulli(12) == Fraction(-691, 2730)
    assert bernoulli(13) == 0


def test_polygamma_relation(ctx):
    # psi^(n)(z) = (-1)^(n+1) n! zeta(n+1, z)
    for n in (1, 2, 3):
        z = Fraction(1, 3)
        lhs = polygamma(n, z, ctx.working_bits)
        rhs = (-1) ** (n + 1) * math.factorial(n) * hurwitz_zeta(n + 1, z, ctx.working_bits)
        assert abs(lhs - rhs) < ctx.tolerance * abs(rhs)
