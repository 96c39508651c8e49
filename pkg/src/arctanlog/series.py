"""Series-side evaluators.

Every sum handled here is alternating with exact rational magnitudes, so a
family is described by a small layout (which coefficient sequence, which
linear denominator, which power) and summed by one engine.  Sums over two
indices with a joint sign (-1)^(n+j) are regrouped along m = n + j; the
grouped coefficient is a finite exact sum.

Convergent alternating tails are accelerated with the Cohen-Rodriguez
Villegas-Zagier weights and certified by comparing two term counts.  Sums at
|y| < 1 are added directly and stopped by the alternating remainder.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction as F
from typing import Callable

from .errors import NonConvergence, SingularTerm, UnsupportedParameter
from .numerics import (
    CRVZ_RATE, DEFAULT_CONTEXT, PrecisionContext, accelerated_alternating, convert,
    crvz_terms_for, mp_for_bits, pairwise_sum,
)
from .quadrature import IntegralSpec
from .special import milgram_row, odd_harmonic

H_SIDE = "H_SIDE"
T_SIDE = "T_SIDE"
SIDES = (H_SIDE, T_SIDE)

FAMILY_IDS = (
    "TH1_ODD", "TH1_EVEN", "TH2_ODD", "TH2_EVEN", "TH4_ODD", "TH4_EVEN",
    "TH5", "TH6", "TH7_EVEN", "TH7_ODD", "TH8_ODD", "TH8_EVEN",
)

TAIL_METHODS = (
    "alternating_remainder", "geometric_majorant", "paired_alternating",
    "accelerated_alternating",
)

# accelerated terms, far beyond anything a convergent family needs
TERM_CAP = 4096
MONOTONE_WINDOW = 64


@dataclass(frozen=True)
class SumFamily:
    family_id: str
    side: str
    k: int

    def __post_init__(self):
        if self.family_id not in FAMILY_IDS:
            raise UnsupportedParameter(f"unknown family {self.family_id!r}")
        if self.side not in SIDES:
            raise UnsupportedParameter(f"side must be one of {SIDES}")
        if not isinstance(self.k, int) or self.k < 0:
            raise UnsupportedParameter("k must be a nonnegative integer")

    def integral(self) -> IntegralSpec:
        """The integral whose Taylor expansion produces the h-side sum."""
        return family_integral(self.family_id, self.k)

    def __str__(self):
        return f"{self.family_id}/{self.side}/k={self.k}"


@dataclass(frozen=True)
class TailBound:
    terms_used: int
    bound: object
    method: str

    def __post_init__(self):
        if self.method not in TAIL_METHODS:
            raise ValueError(f"unknown tail method {self.method!r}")


# (a offset, p, q, r): the h-side of family F at k integrates I(2k + offset, p, q, r)
_INTEGRALS = {
    "TH1_ODD": (2, 2, 0, 0), "TH1_EVEN": (3, 2, 0, 0),
    "TH2_ODD": (3, 3, 0, 0), "TH2_EVEN": (4, 3, 0, 0),
    "TH4_ODD": (2, 2, 1, 0), "TH4_EVEN": (3, 2, 1, 0),
    "TH5": (2, 2, 1, 1), "TH6": (4, 3, 1, 0),
    "TH7_EVEN": (1, 1, 2, 1), "TH7_ODD": (2, 1, 2, 1),
    "TH8_ODD": (2, 2, 2, 0), "TH8_EVEN": (3, 2, 2, 0),
}


def family_integral(family_id: str, k: int) -> IntegralSpec:
    off, p, q, r = _INTEGRALS[family_id]
    return IntegralSpec(2 * k + off, p, q, r)


# -- layouts -----------------------------------------------------------------------


@dataclass(frozen=True)
class SeriesLayout:
    """sign * sum_{m >= start} (-1)^m a_m with a_m = coeff * c_m / (alpha m + beta)^power.

    ``kind`` picks c_m:
      h        h_m / m^weight                       (m >= 1)
      h_cum    (sum_{i<=m} h_i/i) / (2m+1)           (m >= 1)
      h_double sum_{n=1}^{m} h_n/n                   (m >= 1, two indices regrouped)
      t        t_m(weight) / (m + (weight+1)/2)      (m >= 0)
      t_double sum_{n<=m} t_n(weight)/(n + (weight+1)/2)   (m >= 0, regrouped)
    """

    kind: str
    sign: int
    coeff: F
    weight: int
    alpha: int
    beta: int
    power: int

    @property
    def start(self) -> int:
        return 0 if self.kind.startswith("t") else 1

    def singular_index(self) -> int | None:
        """First m >= start with alpha m + beta = 0, if any."""
        if self.beta <= 0 and (-self.beta) % self.alpha == 0:
            m = -self.beta // self.alpha
            if m >= self.start:
                return m
        return None


def _h_layout(fid: str, k: int) -> SeriesLayout:
    L = SeriesLayout
    table = {
        "TH1_ODD": L("h", -1, F(1), 1, 2, 2 * k + 1, 1),
        "TH1_EVEN": L("h", -1, F(1), 1, 2, 2 * k + 2, 1),
        "TH2_ODD": L("h_cum", -1, F(3), 0, 2, 2 * k + 2, 1),
        "TH2_EVEN": L("h_cum", -1, F(3), 0, 2, 2 * k + 3, 1),
        "TH4_ODD": L("h", 1, F(1), 1, 2, 2 * k + 1, 2),
        "TH4_EVEN": L("h", 1, F(1), 1, 2, 2 * k + 2, 2),
        "TH5": L("h_double", 1, F(1), 0, 2, 2 * k + 1, 2),
        "TH6": L("h_cum", 1, F(3), 0, 2, 2 * k + 3, 2),
        "TH7_EVEN": L("h", -1, F(2), 0, 2, 2 * k, 3),
        "TH7_ODD": L("h", -1, F(2), 0, 2, 2 * k + 1, 3),
        "TH8_ODD": L("h", -1, F(2), 1, 2, 2 * k + 1, 3),
        "TH8_EVEN": L("h", -1, F(2), 1, 2, 2 * k + 2, 3),
    }
    return table[fid]


def _t_layout(fid: str, k: int) -> SeriesLayout:
    L = SeriesLayout
    half, three_q = F(1, 2), F(3, 4)
    table = {
        "TH1_ODD": L("t", 1, half, 1, 1, 2 * k - 1, 1),
        "TH1_EVEN": L("t", 1, half, 1, 1, 2 * k, 1),
        "TH2_ODD": L("t", 1, three_q, 2, 2, 2 * k - 2, 1),
        "TH2_EVEN": L("t", 1, three_q, 2, 2, 2 * k - 1, 1),
        "TH4_ODD": L("t", -1, half, 1, 2, 2 * k - 1, 2),
        "TH4_EVEN": L("t", -1, half, 1, 2, 2 * k, 2),
        "TH5": L("t_double", -1, half, 1, 2, 2 * k - 1, 2),
        "TH6": L("t", -1, three_q, 2, 2, 2 * k - 1, 2),
        "TH7_EVEN": L("t_double", 1, F(1), 0, 2, 2 * k, 3),
        "TH7_ODD": L("t_double", 1, F(1), 0, 2, 2 * k + 1, 3),
        "TH8_ODD": L("t", 1, F(1), 1, 2, 2 * k - 1, 3),
        "TH8_EVEN": L("t", 1, F(1), 1, 2, 2 * k, 3),
    }
    return table[fid]


def layout_of(fam: SumFamily) -> SeriesLayout:
    return (_h_layout if fam.side == H_SIDE else _t_layout)(fam.family_id, fam.k)


def milgram_layout(level: int, coeff, sign: int, alpha: int, beta: int, power: int,
                   double: bool = False) -> SeriesLayout:
    """Layout of sign * coeff * sum (-1)^n t_n(level) / ((n + (level+1)/2) (alpha n + beta)^power).

    With ``double`` the denominator runs over alpha n + 2j + beta and the sum
    also covers j >= 0 with sign (-1)^(n+j).
    """
    if double and alpha != 2:
        raise UnsupportedParameter("regrouped double sums need alpha = 2")
    return SeriesLayout("t_double" if double else "t", sign, F(coeff), level, alpha, beta, power)


# -- exact coefficient tables ------------------------------------------------------

_table_lock = threading.Lock()
_cum_h: list[F] = [F(0)]          # sum_{i<=m} h_i / i
_cum_t: dict[int, list[F]] = {}   # level -> partial sums of t_n(level)/(n + (level+1)/2)


def _cum_h_upto(m: int) -> F:
    with _table_lock:
        while len(_cum_h) <= m:
            i = len(_cum_h)
            _cum_h.append(_cum_h[-1] + odd_harmonic(i) / i)
        return _cum_h[m]


def _t_weighted(level: int, count: int) -> list[F]:
    half = F(level + 1, 2)
    row = milgram_row(level, count)
    return [t / (n + half) for n, t in enumerate(row)]


def _cum_t_upto(level: int, m: int) -> F:
    with _table_lock:
        row = _cum_t.setdefault(level, [])
        if len(row) <= m:
            w = _t_weighted(level, m + 1)
            acc = row[-1] if row else F(0)
            for n in range(len(row), m + 1):
                acc = acc + w[n]
                row.append(acc)
        return row[m]


def coefficient(layout: SeriesLayout, m: int) -> F:
    """c_m of the layout (exact)."""
    kind, w = layout.kind, layout.weight
    if kind == "h":
        return odd_harmonic(m) / F(m) ** w
    if kind == "h_cum":
        return _cum_h_upto(m) / (2 * m + 1)
    if kind == "h_double":
        return _cum_h_upto(m)
    if kind == "t":
        return milgram_row(w, m + 1)[m] / (m + F(w + 1, 2))
    if kind == "t_double":
        return _cum_t_upto(w, m)
    raise ValueError(f"unknown layout kind {kind!r}")


def magnitude(layout: SeriesLayout, m: int) -> F:
    """a_m, so that the sum is sign * sum (-1)^m a_m."""
    den = layout.alpha * m + layout.beta
    if den == 0:
        raise SingularTerm(f"denominator vanishes at index {m}")
    return layout.coeff * coefficient(layout, m) / F(den) ** layout.power


# -- summation engines -------------------------------------------------------------


def _target(ctx: PrecisionContext, target_eps):
    mp = ctx.mp
    eps = ctx.tolerance if target_eps is None else convert(target_eps, mp)
    if eps < ctx.tolerance:
        raise ValueError("target_eps is below the context tolerance")
    return eps


def accelerate(mag: Callable[[int], F], ctx: PrecisionContext, target_eps=None, what: str = "series"):
    """sum_{k>=0} (-1)^k mag(k) for a smooth sequence of rational magnitudes.

    The value from n2 accelerated terms is accepted when it differs from the
    n1-term value by at most the target; that difference is reported as the
    bound together with the weight bound of the n2 evaluation.
    """
    mp_out = ctx.mp
    eps = _target(ctx, target_eps)
    probe = max(abs(float(mag(i))) for i in range(8)) or 1.0
    eps_log2 = float(mp_out.log(eps, 2)) - math.log2(probe)
    n1 = crvz_terms_for(eps_log2)
    cache: dict[int, F] = {}

    def exact(i):
        v = cache.get(i)
        if v is None:
            v = cache[i] = mag(i)
        return v

    last = None
    while n1 <= TERM_CAP:
        n2 = n1 + max(8, n1 // 4)
        mp = mp_for_bits(ctx.working_bits + int(n2 * CRVZ_RATE / math.log(2)) + 32)
        s1, _ = accelerated_alternating(lambda i: convert(exact(i), mp), n1, mp)
        s2, b2 = accelerated_alternating(lambda i: convert(exact(i), mp), n2, mp)
        bound = max(abs(s1 - s2), b2)
        last = convert(s2, mp_out)
        if bound <= eps:
            return last, TailBound(n2, convert(bound, mp_out), "accelerated_alternating")
        n1 *= 2
    raise NonConvergence(f"{what}: no agreement within {TERM_CAP} accelerated terms", partial=last)


def sum_layout(layout: SeriesLayout, ctx: PrecisionContext = DEFAULT_CONTEXT, target_eps=None,
               what: str = "series"):
    """Value and tail bound of a layout; SingularTerm if a denominator vanishes."""
    m = layout.singular_index()
    if m is not None:
        raise SingularTerm(f"{what}: denominator {layout.alpha}m{layout.beta:+d} vanishes at m={m}")
    start = layout.start
    value, tail = accelerate(lambda i: magnitude(layout, start + i), ctx, target_eps, what)
    sgn = layout.sign * (-1) ** start
    return (value if sgn > 0 else -value), tail


def euler_sum(fam: SumFamily, ctx: PrecisionContext = DEFAULT_CONTEXT, target_eps=None):
    """The h_n side of a family."""
    if fam.side != H_SIDE:
        fam = SumFamily(fam.family_id, H_SIDE, fam.k)
    return sum_layout(layout_of(fam), ctx, target_eps, str(fam))


def milgram_sum(fam: SumFamily, ctx: PrecisionContext = DEFAULT_CONTEXT, target_eps=None):
    """The t_n side of a family, summed exactly as displayed."""
    if fam.side != T_SIDE:
        raise UnsupportedParameter("milgram_sum needs side=T_SIDE")
    return sum_layout(layout_of(fam), ctx, target_eps, str(fam))


def family_sum(fam: SumFamily, ctx: PrecisionContext = DEFAULT_CONTEXT, target_eps=None):
    return (euler_sum if fam.side == H_SIDE else milgram_sum)(fam, ctx, target_eps)


# -- master expansion ----------------------------------------------------------------

_conv_lock = threading.Lock()
_conv: dict[tuple[int, int], list[F]] = {}


def _conv_coeffs(p: int, r: int, count: int) -> list[F]:
    """c_m = sum_{n<=m} t_n(p-1)/(n+p/2) * binom(r+m-n-1, m-n) for m < count."""
    with _conv_lock:
        row = _conv.setdefault((p, r), [])
        if len(row) < count:
            w = _t_weighted(p - 1, count)
            if r == 0:
                row[:] = w
            else:
                binom = [F(math.comb(r + j - 1, j)) for j in range(count)]
                for m in range(len(row), count):
                    row.append(sum((w[n] * binom[m - n] for n in range(m + 1)), F(0)))
        return row[:count]


def series_I(spec: IntegralSpec, ctx: PrecisionContext = DEFAULT_CONTEXT, target_eps=None):
    """I(a,p,q,r) from the Milgram expansion of (arctan x / x)^p times (1+x^2)^-r.

    I = (-1)^q q! p!/2^p sum_m (-1)^m c_m / (2m + a + 1)^(q+1), with c_m the
    Cauchy product of the two power series in x^2.
    """
    a, p, q, r = spec.a, spec.p, spec.q, spec.r
    if p < 1:
        raise UnsupportedParameter("series_I needs p >= 1")
    scale = F((-1) ** q * math.factorial(q) * math.factorial(p), 2 ** p)

    def mag(m):
        return scale * _conv_coeffs(p, r, m + 1)[m] / F(2 * m + a + 1) ** (q + 1)

    return accelerate(mag, ctx, target_eps, str(spec))


def series_display_value(level: int, prefactor, inner_r: int, a: int,
                         ctx: PrecisionContext = DEFAULT_CONTEXT, target_eps=None):
    """prefactor * sum_n (-1)^n t_n(level)/(n+(level+1)/2) * sum_k (-1)^k binom(r+k-1,k)/(2k+2n+a+1)."""
    p = level + 1
    pre = F(prefactor) / F(math.factorial(p), 2 ** p)
    value, tail = series_I(IntegralSpec(a, p, 0, inner_r), ctx, target_eps)
    return convert(pre, ctx.mp) * value, tail


# -- power series in x^2 -----------------------------------------------------------


def _signed_power_sum(coef: Callable[[int], F], y: F, start: int, ctx: PrecisionContext,
                      target_eps, what: str):
    """sum_{n>=start} (-y)^n coef(n) for 0 < y <= 1."""
    y = F(y)
    if y > 1:
        raise UnsupportedParameter(f"{what}: the series diverges for y = {y}; compare function values instead")
    if y <= 0:
        raise UnsupportedParameter("y must be positive")
    if y == 1:
        value, tail = accelerate(lambda i: coef(start + i), ctx, target_eps, what)
        return (value if start % 2 == 0 else -value), tail
    mp = ctx.mp
    eps = _target(ctx, target_eps)
    terms = []
    mags = []
    n = start
    while True:
        t = convert((-y) ** n * coef(n), mp)
        mags.append(abs(t))
        window = mags[-MONOTONE_WINDOW:]
        if abs(t) < eps / 2 and len(window) == MONOTONE_WINDOW and all(
                window[i + 1] <= window[i] for i in range(len(window) - 1)):
            return pairwise_sum(terms, mp.zero), TailBound(len(terms), abs(t), "alternating_remainder")
        terms.append(t)
        n += 1
        if len(terms) > 10 ** 7:
            raise NonConvergence(f"{what}: term cap reached", partial=pairwise_sum(terms, mp.zero))


def milgram_power_sum(p: int, y, ctx: PrecisionContext = DEFAULT_CONTEXT, target_eps=None,
                      derivative: bool = False):
    """sum_n (-y)^n n^d t_n(p-1)/(n + p/2) with d = 1 when ``derivative``; 0 < y <= 1."""
    if p < 1:
        raise UnsupportedParameter("p must be >= 1")
    if derivative and F(y) == 1:
        raise UnsupportedParameter("the differentiated series does not converge at y = 1")
    half = F(p, 2)

    def coef(n):
        c = milgram_row(p - 1, n + 1)[n] / (n + half)
        return c * n if derivative else c

    return _signed_power_sum(coef, y, 0, ctx, target_eps, f"milgram p={p}")


def odd_harmonic_power_sum(y, ctx: PrecisionContext = DEFAULT_CONTEXT, target_eps=None):
    """sum_{n>=1} (-1)^(n+1) h_n y^(n-1) / n, the expansion of arctan^2(x)/x^2 at y = x^2."""
    y = F(y)
    value, tail = _signed_power_sum(lambda n: odd_harmonic(n) / n, y, 1, ctx, target_eps, "h power sum")
    # (-y)^n = -y * (-1)^(n+1) y^(n-1)
    return -value / convert(y, ctx.mp), tail


def cumulative_harmonic_power_sum(y, ctx: PrecisionContext = DEFAULT_CONTEXT, target_eps=None):
    """sum_{j>=1} (-1)^(j+1)/(2j+1) (sum_{i<=j} h_i/i) y^(j-1), i.e. arctan^3(x)/(3x^3)."""
    y = F(y)
    value, tail = _signed_power_sum(lambda j: _cum_h_upto(j) / (2 * j + 1), y, 1, ctx, target_eps,
                                    "cumulative h power sum")
    return -value / convert(y, ctx.mp), tail


def qz_prefactor(p: int) -> F:
    """p!/2^p: (arctan x/x)^p = p!/2^p sum (-x^2)^n t_n(p-1)/(n + p/2)."""
    return F(math.factorial(p), 2 ** p)


def arctan_ratio_value(p: int, x, ctx: PrecisionContext = DEFAULT_CONTEXT):
    """(arctan x / x)^p from the elementary function."""
    mp = ctx.mp
    x = convert(x, mp)
    if x <= 0:
        raise ValueError("x must be positive")
    return (mp.atan(x) / x) ** p


def arctan_ratio_derivative(p: int, x, ctx: PrecisionContext = DEFAULT_CONTEXT):
    """d/dx (arctan x / x)^p = p (arctan x/x)^(p-1) (x/(1+x^2) - arctan x) / x^2."""
    mp = ctx.mp
    x = convert(x, mp)
    if x <= 0:
        raise ValueError("x must be positive")
    at = mp.atan(x)
    return p * (at / x) ** (p - 1) * (x / (1 + x * x) - at) / (x * x)


def hd_identity_check(n_max: int) -> list[bool]:
    """Exact coefficient identities between h_n and the Milgram constants.

    Returns [t_n(1) == 2 h_{n+1} for n = 0..n_max] followed by
    [t_{j-1}(2) == 2 sum_{i<=j} h_i/i for j = 1..n_max].
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    t1 = milgram_row(1, n_max + 1)
    t2 = milgram_row(2, n_max)
    first = [t1[n] == 2 * odd_harmonic(n + 1) for n in range(n_max + 1)]
    second = [t2[j - 1] == 2 * _cum_h_upto(j) for j in range(1, n_max + 1)]
    return first + second
