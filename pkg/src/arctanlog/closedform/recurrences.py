"""Exact recurrence engines.

``logpow_integral`` handles int x^a ln^q x / (1+x^2)^r and
``arctan_power_integral`` handles int x^(a-p) arctan^p x / (1+x^2)^r; both start
from a partial-fraction split of x^e / (1+x^2)^r.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass, field
from fractions import Fraction as F
from functools import lru_cache

from ..constexpr import ZERO, ConstExpr
from ..errors import OutOfRegion
from ..special import PI
from .catalog import aq1, bq1, x_lnq


@dataclass(frozen=True)
class PartialFractionDecomposition:
    """x^a/(1+x^2)^r = sum poly x^m + sum even[i]/(1+x^2)^i + sum odd[i] x/(1+x^2)^i."""

    a: int
    r: int
    poly_part: tuple = ()  # ((m, coeff), ...), increasing m
    even_part: dict = field(default_factory=dict)
    odd_part: dict = field(default_factory=dict)

    def numerator(self) -> list[int | F]:
        """Coefficients of (sum of parts) * (1+x^2)^r; must equal the monomial x^a."""
        deg = max([self.a] + [m + 2 * self.r for m, _ in self.poly_part]) + 1
        out = [F(0)] * (deg + 2 * self.r + 2)

        def add_times(shift: int, power: int, c: F):
            for i in range(power + 1):
                out[shift + 2 * i] += c * math.comb(power, i)

        for m, c in self.poly_part:
            add_times(m, self.r, c)
        for i, c in self.even_part.items():
            add_times(0, self.r - i, c)
        for i, c in self.odd_part.items():
            add_times(1, self.r - i, c)
        while len(out) > 1 and out[-1] == 0:
            out.pop()
        return out

    def recombines(self) -> bool:
        expect = [F(0)] * self.a + [F(1)]
        return self.numerator() == expect


def partial_fractions(a: int, r: int) -> PartialFractionDecomposition:
    """Split x^a/(1+x^2)^r by writing x^a = x^e (u-1)^s with u = 1+x^2."""
    if a < 0 or r < 0:
        raise ValueError("a and r must be nonnegative")
    s, e = divmod(a, 2)
    poly: dict[int, F] = {}
    even: dict[int, F] = {}
    odd: dict[int, F] = {}
    for l in range(s + 1):
        c = F(math.comb(s, l) * (-1) ** (s - l))
        if l >= r:
            n = l - r
            for i in range(n + 1):
                m = e + 2 * i
                poly[m] = poly.get(m, F(0)) + c * math.comb(n, i)
        else:
            target = odd if e else even
            target[r - l] = target.get(r - l, F(0)) + c
    return PartialFractionDecomposition(
        a, r,
        tuple(sorted((m, c) for m, c in poly.items() if c)),
        {i: c for i, c in sorted(even.items()) if c},
        {i: c for i, c in sorted(odd.items()) if c},
    )


# -- log-power engine ------------------------------------------------------------

_engine_lock = threading.Lock()


@lru_cache(maxsize=None)
def _B(q: int, r: int) -> ConstExpr:
    """int ln^q x / (1+x^2)^r."""
    if r == 1:
        return bq1(q)
    out = F(2 * r - 3, 2 * r - 2) * _B(q, r - 1)
    if q:
        out = out - F(q, 2 * (r - 1)) * _B(q - 1, r - 1)
    else:
        out = out + F(1, 2 ** r * (r - 1))
    return out


@lru_cache(maxsize=None)
def _A(q: int, r: int) -> ConstExpr:
    """int x ln^q x / (1+x^2)^r."""
    if r == 1:
        return aq1(q)
    out = F(r - 2, r - 1) * _A(q, r - 1)
    if q:
        out = out - F(q, 2 * (r - 1)) * _A(q - 1, r - 1)
    else:
        out = out + F(1, 2 ** r * (r - 1))
    return out


def logpow_integral(a: int, q: int, r: int) -> ConstExpr:
    """Closed form of int_0^1 x^a ln^q x / (1+x^2)^r dx for r >= 1, q >= 0.

    Lowers r with the integration-by-parts step
    J(a,q,r) = (a-1)/(2(r-1)) J(a-2,q,r-1) + q/(2(r-1)) J(a-2,q-1,r-1) - [q=0]/(2^r (r-1))
    folded into the a in {0, 1} recurrences for B and A, after partial fractions.
    """
    if a < 0 or q < 0 or r < 1:
        raise ValueError("need a >= 0, q >= 0, r >= 1")
    pf = partial_fractions(a, r)
    with _engine_lock:
        out = ZERO
        for m, c in pf.poly_part:
            out = out + c * x_lnq(m, q)
        for i, c in pf.even_part.items():
            out = out + c * _B(q, i)
        for i, c in pf.odd_part.items():
            out = out + c * _A(q, i)
    return out


def logpow_step(a: int, q: int, r: int) -> ConstExpr:
    """One integration-by-parts reduction for a >= 2, r >= 2 (used to cross-check the engine)."""
    if a < 2 or r < 2:
        raise ValueError("the step needs a >= 2 and r >= 2")
    out = F(a - 1, 2 * (r - 1)) * logpow_integral(a - 2, q, r - 1)
    if q:
        out = out + F(q, 2 * (r - 1)) * logpow_integral(a - 2, q - 1, r - 1)
    else:
        out = out - F(1, 2 ** r * (r - 1))
    return out


# -- arctan-power engine ----------------------------------------------------------


@lru_cache(maxsize=None)
def theta_cos_integral(p: int, n: int) -> tuple:
    """Coefficients (c_0, ..., c_{p+1}) of int_0^{pi/4} theta^p cos^n theta d theta in powers of pi.

    n must be even.  Uses
    E(p,n) = (n-1)/n E(p,n-2) - p(p-1)/n^2 E(p-2,n) + (pi/4)^p 2^{-n/2}/n
             + p (pi/4)^{p-1} 2^{-n/2}/n^2 - [p=1]/n^2.
    """
    if n % 2 or n < 0 or p < 0:
        raise ValueError("need even n >= 0 and p >= 0")
    coeffs = [F(0)] * (p + 2)
    if n == 0:
        coeffs[p + 1] = F(1, 4 ** (p + 1) * (p + 1))
        return tuple(coeffs)

    def add(src, scale):
        for i, c in enumerate(src):
            coeffs[i] += scale * c

    add(theta_cos_integral(p, n - 2), F(n - 1, n))
    if p >= 2:
        add(theta_cos_integral(p - 2, n), F(-p * (p - 1), n * n))
    half = F(1, 2 ** (n // 2))
    coeffs[p] += half / (n * 4 ** p)
    if p >= 1:
        coeffs[p - 1] += F(p, n * n) * half / 4 ** (p - 1)
    if p == 1:
        coeffs[0] -= F(1, n * n)
    return tuple(coeffs)


def _even_component(p: int, i: int) -> ConstExpr:
    """int arctan^p x / (1+x^2)^i = int_0^{pi/4} theta^p cos^{2i-2} theta."""
    return ConstExpr.pi_poly(theta_cos_integral(p, 2 * i - 2))


def _odd_component(p: int, i: int) -> ConstExpr:
    """int x arctan^p x / (1+x^2)^i for i >= 2, by parts against x/(1+x^2)^i."""
    if i < 2:
        raise OutOfRegion("x arctan^p/(1+x^2) is not a polynomial in pi")
    out = ConstExpr.symbol(PI, p, F(-1, 4 ** p * 2 ** i * (i - 1)))
    if p:
        out = out + F(p, 2 * (i - 1)) * _even_component(p - 1, i)
    else:
        out = out + F(1, 2 * (i - 1))
    return out


def arctan_power_integral(a: int, p: int, r: int) -> ConstExpr:
    """int_0^1 x^(a-p) arctan^p x / (1+x^2)^r dx as a rational polynomial in pi.

    Region: a >= p, r >= 1, a - p < 2r and a - p != 2r - 1; OutOfRegion otherwise.
    """
    e = a - p
    if p < 0 or e < 0:
        raise OutOfRegion("need a >= p >= 0")
    if r < 1 or e >= 2 * r:
        raise OutOfRegion("need r >= 1 and a - p < 2r")
    if e == 2 * r - 1:
        raise OutOfRegion("a - p = 2r - 1 leaves an x/(1+x^2) term whose integral is not a pi polynomial")
    pf = partial_fractions(e, r)
    out = ZERO
    for i, c in pf.even_part.items():
        out = out + c * _even_component(p, i)
    for i, c in pf.odd_part.items():
        out = out + c * _odd_component(p, i)
    return out
