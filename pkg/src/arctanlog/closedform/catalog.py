"""Auxiliary integrals on (0, 1) that the closed-form families are assembled from."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction as F

from ..constexpr import ConstExpr
from ..errors import UnsupportedParameter
from ..special import (
    BETA, CATALAN_G, HARMONIC, LI_HALF, LN2, PI, PSI, W3, ZETA,
    beta_odd_exact,
)

pi = ConstExpr.symbol(PI)
ln2 = ConstExpr.symbol(LN2)
G = ConstExpr.symbol(CATALAN_G)
w3 = ConstExpr.symbol(W3)
beta4 = ConstExpr.symbol(BETA(4))
li4 = ConstExpr.symbol(LI_HALF(4))


def zeta(s: int) -> ConstExpr:
    return ConstExpr.symbol(ZETA(s))


def psi(m: int, z) -> ConstExpr:
    return ConstExpr.symbol(PSI(m, F(z)))


def H(x) -> ConstExpr:
    """H_x; exact for nonnegative integers, an opaque symbol otherwise."""
    x = F(x)
    if x.denominator == 1 and x >= 0:
        return ConstExpr.rational(sum(F(1, i) for i in range(1, int(x) + 1)))
    return ConstExpr.symbol(HARMONIC(x))


_PARAMS = {
    "XM_ARCTAN": 1, "XM_LN_ARCTAN": 1, "XM_LN2_ARCTAN": 1, "XM_LNQ": 2,
    "AQ1": 1, "BQ1": 1,
}
_FIXED = (
    "ARC_OVER", "XARC_OVER", "ARC2_OVER", "XARC2_OVER", "LN_ARCTAN_OVER",
    "XLN_ARCTAN_OVER", "LN_ARC2_OVER", "LN2_ARCTAN_OVER", "XLN2_ARCTAN_OVER",
    "LN_OVER", "XLN_OVER", "LN2_OVER", "XLN2_OVER",
)

# integrand descriptions (x exponent, p, q, r) for the quadrature cross-check
_SHAPE = {
    "ARC_OVER": (0, 1, 0, 1), "XARC_OVER": (1, 1, 0, 1),
    "ARC2_OVER": (0, 2, 0, 1), "XARC2_OVER": (1, 2, 0, 1),
    "LN_ARCTAN_OVER": (0, 1, 1, 1), "XLN_ARCTAN_OVER": (1, 1, 1, 1),
    "LN_ARC2_OVER": (0, 2, 1, 1),
    "LN2_ARCTAN_OVER": (0, 1, 2, 1), "XLN2_ARCTAN_OVER": (1, 1, 2, 1),
    "LN_OVER": (0, 0, 1, 1), "XLN_OVER": (1, 0, 1, 1),
    "LN2_OVER": (0, 0, 2, 1), "XLN2_OVER": (1, 0, 2, 1),
}


@dataclass(frozen=True)
class BaseIntegralId:
    tag: str
    params: tuple = ()

    def __post_init__(self):
        if self.tag in _PARAMS:
            if len(self.params) != _PARAMS[self.tag]:
                raise UnsupportedParameter(f"{self.tag} takes {_PARAMS[self.tag]} parameter(s)")
            if any((not isinstance(v, int)) or v < 0 for v in self.params):
                raise UnsupportedParameter(f"{self.tag} parameters must be nonnegative integers")
        elif self.tag in _FIXED:
            if self.params:
                raise UnsupportedParameter(f"{self.tag} takes no parameters")
        else:
            raise UnsupportedParameter(f"unknown base integral {self.tag!r}")

    def shape(self) -> tuple[int, int, int, int]:
        """(e, p, q, r) with integrand x^e arctan^p ln^q / (1+x^2)^r."""
        t, v = self.tag, self.params
        if t == "XM_ARCTAN":
            return (v[0], 1, 0, 0)
        if t == "XM_LN_ARCTAN":
            return (v[0], 1, 1, 0)
        if t == "XM_LN2_ARCTAN":
            return (v[0], 1, 2, 0)
        if t == "XM_LNQ":
            return (v[0], 0, v[1], 0)
        if t == "AQ1":
            return (1, 0, v[0], 1)
        if t == "BQ1":
            return (0, 0, v[0], 1)
        return _SHAPE[t]

    def __str__(self):
        return self.tag + (f"({','.join(map(str, self.params))})" if self.params else "")


def all_catalog_ids(max_m: int = 6, max_q: int = 4) -> list[BaseIntegralId]:
    out = [BaseIntegralId(t) for t in _FIXED]
    for m in range(max_m + 1):
        out += [BaseIntegralId("XM_ARCTAN", (m,)), BaseIntegralId("XM_LN_ARCTAN", (m,)),
                BaseIntegralId("XM_LN2_ARCTAN", (m,))]
    for q in range(max_q + 1):
        out += [BaseIntegralId("AQ1", (q,)), BaseIntegralId("BQ1", (q,)),
                BaseIntegralId("XM_LNQ", (2, q))]
    return out


def x_arctan(m: int) -> ConstExpr:
    """int x^m arctan x = (pi + H_{(m-2)/4} - H_{m/4}) / (4(1+m)), H via psi."""
    return (pi + psi(0, F(m + 2, 4)) - psi(0, F(m + 4, 4))) / (4 * (1 + m))


def x_ln_arctan(m: int) -> ConstExpr:
    a, b = F(4 + m, 4), F(2 + m, 4)
    inner = (-4 * pi + 4 * psi(0, a) - 4 * psi(0, b)
             - (1 + m) * psi(1, a) + (1 + m) * psi(1, b))
    return inner / (16 * (1 + m) ** 2)


def x_ln2_arctan(m: int) -> ConstExpr:
    a, b = F(m + 4, 4), F(2 + m, 4)
    inner = (32 * pi - 32 * psi(0, a) + 32 * psi(0, b)
             + 8 * (1 + m) * psi(1, a) - 8 * (1 + m) * psi(1, b)
             - (1 + m) ** 2 * psi(2, a) + (1 + m) ** 2 * psi(2, b))
    return inner / (64 * (1 + m) ** 3)


def x_lnq(m: int, q: int) -> ConstExpr:
    """int x^m ln^q x = (-1)^q q! / (1+m)^(q+1)."""
    return ConstExpr.rational(F((-1) ** q * math.factorial(q), (1 + m) ** (q + 1)))


def aq1(q: int) -> ConstExpr:
    """int x ln^q x/(1+x^2) = (-1)^q q! (2^q - 1) zeta(q+1) / 2^(2q+1); ln2/2 at q = 0."""
    if q == 0:
        return ln2 / 2
    return zeta(q + 1) * F((-1) ** q * math.factorial(q) * (2 ** q - 1), 2 ** (2 * q + 1))


def bq1(q: int) -> ConstExpr:
    """int ln^q x/(1+x^2) = (-1)^q q! beta(q+1).

    beta(1) = pi/4, beta(2) = G, odd arguments are rational multiples of pi^s,
    and the remaining even arguments are written as a polygamma difference.
    """
    sign_fact = (-1) ** q * math.factorial(q)
    s = q + 1
    if s == 1:
        return pi / 4
    if s == 2:
        return -G
    if s % 2:
        return ConstExpr.symbol(PI, s, sign_fact * beta_odd_exact(s))
    # q odd: psi^{(q)}(1/4) - psi^{(q)}(3/4) = 4^{q+1} q! beta(q+1)
    return (psi(q, F(1, 4)) - psi(q, F(3, 4))) * F(-1, 4 ** s)


_FIXED_VALUES = {
    "ARC_OVER": lambda: ConstExpr.symbol(PI, 2, F(1, 32)),
    "XARC_OVER": lambda: (4 * G - pi * ln2) / 8,
    "ARC2_OVER": lambda: ConstExpr.symbol(PI, 3, F(1, 192)),
    "XARC2_OVER": lambda: (16 * G * pi - pi ** 2 * ln2 * 2 - 21 * zeta(3)) / 64,
    "LN_ARCTAN_OVER": lambda: (-4 * G * pi + 7 * zeta(3)) / 16,
    "XLN_ARCTAN_OVER": lambda: (3 * pi ** 3 + 6 * pi * ln2 ** 2 - 192 * w3) / 96,
    "LN_ARC2_OVER": lambda: -G * pi ** 2 / 16 + beta4 / 2,
    "LN2_ARCTAN_OVER": lambda: (
        (F(11, 4) * zeta(4) - F(7, 4) * zeta(3) * ln2 + zeta(2) * ln2 ** 2 / 2
         - ln2 ** 4 / 12 - 2 * li4) / 2 - F(25, 128) * zeta(4)
    ),
    "XLN2_ARCTAN_OVER": lambda: F(7, 64) * pi * zeta(3) + beta4 - pi ** 3 * ln2 / 16,
    "LN_OVER": lambda: -G,
    "XLN_OVER": lambda: ConstExpr.symbol(PI, 2, F(-1, 48)),
    "LN2_OVER": lambda: ConstExpr.symbol(PI, 3, F(1, 16)),
    "XLN2_OVER": lambda: zeta(3) * F(3, 16),
}


def base_integral(bid: BaseIntegralId, ctx=None) -> ConstExpr:
    """Closed form of a catalog integral.  ``ctx`` is accepted for interface symmetry."""
    t, v = bid.tag, bid.params
    if t == "XM_ARCTAN":
        return x_arctan(v[0])
    if t == "XM_LN_ARCTAN":
        return x_ln_arctan(v[0])
    if t == "XM_LN2_ARCTAN":
        return x_ln2_arctan(v[0])
    if t == "XM_LNQ":
        return x_lnq(*v)
    if t == "AQ1":
        return aq1(v[0])
    if t == "BQ1":
        return bq1(v[0])
    return _FIXED_VALUES[t]()
