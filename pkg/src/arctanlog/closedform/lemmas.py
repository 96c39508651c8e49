"""Explicit finite-sum closed forms for twelve (a, p, q, r) families.

Each ``_eqN`` function is a literal transcription of the published formula,
sign alternations and all.  Empty sums (upper limit below the lower) are 0.
A transcription that disagrees with quadrature is reported, never patched here;
:data:`ERRATA` holds corrected evaluators that callers may opt into.
"""

from __future__ import annotations

from fractions import Fraction as F
from typing import Callable

from ..constexpr import ZERO, ConstExpr
from ..errors import NotCovered
from ..quadrature import IntegralSpec
from .catalog import G, H, beta4, li4, ln2, pi, psi, w3, zeta


def _sgn(n: int) -> int:
    return -1 if n % 2 else 1


def _sum(lo: int, hi: int, fn: Callable[[int], ConstExpr]) -> ConstExpr:
    out = ZERO
    for j in range(lo, hi + 1):
        out = out + fn(j)
    return out


PI2 = pi ** 2
PI3 = pi ** 3
W3_BLOCK = 3 * PI3 + 6 * pi * ln2 ** 2 - 192 * w3
LOG_ARC2_BLOCK = -3 * G * PI2 + 24 * beta4
ZETA_BLOCK = ((F(11, 4) * zeta(4) - F(7, 4) * zeta(3) * ln2 + zeta(2) * ln2 ** 2 / 2
               - ln2 ** 4 / 12 - 2 * li4) / 2 - F(25, 128) * zeta(4))
BETA_BLOCK = F(7, 64) * pi * zeta(3) + beta4 - PI3 * ln2 / 16


def _eq2(k: int) -> ConstExpr:
    s = _sum(1, k, lambda j: _sgn(j + 1) * (pi + H(F(2 * k - 2 * j - 1, 4)) - H(F(2 * k - 2 * j + 1, 4)))
             / (2 * k - 2 * j + 2))
    return (PI2 / 8 - s - _sgn(k) * 2 * G + _sgn(k) * pi * ln2 / 2) / (2 * (2 * k + 1))


def _eq3(k: int) -> ConstExpr:
    s = _sum(1, k + 1, lambda j: _sgn(j + 1) * (pi + H(F(k - j, 2)) - H(F(k - j + 1, 2)))
             / (2 * k - 2 * j + 3))
    return (PI2 / 8 - s - PI2 * _sgn(k + 1) / 8) / (4 * (k + 1))


def _eq4(k: int) -> ConstExpr:
    def outer(j):
        inner = _sum(1, k + 1 - j, lambda jp: _sgn(jp + 1)
                     * (pi + H(F(k - j - jp, 2)) - H(F(k - j - jp + 1, 2))) / (2 * k - 2 * j - 2 * jp + 3))
        bracket = PI2 / 8 - inner - _sgn(k + 1 - j) * PI2 / 8
        return F(_sgn(j + 1), 4 * (k + 1 - j)) * bracket

    tail = (16 * G * pi - PI2 * 2 * ln2 - 21 * zeta(3)) * F(_sgn(k) * 3, 64 * (2 * k + 1))
    return PI3 / (64 * (2 * k + 1)) - F(3, 2 * k + 1) * _sum(1, k, outer) - tail


def _eq5(k: int) -> ConstExpr:
    def outer(j):
        inner = _sum(1, k + 1 - j, lambda jp: _sgn(jp + 1)
                     * (pi + H(F(2 * k - 2 * j - 2 * jp + 1, 4)) - H(F(2 * k - 2 * j - 2 * jp + 3, 4)))
                     / (2 * k - 2 * j - 2 * jp + 4))
        sg = _sgn(k + 1 - j)
        bracket = PI2 / 8 - inner - sg * 2 * G + sg * pi * ln2 / 2
        return F(_sgn(j + 1), 2 * (2 * k + 3 - 2 * j)) * bracket

    return (PI3 / (128 * (k + 1)) - F(3, 2 * k + 2) * _sum(1, k + 1, outer)
            - PI3 * F(_sgn(k + 1), 128 * (k + 1)))


def _psi01_block(c: int, a: F, b: F) -> ConstExpr:
    """-4pi + 4psi0(a) - 4psi0(b) - c psi1(a) + c psi1(b)."""
    return -4 * pi + 4 * psi(0, a) - 4 * psi(0, b) - c * psi(1, a) + c * psi(1, b)


def _psi012_block(c1: int, c2: int, a: F, b: F) -> ConstExpr:
    """32pi - 32psi0(a) + 32psi0(b) + c1 (psi1(a) - psi1(b)) - c2 (psi2(a) - psi2(b))."""
    return (32 * pi - 32 * psi(0, a) + 32 * psi(0, b)
            + c1 * (psi(1, a) - psi(1, b)) - c2 * (psi(2, a) - psi(2, b)))


def _eq6(k: int) -> ConstExpr:
    s1 = _sum(1, k, lambda j: _sgn(j + 1) * (pi + H(F(2 * k - 2 * j - 1, 4)) - H(F(2 * k - 2 * j + 1, 4)))
              / (2 + 2 * k - 2 * j))
    first = PI2 / 8 - s1 - _sgn(k) * 2 * G + _sgn(k) * pi * ln2 / 2
    s2 = _sum(1, k, lambda j: F(_sgn(j + 1), 64 * (k + 1 - j) ** 2)
              * _psi01_block(2 * (k + 1 - j), F(2 * k + 5 - 2 * j, 4), F(2 * k + 3 - 2 * j, 4)))
    second = s2 + F(_sgn(k), 96) * W3_BLOCK
    s3 = _sum(1, k, lambda j: _sgn(j + 1) * (pi + H(F(2 * k - 1 - 2 * j, 4)) - H(F(2 * k + 1 - 2 * j, 4)))
              / (8 * (k + 1 - j)))
    third = s3 + F(_sgn(k), 8) * (4 * G - pi * ln2)
    return (-PI2 / 16 + F(k, 2 * k + 1) * first - 2 * second + 2 * third) / (2 * k + 1)


def _eq7(k: int) -> ConstExpr:
    s1 = _sum(1, k + 1, lambda j: _sgn(j + 1) * (pi + H(F(k - j, 2)) - H(F(k - j + 1, 2)))
              / (2 * k - 2 * j + 3))
    first = PI2 / 8 - s1 - _sgn(k + 1) * PI2 / 8
    s2 = _sum(1, k + 1, lambda j: F(_sgn(j + 1), 16 * (2 * k + 3 - 2 * j) ** 2)
              * _psi01_block(2 * k + 3 - 2 * j, F(k + 3 - j, 2), F(k + 2 - j, 2)))
    second = s2 + F(_sgn(k + 1), 16) * (-4 * G * pi + 7 * zeta(3))
    s3 = _sum(1, k + 1, lambda j: _sgn(j + 1) * (pi + H(F(k - j, 2)) - H(F(k + 1 - j, 2)))
              / (4 * (2 * k + 3 - 2 * j)))
    third = s3 + _sgn(k + 1) * PI2 / 32
    return (-PI2 / 16 + F(2 * k + 1, 4 * (k + 1)) * first - 2 * second + 2 * third) / (2 * (k + 1))


def _eq8(k: int) -> ConstExpr:
    def outer(j):
        m = k - j
        sg = _sgn(m)
        s1 = _sum(1, m, lambda jp: _sgn(jp + 1)
                  * (pi + H(F(2 * k - 2 * j - 2 * jp - 1, 4)) - H(F(2 * k - 2 * j - 2 * jp + 1, 4)))
                  / (2 * k + 2 - 2 * j - 2 * jp))
        first = PI2 / 8 - sg * 2 * G + F(sg, 2) * pi * ln2 - s1
        s2 = _sum(1, m, lambda jp: F(_sgn(jp + 1), 64 * (k + 1 - j - jp) ** 2)
                  * _psi01_block(2 * (k + 1 - j - jp), F(2 * k + 5 - 2 * j - 2 * jp, 4),
                                 F(2 * k + 3 - 2 * j - 2 * jp, 4)))
        second = s2 + F(sg, 96) * W3_BLOCK
        s3 = _sum(1, m, lambda jp: _sgn(jp + 1)
                  * (pi + H(F(2 * k - 1 - 2 * j - 2 * jp, 4)) - H(F(2 * k + 1 - 2 * j - 2 * jp, 4)))
                  / (8 * (k + 1 - j - jp)))
        third = s3 + sg * (4 * G - pi * ln2) / 8
        body = -PI2 / 16 + F(m, 2 * k - 2 * j + 1) * first - 2 * second + 2 * third
        return F(_sgn(j + 1), 2 * k - 2 * j + 1) * body

    return _sum(1, k, outer) + F(_sgn(k), 48) * LOG_ARC2_BLOCK


def _eq9(k: int, w3_sign: int = 1) -> ConstExpr:
    """``w3_sign = -1`` flips the W(3) block in the second j-sum, as integration by parts requires."""
    K = k + 1

    def h4(j, jp):
        return pi + H(F(2 * k - 2 * j - 2 * jp + 1, 4)) - H(F(2 * k - 2 * j - 2 * jp + 3, 4))

    def first_outer(j):
        sg = _sgn(k + 1 - j)
        inner = _sum(1, k + 1 - j, lambda jp: _sgn(jp + 1) * h4(j, jp) / (2 * k - 2 * j - 2 * jp + 4))
        return F(_sgn(j + 1), 2 * (2 * k + 3 - 2 * j)) * (PI2 / 8 - inner - sg * 2 * G + sg * pi * ln2 / 2)

    def second_outer(j):
        sg = _sgn(k + 1 - j)
        inner1 = _sum(1, k + 1 - j, lambda jp: _sgn(jp + 1) * h4(j, jp) / (2 * (k - j - jp + 2)))
        paren = PI2 / 8 - sg * 2 * G + sg * pi * ln2 / 2 - inner1
        psis = _sum(1, k + 1 - j, lambda jp: F(_sgn(jp + 1), 64 * (k + 2 - j - jp) ** 2)
                    * _psi01_block(2 * (k + 2 - j - jp), F(2 * k + 7 - 2 * j - 2 * jp, 4),
                                   F(2 * k + 5 - 2 * j - 2 * jp, 4)))
        hsum = _sum(1, k + 1 - j, lambda jp: _sgn(jp + 1)
                    * (pi + H(F(2 * k + 1 - 2 * j - 2 * jp, 4)) - H(F(2 * k + 3 - 2 * j - 2 * jp, 4)))
                    / (8 * (k + 2 - j - jp)))
        body = (-PI2 / 16 + F(k + 1 - j, 2 * k + 3 - 2 * j) * paren - 2 * psis
                + F(w3_sign * sg, 48) * W3_BLOCK + 2 * (hsum + sg * (4 * G - pi * ln2) / 8))
        return F(_sgn(j + 1), 2 * k + 3 - 2 * j) * body

    def third_outer(j):
        sg = _sgn(k + 1 - j)
        inner = _sum(1, k + 1 - j, lambda jp: _sgn(jp + 1)
                     * (pi + H(F(2 * k + 1 - 2 * j - 2 * jp, 4)) - H(F(2 * k + 3 - 2 * j - 2 * jp, 4)))
                     / (2 * (k + 2 - j - jp)))
        return F(_sgn(j + 1), 2 * (2 * k + 3 - 2 * j)) * (PI2 / 8 - sg * 2 * G - inner + F(sg, 2) * pi * ln2)

    out = (-PI3 / (128 * K) + F(2 * k + 1, 256 * K ** 2) * PI3
           - F(3 * (2 * k + 1), 4 * K ** 2) * _sum(1, K, first_outer)
           - F((2 * k + 1) * _sgn(k + 1), 256 * K ** 2) * PI3
           - F(3, 2 * K) * _sum(1, K, second_outer)
           - F(_sgn(k + 1), 32 * K) * LOG_ARC2_BLOCK
           + F(3, 2 * K) * (_sum(1, K, third_outer) + F(_sgn(k + 1), 192) * PI3))
    return out


def _eq10(k: int) -> ConstExpr:
    s = _sum(1, k, lambda j: F(_sgn(j + 1), 64 * (1 + 2 * k - 2 * j) ** 3)
             * _psi012_block(8 * (1 + 2 * k - 2 * j), (1 + 2 * k - 2 * j) ** 2,
                             F(k + 2 - j, 2), F(1 + k - j, 2)))
    return s + _sgn(k) * ZETA_BLOCK


def _eq11(k: int) -> ConstExpr:
    s = _sum(1, k, lambda j: F(_sgn(j + 1), 512 * (1 + k - j) ** 3)
             * _psi012_block(16 * (1 + k - j), 4 * (1 + k - j) ** 2,
                             F(2 * k + 5 - 2 * j, 4), F(3 + 2 * k - 2 * j, 4)))
    return s + _sgn(k) * BETA_BLOCK


def _eq12(k: int) -> ConstExpr:
    s1 = _sum(1, k, lambda j: F(_sgn(j + 1), 512 * (k + 1 - j) ** 3)
              * _psi012_block(16 * (k + 1 - j), 4 * (k + 1 - j) ** 2,
                              F(2 * k + 5 - 2 * j, 4), F(2 * k + 3 - 2 * j, 4)))
    first = s1 + _sgn(k) * BETA_BLOCK
    s2 = _sum(1, k, lambda j: _sgn(j + 1) * (pi + H(F(2 * k - 1 - 2 * j, 4)) - H(F(2 * k - 2 * j + 1, 4)))
              / (2 * (k + 1 - j)))
    paren = PI2 / 8 - s2 - _sgn(k) * 2 * G + _sgn(k) * pi * ln2 / 2
    s3 = _sum(1, k, lambda j: F(_sgn(j + 1), 64 * (k + 1 - j) ** 2)
              * _psi01_block(2 * (k + 1 - j), F(2 * k + 5 - 2 * j, 4), F(2 * k + 3 - 2 * j, 4)))
    s4 = _sum(1, k, lambda j: _sgn(j + 1) * (pi + H(F(2 * k - 1 - 2 * j, 4)) - H(F(2 * k + 1 - 2 * j, 4)))
              / (8 * (k + 1 - j)))
    brace = (-PI2 / 16 + F(k, 2 * k + 1) * paren
             - 2 * (s3 + F(_sgn(k), 96) * W3_BLOCK)
             + 2 * (s4 + F(_sgn(k), 8) * (4 * G - pi * ln2)))
    return F(-2, 2 * k + 1) * first - F(2, (2 * k + 1) ** 2) * brace


def _eq13(k: int) -> ConstExpr:
    K = k + 1
    s1 = _sum(1, K, lambda j: F(_sgn(j + 1), 64 * (2 * k + 3 - 2 * j) ** 3)
              * _psi012_block(8 * (2 * k + 3 - 2 * j), (2 * k + 3 - 2 * j) ** 2,
                              F(k + 3 - j, 2), F(k + 2 - j, 2)))
    first = s1 + _sgn(k + 1) * ZETA_BLOCK
    s2 = _sum(1, K, lambda j: _sgn(j + 1) * (pi + H(F(k - j, 2)) - H(F(k - j + 1, 2))) / (2 * k + 3 - 2 * j))
    paren = PI2 / 8 - s2 + _sgn(k) * PI2 / 8
    s3 = _sum(1, K, lambda j: F(_sgn(j + 1), 16 * (2 * k + 3 - 2 * j) ** 2)
              * _psi01_block(2 * k + 3 - 2 * j, F(k + 3 - j, 2), F(k + 2 - j, 2)))
    s4 = _sum(1, K, lambda j: _sgn(j + 1) * (pi + H(F(k - j, 2)) - H(F(k + 1 - j, 2)))
              / (4 * (2 * k + 3 - 2 * j)))
    brace = (-PI2 / 16 + F(2 * k + 1, 4 * K) * paren
             - 2 * (s3 + F(_sgn(k + 1), 16) * (-4 * G * pi + 7 * zeta(3)))
             + 2 * (s4 + _sgn(k + 1) * PI2 / 32))
    return F(-1, K) * first - F(1, 2 * K ** 2) * brace


# (p, q, r, parity of a) -> (equation label, offset c with a = 2k + c, evaluator)
FAMILIES = {
    (2, 0, 0, 0): ("lemma2.2/eq2", 2, _eq2),
    (2, 0, 0, 1): ("lemma2.2/eq3", 3, _eq3),
    (3, 0, 0, 1): ("lemma2.3/eq4", 3, _eq4),
    (3, 0, 0, 0): ("lemma2.3/eq5", 4, _eq5),
    (2, 1, 0, 0): ("lemma2.4/eq6", 2, _eq6),
    (2, 1, 0, 1): ("lemma2.4/eq7", 3, _eq7),
    (2, 1, 1, 0): ("lemma2.5/eq8", 2, _eq8),
    (3, 1, 0, 0): ("lemma2.6/eq9", 4, _eq9),
    (1, 2, 1, 1): ("lemma2.7/eq10", 1, _eq10),
    (1, 2, 1, 0): ("lemma2.7/eq11", 2, _eq11),
    (2, 2, 0, 0): ("lemma2.8/eq12", 2, _eq12),
    (2, 2, 0, 1): ("lemma2.8/eq13", 3, _eq13),
}

# opt-in corrected evaluators, filled by label when a transcription is found wrong
ERRATA: dict[str, Callable[[int], ConstExpr]] = {
    "lemma2.6/eq9": lambda k: _eq9(k, w3_sign=-1),
}


def family_of(spec: IntegralSpec) -> tuple[str, int]:
    """(equation label, k) for a covered spec; NotCovered otherwise."""
    key = (spec.p, spec.q, spec.r, spec.a % 2)
    fam = FAMILIES.get(key)
    if fam is None or spec.a < fam[1]:
        raise NotCovered(f"{spec} is not one of the explicit closed-form families")
    return fam[0], (spec.a - fam[1]) // 2


def lemma_I(spec: IntegralSpec, use_errata: bool = False) -> ConstExpr:
    """Closed form of a covered I(a,p,q,r) as the published finite sum."""
    label, k = family_of(spec)
    if use_errata and label in ERRATA:
        return ERRATA[label](k)
    fam = FAMILIES[(spec.p, spec.q, spec.r, spec.a % 2)]
    return fam[2](k)


def covered_specs(k_max: int = 6) -> list[tuple[str, int, IntegralSpec]]:
    out = []
    for (p, q, r, _), (label, c, _) in FAMILIES.items():
        for k in range(k_max + 1):
            out.append((label, k, IntegralSpec(2 * k + c, p, q, r)))
    return out
