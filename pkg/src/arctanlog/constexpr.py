"""Rational linear combinations of monomials in named constants."""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Mapping

from .numerics import PrecisionContext, convert, pairwise_sum
from .special import PI, ConstantSymbol, constant

Monomial = tuple  # sorted tuple of (ConstantSymbol, positive int exponent)

UNIT: Monomial = ()


def monomial(*factors) -> Monomial:
    """Canonical monomial from (symbol, exponent) pairs or bare symbols."""
    powers: dict[ConstantSymbol, int] = {}
    for f in factors:
        sym, e = (f, 1) if isinstance(f, ConstantSymbol) else f
        powers[sym] = powers.get(sym, 0) + e
    return tuple(sorted((s, e) for s, e in powers.items() if e))


def _mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    return monomial(*m1, *m2)


def _mono_key(m: Monomial):
    return (len(m), tuple((s._key(), e) for s, e in m))


class ConstExpr:
    """Immutable map monomial -> nonzero Fraction."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Fraction] | None = None):
        clean = {}
        for m, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                m = monomial(*m)
                clean[m] = clean.get(m, Fraction(0)) + c
        self._terms = {m: c for m, c in clean.items() if c}
        self._hash = None

    # constructors

    @classmethod
    def rational(cls, c) -> "ConstExpr":
        return cls({UNIT: Fraction(c)})

    @classmethod
    def symbol(cls, sym: ConstantSymbol, exponent: int = 1, coeff=1) -> "ConstExpr":
        if exponent == 0:
            return cls.rational(coeff)
        return cls({((sym, exponent),): Fraction(coeff)})

    @classmethod
    def pi_poly(cls, coeffs: Iterable) -> "ConstExpr":
        """sum_i coeffs[i] * pi^i."""
        return cls({(((PI, i),) if i else UNIT): Fraction(c) for i, c in enumerate(coeffs)})

    # structure

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items(), key=lambda kv: _mono_key(kv[0]))

    def symbols(self) -> set:
        return {s for m in self._terms for s, _ in m}

    def monomials(self) -> list:
        return [m for m, _ in self.items()]

    def is_zero(self) -> bool:
        return not self._terms

    def rational_part(self) -> Fraction:
        return self._terms.get(UNIT, Fraction(0))

    def pi_coefficients(self) -> list[Fraction] | None:
        """Coefficients c_i of sum c_i pi^i, or None if other symbols occur."""
        out: dict[int, Fraction] = {}
        for m, c in self._terms.items():
            if m == UNIT:
                out[0] = c
            elif len(m) == 1 and m[0][0] == PI:
                out[m[0][1]] = c
            else:
                return None
        deg = max(out, default=-1)
        return [out.get(i, Fraction(0)) for i in range(deg + 1)]

    # arithmetic

    def __add__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return other
        merged = dict(self._terms)
        for m, c in other._terms.items():
            merged[m] = merged.get(m, Fraction(0)) + c
        return ConstExpr(merged)

    __radd__ = __add__

    def __neg__(self):
        return ConstExpr({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = _lift(other)
        if other is NotImplemented:
            return other
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = _mono_mul(m1, m2)
                out[m] = out.get(m, Fraction(0)) + c1 * c2
        return ConstExpr(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(Fraction(1) / Fraction(other))
        return NotImplemented

    def scale(self, c) -> "ConstExpr":
        c = Fraction(c)
        return ConstExpr({m: c * v for m, v in self._terms.items()})

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not supported")
        out = ConstExpr.rational(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = ConstExpr.rational(other)
        if not isinstance(other, ConstExpr):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self):
        return f"ConstExpr({format_expr(self, 'text')!r})"

    def __str__(self):
        return format_expr(self, "text")

    def evaluate(self, ctx: PrecisionContext):
        return evaluate(self, ctx)


def _lift(x):
    if isinstance(x, ConstExpr):
        return x
    if isinstance(x, (int, Fraction)):
        return ConstExpr.rational(x)
    if isinstance(x, ConstantSymbol):
        return ConstExpr.symbol(x)
    return NotImplemented


ZERO = ConstExpr()
ONE = ConstExpr.rational(1)


def expr_arith(lhs: ConstExpr, rhs, op: str) -> ConstExpr:
    """``op`` in add/sub/mul/scale; for scale, ``rhs`` is the rational factor."""
    if op == "add":
        return lhs + rhs
    if op == "sub":
        return lhs - rhs
    if op == "mul":
        return lhs * rhs
    if op == "scale":
        return lhs.scale(rhs)
    raise ValueError(f"unknown op {op!r}")


def evaluate(e: ConstExpr, ctx: PrecisionContext):
    """sum coeff * prod constant^exp at the context's working precision."""
    mp = ctx.mp
    parts = []
    for m, c in e.items():
        v = convert(c, mp)
        for sym, exp in m:
            v = v * constant(sym, ctx) ** exp
        parts.append(v)
    return pairwise_sum(parts, mp.zero)


# -- rendering ------------------------------------------------------------------


def _coeff_text(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


# inside a product: named constants, then pi, then ln2 (reads like "G*pi", "pi*ln2")
_RENDER_ORDER = (
    "CATALAN_G", "ZETA", "BETA", "LI_HALF", "W3", "PSI", "HURWITZ", "HARMONIC",
    "GAMMA_EULER", "SQRT3", "PI", "LN2",
)


def _render_sorted(m: Monomial):
    return sorted(m, key=lambda se: (_RENDER_ORDER.index(se[0].kind), se[0].args))


def _mono_text(m: Monomial) -> str:
    return "*".join(s.text() + (f"^{e}" if e != 1 else "") for s, e in _render_sorted(m))


def _mono_latex(m: Monomial) -> str:
    return " ".join(
        (f"{s.latex()}^{{{e}}}" if e != 1 else s.latex()) for s, e in _render_sorted(m)
    )


def format_expr(e: ConstExpr, style: str = "text") -> str:
    """Deterministic rendering in canonical monomial order."""
    if style == "json":
        return json.dumps(to_json(e), separators=(", ", ": "))
    if style not in ("text", "latex"):
        raise ValueError(f"unknown style {style!r}")
    if e.is_zero():
        return "0"
    pieces = []
    for i, (m, c) in enumerate(e.items()):
        neg = c < 0
        a = -c if neg else c
        if style == "text":
            if not m:
                body = _coeff_text(a)
            elif a == 1:
                body = _mono_text(m)
            else:
                body = f"{_coeff_text(a)}*{_mono_text(m)}"
        else:
            if a.denominator == 1:
                lead = "" if (a == 1 and m) else str(a.numerator)
            else:
                lead = rf"\frac{{{a.numerator}}}{{{a.denominator}}}"
            body = (lead + (" " if lead and m else "") + _mono_latex(m)) if m else lead
        if i == 0:
            pieces.append(("-" if neg else "") + body)
        else:
            pieces.append((" - " if neg else " + ") + body)
    return "".join(pieces)


format = format_expr  # noqa: A001  public name used by callers


def to_json(e: ConstExpr) -> dict:
    return {
        "terms": [
            {"coeff": _coeff_text(c), "monomial": [[s.name, exp] for s, exp in m]}
            for m, c in e.items()
        ]
    }


def parse_json(text) -> ConstExpr:
    """Inverse of the json rendering; accepts a string or an already-decoded dict."""
    data = json.loads(text) if isinstance(text, str) else text
    terms = {}
    for t in data["terms"]:
        m = monomial(*((ConstantSymbol.from_name(n), int(e)) for n, e in t["monomial"]))
        terms[m] = terms.get(m, Fraction(0)) + Fraction(t["coeff"])
    return ConstExpr(terms)
