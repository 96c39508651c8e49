"""Exact rationals and the arbitrary-precision float contract.

Rationals are :class:`fractions.Fraction`.  Floats are ``mpf`` values owned by
a private :class:`mpmath.ctx_mp.MPContext` per working precision, so no code in
this package touches the global ``mpmath.mp`` state.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from mpmath.ctx_mp import MPContext

Rational = Fraction

_OPS = {
    "add": lambda x, y: x + y,
    "sub": lambda x, y: x - y,
    "mul": lambda x, y: x * y,
    "div": lambda x, y: x / y,
}

_ctx_lock = threading.Lock()
_mp_contexts: dict[int, MPContext] = {}


def mp_for_bits(bits: int) -> MPContext:
    """Shared mpmath context with ``bits`` of mantissa (created on first use)."""
    with _ctx_lock:
        mp = _mp_contexts.get(bits)
        if mp is None:
            mp = MPContext()
            mp.prec = bits
            _mp_contexts[bits] = mp
        return mp


@dataclass(frozen=True)
class PrecisionContext:
    """Working precision for every analytic evaluation.

    Values are computed with ``precision_bits + guard_bits`` bits of mantissa;
    results are trusted to ``tolerance = 2**(guard_bits - precision_bits)``.
    """

    precision_bits: int = 256
    guard_bits: int = 32

    def __post_init__(self):
        if self.precision_bits < 64:
            raise ValueError("precision_bits must be >= 64")
        if not 0 < self.guard_bits < self.precision_bits / 2:
            raise ValueError("guard_bits must be positive and < precision_bits/2")

    @property
    def working_bits(self) -> int:
        return self.precision_bits + self.guard_bits

    @property
    def mp(self) -> MPContext:
        """The mpmath context all BigFloats of this precision belong to."""
        return mp_for_bits(self.working_bits)

    @property
    def tolerance(self):
        return self.mp.ldexp(self.mp.mpf(1), self.guard_bits - self.precision_bits)

    @property
    def comparison_tolerance(self):
        return self.tolerance

    def extended(self, extra_bits: int) -> "PrecisionContext":
        """A context with ``extra_bits`` more mantissa, same guard."""
        return PrecisionContext(self.precision_bits + extra_bits, self.guard_bits)

    def mpf(self, value):
        """Convert an int, Fraction, string or foreign mpf into this context."""
        return to_bigfloat(value, self)


DEFAULT_CONTEXT = PrecisionContext()


def rational_arith(lhs: Fraction, rhs: Fraction, op: str) -> Fraction:
    """Exact ``lhs op rhs`` for ``op`` in add/sub/mul/div.

    Division by zero raises :class:`ZeroDivisionError`.
    """
    try:
        fn = _OPS[op]
    except KeyError:
        raise ValueError(f"unknown op {op!r}") from None
    return fn(Fraction(lhs), Fraction(rhs))


def convert(x, mp: MPContext):
    """Round a number of any supported type into the mpmath context ``mp``."""
    if isinstance(x, Fraction):
        if x.denominator == 1:
            return mp.mpf(x.numerator)
        # mpf(int) is exact, so the single division is the only rounding
        return mp.mpf(x.numerator) / x.denominator
    if isinstance(x, int):
        return mp.mpf(x)
    if hasattr(x, "_mpf_"):
        if getattr(x, "context", None) is mp:
            return x
        return mp.mpf(x._mpf_)
    return mp.mpf(x)


def to_bigfloat(x, ctx: PrecisionContext):
    """Round ``x`` to nearest at the context's working precision."""
    return convert(x, ctx.mp)


def pairwise_sum(values: Sequence, zero=0):
    """Sum in a fixed binary tree keyed by index; result independent of scheduling."""
    n = len(values)
    if n == 0:
        return zero
    if n <= 8:
        acc = values[0]
        for v in values[1:]:
            acc = acc + v
        return acc
    mid = n // 2
    return pairwise_sum(values[:mid], zero) + pairwise_sum(values[mid:], zero)


def decimal_string(x, digits: int = 40) -> str:
    """Fixed significant-digit rendering used by reports and the CLI."""
    mp = getattr(x, "context", None) or DEFAULT_CONTEXT.mp
    return mp.nstr(mp.mpf(x), digits, strip_zeros=False, min_fixed=-6, max_fixed=6)


# -- alternating-series acceleration ---------------------------------------

_crvz_lock = threading.Lock()
_crvz_cache: dict[tuple[int, int], tuple[list, object]] = {}

CRVZ_RATE = math.log(3 + math.sqrt(8))


def _crvz_weights(n: int, mp: MPContext):
    key = (n, mp.prec)
    with _crvz_lock:
        hit = _crvz_cache.get(key)
    if hit is not None:
        return hit
    d = (3 + mp.sqrt(8)) ** n
    d = (d + 1 / d) / 2
    b = mp.mpf(-1)
    c = -d
    weights = []
    for k in range(n):
        c = b - c
        weights.append(c)
        b = b * (k + n) * (k - n) / ((k + mp.mpf(0.5)) * (k + 1))
    out = (weights, d)
    with _crvz_lock:
        _crvz_cache.setdefault(key, out)
    return out


def crvz_terms_for(eps_log2: float) -> int:
    """Number of accelerated terms needed for a relative error of 2**eps_log2."""
    return max(8, int(-eps_log2 * math.log(2) / CRVZ_RATE) + 8)


def accelerated_alternating(magnitude: Callable[[int], object], n: int, mp: MPContext):
    """Approximate ``sum_{k>=0} (-1)**k magnitude(k)`` from its first ``n`` terms.

    Uses the Cohen-Rodriguez Villegas-Zagier weights.  Returns ``(value, bound)``
    where ``bound = 2*max|a_k|/d`` is the error bound for totally monotone
    sequences.  The caller should hold ``mp`` at a precision at least
    ``log2(d)`` bits above its target because the weights reach size ``d``.
    """
    weights, d = _crvz_weights(n, mp)
    terms = [magnitude(k) for k in range(n)]
    s = pairwise_sum([w * t for w, t in zip(weights, terms)], mp.zero)
    amax = max(abs(t) for t in terms)
    return s / d, 2 * amax / d
