"""Tanh-sinh quadrature on (0, 1) for x^(a-p) ln^q(x) arctan^p(x) / (1+x^2)^r.

Nodes are x = 1/(1+exp(-2u)) with u = (pi/2) sinh t, weight (pi/4) cosh t / cosh^2 u.
ln x is taken from u directly, so nodes that round to 0 or 1 stay exact in
log space.  Each level halves the step and only adds the odd nodes; per-level
node data is cached by working precision.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from typing import Callable

from .errors import NonConvergence
from .numerics import PrecisionContext, convert, pairwise_sum

MAX_LEVELS = 12


@dataclass(frozen=True)
class IntegralSpec:
    """Parameters of I(a,p,q,r) = int_0^1 x^(a-p) ln^q x arctan^p x / (1+x^2)^r dx."""

    a: int
    p: int
    q: int
    r: int

    def __post_init__(self):
        for name in ("a", "p", "q", "r"):
            v = getattr(self, name)
            if not isinstance(v, int) or v < 0:
                raise ValueError(f"{name} must be a nonnegative integer, got {v!r}")

    @property
    def standard(self) -> bool:
        """True when a >= p; smaller a still gives a convergent integral."""
        return self.a >= self.p

    def __str__(self):
        return f"I({self.a},{self.p},{self.q},{self.r})"


@dataclass(frozen=True)
class QuadratureResult:
    value: object
    estimated_error: object
    levels_used: int
    nodes_evaluated: int


@dataclass(frozen=True)
class _Node:
    weight: object  # (pi/4) cosh t / cosh^2 u, times nothing else
    x: object
    log_x: object
    atan_x: object
    one_plus_x2: object


_node_lock = threading.Lock()
_node_cache: dict[tuple[int, int], tuple[_Node, ...]] = {}


def _t_max(bits: int) -> float:
    two_u = (bits + 64) * math.log(2) + 30
    return math.asinh(two_u / math.pi)


def _make_node(t, mp) -> _Node:
    half_pi = mp.pi / 2
    u = half_pi * mp.sinh(t)
    weight = half_pi / 2 * mp.cosh(t) / mp.cosh(u) ** 2
    if u < 0:
        e = mp.exp(2 * u)
        x = e / (1 + e)
        log_x = 2 * u - mp.log1p(e)
    else:
        e = mp.exp(-2 * u)
        x = 1 / (1 + e)
        log_x = -mp.log1p(e)
    return _Node(weight, x, log_x, mp.atan(x), 1 + x * x)


def _level_nodes(level: int, ctx: PrecisionContext) -> tuple[_Node, ...]:
    """Nodes new at ``level``: t = j h with h = 2^-level, j odd (all j at level 0)."""
    key = (ctx.working_bits, level)
    with _node_lock:
        hit = _node_cache.get(key)
    if hit is not None:
        return hit
    mp = ctx.mp
    jmax = int(_t_max(ctx.working_bits) * 2 ** level)
    step = 1 if level == 0 else 2
    start = 0 if level == 0 else 1
    nodes = []
    # index order: negative side outward-in, then center, then positive side
    js = [j for j in range(start, jmax + 1, step)]
    signed = [-j for j in reversed(js) if j] + js
    for j in signed:
        nodes.append(_make_node(mp.ldexp(mp.mpf(j), -level), mp))
    out = tuple(nodes)
    with _node_lock:
        return _node_cache.setdefault(key, out)


def _de_sum(f: Callable[[_Node], object], ctx: PrecisionContext, target_eps, what: str):
    mp = ctx.mp
    target = convert(target_eps, mp) if target_eps is not None else ctx.tolerance
    if target < ctx.tolerance:
        raise ValueError("target_eps is below the context tolerance")
    level_sums = []
    prev = None
    nodes_used = 0
    passed_at = None
    for level in range(MAX_LEVELS + 1):
        nodes = _level_nodes(level, ctx)
        nodes_used += len(nodes)
        level_sums.append(pairwise_sum([n.weight * f(n) for n in nodes], mp.zero))
        value = mp.ldexp(pairwise_sum(level_sums, mp.zero), -level)
        if prev is not None:
            err = abs(value - prev)
            if passed_at is not None:
                return QuadratureResult(value, err, level + 1, nodes_used)
            if err <= target:
                passed_at = level
        prev = value
    raise NonConvergence(f"tanh-sinh did not reach {mp.nstr(target, 3)} for {what}", partial=prev)


def integrate_I(spec: IntegralSpec, ctx: PrecisionContext, target_eps=None) -> QuadratureResult:
    """Numerical value of I(a,p,q,r) with a successive-level error estimate.

    Raises NonConvergence after MAX_LEVELS step halvings.
    """
    e, p, q, r = spec.a - spec.p, spec.p, spec.q, spec.r

    def f(n: _Node):
        v = n.atan_x ** p if p else 1
        if e:
            v = v * n.x ** e
        if q:
            v = v * n.log_x ** q
        if r:
            v = v / n.one_plus_x2 ** r
        return v

    return _de_sum(f, ctx, target_eps, str(spec))


def integrate_theta(p: int, m: int, ctx: PrecisionContext, target_eps=None) -> QuadratureResult:
    """int_0^{pi/4} theta^p cos^m(theta) d theta for p in {0, 1}."""
    if p not in (0, 1) or m < 0:
        raise ValueError("p must be 0 or 1 and m >= 0")
    mp = ctx.mp
    quarter_pi = mp.pi / 4

    def f(n: _Node):
        theta = quarter_pi * n.x
        v = mp.cos(theta) ** m
        if p:
            v = v * theta
        return v * quarter_pi

    return _de_sum(f, ctx, target_eps, f"theta^{p} cos^{m}")


def integrate_function(fn: Callable, ctx: PrecisionContext, target_eps=None) -> QuadratureResult:
    """int_0^1 fn(x) dx for a smooth user callable; used by tests and diagnostics."""
    return _de_sum(lambda n: fn(n.x), ctx, target_eps, "callable")
