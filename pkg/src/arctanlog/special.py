"""Named constants, Hurwitz zeta, polygamma and harmonic/Milgram tables.

Every constant has a canonical evaluation route built on a small set of
kernels (fixed-point arctan series, Euler-Maclaurin Hurwitz zeta, digamma by
argument raising) plus, where cheap, an independent second route exposed by
:func:`cross_check` so that transcription slips surface as disagreements.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering

from .errors import PoleError
from .numerics import (
    PrecisionContext,
    accelerated_alternating,
    convert,
    crvz_terms_for,
    mp_for_bits,
)

# -- symbols ----------------------------------------------------------------

_KIND_ORDER = (
    "PI", "LN2", "GAMMA_EULER", "CATALAN_G", "ZETA", "BETA", "LI_HALF", "W3",
    "PSI", "HURWITZ", "HARMONIC", "SQRT3",
)
_ARITY = {
    "PI": 0, "LN2": 0, "GAMMA_EULER": 0, "CATALAN_G": 0, "W3": 0, "SQRT3": 0,
    "ZETA": 1, "BETA": 1, "LI_HALF": 1, "HARMONIC": 1, "PSI": 2, "HURWITZ": 2,
}


def _frac_str(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@total_ordering
@dataclass(frozen=True)
class ConstantSymbol:
    """A named real constant, optionally parameterized.

    ``args`` holds ints for ZETA/BETA/LI_HALF orders and the polygamma order,
    and Fractions for polygamma/Hurwitz/harmonic arguments.
    """

    kind: str
    args: tuple = ()

    def __post_init__(self):
        if self.kind not in _ARITY:
            raise ValueError(f"unknown constant kind {self.kind!r}")
        if len(self.args) != _ARITY[self.kind]:
            raise ValueError(f"{self.kind} takes {_ARITY[self.kind]} argument(s)")
        k, a = self.kind, self.args
        if k in ("ZETA", "BETA") and a[0] < 2:
            raise ValueError(f"{k}(s) requires s >= 2")
        if k == "LI_HALF" and a[0] < 1:
            raise ValueError("LI_HALF(n) requires n >= 1")
        if k == "PSI":
            object.__setattr__(self, "args", (int(a[0]), Fraction(a[1])))
            if self.args[0] < 0:
                raise ValueError("PSI order must be >= 0")
        if k == "HURWITZ":
            object.__setattr__(self, "args", (int(a[0]), Fraction(a[1])))
            if self.args[0] < 2:
                raise ValueError("HURWITZ(s, a) requires s >= 2")
        if k == "HARMONIC":
            object.__setattr__(self, "args", (Fraction(a[0]),))

    def _key(self):
        return (_KIND_ORDER.index(self.kind), self.args)

    def __lt__(self, other):
        if not isinstance(other, ConstantSymbol):
            return NotImplemented
        return self._key() < other._key()

    @property
    def name(self) -> str:
        """Machine name such as ``PI`` or ``PSI(1,1/4)``; parsed by :meth:`from_name`."""
        if not self.args:
            return self.kind
        return f"{self.kind}({','.join(_frac_str(Fraction(x)) for x in self.args)})"

    @classmethod
    def from_name(cls, name: str) -> "ConstantSymbol":
        name = name.strip()
        if "(" not in name:
            return cls(name)
        kind, rest = name.split("(", 1)
        if not rest.endswith(")"):
            raise ValueError(f"malformed constant name {name!r}")
        parts = [Fraction(p) for p in rest[:-1].split(",")]
        if kind in ("ZETA", "BETA", "LI_HALF"):
            return cls(kind, (int(parts[0]),))
        return cls(kind, tuple(parts))

    def text(self) -> str:
        k, a = self.kind, self.args
        simple = {"PI": "pi", "LN2": "ln2", "GAMMA_EULER": "gamma", "CATALAN_G": "G",
                  "W3": "W3", "SQRT3": "sqrt3"}
        if k in simple:
            return simple[k]
        if k == "ZETA":
            return f"zeta({a[0]})"
        if k == "BETA":
            return f"beta({a[0]})"
        if k == "LI_HALF":
            return f"Li{a[0]}(1/2)"
        if k == "PSI":
            return f"psi({a[0]},{_frac_str(a[1])})"
        if k == "HURWITZ":
            return f"zeta({a[0]},{_frac_str(a[1])})"
        return f"H({_frac_str(a[0])})"

    def latex(self) -> str:
        k, a = self.kind, self.args
        simple = {"PI": r"\pi", "LN2": r"\ln 2", "GAMMA_EULER": r"\gamma",
                  "CATALAN_G": "G", "W3": "W(3)", "SQRT3": r"\sqrt{3}"}
        if k in simple:
            return simple[k]
        if k == "ZETA":
            return rf"\zeta({a[0]})"
        if k == "BETA":
            return rf"\beta({a[0]})"
        if k == "LI_HALF":
            return rf"\mathrm{{Li}}_{{{a[0]}}}(1/2)"
        if k == "PSI":
            return rf"\psi^{{({a[0]})}}({_frac_str(a[1])})"
        if k == "HURWITZ":
            return rf"\zeta({a[0]},{_frac_str(a[1])})"
        return rf"H_{{{_frac_str(a[0])}}}"

    def __repr__(self):
        return self.name


PI = ConstantSymbol("PI")
LN2 = ConstantSymbol("LN2")
GAMMA_EULER = ConstantSymbol("GAMMA_EULER")
CATALAN_G = ConstantSymbol("CATALAN_G")
W3 = ConstantSymbol("W3")
SQRT3 = ConstantSymbol("SQRT3")


def ZETA(s: int) -> ConstantSymbol:
    return ConstantSymbol("ZETA", (s,))


def BETA(s: int) -> ConstantSymbol:
    return ConstantSymbol("BETA", (s,))


def LI_HALF(n: int) -> ConstantSymbol:
    return ConstantSymbol("LI_HALF", (n,))


def PSI(m: int, z) -> ConstantSymbol:
    return ConstantSymbol("PSI", (m, Fraction(z)))


def HURWITZ(s: int, a) -> ConstantSymbol:
    return ConstantSymbol("HURWITZ", (s, Fraction(a)))


def HARMONIC(x) -> ConstantSymbol:
    return ConstantSymbol("HARMONIC", (Fraction(x),))


# -- exact tables -------------------------------------------------------------

_table_lock = threading.Lock()
_H: list[Fraction] = [Fraction(0)]
_h: list[Fraction] = [Fraction(0)]
_milgram: dict[int, list[Fraction]] = {}
_bernoulli: list[Fraction] = [Fraction(1)]
_euler_even: list[int] = [1]


def harmonic(n: int) -> Fraction:
    """H_n = sum_{k<=n} 1/k, exact."""
    if n < 0:
        raise ValueError("n must be >= 0")
    with _table_lock:
        while len(_H) <= n:
            _H.append(_H[-1] + Fraction(1, len(_H)))
        return _H[n]


def odd_harmonic(n: int) -> Fraction:
    """h_n = sum_{k<=n} 1/(2k-1), exact."""
    if n < 0:
        raise ValueError("n must be >= 0")
    with _table_lock:
        while len(_h) <= n:
            _h.append(_h[-1] + Fraction(1, 2 * len(_h) - 1))
        return _h[n]


def milgram_t(k: int, n: int) -> Fraction:
    """Nested sum t_k(n), built level by level from t_m(0) = 1.

    t_k(n) = sum_{m=0}^{k} t_m(n-1) / (m + n/2).  Level 0 is accepted and
    returns 1 for every k.
    """
    if k < 0 or n < 0:
        raise ValueError("k and n must be >= 0")
    if n == 0:
        return Fraction(1)
    with _table_lock:
        return _milgram_locked(k, n)


def _milgram_locked(k: int, n: int) -> Fraction:
    row = _milgram.setdefault(n, [])
    if len(row) > k:
        return row[k]
    half = Fraction(n, 2)
    acc = row[-1] if row else Fraction(0)
    for m in range(len(row), k + 1):
        prev = Fraction(1) if n == 1 else _milgram_locked(m, n - 1)
        acc = acc + prev / (m + half)
        row.append(acc)
    return row[k]


def milgram_row(n: int, count: int) -> list[Fraction]:
    """[t_0(n), ..., t_{count-1}(n)]."""
    if count <= 0:
        return []
    milgram_t(count - 1, n)
    if n == 0:
        return [Fraction(1)] * count
    with _table_lock:
        return list(_milgram[n][:count])


def bernoulli(n: int) -> Fraction:
    """Bernoulli number B_n with B_1 = -1/2."""
    if n < 0:
        raise ValueError("n must be >= 0")
    with _table_lock:
        while len(_bernoulli) <= n:
            m = len(_bernoulli)
            acc = Fraction(0)
            for j in range(m):
                acc += math.comb(m + 1, j) * _bernoulli[j]
            _bernoulli.append(-acc / (m + 1))
        return _bernoulli[n]


def euler_number(n: int) -> int:
    """Euler (secant) number E_n; zero for odd n."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n % 2:
        return 0
    m = n // 2
    with _table_lock:
        while len(_euler_even) <= m:
            i = len(_euler_even)
            acc = sum(math.comb(2 * i, 2 * j) * _euler_even[j] for j in range(i))
            _euler_even.append(-acc)
        return _euler_even[m]


# -- float kernels ------------------------------------------------------------


def _atan_inv_fixed(x: int, bits: int) -> int:
    """arctan(1/x) scaled by 2**bits, Taylor series in integers."""
    one = 1 << bits
    power = one // x
    x2 = x * x
    total = power
    k = 1
    while power:
        power //= x2
        term = power // (2 * k + 1)
        total += -term if k % 2 else term
        k += 1
    return total


def pi_machin(bits: int):
    mp = mp_for_bits(bits)
    fb = bits + 24
    fixed = 16 * _atan_inv_fixed(5, fb) - 4 * _atan_inv_fixed(239, fb)
    return mp.ldexp(mp.mpf(fixed), -fb)


def pi_agm(bits: int):
    """Gauss-Legendre iteration."""
    wmp = mp_for_bits(bits + 24)
    a = wmp.mpf(1)
    b = 1 / wmp.sqrt(2)
    t = wmp.mpf(0.25)
    p = wmp.mpf(1)
    eps = wmp.ldexp(wmp.mpf(1), -bits - 8)
    while abs(a - b) > eps:
        an = (a + b) / 2
        b = wmp.sqrt(a * b)
        t -= p * (a - an) ** 2
        a = an
        p *= 2
    return mp_for_bits(bits).mpf((a + b) ** 2 / (4 * t))


def ln2_binary(bits: int):
    """sum_{k>=1} 1/(k 2^k) in fixed point."""
    fb = bits + 24
    total = 0
    k = 1
    while True:
        term = (1 << fb) >> k
        if term == 0:
            break
        total += term // k
        k += 1
    mp = mp_for_bits(bits)
    return mp.ldexp(mp.mpf(total), -fb)


def ln2_artanh(bits: int):
    """2 artanh(1/3) in fixed point."""
    fb = bits + 24
    power = (1 << fb) // 3
    total = 0
    k = 0
    while power:
        total += power // (2 * k + 1)
        power //= 9
        k += 1
    mp = mp_for_bits(bits)
    return mp.ldexp(mp.mpf(2 * total), -fb)


def hurwitz_zeta(s: int, a, bits: int):
    """zeta(s, a) = sum_{n>=0} (n+a)^(-s) for integer s >= 2, a not in {0,-1,...}.

    Euler-Maclaurin: direct sum up to N, then integral, endpoint and Bernoulli
    corrections, looping the corrections until they drop below 2^-bits.
    """
    a = Fraction(a)
    if a <= 0 and a.denominator == 1:
        raise PoleError(f"Hurwitz zeta pole at a={a}")
    if s < 2:
        raise ValueError("s must be >= 2")
    wb = bits + 16
    mp = mp_for_bits(wb)
    big_n = 40 + bits // 8 + max(0, -math.floor(a))
    am = convert(a, mp)
    direct = [(am + n) ** (-s) for n in range(big_n)]
    # small terms first for accuracy
    total = mp.fsum(reversed(direct))
    w = am + big_n
    total += w ** (1 - s) / (s - 1) + w ** (-s) / 2
    eps = mp.ldexp(mp.mpf(1), -wb)
    # rising factorial (s)_{2j-1} / (2j)! times B_2j times w^{-s-2j+1}
    w2 = w * w
    wpow = w ** (-s - 1)
    rising = mp.mpf(s)
    j = 1
    while True:
        term = convert(bernoulli(2 * j), mp) / math.factorial(2 * j) * rising * wpow
        total += term
        if abs(term) < eps * abs(total):
            break
        rising *= (s + 2 * j - 1) * (s + 2 * j)
        wpow /= w2
        j += 1
        if j > 4 * bits:
            raise ArithmeticError("Euler-Maclaurin correction did not settle")
    return mp_for_bits(bits).mpf(total)


def digamma(z, bits: int):
    """psi(z) for rational z off the poles: raise the argument, then asymptotic series."""
    z = Fraction(z)
    if z <= 0 and z.denominator == 1:
        raise PoleError(f"digamma pole at z={z}")
    wb = bits + 16
    mp = mp_for_bits(wb)
    floor_target = 40 + bits // 8
    shift = max(0, floor_target - math.floor(z))
    zm = convert(z, mp)
    correction = mp.fsum(1 / (zm + i) for i in range(shift))
    w = zm + shift
    total = mp.log(w) - 1 / (2 * w)
    eps = mp.ldexp(mp.mpf(1), -wb)
    w2 = w * w
    wpow = 1 / w2
    j = 1
    while True:
        term = convert(bernoulli(2 * j), mp) / (2 * j) * wpow
        total -= term
        if abs(term) < eps:
            break
        wpow /= w2
        j += 1
        if j > 4 * bits:
            raise ArithmeticError("digamma asymptotic series did not settle")
    return mp_for_bits(bits).mpf(total - correction)


def polygamma(m: int, z, bits: int):
    """psi^{(m)}(z); m >= 1 via (-1)^{m+1} m! zeta(m+1, z)."""
    if m == 0:
        return digamma(z, bits)
    sign = 1 if m % 2 else -1
    return sign * math.factorial(m) * hurwitz_zeta(m + 1, z, bits)


def dirichlet_beta(s: int, bits: int):
    mp = mp_for_bits(bits)
    q1 = hurwitz_zeta(s, Fraction(1, 4), bits + 8)
    q3 = hurwitz_zeta(s, Fraction(3, 4), bits + 8)
    return mp.mpf((q1 - q3) / mp_for_bits(bits + 8).mpf(4) ** s)


def li_half(n: int, bits: int):
    """Li_n(1/2) = sum_{k>=1} 2^{-k}/k^n."""
    wb = bits + 16
    mp = mp_for_bits(wb)
    terms = []
    k = 1
    while k <= wb + 8:
        terms.append(mp.ldexp(mp.mpf(1), -k) / mp.mpf(k) ** n)
        k += 1
    return mp_for_bits(bits).mpf(mp.fsum(reversed(terms)))


def li_half_log_expansion(n: int, bits: int):
    """Li_n(1/2) from the expansion of Li_n(e^mu) around mu = 0, at mu = -ln 2.

    Li_n(e^mu) = sum_{k != n-1} zeta(n-k) mu^k/k! + mu^(n-1)/(n-1)! (H_{n-1} - ln(-mu)),
    with zeta at nonpositive integers from Bernoulli numbers.  Converges like (ln2/2pi)^k.
    """
    wb = bits + 16
    mp = mp_for_bits(wb)
    mu = -ln2_binary(wb)
    # |zeta(-m)| mu^m/m! ~ 2 (ln2/2pi)^m / 2pi
    k_max = n + 8 + int(wb * math.log(2) / math.log(2 * math.pi / math.log(2)))
    total = mp.zero
    power = mp.mpf(1)  # mu^k / k!
    for k in range(k_max + 1):
        if k == n - 1:
            term = power * (convert(harmonic(n - 1), mp) - mp.log(-mu))
        else:
            s = n - k
            if s >= 2:
                z = hurwitz_zeta(s, 1, wb)
            elif s == 1:
                raise AssertionError("k = n-1 handled above")
            elif s == 0:
                z = mp.mpf(-1) / 2
            else:
                m = -s
                z = convert(-bernoulli(m + 1) / (m + 1), mp)
            term = power * z
        total += term
        power = power * mu / (k + 1)
    return mp_for_bits(bits).mpf(total)


def w3_alternating(bits: int):
    """The alternating 4^{-n} series for Im Li3((1+i)/2)."""
    wb = bits + 16
    mp = mp_for_bits(wb)
    terms = []
    n = 1
    while 2 * n <= wb + 8:
        inner = (mp.mpf(2) / (4 * n - 3) ** 3 + mp.mpf(2) / (4 * n - 2) ** 3
                 + mp.mpf(1) / (4 * n - 1) ** 3)
        t = mp.ldexp(inner, -2 * n)
        terms.append(t if n % 2 else -t)
        n += 1
    return mp_for_bits(bits).mpf(mp.fsum(reversed(terms)))


def w3_trilog(bits: int):
    """Im Li3((1+i)/2) = sum_k sin(k pi/4) 2^{-k/2} / k^3, from the complex power series."""
    wb = bits + 16
    mp = mp_for_bits(wb)
    z = mp.mpc(0.5, 0.5)
    power = mp.mpc(1)
    total = mp.mpc(0)
    k = 1
    while k <= 2 * wb + 16:
        power *= z
        total += power / mp.mpf(k) ** 3
        k += 1
    return mp_for_bits(bits).mpf(total.imag)


def catalan_fast(bits: int):
    """G = pi/8 ln(2+sqrt3) + 3/8 sum 1/((2n+1)^2 C(2n,n)); independent of Hurwitz zeta."""
    wb = bits + 16
    mp = mp_for_bits(wb)
    total = mp.mpf(0)
    n = 0
    binom = 1
    eps = mp.ldexp(mp.mpf(1), -wb)
    while True:
        term = mp.mpf(1) / ((2 * n + 1) ** 2 * binom)
        total += term
        if term < eps:
            break
        n += 1
        binom = binom * (2 * n) * (2 * n - 1) // (n * n)
    pi = pi_machin(wb)
    value = pi / 8 * mp.log(2 + mp.sqrt(3)) + 3 * total / 8
    return mp_for_bits(bits).mpf(value)


def alternating_zeta(s: int, bits: int):
    """zeta(s) from the accelerated eta series, independent of Euler-Maclaurin."""
    n = crvz_terms_for(-bits - 8)
    mp = mp_for_bits(bits + 2 * int(n * 2.6) + 32)
    eta, _ = accelerated_alternating(lambda k: mp.mpf(1) / mp.mpf(k + 1) ** s, n, mp)
    return mp_for_bits(bits).mpf(eta / (1 - mp.ldexp(mp.mpf(1), 1 - s)))


def alternating_beta(s: int, bits: int):
    """beta(s) = sum (-1)^k/(2k+1)^s, accelerated."""
    n = crvz_terms_for(-bits - 8)
    mp = mp_for_bits(bits + 2 * int(n * 2.6) + 32)
    val, _ = accelerated_alternating(lambda k: mp.mpf(1) / mp.mpf(2 * k + 1) ** s, n, mp)
    return mp_for_bits(bits).mpf(val)


def beta_from_polygamma(s: int, bits: int):
    """Even s = 2q: (psi^{(2q-1)}(1/4) - psi^{(2q-1)}(3/4)) / (2^{4q} (2q-1)!)."""
    if s % 2:
        raise ValueError("the polygamma identity covers even s only")
    q = s // 2
    mp = mp_for_bits(bits)
    diff = polygamma(2 * q - 1, Fraction(1, 4), bits + 8) - polygamma(2 * q - 1, Fraction(3, 4), bits + 8)
    return mp.mpf(diff / (mp_for_bits(bits + 8).mpf(2) ** (4 * q) * math.factorial(2 * q - 1)))


def beta_odd_exact(s: int) -> Fraction:
    """Rational r with beta(s) = r * pi^s for odd s."""
    if s % 2 == 0:
        raise ValueError("odd s only")
    m = (s - 1) // 2
    return Fraction((-1) ** m * euler_number(2 * m), 4 ** (m + 1) * math.factorial(2 * m))


def zeta_even_exact(s: int) -> Fraction:
    """Rational r with zeta(s) = r * pi^s for even s."""
    if s % 2 or s < 2:
        raise ValueError("even s >= 2 only")
    return Fraction((-1) ** (s // 2 + 1) * 2 ** (s - 1)) * bernoulli(s) / math.factorial(s)


# -- public evaluation ----------------------------------------------------------

_const_lock = threading.Lock()
_const_cache: dict[tuple[ConstantSymbol, int], object] = {}


def _evaluate(sym: ConstantSymbol, bits: int):
    k, a = sym.kind, sym.args
    if k == "PI":
        return pi_machin(bits)
    if k == "LN2":
        return ln2_binary(bits)
    if k == "GAMMA_EULER":
        return -digamma(1, bits)
    if k == "CATALAN_G":
        return dirichlet_beta(2, bits)
    if k == "ZETA":
        return hurwitz_zeta(a[0], 1, bits)
    if k == "BETA":
        return dirichlet_beta(a[0], bits)
    if k == "LI_HALF":
        return li_half(a[0], bits)
    if k == "W3":
        return w3_alternating(bits)
    if k == "SQRT3":
        return mp_for_bits(bits).sqrt(3)
    if k == "PSI":
        return polygamma(a[0], a[1], bits)
    if k == "HURWITZ":
        return hurwitz_zeta(a[0], a[1], bits)
    if k == "HARMONIC":
        x = a[0]
        if x.denominator == 1 and x >= 0:
            return convert(harmonic(int(x)), mp_for_bits(bits))
        return digamma(x + 1, bits) - digamma(1, bits)
    raise AssertionError(k)


def constant(sym: ConstantSymbol, ctx: PrecisionContext):
    """Value of ``sym`` at the context's working precision (memoized)."""
    bits = ctx.working_bits
    key = (sym, bits)
    with _const_lock:
        hit = _const_cache.get(key)
    if hit is not None:
        return hit
    value = _evaluate(sym, bits)
    with _const_lock:
        return _const_cache.setdefault(key, value)


def harmonic_frac(x, ctx: PrecisionContext):
    """H_x := psi(x+1) + gamma; exact harmonic(x) at nonnegative integers."""
    x = Fraction(x)
    if x + 1 <= 0 and x.denominator == 1:
        raise PoleError(f"H_x has a pole at x={x}")
    return constant(HARMONIC(x), ctx)


def cross_check(sym: ConstantSymbol, ctx: PrecisionContext):
    """Second, independently computed value of ``sym``, or None when no cheap route exists."""
    bits = ctx.working_bits
    k, a = sym.kind, sym.args
    if k == "PI":
        return pi_agm(bits)
    if k == "LN2":
        return ln2_artanh(bits)
    if k == "CATALAN_G":
        return catalan_fast(bits)
    if k == "ZETA":
        return alternating_zeta(a[0], bits)
    if k == "BETA":
        return alternating_beta(a[0], bits)
    if k == "W3":
        return w3_trilog(bits)
    if k == "LI_HALF" and a[0] in (2, 3):
        mp = mp_for_bits(bits)
        pi, l2 = pi_machin(bits), ln2_binary(bits)
        if a[0] == 2:
            return pi ** 2 / 12 - l2 ** 2 / 2
        return 7 * hurwitz_zeta(3, 1, bits) / 8 - pi ** 2 * l2 / 12 + l2 ** 3 / 6
    if k == "LI_HALF":
        return li_half_log_expansion(a[0], bits)
    if k == "GAMMA_EULER":
        # gamma = lim (H_n - ln n) via the Bernoulli asymptotic expansion at n = 2^10
        mp = mp_for_bits(bits + 16)
        n = 1024 + bits
        h = mp.fsum(mp.mpf(1) / i for i in range(1, n + 1))
        val = h - mp.log(n) - mp.mpf(1) / (2 * n)
        j = 1
        eps = mp.ldexp(mp.mpf(1), -bits - 16)
        while True:
            term = convert(bernoulli(2 * j), mp) / (2 * j) / mp.mpf(n) ** (2 * j)
            val += term
            if abs(term) < eps:
                break
            j += 1
        return mp_for_bits(bits).mpf(val)
    return None
