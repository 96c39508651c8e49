"""Exact closed forms of I(a,p,q,r): published families plus two recurrence engines."""

from ..constexpr import ConstExpr
from ..errors import NotCovered, OutOfRegion
from ..quadrature import IntegralSpec
from .catalog import BaseIntegralId, all_catalog_ids, base_integral, x_lnq
from .lemmas import ERRATA, FAMILIES, covered_specs, family_of, lemma_I
from .recurrences import (PartialFractionDecomposition, arctan_power_integral, logpow_integral,
                          logpow_step, partial_fractions, theta_cos_integral)

__all__ = [
    "BaseIntegralId", "ERRATA", "FAMILIES", "PartialFractionDecomposition", "all_catalog_ids",
    "arctan_power_integral", "base_integral", "closed_form", "covered_specs", "family_of",
    "lemma_I", "logpow_integral", "logpow_step", "partial_fractions", "theta_cos_integral",
]


def closed_form(spec: IntegralSpec, use_errata: bool = True) -> ConstExpr:
    """Best available exact value of I(a,p,q,r).

    Tries, in order: the log-power engine (p = 0), the arctan-power engine
    (q = 0), the explicit families.  NotCovered when none applies.
    """
    if spec.p == 0:
        if spec.r == 0:
            return x_lnq(spec.a, spec.q)
        return logpow_integral(spec.a, spec.q, spec.r)
    if spec.q == 0 and spec.standard:
        try:
            return arctan_power_integral(spec.a, spec.p, spec.r)
        except OutOfRegion:
            pass
    try:
        return lemma_I(spec, use_errata=use_errata)
    except NotCovered:
        raise NotCovered(f"{spec}: no closed form available") from None
