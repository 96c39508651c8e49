"""High-precision evaluation of I(a,p,q,r) = int_0^1 x^(a-p) ln^q x arctan^p x / (1+x^2)^r dx.

Three independent routes are provided: exact closed forms (``closedform``),
series expansions (``series``) and tanh-sinh quadrature (``quadrature``).
``verify`` cross-checks them and ``cli`` exposes everything on the command line.
"""

from .closedform import arctan_power_integral, closed_form, lemma_I, logpow_integral
from .constexpr import ConstExpr, format_expr
from .errors import (ArctanLogError, NonConvergence, NotCovered, OutOfRegion, PoleError,
                     SingularTerm, UnknownSuite, UnsupportedParameter)
from .numerics import DEFAULT_CONTEXT, PrecisionContext
from .quadrature import IntegralSpec, integrate_I
from .series import H_SIDE, T_SIDE, SumFamily, TailBound, euler_sum, milgram_sum, series_I
from .verify import run_suite

__version__ = "0.1.0"

__all__ = [
    "ArctanLogError", "ConstExpr", "DEFAULT_CONTEXT", "H_SIDE", "IntegralSpec", "NonConvergence",
    "NotCovered", "OutOfRegion", "PoleError", "PrecisionContext", "SingularTerm", "SumFamily",
    "T_SIDE", "TailBound", "UnknownSuite", "UnsupportedParameter", "arctan_power_integral",
    "closed_form", "euler_sum", "format_expr", "integrate_I", "lemma_I", "logpow_integral",
    "milgram_sum", "run_suite", "series_I",
]
