"""Hilbert depth of numerical functions given by integer polynomials."""

from .exact import Cmp, RatPoly, RootInterval, binom, cmp_rational_vs_surd, sturm_isolate
from .numfn import (
    BetaTable,
    CapExceeded,
    HdepthReport,
    NegativeLeading,
    NegativeValue,
    NonPositiveConstantTerm,
    NumFn,
    NumFnError,
    PreconditionFailed,
    beta_direct,
    beta_table,
    c_bound,
    evaluate,
    hdepth,
    validate,
)

__all__ = [
    "BetaTable",
    "CapExceeded",
    "Cmp",
    "HdepthReport",
    "NegativeLeading",
    "NegativeValue",
    "NonPositiveConstantTerm",
    "NumFn",
    "NumFnError",
    "PreconditionFailed",
    "RatPoly",
    "RootInterval",
    "beta_direct",
    "beta_table",
    "binom",
    "c_bound",
    "cmp_rational_vs_surd",
    "evaluate",
    "hdepth",
    "sturm_isolate",
    "validate",
]
