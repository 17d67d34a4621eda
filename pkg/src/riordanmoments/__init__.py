"""Exact exponential Riordan arrays, production matrices and the moment
polynomials they generate."""
from .errors import RiordanMomentsError
from .exactalg import ONE, ZERO, K, MultiPoly, X, Y, evaluate, homogenize_y, parse
from .hankel import hankel_closed_keuler, hankel_closed_sv, hankel_det
from .matrix import Check, Matrix
from .orthopoly import (
    SFraction,
    contract_sfraction,
    deleham_delta,
    jfraction_moments,
    orthogonality_check,
    sfraction_moments,
    ttr_polynomials,
)
from .production import TTRData, compute_ZA, extract_ttr, production_analytic, production_ladder
from .riordan import Family, RiordanPair, family, inverse, moment_column, multiply, realize
from .series import TruncSeries

__version__ = "0.1.0"

__all__ = [
    "Check", "Family", "K", "Matrix", "MultiPoly", "ONE", "RiordanMomentsError",
    "RiordanPair", "SFraction", "TTRData", "TruncSeries", "X", "Y", "ZERO",
    "compute_ZA", "contract_sfraction", "deleham_delta", "evaluate", "extract_ttr",
    "family", "hankel_closed_keuler", "hankel_closed_sv", "hankel_det", "homogenize_y",
    "inverse", "jfraction_moments", "moment_column", "multiply", "orthogonality_check",
    "parse", "production_analytic", "production_ladder", "realize", "sfraction_moments",
    "ttr_polynomials",
]
