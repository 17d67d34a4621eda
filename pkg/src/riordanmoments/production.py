"""Production matrices of exponential Riordan arrays.

Two independent routes are provided.  :func:`production_analytic` expands the
bivariate generating function ``e^{zw} (Z(z) + A(z) w)`` built from
``A = f'(fbar)`` and ``Z = g'(fbar) / g(fbar)``.  :func:`production_ladder`
multiplies matrices, ``P = L^-1 Lbar``, where ``Lbar`` is ``L`` without its
top row.  A tridiagonal result with unit superdiagonal yields the
three-term recurrence data.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Tuple

from .errors import InsufficientOrder, NonMonicSuperdiagonal, NotTridiagonal
from .exactalg import ONE, ZERO, MultiPoly, Rational
from .matrix import Check, Matrix
from .riordan import RiordanPair, realize
from .series import (
    TruncSeries,
    series_compose,
    series_derivative,
    series_div,
    series_reversion,
)


@dataclass(frozen=True)
class ZAForms:
    A: TruncSeries
    Z: TruncSeries


@dataclass(frozen=True)
class TTRData:
    """Recurrence coefficients ``alpha_0, alpha_1, ...`` and ``beta_1, beta_2, ...``.

    ``beta[0]`` holds ``beta_1``.
    """

    alpha: Tuple[MultiPoly, ...]
    beta: Tuple[MultiPoly, ...]

    def __post_init__(self):
        object.__setattr__(self, "alpha", tuple(self.alpha))
        object.__setattr__(self, "beta", tuple(self.beta))

    def is_favard(self) -> bool:
        """True when no ``beta_n`` vanishes identically."""
        return all(self.beta)

    def subs(self, **values) -> "TTRData":
        return TTRData(tuple(a.subs(**values) for a in self.alpha),
                       tuple(b.subs(**values) for b in self.beta))


@lru_cache(maxsize=64)
def compute_ZA(p: RiordanPair) -> ZAForms:
    fbar = series_reversion(p.f)
    A = series_compose(series_derivative(p.f), fbar)
    Z = series_div(series_compose(series_derivative(p.g), fbar), series_compose(p.g, fbar))
    return ZAForms(A=A, Z=Z)


def production_analytic(za: ZAForms, n: int) -> Matrix:
    """``n x n`` matrix with ``P[r][c] = r! [z^r w^c] e^{zw} (Z(z) + A(z) w)``."""
    if za.Z.order < n - 1 or za.A.order < n:
        raise InsufficientOrder(f"Z, A of orders {za.Z.order}, {za.A.order} too short for size {n}")
    rows = []
    for r in range(n):
        row = []
        for c in range(n):
            # e^{zw} contributes (zw)^m / m!; Z supplies w^0, A w supplies w^1
            acc = ZERO
            m = c
            if r - m >= 0:
                acc = acc + za.Z[r - m] * Rational(1, factorial(m))
            m = c - 1
            if m >= 0 and r - m >= 0:
                acc = acc + za.A[r - m] * Rational(1, factorial(m))
            row.append(acc * factorial(r))
        rows.append(row)
    return Matrix(rows)


def production_ladder(p: RiordanPair, n: int) -> Matrix:
    """``L^-1 Lbar`` restricted to its exact ``n x n`` block."""
    L = realize(p, n + 1)
    lbar = L.submatrix(range(1, n + 1), range(n))
    return L.leading(n).inverse_lower() @ lbar


def production_matrix(p: RiordanPair, n: int) -> Matrix:
    return production_analytic(compute_ZA(p), n)


def is_tridiagonal(m: Matrix) -> Check:
    for r in range(m.n_rows):
        for c in range(m.n_cols):
            if abs(r - c) >= 2 and m[r, c]:
                return Check(False, (r, c))
    return Check(True)


def extract_ttr(m: Matrix) -> TTRData:
    """``alpha_n = m[n][n]``, ``beta_n = m[n][n-1]``; superdiagonal must be all ones."""
    check = is_tridiagonal(m)
    if not check:
        raise NotTridiagonal(f"nonzero entry at {check.witness}")
    n = m.n_rows
    for r in range(n - 1):
        if m[r, r + 1] != ONE:
            raise NonMonicSuperdiagonal(f"entry ({r}, {r + 1}) is {m[r, r + 1]}")
    return TTRData(alpha=[m[i, i] for i in range(n)], beta=[m[i, i - 1] for i in range(1, n)])


def ttr_of(p: RiordanPair, n: int) -> TTRData:
    return extract_ttr(production_matrix(p, n))
