"""Closed forms stated for the named families, as polynomials.

Everything here is an explicit formula; the computed objects in the other
modules are compared against these.
"""
from __future__ import annotations

from typing import Dict, List, Tuple

from .exactalg import ONE, ZERO, K, X, Y, MultiPoly
from .orthopoly import SFraction
from .riordan import Family

# A(z), Z(z) as ascending coefficient lists in z
ZA_CLOSED: Dict[Family, Tuple[List[MultiPoly], List[MultiPoly]]] = {
    Family.KEULER_MOMENT: ([ONE, K + K * X, K * K * X], [ONE, K * X]),
    Family.SV_MOMENT: ([ONE, ONE + X, X], [Y, X * Y]),
    Family.KEULER_SHIFTED_MOMENT: ([ONE, K + K * X, K * K * X], [K * X + 1, K * X * (K + 1)]),
    Family.SV_SHIFTED_MOMENT: ([ONE, ONE + X, X], [X + Y, X * (Y + 1)]),
}


def keuler_alpha(n: int) -> MultiPoly:
    return K * n * (X + 1) + 1


def keuler_beta(n: int) -> MultiPoly:
    return K * X * n * (K * (n - 1) + 1)


def sv_alpha(n: int) -> MultiPoly:
    return Y + (X + 1) * n


def sv_beta(n: int) -> MultiPoly:
    return X * n * (Y + n - 1)


def keuler_shifted_alpha(n: int) -> MultiPoly:
    return K * X * (n + 1) + K * n + 1


def keuler_shifted_beta(n: int) -> MultiPoly:
    return K * X * n * (K * n + 1)


def sv_shifted_alpha(n: int) -> MultiPoly:
    return X * (n + 1) + Y + n


def sv_shifted_beta(n: int) -> MultiPoly:
    return X * n * (Y + n)


TTR_CLOSED = {
    Family.KEULER_MOMENT: (keuler_alpha, keuler_beta),
    Family.SV_MOMENT: (sv_alpha, sv_beta),
    Family.KEULER_SHIFTED_MOMENT: (keuler_shifted_alpha, keuler_shifted_beta),
    Family.SV_SHIFTED_MOMENT: (sv_shifted_alpha, sv_shifted_beta),
}


def stated_keuler_recurrence(n: int) -> Tuple[MultiPoly, MultiPoly]:
    """Shift and weight in ``P_n = (z - a) P_{n-1} - b P_{n-2}`` in the stated form, valid for ``n >= 2``."""
    a = K * (n - 1) * (ONE + X) + 1
    b = K * K * X * (n * n - 3 * n + 2) + K * X * (n - 1)
    return a, b


def stated_sv_recurrence(n: int) -> Tuple[MultiPoly, MultiPoly]:
    a = Y + (ONE + X) * (n - 1)
    b = (X * Y + X * (n - 2)) * (n - 1)
    return a, b


def keuler_sfraction(length: int) -> SFraction:
    """``1, kx, k+1, 2kx, 2k+1, 3kx, ...``."""
    return SFraction([K * (i // 2) + 1 if i % 2 == 0 else K * X * ((i + 1) // 2)
                      for i in range(length)])


def sv_sfraction(length: int) -> SFraction:
    """``y, x, y+1, 2x, y+2, 3x, ...``."""
    return SFraction([Y + i // 2 if i % 2 == 0 else X * ((i + 1) // 2) for i in range(length)])


def deleham_keuler(length: int):
    """``[1, 0, k+1, 0, 2k+1, ...] Delta [0, k, 0, 2k, ...]``."""
    r = [K * (i // 2) + 1 if i % 2 == 0 else ZERO for i in range(length)]
    s = [ZERO if i % 2 == 0 else K * ((i + 1) // 2) for i in range(length)]
    return r, s


def deleham_sv(length: int):
    """``[y, 0, y+1, 0, ...] Delta [0, 1, 0, 2, ...]``."""
    r = [Y + i // 2 if i % 2 == 0 else ZERO for i in range(length)]
    s = [ZERO if i % 2 == 0 else MultiPoly.const((i + 1) // 2) for i in range(length)]
    return r, s


def deleham_a079641(length: int):
    """``[0, 2, 1, 4, 2, 6, 3, ...] Delta [1, 0, 1, 0, ...]``."""
    r = [MultiPoly.const(i // 2 if i % 2 == 0 else i + 1) for i in range(length)]
    s = [ONE if i % 2 == 0 else ZERO for i in range(length)]
    return r, s
