"""Combinatorial cross-checks: permutation statistics and Stirling numbers.

These routes never touch series reversion or production matrices, which is
what makes them useful as independent checks on the algebraic pipeline.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import permutations
from math import factorial
from typing import Dict, List, Tuple

from .errors import TooLarge
from .exactalg import ONE, ZERO, K, X, Y, MultiPoly
from .matrix import Check
from .riordan import family, moment_column, realize, stirling2_pair
from .series import DEFAULT_ORDER, Flavor, series_mul

MAX_ENUMERATION = 8


@dataclass(frozen=True)
class PermStats:
    n: int
    histogram: Dict[Tuple[int, int], int]

    @property
    def total(self) -> int:
        return sum(self.histogram.values())

    def polynomial(self) -> MultiPoly:
        return MultiPoly({(e, c, 0): cnt for (e, c), cnt in self.histogram.items()})


def excedances(perm) -> int:
    return sum(1 for i, p in enumerate(perm) if p > i)


def cycle_count(perm) -> int:
    seen = [False] * len(perm)
    cycles = 0
    for start in range(len(perm)):
        if not seen[start]:
            cycles += 1
            j = start
            while not seen[j]:
                seen[j] = True
                j = perm[j]
    return cycles


def perm_stats(n: int) -> PermStats:
    """Histogram of ``(exc, cyc)`` over all of ``S_n`` (one-line notation)."""
    if n > MAX_ENUMERATION:
        raise TooLarge(f"enumerating S_{n} exceeds the bound {MAX_ENUMERATION}")
    hist = Counter((excedances(p), cycle_count(p)) for p in permutations(range(n)))
    return PermStats(n, dict(hist))


def sv_oracle(n: int) -> MultiPoly:
    """``sum over S_n of x^exc y^cyc`` by brute force."""
    return perm_stats(n).polynomial()


@dataclass(frozen=True)
class StirlingTables:
    s1_unsigned: Tuple[Tuple[int, ...], ...]
    s2_generalized: Tuple[Tuple[MultiPoly, ...], ...]


def stirling1_unsigned(n: int) -> List[List[int]]:
    rows = [[1]]
    for m in range(1, n + 1):
        prev = rows[-1] + [0]
        rows.append([(prev[j - 1] if j else 0) + (m - 1) * prev[j] for j in range(m + 1)])
    return rows


def stirling2(n: int) -> List[List[int]]:
    """Classical ``S(n, k)`` via ``S(n, k) = k S(n-1, k) + S(n-1, k-1)``."""
    rows = [[1]]
    for m in range(1, n + 1):
        prev = rows[-1] + [0]
        rows.append([(prev[j - 1] if j else 0) + j * prev[j] for j in range(m + 1)])
    return rows


def stirling_triangles(n: int, a=None) -> StirlingTables:
    """Rows ``0 .. n``.  The second-kind table is the realized array
    ``[1, (e^{az} - 1)/a]`` with ``a = x - 1`` unless given."""
    a = X - ONE if a is None else a
    s2 = realize(stirling2_pair(a, order=max(n, 1)), n + 1)
    return StirlingTables(
        tuple(tuple(r) for r in stirling1_unsigned(n)),
        tuple(tuple(s2.rows[i][: i + 1]) for i in range(n + 1)),
    )


def _double_sum(n: int, power_of: callable) -> MultiPoly:
    tables = stirling_triangles(n)
    s1 = stirling1_unsigned(n)
    gen = tables.s2_generalized[n]
    out = ZERO
    for j in range(n + 1):
        if not gen[j]:
            continue
        for m in range(j + 1):
            if s1[j][m]:
                out = out + gen[j] * s1[j][m] * power_of(m)
    return out


def sv_from_stirling(n: int) -> MultiPoly:
    """``sum_{m, j} S(n, j) (x-1)^(n-j) |s(j, m)| y^m``."""
    return _double_sum(n, lambda m: Y ** m)


def keuler_from_stirling(n: int) -> MultiPoly:
    """``sum_{m, j} S(n, j) (x-1)^(n-j) |s(j, m)| k^(n-m)``."""
    return _double_sum(n, lambda m: K ** (n - m))


def rising_factorial(v: MultiPoly, n: int) -> MultiPoly:
    out = ONE
    for i in range(n):
        out = out * (v + i)
    return out


def fubini(n: int) -> int:
    return sum(s * factorial(j) for j, s in enumerate(stirling2(n)[n]))


def specialization_checks(n_max: int, order: int = DEFAULT_ORDER) -> Dict[str, Check]:
    """Named integer specializations of the moment polynomials ``F_n(x, y)``.

    Each entry maps a check name to a :class:`Check` whose witness is the
    first failing ``n``.
    """
    if n_max > MAX_ENUMERATION:
        raise TooLarge(f"n_max = {n_max} exceeds {MAX_ENUMERATION}")
    F = moment_column(family("sv-moment", max(order, n_max)), n_max)
    results: Dict[str, Check] = {}

    def first_bad(pred):
        bad = next((n for n in range(n_max + 1) if not pred(n)), None)
        return Check(bad is None, bad)

    results["fubini F_n(2,1)"] = first_bad(lambda n: F[n].subs(x=2, y=1) == fubini(n))

    e1 = Flavor.EGF.build([F[n].subs(x=2, y=1) for n in range(n_max + 1)])
    e2 = Flavor.EGF.build([F[n].subs(x=2, y=2) for n in range(n_max + 1)])
    square = series_mul(e1, e1)
    results["egf F(2,2) = F(2,1)^2"] = first_bad(lambda n: square[n] == e2[n])

    results["F_n(1,y) rising factorial"] = first_bad(
        lambda n: F[n].subs(x=1) == rising_factorial(Y, n))
    results["F_n(1,0) = [n=0]"] = first_bad(lambda n: F[n].subs(x=1, y=0) == (1 if n == 0 else 0))
    results["F_n(1,2) = (n+1)!"] = first_bad(lambda n: F[n].subs(x=1, y=2) == factorial(n + 1))
    return results
