"""Exponential Riordan arrays ``[g, f]`` held as pairs of truncated series.

Column ``c`` of ``[g, f]`` has exponential generating function ``g f^c / c!``.
Arrays are realized as matrices on demand; the pair is the source of truth.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import List, Sequence

from .errors import InsufficientOrder, UnknownFamily
from .exactalg import ONE, ZERO, K, X, Y, MultiPoly, Rational, as_poly
from .matrix import Matrix
from .series import (
    DEFAULT_ORDER,
    TruncSeries,
    series_compose,
    series_exp,
    series_inverse,
    series_log,
    series_mul,
    series_pow_recip_k,
    series_pow_sym,
    series_reversion,
)

DEFAULT_SIZE = 8


@dataclass(frozen=True)
class RiordanPair:
    g: TruncSeries
    f: TruncSeries
    label: str = ""

    def __post_init__(self):
        if self.g[0] != ONE:
            raise ValueError(f"{self.label or 'pair'}: g(0) must be 1, got {self.g[0]}")
        if self.f.order < 1 or self.f[0] or self.f[1] != ONE:
            raise ValueError(f"{self.label or 'pair'}: f must start z + O(z^2)")

    @property
    def order(self) -> int:
        return min(self.g.order, self.f.order)

    def same_as(self, other: "RiordanPair") -> bool:
        return self.g.agrees(other.g) and self.f.agrees(other.f)

    def subs(self, **values) -> "RiordanPair":
        return RiordanPair(self.g.subs(**values), self.f.subs(**values), self.label)

    def __matmul__(self, other: "RiordanPair") -> "RiordanPair":
        return multiply(self, other)


def realize(p: RiordanPair, n: int = DEFAULT_SIZE) -> Matrix:
    """The ``n x n`` leading block; entry ``(r, c) = r! [z^r] g f^c / c!``."""
    if p.order < n - 1:
        raise InsufficientOrder(f"order {p.order} cannot realize {n} rows")
    g, f = p.g.truncate(n - 1), p.f.truncate(n - 1)
    rows = [[ZERO] * n for _ in range(n)]
    col = g
    for c in range(n):
        scale = Rational(1, factorial(c))
        for r in range(c, n):
            rows[r][c] = col[r] * (scale * factorial(r))
        if c + 1 < n:
            col = series_mul(col, f)
    return Matrix(rows)


def multiply(a: RiordanPair, b: RiordanPair) -> RiordanPair:
    """Group law ``[g, f] [h, l] = [g (h o f), l o f]``."""
    g = series_mul(a.g, series_compose(b.g, a.f))
    f = series_compose(b.f, a.f)
    return RiordanPair(g, f, f"{a.label}*{b.label}")


def inverse(p: RiordanPair) -> RiordanPair:
    """``[g, f]^-1 = [1 / (g o fbar), fbar]``."""
    fbar = series_reversion(p.f)
    g = series_inverse(series_compose(p.g, fbar))
    return RiordanPair(g, fbar, f"inv({p.label})")


def apply_sequence(p: RiordanPair, u: Sequence, n: int | None = None) -> List[MultiPoly]:
    """Matrix-vector product of the realized array with ``u``."""
    n = len(u) if n is None else n
    return realize(p, n).apply(list(u)[:n])


def apply_sequence_egf(p: RiordanPair, u: Sequence) -> List[MultiPoly]:
    """Same product through EGFs: the result has EGF ``g(z) U(f(z))``."""
    n = len(u) - 1
    U = TruncSeries([as_poly(t) * Rational(1, factorial(i)) for i, t in enumerate(u)])
    out = series_mul(p.g.truncate(n), series_compose(U, p.f.truncate(n)))
    return out.egf_terms()


def moment_column(p: RiordanPair, n: int) -> List[MultiPoly]:
    """First ``n + 1`` entries of column 0, i.e. ``r! [z^r] g``."""
    if p.g.order < n:
        raise InsufficientOrder(f"order {p.g.order} cannot supply moment {n}")
    return p.g.truncate(n).egf_terms()


# -- building blocks -------------------------------------------------------

def _one_plus(c, order):
    return TruncSeries.from_poly([ONE, as_poly(c)], order)


def _log_ratio(a, b, divisor, order):
    """``ln((1 + a z)/(1 + b z)) / divisor``, divided coefficientwise."""
    ratio = series_mul(_one_plus(a, order), series_inverse(_one_plus(b, order)))
    return series_log(ratio).exact_div(divisor)


def _moment_f(scale, order):
    """``(e^{sz} - e^{sxz}) / (s (e^{sxz} - x e^{sz}))`` with ``s = scale``."""
    e1 = TruncSeries.exp_linear(scale, order)
    ex = TruncSeries.exp_linear(scale * X, order)
    num = (e1 - ex).exact_div(scale * (ONE - X))
    den = (ex - e1 * X).exact_div(ONE - X)
    return series_mul(num, series_inverse(den))


def _moment_h(scale, order):
    """``(e^{s z (x-1)} - x) / (1 - x)``; the moment ``g`` is a power of its inverse."""
    e = TruncSeries.exp_linear(scale * (X - ONE), order)
    shifted = TruncSeries((e[0] - X,) + e.coeffs[1:])
    return shifted.exact_div(ONE - X)


class Family(enum.Enum):
    KEULER_COEFF = "keuler-coeff"
    KEULER_MOMENT = "keuler-moment"
    SV_COEFF = "sv-coeff"
    SV_MOMENT = "sv-moment"
    KEULER_SHIFTED_COEFF = "keuler-shifted-coeff"
    KEULER_SHIFTED_MOMENT = "keuler-shifted-moment"
    SV_SHIFTED_COEFF = "sv-shifted-coeff"
    SV_SHIFTED_MOMENT = "sv-shifted-moment"
    STIRLING_BRIDGE = "stirling-bridge"

    @property
    def is_moment(self) -> bool:
        return self.name.endswith("MOMENT")

    @property
    def partner(self) -> "Family | None":
        """The coefficient array for a moment array and vice versa."""
        if self is Family.STIRLING_BRIDGE:
            return None
        if self.is_moment:
            return Family[self.name.replace("MOMENT", "COEFF")]
        return Family[self.name.replace("COEFF", "MOMENT")]


MOMENT_FAMILIES = tuple(f for f in Family if f.is_moment)


@lru_cache(maxsize=None)
def family(name, order: int = DEFAULT_ORDER) -> RiordanPair:
    """Construct a named array from its closed-form ``(g, f)``."""
    try:
        fam = name if isinstance(name, Family) else Family(name)
    except ValueError:
        try:
            fam = Family[str(name).upper().replace("-", "_")]
        except KeyError:
            raise UnknownFamily(name) from None
    N = order
    if fam is Family.STIRLING_BRIDGE:
        e = TruncSeries.exp_linear(X, N) - TruncSeries.exp_linear(ONE, N) * X
        f = TruncSeries.z(N) - series_log(e.exact_div(ONE - X))
        return RiordanPair(TruncSeries.one(N), f, fam.value)

    keuler = fam.name.startswith("KEULER")
    shifted = "SHIFTED" in fam.name
    scale = K if keuler else ONE
    if fam.is_moment:
        h_inv = series_inverse(_moment_h(scale, N))
        g = series_pow_recip_k(h_inv) if keuler else series_pow_sym(h_inv, Y)
        if shifted:
            # derivative of the unshifted g (divided by y in the SV case)
            g = series_mul(series_mul(TruncSeries.exp_linear(scale * (X - ONE), N), g), h_inv)
        f = _moment_f(scale, N)
    else:
        base = series_inverse(_one_plus(scale, N))
        g = series_pow_recip_k(base) if keuler else series_pow_sym(base, Y)
        if shifted:
            g = series_mul(g, series_inverse(_one_plus(scale * X, N)))
        f = _log_ratio(scale, scale * X, scale * (ONE - X), N)
    return RiordanPair(g, f, fam.value)


# -- other arrays used in the factorizations --------------------------------

def pascal(order: int = DEFAULT_ORDER) -> RiordanPair:
    """The binomial matrix ``[e^z, z]``."""
    return RiordanPair(TruncSeries.exp_linear(ONE, order), TruncSeries.z(order), "pascal")


def stirling2_pair(a=ONE, order: int = DEFAULT_ORDER) -> RiordanPair:
    """``[1, (e^{az} - 1)/a]``; entries ``S(n, k) a^(n-k)``. ``a`` may be a polynomial."""
    a = as_poly(a)
    coeffs, p = [ZERO], ONE
    for n in range(1, order + 1):
        coeffs.append(p * Rational(1, factorial(n)))
        p = p * a
    return RiordanPair(TruncSeries.one(order), TruncSeries(coeffs), f"stirling2({a})")


def stirling1_pair(order: int = DEFAULT_ORDER) -> RiordanPair:
    """``[1, ln(1/(1-z))]``, the unsigned Stirling numbers of the first kind."""
    f = TruncSeries([ZERO] + [MultiPoly.const(Rational(1, n)) for n in range(1, order + 1)])
    return RiordanPair(TruncSeries.one(order), f, "stirling1")


def exp_pair(c, order: int = DEFAULT_ORDER) -> RiordanPair:
    """``[e^{cz}, z]``."""
    return RiordanPair(TruncSeries.exp_linear(c, order), TruncSeries.z(order), f"exp({c})")


def symbolic_exp_power(order: int = DEFAULT_ORDER) -> TruncSeries:
    """``e^{yz}``, whose EGF terms are ``1, y, y^2, ...``."""
    return series_exp(TruncSeries.from_poly([ZERO, Y], order))
