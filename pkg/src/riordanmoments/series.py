"""Truncated formal power series in z with polynomial coefficients.

A :class:`TruncSeries` of order ``N`` knows the coefficients of ``z^0 .. z^N``
exactly; everything beyond is unknown.  Binary operations return the smaller
of the two orders, and the derivative drops the order by one.
"""
from __future__ import annotations

import enum
from math import factorial
from typing import Iterable, List, Sequence

from .errors import (
    BadLowOrderTerms,
    NonUnitConstantTerm,
    NonzeroConstantTerm,
)
from .exactalg import ONE, SCALAR_TYPES, ZERO, MultiPoly, Rational, as_poly, poly_exact_div

DEFAULT_ORDER = 10


class Flavor(enum.Enum):
    """How coefficient ``n`` of a generating function maps to sequence term ``n``."""

    EGF = "egf"
    OGF = "ogf"

    def extract(self, s: "TruncSeries") -> List[MultiPoly]:
        if self is Flavor.EGF:
            return [c * factorial(n) for n, c in enumerate(s.coeffs)]
        return list(s.coeffs)

    def build(self, terms: Sequence) -> "TruncSeries":
        terms = [as_poly(t) for t in terms]
        if self is Flavor.EGF:
            return TruncSeries([t * Rational(1, factorial(n)) for n, t in enumerate(terms)])
        return TruncSeries(terms)


class TruncSeries:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable):
        self.coeffs = tuple(as_poly(c) for c in coeffs)
        if not self.coeffs:
            raise ValueError("a truncated series needs at least the constant term")

    @classmethod
    def from_poly(cls, coeffs: Sequence, order: int) -> "TruncSeries":
        """Polynomial in z given by ``coeffs`` (ascending), padded or cut to ``order``."""
        cs = [as_poly(c) for c in coeffs][: order + 1]
        return cls(cs + [ZERO] * (order + 1 - len(cs)))

    @classmethod
    def one(cls, order: int = DEFAULT_ORDER) -> "TruncSeries":
        return cls.from_poly([ONE], order)

    @classmethod
    def z(cls, order: int = DEFAULT_ORDER) -> "TruncSeries":
        return cls.from_poly([ZERO, ONE], order)

    @classmethod
    def exp_linear(cls, c, order: int = DEFAULT_ORDER) -> "TruncSeries":
        """The series of ``exp(c z)``: coefficient ``c^n / n!``."""
        c = as_poly(c)
        out, p = [], ONE
        for n in range(order + 1):
            out.append(p * Rational(1, factorial(n)))
            p = p * c
        return cls(out)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> MultiPoly:
        return self.coeffs[n]

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def truncate(self, order: int) -> "TruncSeries":
        if order > self.order:
            raise ValueError(f"cannot extend a series of order {self.order} to {order}")
        return TruncSeries(self.coeffs[: order + 1])

    def __eq__(self, other):
        return isinstance(other, TruncSeries) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def agrees(self, other: "TruncSeries", upto: int | None = None) -> bool:
        """Coefficientwise equality through ``z^upto`` (default: common order)."""
        n = min(self.order, other.order) if upto is None else upto
        return self.coeffs[: n + 1] == other.coeffs[: n + 1]

    def __add__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return TruncSeries(a + b for a, b in zip(self.coeffs[: n + 1], other.coeffs))

    def __sub__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return TruncSeries(a - b for a, b in zip(self.coeffs[: n + 1], other.coeffs))

    def __neg__(self):
        return TruncSeries(-c for c in self.coeffs)

    def __mul__(self, other):
        if isinstance(other, TruncSeries):
            return series_mul(self, other)
        if isinstance(other, (MultiPoly,) + SCALAR_TYPES):
            return TruncSeries(c * other for c in self.coeffs)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, TruncSeries):
            return series_div(self, other)
        return self.map(lambda c: c / other)

    def map(self, fn) -> "TruncSeries":
        return TruncSeries(fn(c) for c in self.coeffs)

    def exact_div(self, d) -> "TruncSeries":
        """Divide every coefficient exactly by the polynomial ``d``."""
        d = as_poly(d)
        return self.map(lambda c: poly_exact_div(c, d))

    def subs(self, **values) -> "TruncSeries":
        return self.map(lambda c: c.subs(**values))

    def egf_terms(self) -> List[MultiPoly]:
        return Flavor.EGF.extract(self)

    def __repr__(self):
        shown = " + ".join(f"({c})*z^{n}" for n, c in enumerate(self.coeffs) if c)
        return f"TruncSeries[{self.order}]({shown or '0'})"


def series_mul(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    n = min(a.order, b.order)
    ac, bc = a.coeffs, b.coeffs
    out = []
    for m in range(n + 1):
        acc = ZERO
        for i in range(m + 1):
            if ac[i] and bc[m - i]:
                acc = acc + ac[i] * bc[m - i]
        out.append(acc)
    return TruncSeries(out)


def _unit_constant(s: TruncSeries, err=NonUnitConstantTerm):
    c0 = s.coeffs[0]
    if not c0 or not c0.is_constant():
        raise err(f"constant term {c0} is not an invertible rational")
    return c0.constant_term()


def series_inverse(s: TruncSeries) -> TruncSeries:
    """Multiplicative inverse; the constant term must be a nonzero rational."""
    inv0 = Rational(1) / _unit_constant(s)
    out = [MultiPoly.const(inv0)]
    for n in range(1, s.order + 1):
        acc = ZERO
        for j in range(1, n + 1):
            if s.coeffs[j] and out[n - j]:
                acc = acc + s.coeffs[j] * out[n - j]
        out.append(acc * -inv0)
    return TruncSeries(out)


def series_div(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    return series_mul(a, series_inverse(b))


def series_compose(outer: TruncSeries, inner: TruncSeries) -> TruncSeries:
    """``outer(inner(z))``; ``inner`` must have zero constant term."""
    if inner.coeffs[0]:
        raise NonzeroConstantTerm(f"inner series has constant term {inner.coeffs[0]}")
    n = min(outer.order, inner.order)
    inner = inner.truncate(n)
    acc = TruncSeries.from_poly([outer.coeffs[n]], n)
    for i in range(n - 1, -1, -1):
        acc = series_mul(acc, inner)
        acc = TruncSeries((acc.coeffs[0] + outer.coeffs[i],) + acc.coeffs[1:])
    return acc


def series_reversion(f: TruncSeries) -> TruncSeries:
    """Compositional inverse ``fbar`` with ``f(fbar(z)) = z``.

    Solved one coefficient at a time: with ``f_1 = 1`` the unknown ``fbar_n``
    enters ``[z^n] f(fbar)`` linearly with coefficient one, and every power
    ``fbar^j`` with ``j >= 2`` has its ``z^n`` coefficient fixed by earlier terms.
    """
    if f.order < 1 or f.coeffs[0] or f.coeffs[1] != ONE:
        raise BadLowOrderTerms("reversion needs f(0) = 0 and f'(0) = 1")
    n_max = f.order
    fc = f.coeffs
    b = [ZERO, ONE]
    # pw[j][m] = [z^m] b^j
    pw = {1: b}
    for n in range(2, n_max + 1):
        pw[n] = [ZERO] * n
        acc = ZERO
        for j in range(2, n + 1):
            prev = pw[j - 1]
            c = ZERO
            for i in range(1, n - j + 2):
                if b[i] and prev[n - i]:
                    c = c + b[i] * prev[n - i]
            pw[j].append(c)
            if fc[j] and c:
                acc = acc + fc[j] * c
        b.append(-acc)
    return TruncSeries(b)


def series_derivative(s: TruncSeries) -> TruncSeries:
    if s.order == 0:
        raise ValueError("derivative of an order-0 series carries no information")
    return TruncSeries(c * n for n, c in enumerate(s.coeffs) if n)


def series_log(s: TruncSeries) -> TruncSeries:
    """``ln(s)`` for a series with constant term 1.

    Uses ``s * log(s)' = s'``, which gives ``n L_n = n s_n - sum_{j<n} j L_j s_{n-j}``.
    This equals the ``ln(1+u)`` expansion term by term.
    """
    if s.coeffs[0] != ONE:
        raise NonUnitConstantTerm(f"log needs constant term 1, got {s.coeffs[0]}")
    sc = s.coeffs
    out = [ZERO]
    for n in range(1, s.order + 1):
        acc = sc[n] * n
        for j in range(1, n):
            if out[j] and sc[n - j]:
                acc = acc - out[j] * sc[n - j] * j
        out.append(acc * Rational(1, n))
    return TruncSeries(out)


def series_exp(s: TruncSeries) -> TruncSeries:
    """``exp(s)`` for a series with zero constant term (``n a_n = sum j s_j a_{n-j}``)."""
    if s.coeffs[0]:
        raise NonzeroConstantTerm(f"exp needs constant term 0, got {s.coeffs[0]}")
    sc = s.coeffs
    out = [ONE]
    for n in range(1, s.order + 1):
        acc = ZERO
        for j in range(1, n + 1):
            if sc[j] and out[n - j]:
                acc = acc + sc[j] * out[n - j] * j
        out.append(acc * Rational(1, n))
    return TruncSeries(out)


def series_pow_sym(s: TruncSeries, exponent) -> TruncSeries:
    """``s ** exponent`` as ``exp(exponent * log(s))``; the exponent may be symbolic."""
    if s.coeffs[0] != ONE:
        raise NonUnitConstantTerm(f"symbolic power needs constant term 1, got {s.coeffs[0]}")
    return series_exp(series_log(s) * as_poly(exponent))


def series_pow_recip_k(s: TruncSeries) -> TruncSeries:
    """``s ** (1/k)`` kept inside the polynomial ring.

    Every log coefficient is divided exactly by ``k``; a remainder means ``s``
    is not a series in ``k z`` and raises :class:`NotDivisible`.
    """
    if s.coeffs[0] != ONE:
        raise NonUnitConstantTerm(f"1/k power needs constant term 1, got {s.coeffs[0]}")
    return series_exp(series_log(s).exact_div(MultiPoly.var("k")))
