"""Exact rational scalars and sparse polynomials in the indeterminates x, y, k.

Coefficients are exact rationals: ``gmpy2.mpq`` values, with integral
coefficients stored as plain ``int``.  ``fractions.Fraction`` inputs are
accepted and converted.

The canonical text form lists terms in graded lexicographic order with
``x > y > k`` and uses explicit ``*`` and ``^``::

    >>> p = parse("y(x + y)")
    >>> str(p)
    'x*y + y^2'
    >>> str(homogenize_y(p, 2))
    'x*k + 1'
"""
from __future__ import annotations

import re
from fractions import Fraction
from types import MappingProxyType
from typing import Dict, Iterable, Mapping, Tuple, Union

from gmpy2 import mpq, mpz

from .errors import DegreeExceeded, NotDivisible

Rational = mpq
Exponent = Tuple[int, int, int]
Scalar = Union[int, mpq]
_MPQ = type(mpq(0))
_MPZ = type(mpz(0))
SCALAR_TYPES = (int, Fraction, _MPQ, _MPZ)

VARIABLES = ("x", "y", "k")
_VAR_INDEX = {v: i for i, v in enumerate(VARIABLES)}
_ZERO_EXP: Exponent = (0, 0, 0)


def _norm(c) -> Scalar:
    t = type(c)
    if t is int:
        return c
    if t is _MPQ:
        return int(c.numerator) if c.denominator == 1 else c
    if t is _MPZ or isinstance(c, int):
        return int(c)
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else mpq(c.numerator, c.denominator)
    raise TypeError(f"inexact or unsupported coefficient {c!r}")


def _grlex_key(e: Exponent):
    return (e[0] + e[1] + e[2], e[0], e[1], e[2])


class MultiPoly:
    """Immutable sparse polynomial over the rationals in x, y, k.

    Terms live in a dict mapping exponent triples ``(e_x, e_y, e_k)`` to
    nonzero coefficients; the zero polynomial is the empty dict.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exponent, Scalar] | None = None):
        clean: Dict[Exponent, Scalar] = {}
        if terms:
            for e, c in terms.items():
                e = tuple(int(v) for v in e)
                if len(e) != 3 or min(e) < 0:
                    raise ValueError(f"bad exponent vector {e!r}")
                c = _norm(c)
                if c:
                    clean[e] = _norm(clean.get(e, 0) + c)
                    if not clean[e]:
                        del clean[e]
        self._terms = clean
        self._hash = None

    @classmethod
    def _wrap(cls, terms: Dict[Exponent, Scalar]) -> "MultiPoly":
        # caller guarantees canonical form: no zero coefficients, normalized scalars
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c) -> "MultiPoly":
        c = _norm(c)
        return cls._wrap({_ZERO_EXP: c} if c else {})

    @classmethod
    def var(cls, name: str) -> "MultiPoly":
        e = [0, 0, 0]
        e[_VAR_INDEX[name]] = 1
        return cls._wrap({tuple(e): 1})

    @classmethod
    def monomial(cls, coeff, ex=0, ey=0, ek=0) -> "MultiPoly":
        return cls({(ex, ey, ek): coeff})

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> Mapping[Exponent, Scalar]:
        return MappingProxyType(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and _ZERO_EXP in self._terms)

    def constant_term(self) -> Scalar:
        return self._terms.get(_ZERO_EXP, 0)

    def coefficient(self, ex=0, ey=0, ek=0) -> Scalar:
        return self._terms.get((ex, ey, ek), 0)

    def degree(self, var: str | None = None) -> int:
        """Total degree, or the degree in ``var``; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        if var is None:
            return max(sum(e) for e in self._terms)
        i = _VAR_INDEX[var]
        return max(e[i] for e in self._terms)

    def variables(self) -> Tuple[str, ...]:
        used = set()
        for e in self._terms:
            used.update(VARIABLES[i] for i in range(3) if e[i])
        return tuple(v for v in VARIABLES if v in used)

    def sorted_terms(self):
        return sorted(self._terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)

    def leading_term(self) -> Tuple[Exponent, Scalar]:
        e = max(self._terms, key=_grlex_key)
        return e, self._terms[e]

    # -- arithmetic -------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "MultiPoly | None":
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, SCALAR_TYPES):
            return MultiPoly.const(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o._terms:
            return self
        if not self._terms:
            return o
        out = dict(self._terms)
        for e, c in o._terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = _norm(v)
            else:
                out.pop(e, None)
        return MultiPoly._wrap(out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._wrap({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, SCALAR_TYPES):
            c = _norm(other)
            if not c:
                return ZERO
            return MultiPoly._wrap({e: _norm(v * c) for e, v in self._terms.items()})
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, MultiPoly) and other.is_constant():
            other = other.constant_term()
        if isinstance(other, SCALAR_TYPES):
            if other == 0:
                raise ZeroDivisionError("division of polynomial by zero")
            return self * (mpq(1) / mpq(other))
        if isinstance(other, MultiPoly):
            return poly_exact_div(self, other)
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only non-negative integer powers are supported")
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._terms == o._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- convenience ------------------------------------------------------

    def subs(self, **values) -> "MultiPoly":
        p = self
        for name, v in values.items():
            p = poly_substitute(p, name, v)
        return p

    def map_coefficients(self, fn) -> "MultiPoly":
        return MultiPoly({e: fn(c) for e, c in self._terms.items()})

    def to_string(self, compact: bool = False) -> str:
        return format_poly(self, compact=compact)

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"MultiPoly({format_poly(self)!r})"


ZERO = MultiPoly._wrap({})
ONE = MultiPoly._wrap({_ZERO_EXP: 1})
X = MultiPoly.var("x")
Y = MultiPoly.var("y")
K = MultiPoly.var("k")


def as_poly(v) -> MultiPoly:
    if isinstance(v, MultiPoly):
        return v
    if isinstance(v, str):
        return parse(v)
    return MultiPoly.const(v)


def poly_mul(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    if not a._terms or not b._terms:
        return ZERO
    if len(a._terms) < len(b._terms):
        a, b = b, a
    out: Dict[Exponent, Scalar] = {}
    b_items = list(b._terms.items())
    for (a0, a1, a2), ca in a._terms.items():
        for (b0, b1, b2), cb in b_items:
            e = (a0 + b0, a1 + b1, a2 + b2)
            out[e] = out.get(e, 0) + ca * cb
    return MultiPoly._wrap({e: _norm(c) for e, c in out.items() if c})


def poly_exact_div(a: MultiPoly, d: MultiPoly) -> MultiPoly:
    """Return ``q`` with ``q * d == a``; raise :class:`NotDivisible` otherwise."""
    if not d._terms:
        raise ZeroDivisionError("division by the zero polynomial")
    if not a._terms:
        return ZERO
    (l0, l1, l2), lc = d.leading_term()
    d_items = list(d._terms.items())
    rem: Dict[Exponent, Scalar] = dict(a._terms)
    quot: Dict[Exponent, Scalar] = {}
    while rem:
        e = max(rem, key=_grlex_key)
        c = rem[e]
        m = (e[0] - l0, e[1] - l1, e[2] - l2)
        if min(m) < 0:
            raise NotDivisible(f"{format_poly(a)} is not divisible by {format_poly(d)}")
        if isinstance(c, int) and isinstance(lc, int) and c % lc == 0:
            t = c // lc
        else:
            t = _norm(mpq(c) / lc)
        quot[m] = t
        for (d0, d1, d2), dc in d_items:
            f = (m[0] + d0, m[1] + d1, m[2] + d2)
            v = rem.get(f, 0) - t * dc
            if v:
                rem[f] = _norm(v)
            else:
                rem.pop(f, None)
    return MultiPoly._wrap(quot)


def poly_substitute(p: MultiPoly, var: str, value) -> MultiPoly:
    """Substitute a polynomial or rational ``value`` for ``var`` in ``p``."""
    i = _VAR_INDEX[var]
    value = as_poly(value)
    powers = [ONE]
    out = ZERO
    grouped: Dict[int, Dict[Exponent, Scalar]] = {}
    for e, c in p._terms.items():
        rest = list(e)
        rest[i] = 0
        grouped.setdefault(e[i], {})[tuple(rest)] = c
    for deg in sorted(grouped):
        while len(powers) <= deg:
            powers.append(powers[-1] * value)
        out = out + MultiPoly._wrap(grouped[deg]) * powers[deg]
    return out


def homogenize_y(p: MultiPoly, n: int) -> MultiPoly:
    """Replace every ``y^m`` by ``k^(n-m)``, i.e. return ``k^n p(x, 1/k)``."""
    out: Dict[Exponent, Scalar] = {}
    for (ex, ey, ek), c in p._terms.items():
        if ek:
            raise ValueError("homogenize_y expects a polynomial free of k")
        if ey > n:
            raise DegreeExceeded(f"deg_y = {ey} exceeds n = {n}")
        out[(ex, 0, n - ey)] = c
    return MultiPoly._wrap(out)


def evaluate(p: MultiPoly, **values) -> Scalar:
    """Evaluate ``p`` completely; every variable present must be given."""
    q = p.subs(**values)
    if not q.is_constant():
        raise ValueError(f"variables {q.variables()} left unassigned")
    return q.constant_term()


# -- text form -----------------------------------------------------------

def _format_monomial(e: Exponent) -> str:
    parts = []
    for name, power in zip(VARIABLES, e):
        if power == 1:
            parts.append(name)
        elif power > 1:
            parts.append(f"{name}^{power}")
    return "*".join(parts)


def format_poly(p: MultiPoly, compact: bool = False) -> str:
    if not p._terms:
        return "0"
    plus, minus = ("+", "-") if compact else (" + ", " - ")
    out = []
    for idx, (e, c) in enumerate(p.sorted_terms()):
        negative = c < 0
        mag = -c if negative else c
        mono = _format_monomial(e)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if idx == 0:
            out.append(("-" if negative else "") + body)
        else:
            out.append((minus if negative else plus) + body)
    return "".join(out)


_TOKEN = re.compile(r"\s*(?:(\d+)|([xyk])|(\*\*|[-+*/^()·−]))")


def _tokenize(text: str):
    pos, toks = 0, []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse {text!r} at position {pos}")
        num, var, op = m.groups()
        if num is not None:
            toks.append(("num", int(num)))
        elif var is not None:
            toks.append(("var", var))
        else:
            op = {"**": "^", "·": "*", "−": "-"}.get(op, op)
            toks.append(("op", op))
        pos = m.end()
    return toks


class _Parser:
    def __init__(self, text):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expect(self, op):
        kind, val = self.take()
        if (kind, val) != ("op", op):
            raise ValueError(f"expected {op!r} in {self.text!r}")

    def parse(self) -> MultiPoly:
        if not self.toks:
            raise ValueError("empty polynomial text")
        p = self.expr()
        if self.i != len(self.toks):
            raise ValueError(f"trailing input in {self.text!r}")
        return p

    def expr(self):
        sign = 1
        kind, val = self.peek()
        if kind == "op" and val in "+-":
            self.take()
            sign = -1 if val == "-" else 1
        acc = self.term() * sign
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                t = self.term()
                acc = acc + t if val == "+" else acc - t
            else:
                return acc

    def term(self):
        acc = self.factor()
        while True:
            kind, val = self.peek()
            if kind == "op" and val == "*":
                self.take()
                acc = acc * self.factor()
            elif kind == "op" and val == "/":
                self.take()
                d = self.factor()
                if not d.is_constant() or not d:
                    raise ValueError(f"division by non-constant or zero in {self.text!r}")
                acc = acc * (mpq(1) / d.constant_term())
            elif kind in ("num", "var") or (kind == "op" and val == "("):
                acc = acc * self.factor()  # juxtaposition: "2 k x", "x(3y + 1)"
            else:
                return acc

    def factor(self):
        base = self.atom()
        kind, val = self.peek()
        if kind == "op" and val == "^":
            self.take()
            kind, val = self.take()
            if kind != "num":
                raise ValueError(f"exponent must be a non-negative integer in {self.text!r}")
            base = base ** val
        return base

    def atom(self):
        kind, val = self.take()
        if kind == "num":
            return MultiPoly.const(val)
        if kind == "var":
            return MultiPoly.var(val)
        if (kind, val) == ("op", "("):
            p = self.expr()
            self.expect(")")
            return p
        if (kind, val) == ("op", "-"):
            return -self.factor()
        raise ValueError(f"unexpected token {val!r} in {self.text!r}")


def parse(text: str) -> MultiPoly:
    """Parse polynomial text.

    Accepts the canonical syntax and the looser notation used when
    transcribing typeset formulas: implicit multiplication by juxtaposition
    (``"2 k^2 x"``, ``"kx(k + 3)"``), ``**`` for powers, ``·`` for products
    and rational constants such as ``1/2``.
    """
    return _Parser(text).parse()


def parse_scalar(text: str) -> Scalar:
    return _norm(mpq(Fraction(text)))


def poly_sum(items: Iterable[MultiPoly]) -> MultiPoly:
    acc = ZERO
    for p in items:
        acc = acc + p
    return acc
