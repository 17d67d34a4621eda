"""Monic orthogonal polynomials, continued fractions and Deleham triangles.

Polynomials in z are tuples of :class:`MultiPoly` coefficients in ascending
degree.  J-fractions and S-fractions are expanded bottom-up on finite
convergents as truncated series; the Deleham triangle is built separately by
counting weighted Dyck paths, so the two constructions check each other.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from .errors import InsufficientData
from .exactalg import ONE, ZERO, MultiPoly, as_poly, poly_sum
from .matrix import Check, Matrix
from .production import TTRData
from .series import TruncSeries, series_inverse, series_mul

ZPoly = Tuple[MultiPoly, ...]


def zpoly_mul_linear(p: ZPoly, shift: MultiPoly) -> ZPoly:
    """``(z - shift) * p``."""
    out = [ZERO] * (len(p) + 1)
    for i, c in enumerate(p):
        out[i + 1] = out[i + 1] + c
        out[i] = out[i] - shift * c
    return tuple(out)


def zpoly_sub(a: ZPoly, b: ZPoly) -> ZPoly:
    n = max(len(a), len(b))
    a = tuple(a) + (ZERO,) * (n - len(a))
    b = tuple(b) + (ZERO,) * (n - len(b))
    out = [x - y for x, y in zip(a, b)]
    while len(out) > 1 and not out[-1]:
        out.pop()
    return tuple(out)


def zpoly_str(p: ZPoly) -> str:
    parts = []
    for d in range(len(p) - 1, -1, -1):
        c = p[d]
        if not c:
            continue
        mono = "" if d == 0 else ("z" if d == 1 else f"z^{d}")
        if not mono:
            parts.append(f"({c})")
        elif c == ONE:
            parts.append(mono)
        else:
            parts.append(f"({c})*{mono}")
    return " + ".join(parts) or "0"


@dataclass(frozen=True)
class OrthoPolySeq:
    polys: Tuple[ZPoly, ...]
    ttr: Optional[TTRData] = field(default=None, compare=False)

    def __getitem__(self, n: int) -> ZPoly:
        return self.polys[n]

    def __len__(self):
        return len(self.polys)


def ttr_polynomials(t: TTRData, n: int) -> OrthoPolySeq:
    """``P_0 .. P_n`` from ``P_{m+1} = (z - alpha_m) P_m - beta_m P_{m-1}``."""
    if n >= 1 and (len(t.alpha) < n or len(t.beta) < n - 1):
        raise InsufficientData(f"need {n} alphas and {n - 1} betas for P_{n}")
    polys: List[ZPoly] = [(ONE,)]
    if n >= 1:
        polys.append(zpoly_mul_linear(polys[0], t.alpha[0]))
    for m in range(1, n):
        nxt = zpoly_mul_linear(polys[m], t.alpha[m])
        prev = tuple(c * t.beta[m - 1] for c in polys[m - 1])
        polys.append(zpoly_sub(nxt, prev))
    return OrthoPolySeq(tuple(polys), t)


def jfraction_moments(t: TTRData, n: int) -> List[MultiPoly]:
    """``mu_0 .. mu_n`` of ``1/(1 - a_0 z - b_1 z^2/(1 - a_1 z - b_2 z^2/(...)))``.

    A Motzkin path of length ``n`` stays below height ``n // 2``, so that many
    levels give every requested moment exactly.
    """
    depth = n // 2 + 1
    if len(t.alpha) < depth or len(t.beta) < depth - 1:
        raise InsufficientData(f"J-fraction to order {n} needs {depth} levels")
    tail = TruncSeries.from_poly([ZERO], n)
    for m in range(depth - 1, -1, -1):
        beta_next = t.beta[m] if m < len(t.beta) and m + 1 < depth else ZERO
        denom = TruncSeries.from_poly([ONE, -t.alpha[m]], n)
        if beta_next:
            z2 = TruncSeries.from_poly([ZERO, ZERO, -beta_next], n)
            denom = denom + series_mul(z2, tail)
        tail = series_inverse(denom)
    return list(tail.coeffs)


@dataclass(frozen=True)
class SFraction:
    """Partial numerators ``c_1, c_2, ...`` of ``1/(1 - c_1 z/(1 - c_2 z/(...)))``."""

    c: Tuple[MultiPoly, ...]

    def __post_init__(self):
        object.__setattr__(self, "c", tuple(as_poly(v) for v in self.c))

    @classmethod
    def interleave(cls, odd: Sequence, even: Sequence) -> "SFraction":
        """``c_1 = odd[0], c_2 = even[0], c_3 = odd[1], ...``."""
        out = []
        for a, b in zip(odd, even):
            out.extend([a, b])
        return cls(out)


def sfraction_moments(s: SFraction, n: int) -> List[MultiPoly]:
    """``mu_0 .. mu_n``; ``mu_n`` involves ``c_1 .. c_n`` only."""
    if len(s.c) < n:
        raise InsufficientData(f"S-fraction to order {n} needs {n} partial numerators")
    # the unknown tail below level n is 1 + O(z), which only disturbs z^(n+1) onwards
    tail = TruncSeries.one(n)
    for m in range(n - 1, -1, -1):
        cz = TruncSeries.from_poly([ZERO, -s.c[m]], n)
        tail = series_inverse(TruncSeries.one(n) + series_mul(cz, tail))
    return list(tail.coeffs)


def contract_sfraction(s: SFraction) -> TTRData:
    """Even contraction: ``alpha_0 = c_1``, ``beta_n = c_{2n-1} c_{2n}``,
    ``alpha_n = c_{2n} + c_{2n+1}``."""
    c = (None,) + s.c  # 1-based
    L = len(s.c)
    if L < 1:
        raise InsufficientData("empty S-fraction")
    alpha = [c[1]]
    for m in range(1, (L - 1) // 2 + 1):
        alpha.append(c[2 * m] + c[2 * m + 1])
    beta = [c[2 * m - 1] * c[2 * m] for m in range(1, L // 2 + 1)]
    return TTRData(alpha=alpha, beta=beta)


def _tpoly_add(a: List[MultiPoly], b: List[MultiPoly]) -> List[MultiPoly]:
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else ZERO) + (b[i] if i < len(b) else ZERO) for i in range(n)]


def _tpoly_scale(a: List[MultiPoly], r: MultiPoly, s: MultiPoly) -> List[MultiPoly]:
    """``(r + s t) * a`` for a polynomial ``a`` in the column marker ``t``."""
    out = [ZERO] * (len(a) + 1)
    for i, v in enumerate(a):
        if v:
            out[i] = out[i] + r * v
            out[i + 1] = out[i + 1] + s * v
    return out


def deleham_delta(r: Sequence, s: Sequence, n: int) -> Matrix:
    """Rows ``0 .. n`` of ``r Delta s``.

    Row ``m`` lists the coefficients in ``t`` of the ``z^m`` coefficient of
    ``1/(1 - (r_0 + s_0 t) z/(1 - (r_1 + s_1 t) z/(...)))``, computed as a sum
    over Dyck paths of length ``2m`` in which a down step ending at height
    ``h`` carries weight ``r_h + s_h t``.
    """
    r = [as_poly(v) for v in r]
    s = [as_poly(v) for v in s]
    if len(r) < n or len(s) < n:
        raise InsufficientData(f"Deleham triangle with {n + 1} rows needs {n} entries of r and s")
    # level[h] = weighted count of partial paths at height h (t-polynomial)
    level = {0: [ONE]}
    rows = [[ONE]]
    for step in range(1, 2 * n + 1):
        nxt = {}
        for h, w in level.items():
            if h + 1 <= 2 * n - step + 1:  # must still be able to return to 0
                nxt[h + 1] = _tpoly_add(nxt.get(h + 1, []), w)
            if h >= 1:
                down = _tpoly_scale(w, r[h - 1], s[h - 1])
                nxt[h - 1] = _tpoly_add(nxt.get(h - 1, []), down)
        level = nxt
        if step % 2 == 0:
            rows.append(level.get(0, [ZERO]))
    width = n + 1
    return Matrix([(row + [ZERO] * width)[:width] for row in rows])


def row_polynomials(tri: Matrix, t) -> List[MultiPoly]:
    """Evaluate each row of a triangle as a polynomial in ``t``."""
    t = as_poly(t)
    out = []
    for row in tri.rows:
        acc, p = ZERO, ONE
        for v in row:
            if v:
                acc = acc + v * p
            p = p * t
        out.append(acc)
    return out


def linear_functional(poly: ZPoly, moments: Sequence[MultiPoly], shift: int = 0) -> MultiPoly:
    """``L(z^shift * poly)`` with ``L(z^j) = moments[j]``."""
    return poly_sum(c * moments[j + shift] for j, c in enumerate(poly) if c)


def orthogonality_check(polys: OrthoPolySeq, moments: Sequence, n: int | None = None) -> Check:
    """Verify ``L(P_m z^j) = 0`` for ``j < m <= n`` and, when the recurrence
    data is attached, ``L(P_m z^m) = beta_1 ... beta_m``.

    The witness is ``(m, j)`` for the first failing pairing.
    """
    moments = [as_poly(m) for m in moments]
    n = len(polys) - 1 if n is None else n
    if len(moments) < 2 * n + 1:
        raise InsufficientData(f"orthogonality to degree {n} needs moments through {2 * n}")
    norm = ONE
    for m in range(n + 1):
        p = polys[m]
        for j in range(m):
            if linear_functional(p, moments, j):
                return Check(False, (m, j))
        if polys.ttr is not None:
            if m >= 1:
                norm = norm * polys.ttr.beta[m - 1]
            if linear_functional(p, moments, m) != norm * moments[0]:
                return Check(False, (m, m))
    return Check(True)
