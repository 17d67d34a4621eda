"""Hankel determinants of moment sequences and their closed-form products."""
from __future__ import annotations

from dataclasses import dataclass
from math import comb, factorial
from typing import Dict, FrozenSet, Sequence

from .errors import InsufficientData, InsufficientMoments
from .exactalg import ONE, ZERO, K, X, Y, MultiPoly, as_poly, poly_exact_div
from .matrix import Matrix

COFACTOR_LIMIT = 5


def hankel_matrix(moments: Sequence, n: int) -> Matrix:
    if len(moments) < 2 * n + 1:
        raise InsufficientMoments(f"h_{n} needs moments through index {2 * n}")
    return Matrix([[moments[i + j] for j in range(n + 1)] for i in range(n + 1)])


def det_cofactor(m: Matrix) -> MultiPoly:
    """Laplace expansion along successive rows, memoized on the remaining columns."""
    n = m.n_rows
    memo: Dict[FrozenSet[int], MultiPoly] = {}

    def minor(cols: FrozenSet[int]) -> MultiPoly:
        row = n - len(cols)
        if not cols:
            return ONE
        hit = memo.get(cols)
        if hit is not None:
            return hit
        acc = ZERO
        ordered = sorted(cols)
        for pos, c in enumerate(ordered):
            entry = m[row, c]
            if entry:
                term = entry * minor(cols - {c})
                acc = acc - term if pos % 2 else acc + term
        memo[cols] = acc
        return acc

    return minor(frozenset(range(n)))


def det_bareiss(m: Matrix) -> MultiPoly:
    """Fraction-free Gaussian elimination; every division is exact."""
    n = m.n_rows
    a = [list(row) for row in m.rows]
    sign, prev = 1, ONE
    for k in range(n - 1):
        if not a[k][k]:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return ZERO
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = poly_exact_div(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev)
        prev = a[k][k]
    return a[n - 1][n - 1] * sign if n else ONE


def hankel_det(moments: Sequence, n: int, method: str = "auto") -> MultiPoly:
    """``det(mu_{i+j})`` for ``0 <= i, j <= n``."""
    moments = [as_poly(v) for v in moments]
    h = hankel_matrix(moments, n)
    if method == "auto":
        method = "cofactor" if n <= COFACTOR_LIMIT else "bareiss"
    if method == "cofactor":
        return det_cofactor(h)
    if method == "bareiss":
        return det_bareiss(h)
    raise ValueError(f"unknown determinant method {method!r}")


def hankel_closed_keuler(n: int, form: str = "superfactorial") -> MultiPoly:
    """Closed form for the 1/k-Eulerian moments.

    ``superfactorial``: ``(kx)^C(n+1,2) * prod_{j=0}^n j! * prod_{i=1}^n (ik+1)^(n-i)``.
    ``product``: ``(kx)^C(n+1,2) * prod_{i=1}^n i (ik+1)^(n-i)``, read literally.
    """
    kx = K * X
    out = kx ** comb(n + 1, 2)
    for i in range(1, n + 1):
        out = out * (K * i + 1) ** (n - i)
    if form == "superfactorial":
        sf = 1
        for j in range(n + 1):
            sf *= factorial(j)
        return out * sf
    if form == "product":
        return out * factorial(n)
    raise ValueError(f"unknown form {form!r}")


def hankel_closed_sv(n: int) -> MultiPoly:
    """``x^C(n+1,2) y^n prod_{i=1}^n ((i+1)(i+y))^(n-i)``."""
    out = X ** comb(n + 1, 2) * Y ** n
    for i in range(1, n + 1):
        out = out * ((Y + i) * (i + 1)) ** (n - i)
    return out


def hankel_from_betas(betas: Sequence, n: int, a0=ONE) -> MultiPoly:
    """``a0^(n+1) prod_{j=1}^n beta_j^(n+1-j)``; ``betas[0]`` is ``beta_1``."""
    if len(betas) < n:
        raise InsufficientData(f"h_{n} needs beta_1 .. beta_{n}")
    out = as_poly(a0) ** (n + 1)
    for j in range(1, n + 1):
        out = out * as_poly(betas[j - 1]) ** (n + 1 - j)
    return out


@dataclass(frozen=True)
class HankelResult:
    n: int
    determinant: MultiPoly
    closed_form: MultiPoly

    @property
    def match(self) -> bool:
        return not (self.determinant - self.closed_form)


CLOSED_FORMS = {
    "keuler": hankel_closed_keuler,
    "sv": hankel_closed_sv,
}


def hankel_report(moments: Sequence, family: str, n: int) -> HankelResult:
    return HankelResult(n, hankel_det(moments, n), CLOSED_FORMS[family](n))
