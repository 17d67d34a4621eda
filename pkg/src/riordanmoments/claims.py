"""Registry of verifiable statements about the named arrays.

Each claim is a function ``(n, order) -> Check``; the witness of a failing
check names the first entry that disagreed.  Registry order is the report
order.
"""
from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional

from .closedforms import (
    TTR_CLOSED,
    ZA_CLOSED,
    deleham_a079641,
    deleham_keuler,
    deleham_sv,
    keuler_sfraction,
    stated_keuler_recurrence,
    stated_sv_recurrence,
    sv_sfraction,
)
from .combinat import keuler_from_stirling, sv_from_stirling, sv_oracle
from .exactalg import ONE, ZERO, X, Y, homogenize_y
from .hankel import hankel_closed_keuler, hankel_closed_sv, hankel_det, hankel_from_betas
from .matrix import Check
from .orthopoly import (
    contract_sfraction,
    deleham_delta,
    jfraction_moments,
    orthogonality_check,
    row_polynomials,
    sfraction_moments,
    ttr_polynomials,
    zpoly_mul_linear,
    zpoly_sub,
)
from .production import (
    TTRData,
    compute_ZA,
    extract_ttr,
    is_tridiagonal,
    production_analytic,
    production_ladder,
)
from .riordan import (
    Family,
    family,
    inverse,
    moment_column,
    multiply,
    realize,
    stirling1_pair,
    stirling2_pair,
    symbolic_exp_power,
)
from .series import DEFAULT_ORDER, TruncSeries

Claim = Callable[[int, int], Check]


def _first(pairs, label=""):
    """Check that wraps the first index where ``computed != expected``."""
    for idx, (got, want) in enumerate(pairs):
        if got != want:
            return Check(False, f"{label}[{idx}]: got {got}, expected {want}")
    return Check(True)


def _all(*checks: Check) -> Check:
    for c in checks:
        if not c:
            return c
    return Check(True)


def check_production_claim(fam: Family, size: int, order: int) -> Check:
    """Tridiagonal production matrix with unit superdiagonal, Z and A equal to
    their closed forms, both production routes agree, and the coefficient
    array is the inverse of the moment array."""
    p = family(fam, order)
    za = compute_ZA(p)
    A_closed, Z_closed = ZA_CLOSED[fam]
    upto = min(za.A.order, za.Z.order)
    za_check = _all(
        _first(zip(za.A.coeffs[: upto + 1], TruncSeries.from_poly(A_closed, upto).coeffs), "A"),
        _first(zip(za.Z.coeffs[: upto + 1], TruncSeries.from_poly(Z_closed, upto).coeffs), "Z"),
    )
    P = production_analytic(za, size)
    tri = is_tridiagonal(P)
    if not tri:
        return Check(False, f"production entry {tri.witness} nonzero")
    superdiag = _first(((P[r, r + 1], ONE) for r in range(size - 1)), "superdiagonal")
    ladder = Check(P == production_ladder(p, size), "ladder and analytic production differ")
    inv = inverse(p)
    partner = family(fam.partner, order)
    inverse_ok = Check(inv.same_as(partner), f"inverse of {fam.value} != {fam.partner.value}")
    return _all(za_check, superdiag, ladder, inverse_ok)


def check_recurrence(fam: Family, n: int, order: int, stated=None) -> Check:
    """Extracted (alpha, beta) equal the closed forms, the polynomials they
    generate are the rows of the coefficient array, and they are orthogonal
    for the moment functional."""
    p = family(fam, order)
    t = extract_ttr(production_analytic(compute_ZA(p), n + 1))
    alpha_f, beta_f = TTR_CLOSED[fam]
    ok = _all(
        _first(zip(t.alpha, (alpha_f(i) for i in range(n + 1))), "alpha"),
        _first(zip(t.beta, (beta_f(i) for i in range(1, n + 1))), "beta"),
    )
    if not ok:
        return ok
    polys = ttr_polynomials(t, n)
    if stated is not None:
        # P_0 = 1, P_1 = z - alpha_0, then the stated recurrence
        alt = [(ONE,), zpoly_mul_linear((ONE,), t.alpha[0])]
        for m in range(2, n + 1):
            a, b = stated(m)
            alt.append(zpoly_sub(zpoly_mul_linear(alt[-1], a), tuple(c * b for c in alt[-2])))
        ok = _first(zip(polys.polys, alt), "stated recurrence P")
        if not ok:
            return ok
    coeff = realize(family(fam.partner, order), n + 1)
    rows = [tuple(q) + (ZERO,) * (n + 1 - len(q)) for q in polys.polys]
    ok = _first(zip(rows, coeff.rows), "coefficient array row")
    if not ok:
        return ok
    mu = moment_column(p, 2 * n)
    orth = orthogonality_check(polys, mu, n)
    return orth if orth else Check(False, f"orthogonality fails at (n, m) = {orth.witness}")


def check_continued_fraction(fam: Family, sfrac, n: int, order: int) -> Check:
    """S-fraction, contracted J-fraction, moment column and the brute-force
    permutation oracle agree through ``n``."""
    p = family(fam, order)
    mu = moment_column(p, n)
    s = sfrac(2 * n + 1)
    via_s = sfraction_moments(s, n)
    via_j = jfraction_moments(contract_sfraction(s), n)
    via_ttr = jfraction_moments(extract_ttr(production_analytic(compute_ZA(p), n + 1)), n)
    if fam is Family.SV_MOMENT:
        brute = [ONE] + [sv_oracle(m) for m in range(1, n + 1)]
    else:
        brute = [ONE] + [homogenize_y(sv_oracle(m), m) for m in range(1, n + 1)]
    return _all(
        _first(zip(via_s, mu), "S-fraction"),
        _first(zip(via_j, mu), "contracted J-fraction"),
        _first(zip(via_ttr, mu), "production J-fraction"),
        _first(zip(brute, mu), "permutation oracle"),
    )


def check_hankel(fam: Family, closed, n: int, order: int) -> Check:
    p = family(fam, max(order, 2 * n))
    mu = moment_column(p, 2 * n)
    betas = extract_ttr(production_analytic(compute_ZA(p), n + 1)).beta
    for m in range(n + 1):
        det = hankel_det(mu, m)
        if det != closed(m):
            return Check(False, f"h_{m}: determinant {det} != closed form {closed(m)}")
        if det != hankel_from_betas(betas, m):
            return Check(False, f"h_{m}: determinant != beta product")
    return Check(True)


def claim_p1(n, order):
    return check_production_claim(Family.KEULER_MOMENT, n, order)


def claim_c2(n, order):
    return check_recurrence(Family.KEULER_MOMENT, n, order, stated_keuler_recurrence)


def claim_c3(n, order):
    return check_continued_fraction(Family.KEULER_MOMENT, keuler_sfraction, n, order)


def claim_c4(n, order):
    return check_hankel(Family.KEULER_MOMENT, hankel_closed_keuler, n, order)


def claim_p5(n, order):
    return check_production_claim(Family.SV_MOMENT, n, order)


def claim_c6(n, order):
    return check_recurrence(Family.SV_MOMENT, n, order, stated_sv_recurrence)


def claim_c7(n, order):
    return check_continued_fraction(Family.SV_MOMENT, sv_sfraction, n, order)


def claim_c8(n, order):
    return check_hankel(Family.SV_MOMENT, hankel_closed_sv, n, order)


def _check_shifted(fam: Family, alpha0, beta1, n, order):
    p = family(fam, order)
    t = extract_ttr(production_analytic(compute_ZA(p), n + 1))
    low = _first([(t.alpha[0], alpha0), (t.beta[0], beta1)], "alpha_0/beta_1")
    moments = _first(zip(jfraction_moments(t, n), moment_column(p, n)), "J-fraction moment")
    return _all(check_production_claim(fam, n, order), low, moments,
                check_recurrence(fam, min(n, order // 2), order))


def claim_s5_keuler(n, order):
    from .exactalg import K
    return _check_shifted(Family.KEULER_SHIFTED_MOMENT, K * X + 1, K * X * (K + 1), n, order)


def claim_s5_sv(n, order):
    return _check_shifted(Family.SV_SHIFTED_MOMENT, X + Y, X * (Y + 1), n, order)


def claim_stirling4(n, order):
    """Bridge-array factorization, the y-expansion identity and both double sums."""
    bridge = family(Family.STIRLING_BRIDGE, order)
    product = multiply(stirling2_pair(X - ONE, order), stirling1_pair(order))
    size = n + 1
    fact = Check(realize(bridge, size) == realize(product, size), "bridge != S2(x-1) * |s1|")
    ys = symbolic_exp_power(order).egf_terms()[:size]
    F = moment_column(family(Family.SV_MOMENT, order), n)
    via_bridge = realize(bridge, size).apply(ys)
    checks = [fact, _first(zip(via_bridge, F), "bridge applied to y^n")]
    for m in range(1, n + 1):
        brute = sv_oracle(m)
        checks.append(_first([(sv_from_stirling(m), brute)], f"F_{m} double sum"))
        checks.append(_first([(keuler_from_stirling(m), homogenize_y(brute, m))], f"A_{m} double sum"))
    return _all(*checks)


def claim_hankel_alpha_indep(n, order):
    """Shifting every alpha by one changes the moments but not the Hankel determinants."""
    for fam in (Family.KEULER_MOMENT, Family.SV_MOMENT):
        t = extract_ttr(production_analytic(compute_ZA(family(fam, order)), n + 1))
        moved = TTRData([a + 1 for a in t.alpha], t.beta)
        mu, nu = jfraction_moments(t, 2 * n), jfraction_moments(moved, 2 * n)
        if mu == nu:
            return Check(False, f"{fam.value}: perturbing alpha left moments unchanged")
        for m in range(n + 1):
            if hankel_det(mu, m) != hankel_det(nu, m):
                return Check(False, f"{fam.value}: h_{m} depends on alpha")
    return Check(True)


def claim_deleham(n, order):
    r, s = deleham_keuler(n)
    keuler = _first(zip(row_polynomials(deleham_delta(r, s, n), X),
                        moment_column(family(Family.KEULER_MOMENT, order), n)), "keuler Delta row")
    r, s = deleham_sv(n)
    sv = _first(zip(row_polynomials(deleham_delta(r, s, n), X),
                    moment_column(family(Family.SV_MOMENT, order), n)), "sv Delta row")
    r, s = deleham_a079641(n)
    tri = deleham_delta(r, s, n)
    bridge2 = realize(family(Family.STIRLING_BRIDGE, order), n + 1).subs(x=2)
    return _all(keuler, sv, Check(tri == bridge2, "Delta triangle != bridge array at x = 2"))


@dataclass(frozen=True)
class ClaimSpec:
    fn: Claim
    default_n: int
    summary: str


REGISTRY: Dict[str, ClaimSpec] = {
    "p1": ClaimSpec(claim_p1, 7, "1/k-Eulerian moment array has a tridiagonal production matrix"),
    "c2": ClaimSpec(claim_c2, 5, "three-term recurrence for the 1/k-Eulerian orthogonal polynomials"),
    "c3": ClaimSpec(claim_c3, 7, "continued fractions for the 1/k-Eulerian moments"),
    "c4": ClaimSpec(claim_c4, 5, "Hankel transform of the 1/k-Eulerian polynomials"),
    "p5": ClaimSpec(claim_p5, 7, "Savage-Viswanathan moment array has a tridiagonal production matrix"),
    "c6": ClaimSpec(claim_c6, 5, "three-term recurrence for the Savage-Viswanathan orthogonal polynomials"),
    "c7": ClaimSpec(claim_c7, 7, "continued fractions for the Savage-Viswanathan moments"),
    "c8": ClaimSpec(claim_c8, 5, "Hankel transform of the Savage-Viswanathan polynomials"),
    "s5-keuler": ClaimSpec(claim_s5_keuler, 6, "once-shifted 1/k-Eulerian polynomials are moments"),
    "s5-sv": ClaimSpec(claim_s5_sv, 6, "once-shifted Savage-Viswanathan polynomials are moments"),
    "stirling4": ClaimSpec(claim_stirling4, 7, "Stirling factorization and double-sum formulas"),
    "hankel-alpha-indep": ClaimSpec(claim_hankel_alpha_indep, 4, "Hankel determinants ignore alpha_n"),
    "deleham": ClaimSpec(claim_deleham, 6, "Deleham Delta descriptions of the three triangles"),
}


@dataclass(frozen=True)
class VerifyReport:
    claim: str
    status: str
    witness: Optional[str]
    elapsed: float

    @property
    def passed(self) -> bool:
        return self.status == "pass"


def run_claim(claim_id: str, n: int | None = None, order: int = DEFAULT_ORDER) -> VerifyReport:
    entry = REGISTRY[claim_id]
    start = time.perf_counter()
    result = entry.fn(entry.default_n if n is None else n, order)
    elapsed = time.perf_counter() - start
    if result:
        return VerifyReport(claim_id, "pass", None, elapsed)
    return VerifyReport(claim_id, "fail", str(result.witness), elapsed)


def run_claims(ids: List[str], n: int | None = None, order: int = DEFAULT_ORDER) -> List[VerifyReport]:
    return [run_claim(c, n, order) for c in ids]
