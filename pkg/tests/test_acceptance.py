"""Acceptance criteria, one test per criterion.

All comparisons are exact polynomial identities (zero tolerance).  Each test
prints a single PASS/FAIL line; the same lines are collected into an
"acceptance criteria" section of the terminal summary.
"""
import time

import pytest

from conftest import load_list, load_matrix
from props import SUITES, binomial_transform
from riordanmoments.closedforms import TTR_CLOSED, ZA_CLOSED, keuler_sfraction, sv_sfraction
from riordanmoments.combinat import (
    keuler_from_stirling, specialization_checks, sv_from_stirling, sv_oracle,
)
from riordanmoments.exactalg import ONE, K, X, Y, homogenize_y
from riordanmoments.hankel import hankel_closed_keuler, hankel_closed_sv, hankel_det, hankel_from_betas
from riordanmoments.matrix import Matrix
from riordanmoments.orthopoly import contract_sfraction, jfraction_moments, sfraction_moments
from riordanmoments.production import (
    TTRData, compute_ZA, extract_ttr, is_tridiagonal, production_analytic, production_ladder,
)
from riordanmoments.riordan import (
    Family, family, inverse, moment_column, multiply, realize, stirling1_pair, stirling2_pair,
)
from riordanmoments.series import TruncSeries


def verdict(record, number, title, body):
    try:
        body()
    except AssertionError as exc:
        line = f"FAIL criterion {number}: {title} -- {str(exc).splitlines()[0]}"
        print(line)
        record(line)
        raise
    line = f"PASS criterion {number}: {title}"
    print(line)
    record(line)


def same(computed, expected, label):
    """Byte comparison of canonical renderings, reporting the first difference."""
    if isinstance(computed, Matrix):
        computed, expected = computed.to_strings(), expected.to_strings()
    else:
        computed, expected = [str(p) for p in computed], [str(p) for p in expected]
    assert len(computed) == len(expected), f"{label}: {len(computed)} rows vs {len(expected)}"
    for i, (a, b) in enumerate(zip(computed, expected)):
        assert a == b, f"{label}[{i}]: computed {a!r}, transcribed {b!r}"


def test_criterion_1_displays(record_criterion):
    def body():
        same(moment_column(family(Family.SV_MOMENT), 4), load_list("sv_moments.txt"), "F_n list")
        same(moment_column(family(Family.KEULER_MOMENT), 4), load_list("keuler_moments.txt"), "A_n list")
        same(production_analytic(compute_ZA(family(Family.KEULER_MOMENT)), 7),
             load_matrix("production_keuler.txt"), "1/k-Eulerian production")
        same(production_analytic(compute_ZA(family(Family.SV_MOMENT)), 7),
             load_matrix("production_sv.txt"), "SV production")
        bridge = realize(family(Family.STIRLING_BRIDGE), 7)
        same(bridge, load_matrix("bridge_general.txt"), "general-x triangle")
        for x in range(4):
            same(bridge.subs(x=x), load_matrix(f"bridge_x{x}.txt"), f"x = {x} triangle")
        same(moment_column(family(Family.KEULER_SHIFTED_MOMENT), 2),
             load_list("keuler_shifted_moments.txt"), "shifted A list")
        same(moment_column(family(Family.SV_SHIFTED_MOMENT), 3),
             load_list("sv_shifted_moments.txt"), "shifted F list")
    verdict(record_criterion, 1, "displayed lists, production matrices and triangles reproduced", body)


def test_criterion_2_tridiagonal_production(record_criterion):
    def body():
        for fam in (Family.KEULER_MOMENT, Family.SV_MOMENT):
            za = compute_ZA(family(fam))
            P = production_analytic(za, 7)
            tri = is_tridiagonal(P)
            assert tri, f"{fam.value}: nonzero entry at {tri.witness}"
            for r in range(6):
                assert P[r, r + 1] == ONE, f"{fam.value}: superdiagonal entry {r} is {P[r, r + 1]}"
            A, Z = ZA_CLOSED[fam]
            assert za.A.order >= 8 and za.Z.order >= 8, "Z, A not available to order 8"
            assert za.A.truncate(8) == TruncSeries.from_poly(A, 8), f"{fam.value}: A differs"
            assert za.Z.truncate(8) == TruncSeries.from_poly(Z, 8), f"{fam.value}: Z differs"
        assert ZA_CLOSED[Family.KEULER_MOMENT][0] == [ONE, K + K * X, K * K * X]
    verdict(record_criterion, 2, "moment production matrices tridiagonal, Z and A closed forms", body)


def test_criterion_3_production_routes(record_criterion):
    def body():
        for fam in Family:
            p = family(fam)
            assert production_analytic(compute_ZA(p), 6) == production_ladder(p, 6), fam.value
    verdict(record_criterion, 3, "analytic and ladder production matrices agree for all nine arrays", body)


def test_criterion_4_four_way_moments(record_criterion):
    def body():
        cases = (
            (Family.SV_MOMENT, sv_sfraction, lambda n: sv_oracle(n)),
            (Family.KEULER_MOMENT, keuler_sfraction, lambda n: homogenize_y(sv_oracle(n), n)),
        )
        for fam, sfrac, brute in cases:
            s = sfrac(15)
            via_s = sfraction_moments(s, 7)
            via_j = jfraction_moments(contract_sfraction(s), 7)
            via_inverse = moment_column(inverse(family(fam.partner)), 7)
            for n in range(8):
                oracle = brute(n) if n else ONE
                assert via_s[n] == via_j[n] == via_inverse[n] == oracle, f"{fam.value} n = {n}"
        start = time.perf_counter()
        sv_oracle(7)
        elapsed = time.perf_counter() - start
        assert elapsed < 1.0, f"enumerating S_7 took {elapsed:.2f}s"
    verdict(record_criterion, 4, "S-fraction, J-fraction, inverse array and permutation oracle agree", body)


def test_criterion_5_hankel(record_criterion):
    def body():
        cases = ((Family.KEULER_MOMENT, hankel_closed_keuler), (Family.SV_MOMENT, hankel_closed_sv))
        for fam, closed in cases:
            mu = moment_column(family(fam), 10)
            betas = extract_ttr(production_analytic(compute_ZA(family(fam)), 6)).beta
            for n in range(6):
                h = hankel_det(mu, n)
                assert h == closed(n), f"{fam.value}: h_{n} != closed form"
                assert h == hankel_from_betas(betas, n), f"{fam.value}: h_{n} != beta product"
        for n in range(7):
            a, b = hankel_closed_keuler(n), hankel_closed_keuler(n, "product")
            assert a == b, f"the two stated 1/k-Eulerian product forms differ at n = {n}: {a} vs {b}"
    verdict(record_criterion, 5, "Hankel determinants, closed forms, beta products and both stated 1/k-Eulerian forms", body)


def test_criterion_6_stirling(record_criterion):
    def body():
        for n in range(8):
            brute = sv_oracle(n)
            assert sv_from_stirling(n) == brute, f"F_{n} double sum"
            assert keuler_from_stirling(n) == homogenize_y(brute, n), f"A_{n} double sum"
        product = multiply(stirling2_pair(X - ONE), stirling1_pair())
        assert realize(family(Family.STIRLING_BRIDGE), 7) == realize(product, 7), "bridge factorization"
    verdict(record_criterion, 6, "Stirling double sums and bridge factorization", body)


def test_criterion_7_shifted(record_criterion):
    def body():
        expect = {
            Family.KEULER_SHIFTED_MOMENT: (K * X + 1, K * X * (K + 1)),
            Family.SV_SHIFTED_MOMENT: (X + Y, X * (Y + 1)),
        }
        sv = moment_column(family(Family.SV_MOMENT), 7)
        ke = moment_column(family(Family.KEULER_MOMENT), 7)
        unshifted = {
            Family.KEULER_SHIFTED_MOMENT: [ke[n + 1] for n in range(7)],
            Family.SV_SHIFTED_MOMENT: [sv[n + 1] / Y for n in range(7)],
        }
        for fam, (a0, b1) in expect.items():
            P = production_analytic(compute_ZA(family(fam)), 7)
            tri = is_tridiagonal(P)
            assert tri, f"{fam.value}: nonzero entry at {tri.witness}"
            t = extract_ttr(P)
            assert t.alpha[0] == a0 and t.beta[0] == b1, f"{fam.value}: alpha_0 = {t.alpha[0]}, beta_1 = {t.beta[0]}"
            alpha, beta = TTR_CLOSED[fam]
            stated = TTRData([alpha(n) for n in range(4)], [beta(n) for n in range(1, 4)])
            mu = jfraction_moments(stated, 6)
            assert mu == unshifted[fam][:7], f"{fam.value}: continued fraction moments differ"
            assert mu == moment_column(family(fam), 6), f"{fam.value}: moment column differs"
    verdict(record_criterion, 7, "shifted families: tridiagonal, alpha_0/beta_1, continued fractions", body)


def test_criterion_8_specializations(record_criterion):
    def body():
        for name, check in specialization_checks(8).items():
            assert check, f"{name} fails at n = {check.witness}"
    verdict(record_criterion, 8, "Fubini, EGF square and rising factorial specializations", body)


def _named_family_laws():
    for fam in Family:
        p = family(fam, 8)
        assert realize(multiply(p, inverse(p)), 8) == Matrix.identity(8), f"{fam.value} inverse law"
    for fam in (Family.KEULER_MOMENT, Family.SV_MOMENT):
        t = extract_ttr(production_analytic(compute_ZA(family(fam)), 5))
        mu = moment_column(family(fam), 8)
        moved = jfraction_moments(TTRData([a + 1 for a in t.alpha], t.beta), 8)
        binom = binomial_transform(mu)
        for n in range(5):
            h = hankel_det(mu, n)
            assert h == hankel_det(moved, n), f"{fam.value}: h_{n} depends on alpha"
            assert h == hankel_det(binom, n), f"{fam.value}: h_{n} changes under binomial transform"


def test_criterion_9_property_suites(record_criterion):
    def body():
        for suite, tests in SUITES.items():
            for fn in tests:
                try:
                    fn()
                except AssertionError as exc:
                    raise AssertionError(f"{suite}: {fn.__name__}: {exc}") from exc
        _named_family_laws()
    verdict(record_criterion, 9, f"property suites ({', '.join(SUITES)}) and named families", body)


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
