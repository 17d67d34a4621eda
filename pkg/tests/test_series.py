from fractions import Fraction
from math import factorial

import pytest

from riordanmoments.errors import BadLowOrderTerms, NotDivisible, NonUnitConstantTerm, NonzeroConstantTerm
from riordanmoments.exactalg import ONE, ZERO, K, X, Y, MultiPoly
from riordanmoments.riordan import Family, family
from riordanmoments.series import (
    Flavor, TruncSeries, series_compose, series_derivative, series_div, series_exp,
    series_inverse, series_log, series_mul, series_pow_recip_k, series_pow_sym,
    series_reversion,
)


def S(coeffs, order):
    return TruncSeries.from_poly(coeffs, order)


def log1p_oracle(u: TruncSeries) -> TruncSeries:
    """sum_{m>=1} (-1)^(m+1) u^m / m, by repeated multiplication."""
    acc, power = TruncSeries.from_poly([ZERO], u.order), TruncSeries.one(u.order)
    for m in range(1, u.order + 1):
        power = series_mul(power, u)
        acc = acc + power * Fraction((-1) ** (m + 1), m)
    return acc


def exp_oracle(s: TruncSeries) -> TruncSeries:
    """sum_m s^m / m!."""
    acc, power = TruncSeries.one(s.order), TruncSeries.one(s.order)
    for m in range(1, s.order + 1):
        power = series_mul(power, s)
        acc = acc + power * Fraction(1, factorial(m))
    return acc


def test_mul_basic():
    assert series_mul(S([1, 1], 2), S([1, -1], 2)) == S([1, 0, -1], 2)
    e = TruncSeries.exp_linear(ONE, 6)
    assert series_mul(e, e) == TruncSeries.exp_linear(MultiPoly.const(2), 6)
    assert series_mul(S([1, K], 4), S([1, K * X], 4)) == S([1, K + K * X, K * K * X], 4)


def test_order_is_minimum():
    assert series_mul(S([1], 3), S([1], 5)).order == 3
    assert (S([1], 2) + S([1], 7)).order == 2


def test_egf_flavor():
    s = TruncSeries.exp_linear(Y, 4)
    assert Flavor.EGF.extract(s) == [Y**n for n in range(5)]
    assert Flavor.OGF.extract(S([1, 2], 2)) == [ONE, MultiPoly.const(2), ZERO]
    assert Flavor.EGF.build([1, 1, 2]) == S([1, 1, 1], 2)


def test_compose_examples():
    geo = TruncSeries([ONE] * 5)
    assert series_compose(geo, S([0, 0, 1], 4)) == S([1, 0, 1, 0, 1], 4)
    log1p = TruncSeries([ZERO] + [MultiPoly.const(Fraction((-1) ** (n + 1), n)) for n in range(1, 6)])
    expm1 = TruncSeries.exp_linear(ONE, 5) - TruncSeries.one(5)
    assert series_compose(log1p, expm1) == TruncSeries.z(5)


def test_compose_requires_zero_constant():
    with pytest.raises(NonzeroConstantTerm):
        series_compose(S([1, 1], 3), S([1, 1], 3))


def test_reversion_examples():
    f = S([0, 1, 1, 1, 1, 1], 5)  # z/(1-z)
    assert series_reversion(f) == S([0, 1, -1, 1, -1, 1], 5)
    expm1 = TruncSeries.exp_linear(ONE, 6) - TruncSeries.one(6)
    assert series_reversion(expm1) == TruncSeries(
        [ZERO] + [MultiPoly.const(Fraction((-1) ** (n + 1), n)) for n in range(1, 7)])


def test_reversion_of_sv_f_matches_closed_form():
    f = family(Family.SV_MOMENT).f
    closed = family(Family.SV_COEFF).f
    assert series_reversion(f).agrees(closed, 8)


def test_reversion_needs_normalized_input():
    with pytest.raises(BadLowOrderTerms):
        series_reversion(S([0, 2, 1], 3))
    with pytest.raises(BadLowOrderTerms):
        series_reversion(S([1, 1], 3))


def test_log_examples():
    assert series_log(S([1, 1], 3)) == S([0, 1, Fraction(-1, 2), Fraction(1, 3)], 3)
    assert series_log(TruncSeries.exp_linear(K, 6)) == S([0, K], 6)
    ratio = series_div(S([1, K], 4), S([1, K * X], 4))
    assert series_log(ratio)[2] == -(K**2) * (1 - X**2) / 2


def test_log_against_oracle_symbolic():
    s = S([1, K, K * X, Y], 6)
    assert series_log(s) == log1p_oracle(s - TruncSeries.one(6))


def test_log_rejects_non_unit():
    with pytest.raises(NonUnitConstantTerm):
        series_log(S([2, 1], 3))
    with pytest.raises(NonUnitConstantTerm):
        series_inverse(S([X, 1], 3))


def test_exp_examples():
    assert series_exp(S([0, 1], 3)) == S([1, 1, Fraction(1, 2), Fraction(1, 6)], 3)
    assert series_exp(series_log(S([1, 1], 6))) == S([1, 1], 6)
    with pytest.raises(NonzeroConstantTerm):
        series_exp(S([1], 3))


def test_exp_of_y_log_is_rising_factorial():
    n = 6
    log_geo = TruncSeries([ZERO] + [MultiPoly.const(Fraction(1, m)) for m in range(1, n + 1)])
    terms = series_exp(log_geo * Y).egf_terms()
    rising = ONE
    for m in range(n + 1):
        assert terms[m] == rising
        rising = rising * (Y + m)


def test_pow_sym():
    assert series_pow_sym(S([1, 1], 4), Y)[2] == Y * (Y - 1) / 2
    assert series_pow_sym(S([1, X, Y], 4), ZERO) == TruncSeries.one(4)
    assert series_pow_sym(S([1, 1], 4), MultiPoly.const(3)) == S([1, 3, 3, 1], 4)


def test_pow_recip_k_needs_divisible_log():
    with pytest.raises(NotDivisible):
        series_pow_recip_k(S([1, X], 3))


def test_pow_recip_k():
    assert series_pow_recip_k(TruncSeries.exp_linear(K, 6)) == TruncSeries.exp_linear(ONE, 6)
    s = series_mul(S([1, K * X], 5), S([1, K, K * K], 5))
    at_one = series_pow_recip_k(s).subs(k=1)
    assert at_one == s.subs(k=1)


def test_derivative():
    assert series_derivative(S([1, 1, 1], 2)) == S([1, 2], 1)
    g = family(Family.SV_MOMENT).g
    shifted = (series_derivative(g).egf_terms())
    assert shifted[1] == Y * (X + Y)


def test_series_arithmetic_with_scalars():
    s = S([1, X], 2)
    assert (s * 2) == S([2, 2 * X], 2)
    assert (s / 2) == S([Fraction(1, 2), X / 2], 2)
