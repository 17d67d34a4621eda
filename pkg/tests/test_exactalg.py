from fractions import Fraction

import pytest
from gmpy2 import mpq

from riordanmoments.errors import DegreeExceeded, NotDivisible
from riordanmoments.exactalg import (
    ONE, ZERO, K, X, Y, MultiPoly, evaluate, homogenize_y, parse, poly_exact_div,
    poly_mul, poly_substitute,
)


def test_difference_of_squares():
    assert poly_mul(X + Y, X - Y) == X**2 - Y**2


def test_binomial_square():
    assert str((K * X + 1) * (K * X + 1)) == "x^2*k^2 + 2*x*k + 1"


def test_canonical_order_of_f2():
    assert str(Y * (X + Y)) == "x*y + y^2"
    assert (Y * (X + Y)).to_string(compact=True) == "x*y+y^2"


def test_rational_coefficients_print_reduced():
    p = X * Fraction(2, 4) - Fraction(3, 1)
    assert str(p) == "1/2*x - 3"
    assert p.coefficient(1, 0, 0) == mpq(1, 2)
    assert type(p.coefficient(0, 0, 0)) is int


def test_zero_terms_vanish():
    assert (X - X) == ZERO
    assert not (X - X).terms
    assert str(ZERO) == "0"


def test_exact_division_common_factor():
    assert poly_exact_div(K**2 * X**2 + K * X, K) == K * X**2 + X


def test_exact_division_series_coefficient():
    # z^2 coefficient of ln((1+kz)/(1+kxz)) over k(1-x)
    c2 = -(K**2) * (1 - X**2) / 2
    assert poly_exact_div(c2, K * (1 - X)) == -K * (1 + X) / 2


def test_exact_division_failure():
    with pytest.raises(NotDivisible):
        poly_exact_div(X + 1, K)
    with pytest.raises(ZeroDivisionError):
        poly_exact_div(X, ZERO)


def test_substitution():
    f2 = X * Y + Y**2
    assert f2.subs(y=1) == X + 1
    assert (X**2 + X).subs(x=2) == MultiPoly.const(6)
    assert f2.subs(x=1) == Y * (Y + 1)
    assert poly_substitute(f2, "y", X) == 2 * X**2
    assert evaluate(f2, x=2, y=Fraction(1, 2)) == mpq(5, 4)


def test_homogenize():
    assert homogenize_y(X * Y + Y**2, 2) == K * X + 1
    assert homogenize_y(Y, 1) == ONE
    f3 = parse("y(x^2 + x(3y + 1) + y^2)")
    assert homogenize_y(f3, 3) == parse("k^2x^2 + kx(k + 3) + 1")


def test_homogenize_errors():
    with pytest.raises(DegreeExceeded):
        homogenize_y(Y**3, 2)
    with pytest.raises(ValueError):
        homogenize_y(K * Y, 2)


def test_degree_queries():
    p = parse("x^2*y + 3*x*y^2*k + 1")
    assert p.degree() == 4
    assert p.degree("y") == 2
    assert p.degree("k") == 1
    assert p.variables() == ("x", "y", "k")


@pytest.mark.parametrize("text, expected", [
    ("2 k^2 x+2 k x", "2*x*k^2 + 2*x*k"),
    ("2 (x y+x)", "2*x*y + 2*x"),
    ("x**2 − 1", "x^2 - 1"),
    ("kx(k^2 + 4·k + 6)", "x*k^3 + 4*x*k^2 + 6*x*k"),
    ("-(x - 1/3)", "-x + 1/3"),
])
def test_parse_display_notation(text, expected):
    assert str(parse(text)) == expected


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        parse("x + * y")
    with pytest.raises(ValueError):
        parse("z + 1")
