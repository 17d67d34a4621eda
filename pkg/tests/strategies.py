"""Hypothesis strategies shared by the property suites."""
from fractions import Fraction

from hypothesis import strategies as st

from riordanmoments.exactalg import MultiPoly
from riordanmoments.series import TruncSeries

small_ints = st.integers(min_value=-6, max_value=6)
rationals = st.builds(Fraction, small_ints, st.integers(min_value=1, max_value=4))
exponents = st.tuples(*(st.integers(min_value=0, max_value=2),) * 3)


low_exponents = st.tuples(*(st.integers(min_value=0, max_value=1),) * 3)


@st.composite
def polys(draw, max_terms=4, coeffs=small_ints, exps=exponents):
    terms = draw(st.dictionaries(exps, coeffs, max_size=max_terms))
    return MultiPoly(terms)


# cheap coefficients for series-level properties, where products compound
series_coeffs = polys(max_terms=2, coeffs=st.integers(-3, 3), exps=low_exponents)


nonzero_polys = polys().filter(bool)


@st.composite
def series(draw, order=5, constant=None, linear=None, coeffs=None):
    """Random truncated series with optionally pinned low-order coefficients."""
    coeffs = series_coeffs if coeffs is None else coeffs
    cs = [draw(coeffs) for _ in range(order + 1)]
    if constant is not None:
        cs[0] = MultiPoly.const(constant)
    if linear is not None:
        cs[1] = MultiPoly.const(linear)
    return TruncSeries(cs)
