from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from tiealg.completion import E, T, TI
from tiealg.scalars import ONE, U, RationalFunction
from tiealg.words import Element

settings.register_profile("default", deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

small_fractions = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@st.composite
def polys(draw, max_degree=3):
    coeffs = draw(st.lists(small_fractions, min_size=0, max_size=max_degree + 1))
    return tuple(coeffs)


@st.composite
def rational_functions(draw):
    num = draw(polys())
    den = draw(polys())
    if not any(den):
        den = (Fraction(1),)
    return RationalFunction.from_coeffs(num or (0,), den)


# coefficients without a pole at u = 1
REGULAR_COEFFS = [ONE, -ONE, U, U.inv(), U - ONE, ONE - U.inv(), RationalFunction(2),
                  RationalFunction(Fraction(1, 2)), U * U + ONE, (U + ONE).inv()]


def letters(n, inverses=True):
    out = []
    for i in range(1, n):
        out += [T(i), E(i)]
        if inverses:
            out.append(TI(i))
    return out


def words(n, max_len=5, inverses=True):
    return st.lists(st.sampled_from(letters(n, inverses)), max_size=max_len).map(tuple)


@st.composite
def elements(draw, n, max_terms=3, max_len=4, inverses=True):
    terms = draw(st.lists(st.tuples(words(n, max_len, inverses), st.sampled_from(REGULAR_COEFFS)),
                          min_size=1, max_size=max_terms))
    return Element(n, terms)


@pytest.fixture
def E3():
    return lambda text: Element.parse(text, 3)
