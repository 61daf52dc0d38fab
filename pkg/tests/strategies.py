"""Hypothesis strategies shared by the property tests."""
from fractions import Fraction

from hypothesis import strategies as st

from nkhiggs.field import GaussRat
from nkhiggs.hopf import Mat2

small_int = st.integers(-6, 6)
rationals = st.builds(Fraction, st.integers(-40, 40), st.integers(1, 12))
gauss = st.builds(GaussRat, rationals, rationals)
gauss_int = st.builds(GaussRat, st.integers(-2, 2), st.integers(-2, 2))


@st.composite
def trace_free(draw, entries=gauss):
    a, b, c = draw(entries), draw(entries), draw(entries)
    return Mat2(a, b, c, -a)


@st.composite
def invertible(draw, entries=gauss):
    while True:
        M = Mat2(draw(entries), draw(entries), draw(entries), draw(entries))
        if M.det():
            return M
