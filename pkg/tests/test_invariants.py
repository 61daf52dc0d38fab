from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from nkhiggs.errors import NegativeGenus
from nkhiggs.invariants import (
    Gate,
    H0Value,
    LineFlags,
    Twist,
    classify_range,
    discriminant,
    h0_curve,
    m_invariant,
    serre_dual_flags,
    twist_gate,
)
from nkhiggs.surface import LineBundleX



@st.composite
def consistent_bundles(draw):
    """(g, deg, flags) describing an actual line bundle."""
    g = draw(st.integers(0, 6))
    top = 2 * g - 2
    kind = draw(st.sampled_from(["generic", "trivial", "canonical", "point", "k_minus_point", "non_effective", "bare"]))
    if kind == "trivial":
        return g, 0, LineFlags(is_trivial=True, is_effective=True)
    if kind == "canonical" and g >= 1:
        return g, top, LineFlags(is_canonical=True, is_trivial=(g == 1) or None)
    if kind == "point" and g >= 2:
        return g, 1, LineFlags(point_class=True, is_effective=True)
    if kind == "k_minus_point" and g >= 2:
        return g, top - 1, LineFlags(canonical_minus_point=True)
    if kind == "non_effective" and g >= 1:
        return g, draw(st.integers(-3, g - 1)), LineFlags(is_effective=False, is_trivial=False)
    deg = draw(st.integers(-3, 2 * g + 2))
    return g, deg, LineFlags(generic=True) if kind == "generic" else LineFlags()


def test_discriminant_examples():
    assert discriminant(4, LineBundleX(0)) == 2
    assert discriminant(0, LineBundleX(0, 0, 2)) == Fraction(1, 2)
    assert discriminant(0, LineBundleX(0)) == 0


def test_m_invariant_examples():
    assert m_invariant(LineBundleX(0)) == 0
    assert m_invariant(LineBundleX(0, 0, 2)) == Fraction(1, 2)
    assert m_invariant(LineBundleX(0, 0, 5)) == Fraction(5, 4)


@pytest.mark.parametrize(
    "n, c2, expect",
    [
        (3, 0, (True, True, False, Fraction(3, 4), Fraction(1, 2), Fraction(3, 4))),
        (4, 0, (True, True, False, Fraction(1), Fraction(1, 2), Fraction(1))),
        (8, -1, (True, False, True, Fraction(3, 2), Fraction(1, 2), Fraction(2))),
    ],
)
def test_classify_range_examples(n, c2, expect):
    rv = classify_range(c2, LineBundleX(0, 0, n, -2))
    assert (rv.exists, rv.filtrable_exists, rv.in_nonfiltrable_range, rv.delta, rv.floor, rv.m) == expect


@given(st.integers(-10, 10), st.integers(0, 12), st.integers(-4, 0))
def test_range_properties(c2, n, e):
    delta = LineBundleX(0, 0, n, e)
    assert discriminant(c2 + 1, delta) - discriminant(c2, delta) == Fraction(1, 2)
    rv, up = classify_range(c2, delta), classify_range(c2 + 1, delta)
    if rv.in_nonfiltrable_range:
        assert rv.exists and not rv.filtrable_exists
    assert not (rv.exists and not up.exists)


def test_h0_curve_examples():
    assert h0_curve(1, 2, LineFlags(canonical_minus_point=True)) == H0Value.exact(1)
    assert h0_curve(-1, 2) == H0Value.exact(0)
    assert h0_curve(0, 2, LineFlags(is_trivial=True)) == H0Value.exact(1)
    assert h0_curve(2, 2, LineFlags(is_canonical=True)) == H0Value.exact(2)
    assert h0_curve(5, 2) == H0Value.exact(4)


def test_h0_curve_undecidable_without_flags():
    assert h0_curve(0, 3).kind == "Undecidable"
    assert h0_curve(4, 3).kind == "Undecidable"
    with pytest.raises(NegativeGenus):
        h0_curve(0, -1)


def test_h0_curve_clifford_interval():
    h = h0_curve(3, 4)
    assert h.kind == "Interval" and (h.lo, h.hi) == (0, 2)


@given(consistent_bundles())
def test_riemann_roch_on_exact_answers(case):
    g, deg, flags = case
    a = h0_curve(deg, g, flags)
    b = h0_curve(2 * g - 2 - deg, g, serre_dual_flags(flags, deg, g))
    if a.is_exact and b.is_exact:
        assert a.value - b.value == deg + 1 - g


def test_h0_value_invariants():
    assert H0Value.interval(2, 2) == H0Value.exact(2)
    with pytest.raises(ValueError):
        H0Value.interval(3, 2)
    assert H0Value.interval(1, None).certainly_positive()


def test_twist_gate_examples():
    assert twist_gate(Twist.Tangent, 0) is Gate.Possible
    assert twist_gate(Twist.Cotangent, 1) is Gate.NoStablePairs
    assert twist_gate(Twist.LineBundle, V_deg=Fraction(-1, 2)) is Gate.NoStablePairs
    assert twist_gate(Twist.LineBundle, V_deg=0, V_is_trivial=True) is Gate.OnlyScalarFields
    assert twist_gate(Twist.Cotangent, 2) is Gate.Possible


@pytest.mark.parametrize("g", range(11))
def test_genus_dichotomy(g):
    tangent, cotangent = twist_gate(Twist.Tangent, g), twist_gate(Twist.Cotangent, g)
    assert not (tangent is Gate.Possible and cotangent is Gate.Possible)
    if tangent is Gate.Possible:
        assert cotangent is Gate.NoStablePairs
    assert (tangent is Gate.Possible) == (g == 0)
    assert (cotangent is Gate.Possible) == (g >= 2)
