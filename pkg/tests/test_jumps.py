from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from nkhiggs.divisors import Divisor, G, Pt, W
from nkhiggs.errors import InvalidDescriptor, InvalidJump, InvalidModification, LedgerViolation, NotNonFiltrable
from nkhiggs.jumps import (
    BundleDescriptor,
    Jump,
    apply_modification,
    jump_stats,
    pushforward_and_ramification,
    reduce_jumps,
)
from nkhiggs.surface import LineBundleX

heights = st.lists(st.integers(1, 6), min_size=1, max_size=6).map(lambda h: tuple(sorted(h, reverse=True)))


def nonfilt(c2, jumps=(), n=16, e=-2):
    return BundleDescriptor(LineBundleX(0, 0, n, e), c2, tuple(jumps), filtrable=False)


@pytest.mark.parametrize("hs, lms", [((4, 2, 2, 1), (4, 9, 3)), ((3, 3, 3), (3, 9, 1)), ((1,), (1, 1, 1))])
def test_jump_stats_examples(hs, lms):
    st_ = jump_stats(Jump(W(1), hs))
    assert (st_.l, st_.mu, st_.s) == lms


@given(heights)
def test_jump_stats_properties(hs):
    s = jump_stats(Jump(Pt("b"), hs))
    assert 1 <= s.s <= s.l <= s.mu
    assert sum(hs) == s.mu and len(hs) == s.l


@pytest.mark.parametrize("bad", [(), (0,), (1, 2), (-1,)])
def test_invalid_jumps(bad):
    with pytest.raises(InvalidJump):
        Jump(W(1), bad)


def test_non_filtrable_range_forces_negative_c2():
    # Delta < m reads c2/2 + n/4 < n/4
    with pytest.raises(InvalidDescriptor):
        nonfilt(0)
    nonfilt(-1)


def test_modification_examples():
    d = nonfilt(-1, [Jump(W(1), (2, 1))])
    d2 = apply_modification(d, W(1), -2)
    assert d2.c2 == -3 and d2.delta.h_deg == -1 and d2.jumps == (Jump(W(1), (1,)),)
    d3 = apply_modification(d, W(2), 0)
    assert d3.c2 == -1 and d3.delta.h_deg == -1 and d3.jumps == d.jumps
    with pytest.raises(InvalidModification):
        apply_modification(d, W(1), -1)
    with pytest.raises(InvalidModification):
        apply_modification(d, W(1), 1)
    d4 = apply_modification(d2, W(3), 1)
    assert d4.jump_at(W(3)) == Jump(W(3), (1,)) and d4.c2 == -2


@given(heights)
def test_allowable_chain_telescopes(hs):
    j = Jump(W(2), hs)
    d = nonfilt(-1, [j], n=4 * (sum(hs) + 3))
    for h in hs:
        d = apply_modification(d, W(2), -h)
    assert d.c2 == -1 - sum(hs) and d.jumps == () and d.delta.h_deg == -len(hs)


@given(st.integers(0, 4), st.integers(0, 3))
def test_modification_shifts_discriminant(deg, c2):
    d = nonfilt(-5 - c2, n=32)
    d2 = apply_modification(d, Pt("b"), deg)
    assert d2.discriminant == d.discriminant + Fraction(deg, 2)
    # 2 Delta - sum(mu) is preserved, so a valid descriptor stays valid
    assert 2 * d2.discriminant - sum(jump_stats(j).mu for j in d2.jumps) == 2 * d.discriminant


def test_ledger_bound_enforced():
    with pytest.raises(LedgerViolation):
        BundleDescriptor(LineBundleX(0), 1, (Jump(W(1), (2, 1)),))
    BundleDescriptor(LineBundleX(0), 2, (Jump(W(1), (2,)),))


def test_descriptor_checks():
    with pytest.raises(InvalidDescriptor):
        BundleDescriptor(LineBundleX(0, 0, 16, -2), 0, (Jump(W(1), (1,)), Jump(W(1), (2,))))
    with pytest.raises(InvalidDescriptor):
        BundleDescriptor(LineBundleX(0, 0, 2, -2), 4, filtrable=False)
    BundleDescriptor(LineBundleX(0), 3, filtrable=False)


def test_reduce_examples():
    r = reduce_jumps(nonfilt(-1, [Jump(W(1), (4, 2, 2, 1))], n=40))
    assert r.delta_shift == Fraction(9, 2) and r.twist == Divisor({W(1): 3})
    assert r.clean.c2 == -10 and r.clean.delta.h_deg == -4
    r = reduce_jumps(nonfilt(-1))
    assert r.delta_shift == 0 and not r.twist and r.clean == nonfilt(-1)
    b1, b2 = G("p"), G("q")
    r = reduce_jumps(nonfilt(-1, [Jump(b1, (1,)), Jump(b2, (2, 2))], n=20))
    assert r.delta_shift == Fraction(5, 2) and r.twist == Divisor.of(b1, b2)


def test_pushforward_examples():
    # genus-2 surfaces: e = -2 gives floor 1/2, e = -1 gives floor 1/4
    p = pushforward_and_ramification(nonfilt(-1, n=4))
    assert (p.deg_N, p.deg_R) == (-2, 4)
    p = pushforward_and_ramification(nonfilt(-1, n=3, e=-1))
    assert (p.deg_N, p.deg_R) == (-1, 2)
    p = pushforward_and_ramification(nonfilt(-1, [Jump(W(2), (1,))], n=5, e=-1))
    assert p.deg_N == -2
    with pytest.raises(NotNonFiltrable):
        pushforward_and_ramification(BundleDescriptor(LineBundleX(0), 0))


def test_pushforward_identity_symbolic():
    D, mu, s = sympy.symbols("Delta mu s")
    clean = D - mu / 2
    assert sympy.expand((-4 * clean - s) - (-4 * (D - sympy.Rational(1, 2) * mu) - s)) == 0


@given(st.lists(heights, max_size=4), st.integers(0, 6))
def test_pushforward_identity(profiles, extra):
    jumps = [Jump(G(f"b{i}"), hs) for i, hs in enumerate(profiles)]
    mu = sum(sum(hs) for hs in profiles)
    d = nonfilt(-1, jumps, n=4 * (mu + extra + 2), e=-2)
    p = pushforward_and_ramification(d)
    s = sum(len(set(hs)) for hs in profiles)
    assert p.deg_N == -4 * (d.discriminant - Fraction(mu, 2)) - s
    assert 2 * p.deg_N_clean == -p.deg_R
