from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from nkhiggs.errors import InvalidLineBundle, InvalidSurface, KaehlerCase, NegativeGenus
from nkhiggs.surface import (
    LineBundleX,
    SurfaceSpec,
    canonicalize,
    constant_factor_bundle,
    degree,
    same_bundle,
    tensor,
    validate_line_bundle,
    validate_surface,
)
from strategies import rationals

specs = st.builds(SurfaceSpec, st.integers(0, 5), st.integers(1, 6), st.builds(Fraction, st.integers(1, 9), st.integers(1, 9)))
bundles = st.builds(LineBundleX, st.integers(-20, 20), rationals)


def test_validate_surface():
    hopf = SurfaceSpec(0, 1, 1)
    assert validate_surface(hopf) is hopf
    assert validate_surface(SurfaceSpec(2, 3, 1)) == SurfaceSpec(2, 3, 1)
    with pytest.raises(KaehlerCase):
        validate_surface(SurfaceSpec(1, 0, 1))
    with pytest.raises(NegativeGenus):
        validate_surface(SurfaceSpec(-1, 1, 1))
    with pytest.raises(InvalidSurface):
        validate_surface(SurfaceSpec(1, 1, 0))


def test_validate_line_bundle_e_range():
    spec = SurfaceSpec(2, 1, 1)
    validate_line_bundle(LineBundleX(0, 0, 3, -2), spec)
    with pytest.raises(InvalidLineBundle):
        validate_line_bundle(LineBundleX(0, 0, 3, -3), spec)
    with pytest.raises(InvalidLineBundle):
        validate_line_bundle(LineBundleX(0, 0, 3, 1), spec)


@pytest.mark.parametrize(
    "d, h, q, h2, q2",
    [(2, 0, 1, -2, 0), (1, 5, Fraction(1, 2), 5, Fraction(1, 2)), (4, 0, Fraction(-3, 2), 8, Fraction(1, 2))],
)
def test_canonicalize_examples(d, h, q, h2, q2):
    spec = SurfaceSpec(1, d, 1)
    c = canonicalize(LineBundleX(h, q), spec)
    assert (c.h_deg, c.q) == (h2, q2)
    assert degree(c, spec) == degree(LineBundleX(h, q), spec)


def test_degree_examples():
    spec = SurfaceSpec(2, 3, 1)
    assert degree(LineBundleX(7), spec) == 7
    assert degree(LineBundleX(0), spec) == 0
    assert degree(LineBundleX(0, Fraction(1, 3)), spec) == -1


@given(specs, bundles)
def test_canonical_form(spec, L):
    c = canonicalize(L, spec)
    assert 0 <= c.q < 1
    assert degree(c, spec) == degree(L, spec)
    assert canonicalize(c, spec) == c


@given(specs, bundles, bundles)
def test_degree_is_additive(spec, L1, L2):
    assert degree(tensor(L1, L2), spec) == degree(L1, spec) + degree(L2, spec)


@given(specs, rationals)
def test_every_rational_degree_is_reached(spec, c):
    L = constant_factor_bundle(c, spec)
    assert L.h_deg == 0 and degree(L, spec) == c


def test_phase_ignored_unless_requested():
    spec = SurfaceSpec(1, 2, 1)
    a, b = LineBundleX(0, 1, phase="u"), LineBundleX(-2, 0, phase="v")
    assert a == LineBundleX(0, 1)
    assert same_bundle(a, b, spec)
    assert not same_bundle(a, b, spec, compare_phase=True)


def test_tensor_keeps_spectral_data():
    L = tensor(LineBundleX(1, 0, 4, -1), LineBundleX(2, Fraction(1, 2)))
    assert (L.h_deg, L.q, L.n_delta, L.e_inv) == (3, Fraction(1, 2), 4, -1)
    with pytest.raises(InvalidLineBundle):
        tensor(LineBundleX(0, 0, 1), LineBundleX(0, 0, 2))
