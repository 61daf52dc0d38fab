from fractions import Fraction

import pytest
import sympy
from hypothesis import assume, given
from hypothesis import strategies as st

from nkhiggs.errors import DegenerateInput, DegreeMismatch, InconsistentCase, NotTraceFree, PreconditionError
from nkhiggs.field import FieldElem, GaussRat
from nkhiggs.hopf import (
    CHARTS,
    E1,
    Common,
    EvenStable,
    HomPoly,
    HopfBundleDesc,
    Mat2,
    NoCommon,
    NotProportional,
    OddStable,
    PairVerdict,
    PolyMat2,
    Proportional,
    Unstable,
    X,
    Y,
    classify_pair,
    common_eigenvector,
    commutator_det,
    construct_stable_example,
    h0_end0_twisted,
    integrability_check,
    moduli_dimension,
    moduli_point_even,
    moduli_point_odd,
    normal_form_even,
    normal_form_odd,
    proportionality_decompose,
)
from strategies import gauss, gauss_int, invertible, trace_free

H = Mat2(1, 0, 0, -1)
S = Mat2(0, 1, 1, 0)
NIL1 = Mat2(0, 1, 0, 0)
NIL5 = Mat2(0, 5, 0, 0)


def trace_oracle(A1, A2):
    """(t^2, s', v') from conjugation-invariant traces, independent of the normal form."""
    half = GaussRat(Fraction(1, 2))
    return ((A1 @ A1).trace() * half, (A1 @ A2).trace(), (A2 @ A2).trace() * half)


def test_commutator_det_examples():
    assert commutator_det(H, S) == 4
    assert commutator_det(S, S) == 0
    assert commutator_det(NIL1, NIL5) == 0
    with pytest.raises(NotTraceFree):
        commutator_det(Mat2(1, 0, 0, 1), S)


def test_common_eigenvector_examples():
    assert common_eigenvector(H, S) == NoCommon()
    assert isinstance(common_eigenvector(Mat2(0, 0, 0, 0), S), Common)
    assert common_eigenvector(NIL1, NIL5) == Common(E1)


def test_normal_form_regression_value():
    r = normal_form_even(H, S)
    assert isinstance(r, EvenStable)
    p = r.point
    assert (p.t_sq, p.s_p, p.v_p) == (1, 0, 1)
    assert p.invariant() == 4


def test_normal_form_extension_case():
    r = normal_form_even(Mat2(0, 1, 2, 0), Mat2(1, 3, 0, -1))
    assert not r.t.in_base() and r.t * r.t == 2
    assert (r.point.t_sq, r.point.s_p, r.point.v_p) == (2, 6, 1)


def test_normal_form_of_normal_pair_is_fixed():
    A1, A2 = Mat2(3, 2, 0, -3), Mat2(0, 5, 1, 0)
    r = normal_form_even(A1, A2)
    assert (r.point.t_sq, r.point.s_p, r.point.v_p) == (9, 2, 5)


def test_normal_form_unstable_and_degenerate():
    assert normal_form_even(NIL1, NIL5) == Unstable(E1)
    assert isinstance(normal_form_even(Mat2(0, 0, 0, 0), S), Unstable)
    with pytest.raises(DegenerateInput):
        normal_form_even(Mat2(0, 0, 0, 0), Mat2(0, 0, 0, 0))


def test_second_conjugation_symbolically():
    t, u, v, s = sympy.symbols("t u v s")
    J = sympy.Matrix([[t, 1], [0, -t]])
    B = sympy.Matrix([[u, v], [s, -u]])
    Q = sympy.Matrix([[1, -u / s], [0, 1 / s]])
    assert sympy.simplify(Q * J * Q.inv() - sympy.Matrix([[t, s + 2 * t * u], [0, -t]])) == sympy.zeros(2)
    assert sympy.simplify(Q * B * Q.inv() - sympy.Matrix([[0, u**2 + s * v], [1, 0]])) == sympy.zeros(2)
    A1n, A2n = sympy.Matrix([[t, s + 2 * t * u], [0, -t]]), sympy.Matrix([[0, u**2 + s * v], [1, 0]])
    comm = A1n * A2n - A2n * A1n
    assert sympy.expand(comm.det() - (4 * t**2 * (u**2 + s * v) - (s + 2 * t * u) ** 2)) == 0


@given(trace_free(), trace_free())
def test_normal_form_matches_trace_oracle(A1, A2):
    assume(commutator_det(A1, A2))
    r = normal_form_even(A1, A2)
    assert (r.point.t_sq, r.point.s_p, r.point.v_p) == trace_oracle(A1, A2)
    P = r.certificate
    assert A1.conj(P) == r.A1_normal and A2.conj(P) == r.A2_normal
    assert r.point.invariant() == commutator_det(A1, A2)


@given(trace_free(), trace_free(), invertible())
def test_normal_form_conjugation_invariant(A1, A2, P):
    assume(commutator_det(A1, A2))
    a, b = normal_form_even(A1, A2).point, normal_form_even(A1.conj(P), A2.conj(P)).point
    assert (a.t_sq, a.s_p, a.v_p) == (b.t_sq, b.s_p, b.v_p)


@given(trace_free(gauss_int), trace_free(gauss_int))
def test_shemesh_agreement(A1, A2):
    assume(not (A1.is_zero() and A2.is_zero()))
    assert (commutator_det(A1, A2) == 0) == isinstance(common_eigenvector(A1, A2), Common)


@given(trace_free(), trace_free(), gauss)
def test_scaling_law(A1, A2, lam):
    assume(lam and commutator_det(A1, A2))
    a = normal_form_even(A1, A2).point
    b = normal_form_even(A1.scale(lam), A2.scale(lam)).point
    l2 = lam * lam
    assert (b.t_sq, b.s_p, b.v_p) == (l2 * a.t_sq, l2 * a.s_p, l2 * a.v_p)


# --- odd case ---


def test_normal_form_odd_examples():
    p = normal_form_odd(X, HomPoly.zero(2), 1).point
    assert (p.b1, p.b2, p.b3) == (1, 0, 0)
    assert normal_form_odd(X, Y * Y, 0) == Unstable()
    p = normal_form_odd(HomPoly.zero(1), Y * Y, 2).point
    assert (p.b1, p.b2, p.b3) == (0, 0, 2)
    with pytest.raises(DegenerateInput):
        normal_form_odd(HomPoly.zero(1), HomPoly.zero(2), 0)
    with pytest.raises(DegreeMismatch):
        normal_form_odd(X * X, X, 1)


lin = st.builds(lambda a, b: HomPoly([a, b]), gauss, gauss)
quad = st.builds(lambda a, b, c: HomPoly([a, b, c]), gauss, gauss, gauss)


@given(lin, quad, gauss, gauss, lin, gauss)
def test_odd_invariant_under_automorphisms(a, b, c, d, e, f):
    assume(c and d and f)
    c2 = f * c / d
    a2 = a + e * (c / d)
    b2 = (b * (d * d) - e * a * (2 * d) - e * e * c) * (1 / (d * f))
    r1, r2 = normal_form_odd(a, b, c), normal_form_odd(a2, b2, c2)
    assert isinstance(r1, OddStable) and r1 == r2


# --- integrability ---


def test_integrability_examples():
    phi0 = PolyMat2.from_linear(H, S)
    assert integrability_check(phi0.scale(2), phi0.scale(GaussRat(0, 3)))
    z = HomPoly.zero(1)
    assert integrability_check(PolyMat2(z, X, z, z), PolyMat2(z, Y, z, z))
    assert not integrability_check(PolyMat2(X, z, z, -X), PolyMat2(z, Y, Y, z))
    with pytest.raises(DegreeMismatch):
        integrability_check(PolyMat2(X, z, z, -X), PolyMat2(X * X, X * X, X * X, -(X * X)))


@given(trace_free(), trace_free(), gauss, gauss)
def test_constant_multiples_are_integrable(A1, A2, alpha, beta):
    phi0 = PolyMat2.from_linear(A1, A2)
    assert integrability_check(phi0.scale(alpha), phi0.scale(beta))


def test_proportionality_examples():
    phi0 = PolyMat2.from_linear(H, S)
    r = proportionality_decompose(phi0.scale(2), phi0.scale(3))
    assert isinstance(r, Proportional) and r.scale == (1, Fraction(3, 2))
    zero = PolyMat2.from_linear(Mat2(0, 0, 0, 0), Mat2(0, 0, 0, 0))
    assert proportionality_decompose(phi0, zero).scale == (1, 0)
    z = HomPoly.zero(1)
    assert proportionality_decompose(PolyMat2(z, X, z, z), PolyMat2(z, Y, z, z)) == NotProportional()


# --- moduli points ---


def test_moduli_points_and_dimensions():
    phi0 = PolyMat2.from_linear(H, S)
    m = moduli_point_even(phi0.scale(2), phi0.scale(4))
    assert (m.t_sq, m.s_p, m.v_p, m.scale) == (4, 0, 4, (1, 2))
    one, zero = HomPoly.const(1), HomPoly.zero(1)
    odd = PolyMat2(X, HomPoly.zero(2), one, -X)
    p = moduli_point_odd(odd, PolyMat2(zero, HomPoly.zero(2), HomPoly.const(0), zero))
    assert (p.b1, p.b2, p.b3, p.scale) == (1, 0, 0, (1, 0))
    assert moduli_dimension("Z1") == moduli_dimension("Z2") == 5
    assert len(CHARTS["Z1"].coordinates) == len(CHARTS["Z2"].coordinates) == 3


def test_moduli_point_rejects_unstable():
    nil = PolyMat2.from_linear(NIL1, NIL5)
    with pytest.raises(PreconditionError):
        moduli_point_even(nil, nil.scale(2))


# --- filtrable bundles ---


def test_h0_end0_twisted_examples():
    assert h0_end0_twisted(HopfBundleDesc(True, False, 1, -1)).value == 1
    assert h0_end0_twisted(HopfBundleDesc(False, True, 0, 0, 0)).value == 6
    assert h0_end0_twisted(HopfBundleDesc(True, False, 2, -3)).value == 0
    assert h0_end0_twisted(HopfBundleDesc(False, False, 3, 1, 2)).value == 3 + 1
    with pytest.raises(InconsistentCase):
        h0_end0_twisted(HopfBundleDesc(False, True, 0, 1, 0))
    with pytest.raises(InconsistentCase):
        h0_end0_twisted(HopfBundleDesc(False, False, 3, 2, 2))


def test_classify_pair_examples():
    assert classify_pair(False, 3, True, True, "Other") is PairVerdict.OnlyZeroHiggs
    assert classify_pair(True, 2, True, True, "Other") is PairVerdict.StablePair
    assert classify_pair(True, 2, True, False, "Other") is PairVerdict.UnstablePair
    assert classify_pair(True, 0, True, False, "KplusK") is PairVerdict.StableCapable
    assert classify_pair(True, 0, True, False, "Other") is PairVerdict.NoStableHiggs


@pytest.mark.parametrize("c2", [1, 5])
def test_stable_example(c2):
    ex = construct_stable_example(c2)
    assert (ex.c2, ex.m, ex.stable, ex.h0_end0_T.value, ex.cohiggs_dim) == (c2, -1, True, 1, 2)
    assert ex.mu == Fraction(-1, 4)


def test_stable_example_needs_jump():
    with pytest.raises(PreconditionError):
        construct_stable_example(0)
