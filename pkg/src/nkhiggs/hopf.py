"""Rank-2 co-Higgs bundles on Hopf surfaces.

For E = O+O the trace-free co-Higgs fields with c2 = 0 are (a*phi0, b*phi0)
with phi0 = A1*x + A2*y, A1, A2 in sl(2).  The pair is stable iff A1 and A2
have no common eigenvector, iff det[A1, A2] != 0, and up to conjugation it is
determined by (t^2, s', v') where

    A1 ~ [[t, s'], [0, -t]],   A2 ~ [[0, v'], [1, 0]],   det[A1, A2] = 4 t^2 v' - s'^2.

For E = O + O(-T) the field is phi0 = [[a, b], [c, -a]] with deg a, b, c = 1, 2, 0,
stable iff c != 0, with complete invariant b' = c*b + a^2.
"""
from __future__ import annotations

from dataclasses import dataclass, fields
from enum import Enum
from fractions import Fraction

from .errors import DegenerateInput, DegreeMismatch, InconsistentCase, NotTraceFree, PreconditionError
from .field import FieldElem, GaussRat, sqrt_in_tower
from .invariants import H0Value
from .surface import LineBundleX, SurfaceSpec, degree, tensor


def _coerce(x):
    if isinstance(x, (GaussRat, FieldElem)):
        return x
    return GaussRat.coerce(x)


class Mat2:
    """2x2 matrix over the field tower, entries (a11, a12, a21, a22)."""

    __slots__ = ("e",)

    def __init__(self, a11, a12, a21, a22):
        self.e = (_coerce(a11), _coerce(a12), _coerce(a21), _coerce(a22))

    @classmethod
    def from_rows(cls, rows) -> "Mat2":
        (a, b), (c, d) = rows
        return cls(a, b, c, d)

    @classmethod
    def identity(cls) -> "Mat2":
        return cls(1, 0, 0, 1)

    def rows(self):
        a, b, c, d = self.e
        return ((a, b), (c, d))

    def __add__(self, o):
        return Mat2(*(x + y for x, y in zip(self.e, o.e)))

    def __sub__(self, o):
        return Mat2(*(x - y for x, y in zip(self.e, o.e)))

    def __neg__(self):
        return Mat2(*(-x for x in self.e))

    def scale(self, k) -> "Mat2":
        k = _coerce(k)
        return Mat2(*(x * k for x in self.e))

    def __matmul__(self, o):
        a, b, c, d = self.e
        p, q, r, s = o.e
        return Mat2(a * p + b * r, a * q + b * s, c * p + d * r, c * q + d * s)

    def apply(self, v):
        a, b, c, d = self.e
        return (a * v[0] + b * v[1], c * v[0] + d * v[1])

    def det(self):
        a, b, c, d = self.e
        return a * d - b * c

    def trace(self):
        return self.e[0] + self.e[3]

    def inverse(self) -> "Mat2":
        a, b, c, d = self.e
        dt = self.det()
        if not dt:
            raise ZeroDivisionError("singular matrix")
        inv = 1 / dt if isinstance(dt, FieldElem) else dt.inverse()
        return Mat2(d * inv, -b * inv, -c * inv, a * inv)

    def conj(self, P: "Mat2") -> "Mat2":
        """P * self * P^-1."""
        return P @ self @ P.inverse()

    def is_zero(self) -> bool:
        return not any(self.e)

    def is_trace_free(self) -> bool:
        return not self.trace()

    def __eq__(self, o):
        if not isinstance(o, Mat2):
            return NotImplemented
        return all(x == y for x, y in zip(self.e, o.e))

    def __hash__(self):
        return hash(self.e)

    def __repr__(self):
        return f"Mat2{self.rows()!r}"


def _require_trace_free(*mats):
    for A in mats:
        if not A.is_trace_free():
            raise NotTraceFree(f"{A!r} is not trace-free")


def commutator(A1: Mat2, A2: Mat2) -> Mat2:
    return A1 @ A2 - A2 @ A1


def commutator_det(A1: Mat2, A2: Mat2):
    _require_trace_free(A1, A2)
    return commutator(A1, A2).det()


# --- eigenvector enumeration (independent of the commutator criterion) ---

E1 = (GaussRat(1), GaussRat(0))
E2 = (GaussRat(0), GaussRat(1))


def _kernel_vector(M: Mat2):
    a, b, c, d = M.e
    if a or b:
        return (b, -a)
    return (d, -c)


def eigenvectors(A: Mat2) -> list:
    """One spanning vector per eigenline of a trace-free A (a basis if A = 0)."""
    if A.is_zero():
        return [E1, E2]
    t = sqrt_in_tower(-A.det())
    lams = [t] if not t else [t, -t]
    return [_kernel_vector(A - Mat2(lam, 0, 0, lam)) for lam in lams]


def is_eigenvector(A: Mat2, v) -> bool:
    w = A.apply(v)
    return not (v[0] * w[1] - v[1] * w[0])


def find_common_eigenvector(A1: Mat2, A2: Mat2):
    """Brute-force search over the eigenlines of A1 (of A2 when A1 = 0)."""
    if A1.is_zero():
        return eigenvectors(A2)[0]
    for v in eigenvectors(A1):
        if is_eigenvector(A2, v):
            return v
    return None


@dataclass(frozen=True)
class NoCommon:
    pass


@dataclass(frozen=True)
class Common:
    vector: tuple


def common_eigenvector(A1: Mat2, A2: Mat2):
    _require_trace_free(A1, A2)
    v = find_common_eigenvector(A1, A2)
    return NoCommon() if v is None else Common(v)


# --- even normal form ---


@dataclass(frozen=True)
class EvenPoint:
    t_sq: object
    s_p: object
    v_p: object

    def invariant(self):
        return 4 * self.t_sq * self.v_p - self.s_p * self.s_p


@dataclass(frozen=True)
class EvenStable:
    point: EvenPoint
    certificate: Mat2
    A1_normal: Mat2
    A2_normal: Mat2
    t: FieldElem


@dataclass(frozen=True)
class Unstable:
    common: tuple | None = None


def _base(x):
    x = FieldElem.coerce(x)
    return x.a if x.in_base() else x


def _jordan_basis(A1: Mat2, t: FieldElem) -> Mat2:
    """Matrix [w | z] with A1 w = t w and A1 z = w - t z."""
    shifted = A1 + Mat2(t, 0, 0, t)
    for z in (E1, E2, (GaussRat(1), GaussRat(1))):
        w = shifted.apply(z)
        M = Mat2(w[0], z[0], w[1], z[1])
        if M.det():
            return M
    raise AssertionError("no Jordan basis found for a nonzero trace-free matrix")


def normal_form_even(A1: Mat2, A2: Mat2):
    _require_trace_free(A1, A2)
    if A1.is_zero() and A2.is_zero():
        raise DegenerateInput("A1 = A2 = 0")
    cdet = commutator_det(A1, A2)
    if not cdet:
        v = find_common_eigenvector(A1, A2)
        assert v is not None, "vanishing commutator determinant without a common eigenvector"
        return Unstable(v)
    t = sqrt_in_tower(-A1.det())
    P1 = _jordan_basis(A1, t).inverse()
    B = A2.conj(P1)
    u, v, s, _ = B.e
    assert s, "lower-left entry vanishes for a stable pair"
    Q = Mat2(1, -u / s, 0, 1 / s)
    P = Q @ P1
    A1n, A2n = A1.conj(P), A2.conj(P)
    s_p, v_p = A1n.e[1], A2n.e[1]
    assert A1n == Mat2(t, s_p, 0, -t)
    assert A2n == Mat2(0, v_p, 1, 0)
    assert s_p == s + 2 * t * u and v_p == u * u + s * v
    point = EvenPoint(_base(t * t), _base(s_p), _base(v_p))
    assert point.invariant() == cdet
    return EvenStable(point, P, A1n, A2n, t)


# --- homogeneous polynomials in x, y over Q(i) ---


class HomPoly:
    """Homogeneous polynomial; coeffs[k] multiplies x^(deg-k) * y^k."""

    __slots__ = ("deg", "coeffs")

    def __init__(self, coeffs, deg: int | None = None):
        cs = tuple(GaussRat.coerce(c) for c in coeffs)
        if deg is None:
            deg = len(cs) - 1
        if deg < 0 or len(cs) != deg + 1:
            raise DegreeMismatch(f"degree {deg} needs {deg + 1} coefficients, got {len(cs)}")
        self.deg = deg
        self.coeffs = cs

    @classmethod
    def zero(cls, deg: int) -> "HomPoly":
        return cls([0] * (deg + 1), deg)

    @classmethod
    def const(cls, c) -> "HomPoly":
        return cls([c], 0)

    def _check(self, o):
        if self.deg != o.deg:
            raise DegreeMismatch(f"degrees {self.deg} and {o.deg} differ")

    def __add__(self, o):
        self._check(o)
        return HomPoly([a + b for a, b in zip(self.coeffs, o.coeffs)], self.deg)

    def __sub__(self, o):
        self._check(o)
        return HomPoly([a - b for a, b in zip(self.coeffs, o.coeffs)], self.deg)

    def __neg__(self):
        return HomPoly([-a for a in self.coeffs], self.deg)

    def __mul__(self, o):
        if not isinstance(o, HomPoly):
            k = GaussRat.coerce(o)
            return HomPoly([a * k for a in self.coeffs], self.deg)
        out = [GaussRat(0)] * (self.deg + o.deg + 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(o.coeffs):
                if b:
                    out[i + j] = out[i + j] + a * b
        return HomPoly(out, self.deg + o.deg)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __eq__(self, o):
        if not isinstance(o, HomPoly):
            return NotImplemented
        return self.deg == o.deg and self.coeffs == o.coeffs

    def __hash__(self):
        return hash((self.deg, self.coeffs))

    def __repr__(self):
        return f"HomPoly({[str(c) for c in self.coeffs]})"


X = HomPoly([1, 0])
Y = HomPoly([0, 1])


class PolyMat2:
    """2x2 matrix of homogeneous polynomials, entries (a, b, c, d) = [[a, b], [c, d]]."""

    __slots__ = ("e",)

    def __init__(self, a: HomPoly, b: HomPoly, c: HomPoly, d: HomPoly):
        self.e = (a, b, c, d)

    @classmethod
    def trace_free(cls, a: HomPoly, b: HomPoly, c: HomPoly) -> "PolyMat2":
        return cls(a, b, c, -a)

    @classmethod
    def from_linear(cls, A1: Mat2, A2: Mat2) -> "PolyMat2":
        """A1*x + A2*y."""
        return cls(*(HomPoly([p, q]) for p, q in zip(A1.e, A2.e)))

    def profile(self) -> tuple:
        return tuple(p.deg for p in self.e)

    def is_trace_free(self) -> bool:
        a, _, _, d = self.e
        return a.deg == d.deg and (a + d).is_zero()

    def is_zero(self) -> bool:
        return all(p.is_zero() for p in self.e)

    def scale(self, k) -> "PolyMat2":
        return PolyMat2(*(p * k for p in self.e))

    def coefficient_matrix(self, k: int) -> Mat2:
        """For a matrix of linear forms, the matrix multiplying x (k=0) or y (k=1)."""
        return Mat2(*(p.coeffs[k] for p in self.e))

    def __eq__(self, o):
        if not isinstance(o, PolyMat2):
            return NotImplemented
        return self.e == o.e

    def __hash__(self):
        return hash(self.e)

    def __repr__(self):
        return f"PolyMat2{self.e!r}"


def _check_pair(P1: PolyMat2, P2: PolyMat2):
    for P in (P1, P2):
        if not P.is_trace_free():
            raise NotTraceFree(f"{P!r} is not trace-free")
    if P1.profile() != P2.profile():
        raise DegreeMismatch(f"entry degrees {P1.profile()} and {P2.profile()} differ")


def wedge_terms(P1: PolyMat2, P2: PolyMat2) -> tuple:
    """The polynomials a1 b2 - a2 b1, c1 a2 - c2 a1, b1 c2 - b2 c1."""
    _check_pair(P1, P2)
    a1, b1, c1, _ = P1.e
    a2, b2, c2, _ = P2.e
    return (a1 * b2 - a2 * b1, c1 * a2 - c2 * a1, b1 * c2 - b2 * c1)


def integrability_check(P1: PolyMat2, P2: PolyMat2) -> bool:
    return all(p.is_zero() for p in wedge_terms(P1, P2))


@dataclass(frozen=True)
class Proportional:
    phi0: PolyMat2
    scale: tuple


@dataclass(frozen=True)
class NotProportional:
    pass


def proportionality_decompose(P1: PolyMat2, P2: PolyMat2):
    """(P1, P2) = (alpha phi0, beta phi0) with constant alpha, beta; scale normalized first-nonzero = 1."""
    _check_pair(P1, P2)
    one, zero = GaussRat(1), GaussRat(0)
    if P1.is_zero() and P2.is_zero():
        return NotProportional()
    if P1.is_zero():
        return Proportional(P2, (zero, one))
    if P2.is_zero():
        return Proportional(P1, (one, zero))
    pivot = next((i, k) for i, p in enumerate(P1.e) for k, c in enumerate(p.coeffs) if c)
    i, k = pivot
    lam = P2.e[i].coeffs[k] / P1.e[i].coeffs[k]
    if P1.scale(lam) != P2:
        return NotProportional()
    return Proportional(P1, (one, lam))


# --- odd normal form ---


@dataclass(frozen=True)
class OddPoint:
    b1: GaussRat
    b2: GaussRat
    b3: GaussRat


@dataclass(frozen=True)
class OddStable:
    point: OddPoint


def normal_form_odd(a: HomPoly, b: HomPoly, c):
    if a.deg != 1 or b.deg != 2:
        raise DegreeMismatch(f"need deg a = 1 and deg b = 2, got {a.deg} and {b.deg}")
    c = GaussRat.coerce(c)
    if a.is_zero() and b.is_zero() and not c:
        raise DegenerateInput("a = b = c = 0")
    if not c:
        return Unstable()
    bp = b * c + a * a
    return OddStable(OddPoint(*bp.coeffs))


# --- moduli coordinates for c2 = 0 ---


def _scale_ok(scale):
    alpha, beta = scale
    first = alpha if alpha else beta
    if first != 1:
        raise PreconditionError(f"scale {scale!r} is not normalized")


@dataclass(frozen=True)
class ModuliPointEven:
    t_sq: object
    s_p: object
    v_p: object
    scale: tuple

    def __post_init__(self):
        if not (4 * self.t_sq * self.v_p - self.s_p * self.s_p):
            raise PreconditionError("4 t^2 v' - s'^2 must be a unit")
        _scale_ok(self.scale)


@dataclass(frozen=True)
class ModuliPointOdd:
    b1: object
    b2: object
    b3: object
    scale: tuple

    def __post_init__(self):
        _scale_ok(self.scale)


def moduli_point_even(P1: PolyMat2, P2: PolyMat2) -> ModuliPointEven:
    """Point of Z1 for a co-Higgs field (P1, P2) on O+O (linear entries)."""
    if P1.profile() != (1, 1, 1, 1):
        raise DegreeMismatch("fields on O+O have linear entries")
    if not integrability_check(P1, P2):
        raise PreconditionError("field is not integrable")
    dec = proportionality_decompose(P1, P2)
    if not isinstance(dec, Proportional):
        raise PreconditionError("field is not a constant multiple pair")
    nf = normal_form_even(dec.phi0.coefficient_matrix(0), dec.phi0.coefficient_matrix(1))
    if not isinstance(nf, EvenStable):
        raise PreconditionError("co-Higgs field is not stable")
    p = nf.point
    return ModuliPointEven(p.t_sq, p.s_p, p.v_p, dec.scale)


def moduli_point_odd(P1: PolyMat2, P2: PolyMat2) -> ModuliPointOdd:
    """Point of Z2 for a co-Higgs field (P1, P2) on O+O(-T)."""
    if P1.profile() != (1, 2, 0, 1):
        raise DegreeMismatch("fields on O+O(-T) have entry degrees (1, 2, 0, 1)")
    if not integrability_check(P1, P2):
        raise PreconditionError("field is not integrable")
    dec = proportionality_decompose(P1, P2)
    if not isinstance(dec, Proportional):
        raise PreconditionError("field is not a constant multiple pair")
    a, b, c, _ = dec.phi0.e
    nf = normal_form_odd(a, b, c.coeffs[0])
    if not isinstance(nf, OddStable):
        raise PreconditionError("co-Higgs field is not stable")
    p = nf.point
    return ModuliPointOdd(p.b1, p.b2, p.b3, dec.scale)


@dataclass(frozen=True)
class ComponentChart:
    tag: str
    coordinates: tuple
    auxiliary: tuple
    relations: int
    pic_dim: int
    scale_dim: int

    def dimension(self) -> int:
        return len(self.coordinates) + len(self.auxiliary) - self.relations + self.pic_dim + self.scale_dim


def _coords(cls) -> tuple:
    return tuple(f.name for f in fields(cls) if f.name != "scale")


# Pic of a Hopf surface is Z x C^*, one continuous dimension; the scale lives in P^1.
CHARTS = {
    "Z1": ComponentChart("Z1", _coords(ModuliPointEven), ("w",), 1, 1, 1),
    "Z2": ComponentChart("Z2", _coords(ModuliPointOdd), (), 0, 1, 1),
}


def moduli_dimension(tag: str) -> int:
    return CHARTS[tag].dimension()


# --- filtrable bundles: h^0(End0 E(T)) and stability ---


@dataclass(frozen=True)
class HopfBundleDesc:
    regular_generic_fibre: bool
    extension_of_line_bundles: bool
    c2: int
    m: int
    ell: int | None = None


def h0_end0_twisted(desc: HopfBundleDesc) -> H0Value:
    m, ell, c2 = desc.m, desc.ell, desc.c2
    if c2 < 0:
        raise InconsistentCase("c2 must be >= 0")
    if desc.regular_generic_fibre:
        return H0Value.exact(max(0, m + 2))
    if ell is None or ell < 0:
        raise InconsistentCase("a bundle irregular on the generic fibre needs ell >= 0")
    if c2 == 0:
        if not desc.extension_of_line_bundles:
            raise InconsistentCase("with c2 = 0 the bundle splits as an extension of line bundles")
        if m != ell:
            raise InconsistentCase(f"c2 = 0 forces m = ell, got m={m}, ell={ell}")
        return H0Value.exact(max(6, m + 4))
    if not ell > m:
        raise InconsistentCase(f"c2 > 0 forces ell > m, got m={m}, ell={ell}")
    return H0Value.exact(max(0, m + 2) + max(0, m - ell + 2))


class SplitShape(str, Enum):
    KplusK = "KplusK"
    KplusKminusT = "KplusKminusT"
    Other = "Other"


class PairVerdict(str, Enum):
    OnlyZeroHiggs = "OnlyZeroHiggs"
    StablePair = "StablePair"
    UnstablePair = "UnstablePair"
    StableCapable = "StableCapable"
    NoStableHiggs = "NoStableHiggs"


def classify_pair(filtrable: bool, c2: int, phi_nonzero: bool, E_stable: bool, shape: SplitShape | str) -> PairVerdict:
    if not filtrable:
        return PairVerdict.OnlyZeroHiggs
    shape = SplitShape(shape)
    if c2 > 0 or not phi_nonzero:
        return PairVerdict.StablePair if E_stable else PairVerdict.UnstablePair
    if shape in (SplitShape.KplusK, SplitShape.KplusKminusT):
        return PairVerdict.StableCapable
    return PairVerdict.NoStableHiggs


HOPF = SurfaceSpec(g=0, d=1, tau_log=Fraction(1))
FIBRE = LineBundleX(1)  # O(T) = pi^* O(1)


@dataclass(frozen=True)
class StableExample:
    c2: int
    L1: LineBundleX
    L2: LineBundleX
    det: LineBundleX
    mu: Fraction
    destabilising_degrees: tuple
    m: int
    stable: bool
    regular_generic_fibre: bool
    h0_end0_T: H0Value
    cohiggs_dim: int


def construct_stable_example(c2: int, gap=Fraction(1, 2)) -> StableExample:
    """Elementary modification of L1 + L2 along one fibre by a degree-c2 bundle."""
    gap = Fraction(gap)
    if c2 < 1:
        raise PreconditionError("the construction needs c2 >= 1")
    if not (-1 < gap < 1) or gap == 0:
        raise PreconditionError("need 0 < |deg L1 - deg L2| < 1")
    spec = HOPF
    L2 = LineBundleX(0)
    L1 = LineBundleX(0, -gap / spec.d)
    minus_T = LineBundleX(-FIBRE.h_deg)
    det = tensor(tensor(L1, L2), minus_T)
    mu = degree(det, spec) / 2
    k1, k2 = tensor(L1, minus_T), tensor(L2, minus_T)
    dk = (degree(k1, spec), degree(k2, spec))
    m = dk[0] + dk[1] - degree(det, spec)
    assert m.denominator == 1
    m = int(m)
    stable = all(x < mu for x in dk)
    h0 = h0_end0_twisted(HopfBundleDesc(True, False, c2, m))
    # T_X = O(T) + O(T)
    return StableExample(c2, L1, L2, det, mu, dk, m, stable, True, h0, 2 * h0.value)
