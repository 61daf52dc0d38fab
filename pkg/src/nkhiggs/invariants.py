"""Discriminant, filtrability threshold, existence ranges, h^0 on curves, twist gates."""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import NegativeGenus, PreconditionError
from .surface import LineBundleX


def discriminant(c2: int, delta: LineBundleX) -> Fraction:
    """Delta = (4 c2 - c1^2)/8 with c1(delta)^2 = -2 n_delta."""
    return Fraction(c2, 2) + Fraction(delta.n_delta, 4)


def m_invariant(delta: LineBundleX) -> Fraction:
    return Fraction(delta.n_delta, 4)


@dataclass(frozen=True)
class RangeVerdict:
    exists: bool
    filtrable_exists: bool
    in_nonfiltrable_range: bool
    delta: Fraction
    m: Fraction
    floor: Fraction


def classify_range(c2: int, delta: LineBundleX) -> RangeVerdict:
    d = discriminant(c2, delta)
    m = m_invariant(delta)
    floor = Fraction(-delta.e_inv, 4)
    return RangeVerdict(
        exists=d >= floor,
        filtrable_exists=d >= m,
        in_nonfiltrable_range=floor <= d < m,
        delta=d,
        m=m,
        floor=floor,
    )


@dataclass(frozen=True)
class H0Value:
    """An h^0 answer: exact, bounded (hi=None means unbounded above) or undecidable."""

    kind: str
    value: int | None = None
    lo: int | None = None
    hi: int | None = None

    @classmethod
    def exact(cls, n: int) -> "H0Value":
        n = int(n)
        if n < 0:
            raise ValueError("h0 is nonnegative")
        return cls("Exact", n, n, n)

    @classmethod
    def interval(cls, lo: int, hi: int | None) -> "H0Value":
        lo = max(0, int(lo))
        if hi is not None and hi < lo:
            raise ValueError(f"empty interval [{lo}, {hi}]")
        if hi == lo:
            return cls.exact(lo)
        return cls("Interval", None, lo, hi)

    @classmethod
    def undecidable(cls) -> "H0Value":
        return cls("Undecidable")

    @property
    def is_exact(self) -> bool:
        return self.kind == "Exact"

    def certainly_positive(self) -> bool:
        return self.kind != "Undecidable" and self.lo >= 1

    def certainly_zero(self) -> bool:
        return self.kind == "Exact" and self.value == 0


@dataclass(frozen=True)
class LineFlags:
    """Side conditions on a line bundle L of degree deg on a curve; None = unknown."""

    is_trivial: bool | None = None
    is_canonical: bool | None = None
    is_effective: bool | None = None
    point_class: bool | None = None  # L = O(b) for a point b
    canonical_minus_point: bool | None = None  # L = K(-b)
    generic: bool | None = None  # L general in its Picard component


def _as_int(deg) -> int:
    f = Fraction(deg)
    if f.denominator != 1:
        raise PreconditionError(f"curve degrees are integers, got {deg}")
    return int(f)


def h0_curve(deg, g: int, flags: LineFlags | None = None) -> H0Value:
    """h^0 of a line bundle of degree deg on a genus-g curve."""
    if g < 0:
        raise NegativeGenus(f"genus must be >= 0, got {g}")
    deg = _as_int(deg)
    f = flags or LineFlags()
    top = 2 * g - 2
    if deg < 0:
        return H0Value.exact(0)
    if deg > top:
        return H0Value.exact(deg + 1 - g)
    if deg == 0:
        trivial = f.is_trivial
        if g == 0 or (g == 1 and f.is_canonical):
            trivial = True  # Pic^0(P^1) = 0; K is trivial in genus 1
        if trivial is None and f.is_effective is not None:
            trivial = f.is_effective
        if trivial is None and f.generic:
            trivial = False
        if trivial is None:
            return H0Value.undecidable()
        return H0Value.exact(1 if trivial else 0)
    if deg == top:
        canonical = f.is_canonical
        if canonical is None and f.generic:
            canonical = False
        if canonical is None:
            return H0Value.undecidable()
        return H0Value.exact(g if canonical else g - 1)
    # 0 < deg < 2g - 2, so g >= 2
    chi = max(0, deg + 1 - g)
    if f.is_effective is False:
        return H0Value.exact(0)
    if f.generic:
        return H0Value.exact(chi)
    if f.point_class and deg == 1:
        return H0Value.exact(1)
    if f.canonical_minus_point and deg == top - 1:
        return H0Value.exact(g - 1)
    if g == 2:
        if f.is_effective:
            return H0Value.exact(1)
        return H0Value.undecidable()
    lo = max(chi, 1) if f.is_effective else chi
    return H0Value.interval(lo, max(lo, deg // 2 + 1))


def serre_dual_flags(flags: LineFlags, deg: int, g: int) -> LineFlags:
    """Flags describing K (x) L^-1 given flags for L of degree deg."""
    eff = None
    if g == 2 and deg == 1:
        # on genus 2, K - O(b) = O(iota b): effectivity is self-dual in degree 1
        eff = flags.is_effective
    return LineFlags(
        is_trivial=flags.is_canonical,
        is_canonical=flags.is_trivial,
        is_effective=eff,
        point_class=flags.canonical_minus_point,
        canonical_minus_point=flags.point_class,
        generic=flags.generic,
    )


class Gate(str, Enum):
    NoStablePairs = "NoStablePairs"
    OnlyScalarFields = "OnlyScalarFields"
    Possible = "Possible"


class Twist(str, Enum):
    LineBundle = "LineBundle"
    Tangent = "Tangent"
    Cotangent = "Cotangent"


def line_bundle_gate(V_deg, V_is_trivial: bool) -> Gate:
    if Fraction(V_deg) < 0:
        return Gate.NoStablePairs
    if V_is_trivial:
        return Gate.OnlyScalarFields
    return Gate.Possible


def twist_gate(which: Twist | str, genus: int | None = None, V_deg=None, V_is_trivial: bool = False) -> Gate:
    """Whether non-trivial stable V-pairs can exist.

    The tangent bundle is an extension of K_X^-1 by O_X, the cotangent bundle
    one of O_X by K_X; a non-trivial stable pair needs the non-trivial factor
    to pass the line-bundle gate, and deg K_X = 2g - 2 with K_X trivial iff g = 1.
    """
    which = Twist(which)
    if which is Twist.LineBundle:
        if V_deg is None:
            raise PreconditionError("line-bundle twist needs V_deg")
        return line_bundle_gate(V_deg, V_is_trivial)
    if genus is None or genus < 0:
        raise PreconditionError("tangent/cotangent gates need a genus >= 0")
    k_deg = 2 * genus - 2
    sign = -1 if which is Twist.Tangent else 1
    g = line_bundle_gate(sign * k_deg, genus == 1)
    return Gate.Possible if g is Gate.Possible else Gate.NoStablePairs
