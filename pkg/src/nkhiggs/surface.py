"""Non-Kaehler principal elliptic surfaces and degrees of their torsion line bundles.

A surface is X = Theta^*/(tau) over a curve B of genus g, with d = c1(Theta) >= 1.
A torsion line bundle is H (x) L_a with a = tau^q * u, |u| = 1, and has degree
c1(H) - d*q.  Since pi^*Theta ~ L_{tau^-1}, the pair (h_deg, q) is only defined
up to (h_deg, q) ~ (h_deg + d, q + 1).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import InvalidLineBundle, InvalidSurface, KaehlerCase, NegativeGenus


@dataclass(frozen=True)
class SurfaceSpec:
    g: int
    d: int
    tau_log: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "tau_log", Fraction(self.tau_log))


@dataclass(frozen=True)
class LineBundleX:
    h_deg: int
    q: Fraction = Fraction(0)
    n_delta: int = 0
    e_inv: int = 0
    # the unit phase never affects degree; excluded from equality by default
    phase: str | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "q", Fraction(self.q))


def validate_surface(spec: SurfaceSpec) -> SurfaceSpec:
    if spec.g < 0:
        raise NegativeGenus(f"genus must be >= 0, got {spec.g}")
    if spec.d == 0:
        raise KaehlerCase("d = 0 gives a Kaehler surface")
    if spec.d < 0:
        raise InvalidSurface(f"d must be positive, got {spec.d}")
    if spec.tau_log <= 0:
        raise InvalidSurface("tau_log must be a positive rational")
    return spec


def validate_line_bundle(L: LineBundleX, spec: SurfaceSpec) -> LineBundleX:
    if L.n_delta < 0:
        raise InvalidLineBundle(f"n_delta must be >= 0, got {L.n_delta}")
    if not -spec.g <= L.e_inv <= 0:
        raise InvalidLineBundle(f"e_inv must lie in [-{spec.g}, 0], got {L.e_inv}")
    return L


def canonicalize(L: LineBundleX, spec: SurfaceSpec) -> LineBundleX:
    """Representative with q in [0, 1)."""
    k = math.floor(L.q)
    if k == 0:
        return L
    return LineBundleX(L.h_deg - k * spec.d, L.q - k, L.n_delta, L.e_inv, L.phase)


def degree(L: LineBundleX, spec: SurfaceSpec) -> Fraction:
    return L.h_deg - spec.d * L.q


def tensor(L1: LineBundleX, L2: LineBundleX) -> LineBundleX:
    """Tensor product; the spectral data is carried by at most one factor."""
    if L1.n_delta and L2.n_delta:
        raise InvalidLineBundle("both factors carry spectral data; tensor is not modelled")
    carrier = L2 if L2.n_delta else L1
    if L1.phase is None or L2.phase is None:
        phase = L1.phase if L2.phase is None else L2.phase
    else:
        phase = f"{L1.phase}*{L2.phase}"
    return LineBundleX(L1.h_deg + L2.h_deg, L1.q + L2.q, carrier.n_delta, carrier.e_inv, phase)


def constant_factor_bundle(c, spec: SurfaceSpec) -> LineBundleX:
    """L_a with degree c, i.e. a = tau^(-c/d) (so ln|a| = -c*ln|tau|/d)."""
    return LineBundleX(0, Fraction(-Fraction(c), spec.d))


def same_bundle(L1: LineBundleX, L2: LineBundleX, spec: SurfaceSpec, compare_phase: bool = False) -> bool:
    """Equality of canonical forms; phase labels are compared only on request."""
    a, b = canonicalize(L1, spec), canonicalize(L2, spec)
    if a != b:
        return False
    return not compare_phase or a.phase == b.phase
