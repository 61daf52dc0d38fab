"""Jumps, allowable elementary modifications and the pushforward N = pi_*(End0 E)."""
from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction

from .divisors import Divisor
from .errors import InvalidDescriptor, InvalidJump, InvalidModification, LedgerViolation, NotNonFiltrable
from .invariants import classify_range, discriminant
from .surface import LineBundleX


@dataclass(frozen=True)
class Jump:
    location: object
    heights: tuple

    def __post_init__(self):
        hs = tuple(int(h) for h in self.heights)
        object.__setattr__(self, "heights", hs)
        if not hs:
            raise InvalidJump("a jump needs at least one height")
        if any(h <= 0 for h in hs):
            raise InvalidJump(f"heights must be positive: {hs}")
        if any(a < b for a, b in zip(hs, hs[1:])):
            raise InvalidJump(f"heights must be non-increasing: {hs}")


@dataclass(frozen=True)
class JumpStats:
    l: int
    mu: int
    s: int


def jump_stats(j: Jump) -> JumpStats:
    return JumpStats(len(j.heights), sum(j.heights), len(set(j.heights)))


def ledger_weight(j: Jump) -> int:
    """ell(E, b): the multiplicity mu, which changes by deg(lambda) under modification."""
    return jump_stats(j).mu


@dataclass(frozen=True)
class BundleDescriptor:
    delta: LineBundleX
    c2: int
    jumps: tuple = ()
    filtrable: bool = True
    regular_generic_fibre: bool = True

    def __post_init__(self):
        object.__setattr__(self, "jumps", tuple(self.jumps))
        locs = [j.location for j in self.jumps]
        if len(set(locs)) != len(locs):
            raise InvalidDescriptor("at most one jump per fibre")
        total = sum(ledger_weight(j) for j in self.jumps)
        if total > 2 * self.discriminant:
            raise LedgerViolation(f"sum of jump multiplicities {total} exceeds 2*Delta = {2 * self.discriminant}")
        if not self.filtrable:
            rv = classify_range(self.c2, self.delta)
            hopf_like = self.delta.n_delta == 0 and self.c2 > 0
            if not (rv.in_nonfiltrable_range or hopf_like):
                raise InvalidDescriptor(
                    f"non-filtrable bundle outside the non-filtrable range (Delta={rv.delta}, floor={rv.floor}, m={rv.m})"
                )

    @property
    def discriminant(self) -> Fraction:
        return discriminant(self.c2, self.delta)

    def jump_at(self, b) -> Jump | None:
        return next((j for j in self.jumps if j.location == b), None)


def _twist_by_fibre(delta: LineBundleX, n: int) -> LineBundleX:
    """delta (x) pi^* O_B(-n b)."""
    return replace(delta, h_deg=delta.h_deg - n)


def apply_modification(desc: BundleDescriptor, b, deg_lambda: int) -> BundleDescriptor:
    """Elementary modification along the fibre over b by a line bundle of degree deg_lambda."""
    j = desc.jump_at(b)
    others = tuple(x for x in desc.jumps if x.location != b)
    if deg_lambda < 0:
        if j is None or j.heights[0] != -deg_lambda:
            top = None if j is None else j.heights[0]
            raise InvalidModification(
                f"a negative modification at {b} must remove the top height (have {top}, got deg {deg_lambda})"
            )
        rest = j.heights[1:]
        jumps = others + ((Jump(b, rest),) if rest else ())
    elif deg_lambda == 0:
        jumps = desc.jumps
    else:
        if j is not None:
            raise InvalidModification("positive modifications at an existing jump are not modelled")
        jumps = desc.jumps + (Jump(b, (deg_lambda,)),)
    new_weight = sum(ledger_weight(x) for x in jumps)
    new_delta = desc.discriminant + Fraction(deg_lambda, 2)
    if new_weight > 2 * new_delta:
        raise LedgerViolation(f"modification would give sum ell = {new_weight} > 2*Delta = {2 * new_delta}")
    return replace(desc, delta=_twist_by_fibre(desc.delta, 1), c2=desc.c2 + deg_lambda, jumps=jumps)


@dataclass(frozen=True)
class Reduction:
    clean: BundleDescriptor
    delta_shift: Fraction
    twist: Divisor


def reduce_jumps(desc: BundleDescriptor) -> Reduction:
    """Remove every jump by its chain of allowable modifications."""
    stats = [(j.location, jump_stats(j)) for j in desc.jumps]
    mu = sum(s.mu for _, s in stats)
    steps = sum(s.l for _, s in stats)
    clean = replace(desc, delta=_twist_by_fibre(desc.delta, steps), c2=desc.c2 - mu, jumps=())
    twist = Divisor({b: s.s for b, s in stats})
    return Reduction(clean, Fraction(mu, 2), twist)


@dataclass(frozen=True)
class Pushforward:
    deg_N: Fraction
    deg_N_clean: Fraction
    deg_R: Fraction
    delta_clean: Fraction
    twist: Divisor
    N_sq_is_minus_R: bool


def pushforward_and_ramification(desc: BundleDescriptor) -> Pushforward:
    if desc.filtrable:
        raise NotNonFiltrable("the pushforward description needs a non-filtrable bundle")
    red = reduce_jumps(desc)
    dbar = red.clean.discriminant
    deg_n_clean = -4 * dbar
    deg_r = 8 * dbar
    ok = 2 * deg_n_clean == -deg_r
    assert ok
    return Pushforward(deg_n_clean - red.twist.degree(), deg_n_clean, deg_r, dbar, red.twist, ok)
