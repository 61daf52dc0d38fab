"""Existence of trace-free Higgs (Vafa-Witten) fields for base genus >= 2 and smoothness of moduli.

For a regular non-filtrable E the trace-free Higgs fields are H^0(B, N (x) K_B),
N = pi_*(End0 E), deg N = -4 Delta and N^2 = O(-R).  A jump over b with s
distinct heights twists N by O(-s b).  On a genus-2 base this reduces every case
to a degree count followed by a class test for N (x) K_B.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from itertools import combinations

from .divisors import G, K_DIVISOR, W, Divisor, divisor_sum, g2_class_reduce, h0_genus2, is_genus2_point, is_pullback_from_line
from .errors import InconsistentInput, InvalidLineBundle, NegativeGenus, PreconditionError, RangeError
from .invariants import Gate, H0Value, LineFlags, RangeVerdict, Twist, classify_range, h0_curve, twist_gate
from .jumps import Jump, jump_stats
from .surface import LineBundleX

# --- filtrable bundles ---


@dataclass(frozen=True)
class RegularGeneric:
    """E regular on the generic fibre, Higgs fields = H^0(B, H (x) K_B).

    flags describe the twisted bundle H (x) K_B, e.g. canonical_minus_point for H = O(-b).
    """

    H_deg: int
    flags: LineFlags = field(default_factory=LineFlags)


@dataclass(frozen=True)
class PullbackExtension:
    """E = L (x) pi^*F with F a rank-2 bundle on B."""

    F_stable: bool = True


@dataclass(frozen=True)
class NotExtension:
    """Not an extension of pullbacks; flags describe H (x) K_B as for RegularGeneric."""

    H_deg: int
    flags: LineFlags = field(default_factory=LineFlags)


def filtrable_higgs_h0(case, g: int) -> H0Value:
    if g < 2:
        raise PreconditionError("needs base genus >= 2")
    if isinstance(case, PullbackExtension):
        if case.F_stable:
            # h^0(End0 F (x) K) = h^1(End0 F) = -chi(End0 F) = 3(g - 1) for simple F
            return H0Value.exact(3 * (g - 1))
        return H0Value.interval(3 * (g - 1), None)
    h = h0_curve(case.H_deg + 2 * g - 2, g, case.flags)
    if isinstance(case, RegularGeneric):
        return h
    if isinstance(case, NotExtension):
        lo = 0 if h.kind == "Undecidable" else h.lo
        return H0Value.interval(lo, None)
    raise TypeError(f"unknown case {case!r}")


# --- non-filtrable range ---


class Existence(str, Enum):
    Exists = "Exists"
    NotGuaranteed = "NotGuaranteed"
    None_ = "None"


@dataclass(frozen=True)
class ExistenceVerdict:
    kind: Existence
    h0: H0Value | None
    citation: str


def _check_delta(g: int, delta: LineBundleX):
    if g < 0:
        raise NegativeGenus(f"genus must be >= 0, got {g}")
    if not -g <= delta.e_inv <= 0:
        raise InvalidLineBundle(f"e_inv must lie in [-{g}, 0], got {delta.e_inv}")
    if delta.n_delta < 0:
        raise InvalidLineBundle(f"n_delta must be >= 0, got {delta.n_delta}")


def nonfiltrable_existence(g: int, delta: LineBundleX, c2: int) -> ExistenceVerdict:
    _check_delta(g, delta)
    rv = classify_range(c2, delta)
    if not rv.in_nonfiltrable_range:
        raise RangeError(f"Delta={rv.delta} is outside [{rv.floor}, {rv.m})")
    e, D, floor = delta.e_inv, rv.delta, rv.floor
    if twist_gate(Twist.Cotangent, g) is not Gate.Possible:
        return ExistenceVerdict(Existence.None_, H0Value.exact(0), "gate:cotangent")
    if D == floor and e > 1 - g:
        if D == 0:
            return ExistenceVerdict(Existence.Exists, H0Value.exact(g - 1), "nonfilt:unramified")
        # h0(N K) = chi + h0(N^-1), 0 < deg N^-1 = -e < g - 1, Clifford bound on the second term
        chi = e + g - 1
        return ExistenceVerdict(Existence.Exists, H0Value.interval(chi, chi + (-e) // 2 + 1), "nonfilt:minimal")
    if D > floor and e > 2 - g and g >= 3:
        return ExistenceVerdict(Existence.Exists, None, "nonfilt:single-jump")
    if D < Fraction(g - 1, 4):
        return ExistenceVerdict(Existence.Exists, H0Value.exact(g - 1) if D == 0 else None, "nonfilt:small-discriminant")
    if g == 2:
        if e == -2 and D > Fraction(1, 2):
            return ExistenceVerdict(Existence.None_, H0Value.exact(0), "genus2:e=-2/k>0")
        if e == 0:
            return ExistenceVerdict(Existence.Exists, None, "genus2:e=0")
    return ExistenceVerdict(Existence.NotGuaranteed, None, "no-sufficient-condition")


# --- genus-2 decision procedure ---


class HiggsVerdict(str, Enum):
    HiggsExists = "HiggsExists"
    NoHiggs = "NoHiggs"
    Undecidable = "Undecidable"


@dataclass(frozen=True)
class G2HiggsInput:
    """Spectral data of a non-filtrable bundle on a surface over a genus-2 curve.

    Delta = -e_inv/4 + k/2.  R is the ramification divisor of the jump-free part
    and N_bar a divisor representing pi_*(End0 E_bar); either may be None (unknown),
    in which case the decision ranges over all compatible choices.
    """

    e_inv: int
    k: int
    jumps: tuple = ()
    R: Divisor | None = None
    N_bar: Divisor | None = None

    def __post_init__(self):
        object.__setattr__(self, "jumps", tuple(self.jumps))

    @property
    def delta(self) -> Fraction:
        return Fraction(-self.e_inv, 4) + Fraction(self.k, 2)


@dataclass(frozen=True)
class G2Decision:
    verdict: HiggsVerdict
    h0: H0Value
    citation: str
    rule: str
    deg_NK: int


def _case_tag(inp: G2HiggsInput) -> str:
    kk = "k=0" if inp.k == 0 else "k>0"
    jj = "jumps" if inp.jumps else "no-jumps"
    return f"e={inp.e_inv}/{kk}/{jj}"


def _fresh_labels(used: set, n: int) -> list:
    out, i = [], 0
    while len(out) < n:
        lab = f"_q{i}"
        if lab not in used:
            out.append(lab)
        i += 1
    return out


def _point_pool(labels: set, fresh: int) -> list:
    pool: list = [W(i) for i in range(1, 7)]
    for lab in sorted(labels) + _fresh_labels(labels, fresh):
        pool += [G(lab, "+"), G(lab, "-")]
    return pool


def _labels(*divs) -> set:
    return {p.label for d in divs if d is not None for p in d.support() if isinstance(p, G)}


def _r_candidates(inp: G2HiggsInput, deg_r: int, twist: Divisor):
    if inp.R is not None:
        yield inp.R
        return
    pool = _point_pool(_labels(twist), fresh=2)
    for pts in combinations(pool, deg_r):
        yield Divisor.of(*pts)


def _witness(inp: G2HiggsInput, d: int, twist: Divisor, deg_r: int, deg_nbar: int) -> bool:
    """Is there a compatible (R, N_bar) for which N (x) K has a section?

    N (x) K ~ b' (d = 1) or ~ 0 (d = 0) means N_bar ~ twist + b' - K; this is
    compatible with N_bar^2 = O(-R) iff R + 2 twist + 2 b' lies in |2K|, and with
    stability (h^0(N_bar) = 0) iff twist + b' is not in |K| when deg N_bar = 0.
    """
    for R in _r_candidates(inp, deg_r, twist):
        if d == 2:
            return True
        extra = [Divisor()] if d == 0 else [Divisor.of(p) for p in _point_pool(_labels(R, twist), fresh=1)]
        for bp in extra:
            if not is_pullback_from_line(R + twist * 2 + bp * 2):
                continue
            if deg_nbar == 0 and is_pullback_from_line(twist + bp):
                continue
            return True
    return False


def _validate(inp: G2HiggsInput):
    if inp.e_inv not in (-2, -1, 0):
        raise InconsistentInput(f"genus 2 forces e_inv in {{-2, -1, 0}}, got {inp.e_inv}")
    if inp.k < 0:
        raise InconsistentInput("k must be >= 0")
    for j in inp.jumps:
        if not is_genus2_point(j.location):
            raise InconsistentInput(f"jump location {j.location} is not a genus-2 point")
    locs = [j.location for j in inp.jumps]
    if len(set(locs)) != len(locs):
        raise InconsistentInput("at most one jump per fibre")
    mu = sum(jump_stats(j).mu for j in inp.jumps)
    m = inp.k - mu
    if m < 0:
        raise InconsistentInput(f"jump multiplicities {mu} exceed k = {inp.k}")
    dbar = Fraction(-inp.e_inv, 4) + Fraction(m, 2)
    deg_r = 8 * dbar
    deg_nbar = -4 * dbar
    if inp.R is not None:
        if not inp.R.is_effective() and inp.R:
            raise InconsistentInput("R must be effective")
        if not inp.R.is_reduced() and inp.R:
            raise InconsistentInput("R must be reduced (smooth spectral curve)")
        if inp.R.degree() != deg_r:
            raise InconsistentInput(f"deg R = {inp.R.degree()}, expected 8*Delta_bar = {deg_r}")
        for p in inp.R.support():
            if not is_genus2_point(p):
                raise InconsistentInput(f"{p} is not a genus-2 point")
    if inp.N_bar is not None:
        if inp.N_bar.degree() != deg_nbar:
            raise InconsistentInput(f"deg N_bar = {inp.N_bar.degree()}, expected -4*Delta_bar = {deg_nbar}")
        if inp.R is not None:
            t = g2_class_reduce(inp.N_bar * 2 + inp.R).is_trivial()
            if t is False:
                raise InconsistentInput("N_bar^2 is not O(-R)")
        if deg_nbar == 0 and g2_class_reduce(inp.N_bar).is_trivial():
            raise InconsistentInput("a stable bundle has N_bar nontrivial")
    return m, int(deg_r), int(deg_nbar)


def g2_higgs_decide(inp: G2HiggsInput) -> G2Decision:
    m, deg_r, deg_nbar = _validate(inp)
    twist = divisor_sum(Divisor({j.location: jump_stats(j).s}) for j in inp.jumps)
    d = deg_nbar - twist.degree() + 2
    tag = _case_tag(inp)
    if d < 0:
        return G2Decision(HiggsVerdict.NoHiggs, H0Value.exact(0), tag, "deg(N K) < 0", d)
    if inp.N_bar is not None:
        h = h0_genus2(g2_class_reduce(inp.N_bar - twist + K_DIVISOR))
        if h.certainly_positive():
            return G2Decision(HiggsVerdict.HiggsExists, h, tag, "class test", d)
        if h.certainly_zero():
            return G2Decision(HiggsVerdict.NoHiggs, h, tag, "class test", d)
        if not _witness(inp, d, twist, deg_r, deg_nbar):
            return G2Decision(HiggsVerdict.NoHiggs, H0Value.exact(0), tag, "no compatible N", d)
        return G2Decision(HiggsVerdict.Undecidable, h, tag, "class test blocked by generic points", d)
    if _witness(inp, d, twist, deg_r, deg_nbar):
        # deg 0: N K trivial; deg 1: N K = O(b'); deg 2: N K != K by stability
        return G2Decision(HiggsVerdict.HiggsExists, H0Value.exact(1), tag, "compatible N exists", d)
    return G2Decision(HiggsVerdict.NoHiggs, H0Value.exact(0), tag, "no compatible N", d)


# --- smoothness ---


class Smoothness(str, Enum):
    Smooth = "Smooth"
    NotSmooth = "NotSmooth"
    Unknown = "Unknown"


@dataclass(frozen=True)
class SmoothnessVerdict:
    """verdict concerns the whole moduli space, or the point E when g2 data is supplied."""

    verdict: Smoothness
    scope: str
    citation: str
    moduli_verdict: Smoothness
    higgs: G2Decision | None = None


def _moduli_smoothness(g: int, delta: LineBundleX, rv: RangeVerdict) -> tuple:
    D, e = rv.delta, delta.e_inv
    if not rv.exists:
        return Smoothness.Smooth, "empty moduli space"
    if twist_gate(Twist.LineBundle, V_deg=2 * g - 2, V_is_trivial=(g == 1)) is not Gate.Possible:
        return Smoothness.Smooth, "gate:K_X"
    if rv.filtrable_exists:
        if D != 0:
            return Smoothness.NotSmooth, "not-smooth:filtrable"
        return Smoothness.Unknown, "Delta = 0"
    if g == 2:
        if e == -2 and D > Fraction(1, 2):
            return Smoothness.Smooth, "genus2:clause1"
        if e == 0:
            return Smoothness.NotSmooth, "genus2:clause2"
    if D != 0:
        if D == rv.floor and e > 1 - g:
            return Smoothness.NotSmooth, "not-smooth:minimal"
        if D > rv.floor and e > 2 - g and g >= 3:
            return Smoothness.NotSmooth, "not-smooth:jump"
    return Smoothness.Unknown, "no criterion applies"


def smoothness_verdict(g: int, delta: LineBundleX, c2: int, g2_input: G2HiggsInput | None = None) -> SmoothnessVerdict:
    """Smoothness of M_{2,delta,c2}(X) as a ringed space.

    With g2_input (genus 2, non-filtrable range) the verdict is local at the
    described bundle E: M is singular at E iff E has a non-zero trace-free
    Higgs field.  moduli_verdict always reports the global statement, upgraded
    to NotSmooth when a singular point is exhibited.
    """
    _check_delta(g, delta)
    rv = classify_range(c2, delta)
    mv, cite = _moduli_smoothness(g, delta, rv)
    if g2_input is None:
        return SmoothnessVerdict(mv, "moduli", cite, mv)
    if g != 2 or not rv.in_nonfiltrable_range:
        raise InconsistentInput("genus-2 data applies only to g = 2 in the non-filtrable range")
    if g2_input.e_inv != delta.e_inv or g2_input.delta != rv.delta:
        raise InconsistentInput(
            f"genus-2 data has (e, Delta) = ({g2_input.e_inv}, {g2_input.delta}), surface gives ({delta.e_inv}, {rv.delta})"
        )
    dec = g2_higgs_decide(g2_input)
    local = {
        HiggsVerdict.HiggsExists: Smoothness.NotSmooth,
        HiggsVerdict.NoHiggs: Smoothness.Smooth,
        HiggsVerdict.Undecidable: Smoothness.Unknown,
    }[dec.verdict]
    if local is Smoothness.NotSmooth:
        mv = Smoothness.NotSmooth
    return SmoothnessVerdict(local, "point", f"{dec.citation}: {dec.rule}", mv, dec)
