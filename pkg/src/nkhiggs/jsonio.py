"""JSON encoding of the library's values. Rationals travel as lowest-terms strings."""
from __future__ import annotations

import re
from fractions import Fraction

from .divisors import G, W, Divisor, Pt
from .field import FieldElem, GaussRat
from .hopf import HomPoly, Mat2, PolyMat2
from .invariants import H0Value, LineFlags
from .jumps import BundleDescriptor, Jump
from .surface import LineBundleX, SurfaceSpec


class InputError(ValueError):
    """Malformed input that the schema could not rule out (exit code 2)."""


_RAT = re.compile(r"^\s*(-?\d+)(?:\s*/\s*(\d+))?\s*$")


def rat(x) -> Fraction:
    if isinstance(x, bool):
        raise InputError(f"not a rational: {x!r}")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        m = _RAT.match(x)
        if m:
            num, den = int(m.group(1)), int(m.group(2) or 1)
            if den == 0:
                raise InputError(f"zero denominator in {x!r}")
            return Fraction(num, den)
    raise InputError(f"not a rational: {x!r}")


def integer(x) -> int:
    f = rat(x)
    if f.denominator != 1:
        raise InputError(f"not an integer: {x!r}")
    return int(f)


def rat_out(f) -> str:
    f = Fraction(f)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def gauss(x) -> GaussRat:
    if isinstance(x, list):
        if len(x) != 2:
            raise InputError(f"complex entries are [re, im] pairs, got {x!r}")
        return GaussRat(rat(x[0]), rat(x[1]))
    return GaussRat(rat(x))


def gauss_out(z) -> list:
    return [rat_out(z.re), rat_out(z.im)]


def field_out(x):
    if isinstance(x, FieldElem):
        if x.in_base():
            return gauss_out(x.a)
        return {"a": gauss_out(x.a), "b": gauss_out(x.b), "t_squared": gauss_out(x.theta)}
    if isinstance(x, GaussRat):
        return gauss_out(x)
    return gauss_out(GaussRat.coerce(x))


def mat(x) -> Mat2:
    if len(x) != 2 or any(len(r) != 2 for r in x):
        raise InputError("matrices are 2x2 arrays")
    return Mat2.from_rows([[gauss(e) for e in r] for r in x])


def mat_out(M: Mat2) -> list:
    return [[field_out(e) for e in r] for r in M.rows()]


def vec_out(v) -> list:
    return [field_out(e) for e in v]


def poly(x) -> HomPoly:
    return HomPoly([gauss(c) for c in x])


def poly_out(p: HomPoly) -> list:
    return [gauss_out(c) for c in p.coeffs]


def polymat(x) -> PolyMat2:
    (a, b), (c, d) = x
    return PolyMat2(poly(a), poly(b), poly(c), poly(d))


def polymat_out(P: PolyMat2) -> list:
    a, b, c, d = P.e
    return [[poly_out(a), poly_out(b)], [poly_out(c), poly_out(d)]]


_W = re.compile(r"^W([1-6])$")


def point(x):
    if isinstance(x, dict):
        return G(str(x["generic"]), x.get("sheet", "+"))
    if isinstance(x, str):
        m = _W.match(x)
        if m:
            return W(int(m.group(1)))
        if x.startswith("pt:") and len(x) > 3:
            return Pt(x[3:])
    raise InputError(f"not a point: {x!r}")


def point_out(p):
    if isinstance(p, W):
        return f"W{p.i}"
    if isinstance(p, G):
        return {"generic": p.label, "sheet": p.sheet}
    return f"pt:{p.label}"


def divisor(x) -> Divisor:
    out = Divisor()
    for term in x:
        out = out + Divisor({point(term["at"]): integer(term.get("mult", 1))})
    return out


def divisor_out(D: Divisor) -> list:
    return [{"at": point_out(p), "mult": n} for p, n in D.items()]


def jump(x) -> Jump:
    return Jump(point(x["at"]), tuple(integer(h) for h in x["heights"]))


def jump_out(j: Jump) -> dict:
    return {"at": point_out(j.location), "heights": list(j.heights)}


def surface(x) -> SurfaceSpec:
    return SurfaceSpec(integer(x["g"]), integer(x["d"]), rat(x.get("tau_log", 1)))


def surface_out(s: SurfaceSpec) -> dict:
    return {"g": s.g, "d": s.d, "tau_log": rat_out(s.tau_log)}


def bundle(x) -> LineBundleX:
    return LineBundleX(
        integer(x.get("h_deg", 0)),
        rat(x.get("q", 0)),
        integer(x.get("n_delta", 0)),
        integer(x.get("e_inv", 0)),
        x.get("phase"),
    )


def bundle_out(L: LineBundleX) -> dict:
    out = {"h_deg": L.h_deg, "q": rat_out(L.q), "n_delta": L.n_delta, "e_inv": L.e_inv}
    if L.phase:
        out["phase"] = L.phase
    return out


def descriptor(x) -> BundleDescriptor:
    return BundleDescriptor(
        bundle(x["delta"]),
        integer(x["c2"]),
        tuple(jump(j) for j in x.get("jumps", [])),
        bool(x.get("filtrable", True)),
        bool(x.get("regular_generic_fibre", True)),
    )


def descriptor_out(d: BundleDescriptor) -> dict:
    return {
        "delta": bundle_out(d.delta),
        "c2": d.c2,
        "jumps": [jump_out(j) for j in d.jumps],
        "filtrable": d.filtrable,
        "regular_generic_fibre": d.regular_generic_fibre,
    }


def flags(x) -> LineFlags:
    return LineFlags(**{k: x.get(k) for k in LineFlags.__dataclass_fields__})


def h0_out(h: H0Value | None):
    if h is None:
        return None
    if h.kind == "Exact":
        return {"kind": "Exact", "value": h.value}
    if h.kind == "Interval":
        return {"kind": "Interval", "lo": h.lo, "hi": h.hi}
    return {"kind": "Undecidable"}
