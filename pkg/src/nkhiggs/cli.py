"""Command-line front end: JSON in, JSON out; `sweep` writes a CSV verdict table."""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from itertools import product

import jsonschema

from . import hopf, invariants, jumps, surface
from . import jsonio as J
from .errors import DomainError
from .higgs import (
    G2HiggsInput,
    NotExtension,
    PullbackExtension,
    RegularGeneric,
    filtrable_higgs_h0,
    g2_higgs_decide,
    nonfiltrable_existence,
    smoothness_verdict,
)
from .schemas import SCHEMAS

EXIT_OK, EXIT_SCHEMA, EXIT_DOMAIN = 0, 2, 3


# --- command handlers: validated JSON -> JSON-ready result ---


def _surface_validate(x):
    return {"valid": True, "surface": J.surface_out(surface.validate_surface(J.surface(x["surface"])))}


def _surface_pair(x):
    spec = surface.validate_surface(J.surface(x["surface"]))
    return spec, surface.validate_line_bundle(J.bundle(x["bundle"]), spec)


def _surface_degree(x):
    spec, L = _surface_pair(x)
    return {"degree": J.rat_out(surface.degree(L, spec))}


def _surface_canon(x):
    spec, L = _surface_pair(x)
    C = surface.canonicalize(L, spec)
    return {"bundle": J.bundle_out(C), "degree": J.rat_out(surface.degree(C, spec))}


def _range_classify(x):
    rv = invariants.classify_range(J.integer(x["c2"]), J.bundle(x["delta"]))
    return {
        "exists": rv.exists,
        "filtrable_exists": rv.filtrable_exists,
        "in_nonfiltrable_range": rv.in_nonfiltrable_range,
        "delta": J.rat_out(rv.delta),
        "m": J.rat_out(rv.m),
        "floor": J.rat_out(rv.floor),
    }


def _nf_even(x):
    A1, A2 = J.mat(x["A1"]), J.mat(x["A2"])
    r = hopf.normal_form_even(A1, A2)
    if isinstance(r, hopf.Unstable):
        return {"stable": False, "common": J.vec_out(r.common)}
    p = r.point
    return {
        "stable": True,
        "point": {"t_sq": J.field_out(p.t_sq), "s_p": J.field_out(p.s_p), "v_p": J.field_out(p.v_p)},
        "certificate": J.mat_out(r.certificate),
        "A1_normal": J.mat_out(r.A1_normal),
        "A2_normal": J.mat_out(r.A2_normal),
        "t": J.field_out(r.t),
        "commutator_det": J.field_out(hopf.commutator_det(A1, A2)),
    }


def _nf_odd(x):
    r = hopf.normal_form_odd(J.poly(x["a"]), J.poly(x["b"]), J.gauss(x["c"]))
    if isinstance(r, hopf.Unstable):
        return {"stable": False}
    p = r.point
    return {"stable": True, "point": {"b1": J.gauss_out(p.b1), "b2": J.gauss_out(p.b2), "b3": J.gauss_out(p.b3)}}


def _integrable(x, decompose=False):
    P1, P2 = J.polymat(x["Phi1"]), J.polymat(x["Phi2"])
    ok = hopf.integrability_check(P1, P2)
    out = {"integrable": ok}
    if decompose:
        dec = hopf.proportionality_decompose(P1, P2) if ok else hopf.NotProportional()
        out["decomposition"] = (
            {"phi0": J.polymat_out(dec.phi0), "scale": [J.gauss_out(s) for s in dec.scale]}
            if isinstance(dec, hopf.Proportional)
            else None
        )
    return out


def _hopf_h0(x):
    ell = x.get("ell")
    desc = hopf.HopfBundleDesc(
        x["regular_generic_fibre"],
        x["extension_of_line_bundles"],
        J.integer(x["c2"]),
        J.integer(x["m"]),
        None if ell is None else J.integer(ell),
    )
    return {"h0": J.h0_out(hopf.h0_end0_twisted(desc))}


def _hopf_classify(x):
    v = hopf.classify_pair(x["filtrable"], J.integer(x["c2"]), x["phi_nonzero"], x["E_stable"], x["shape"])
    return {"verdict": v.value}


def _hopf_example(x):
    ex = hopf.construct_stable_example(J.integer(x["c2"]), J.rat(x.get("gap", "1/2")))
    return {
        "c2": ex.c2,
        "L1": J.bundle_out(ex.L1),
        "L2": J.bundle_out(ex.L2),
        "det": J.bundle_out(ex.det),
        "mu": J.rat_out(ex.mu),
        "destabilising_degrees": [J.rat_out(d) for d in ex.destabilising_degrees],
        "m": ex.m,
        "stable": ex.stable,
        "regular_generic_fibre": ex.regular_generic_fibre,
        "h0_end0_T": J.h0_out(ex.h0_end0_T),
        "cohiggs_dim": ex.cohiggs_dim,
    }


def _jump_stats(x):
    loc = J.point(x["at"]) if "at" in x else None
    st = jumps.jump_stats(jumps.Jump(loc, tuple(J.integer(h) for h in x["heights"])))
    return {"l": st.l, "mu": st.mu, "s": st.s}


def _jump_modify(x):
    d = jumps.apply_modification(J.descriptor(x["descriptor"]), J.point(x["at"]), J.integer(x["deg_lambda"]))
    return {"descriptor": J.descriptor_out(d), "discriminant": J.rat_out(d.discriminant)}


def _jump_reduce(x):
    r = jumps.reduce_jumps(J.descriptor(x["descriptor"]))
    return {"clean": J.descriptor_out(r.clean), "delta_shift": J.rat_out(r.delta_shift), "twist": J.divisor_out(r.twist)}


def _jump_push(x):
    p = jumps.pushforward_and_ramification(J.descriptor(x["descriptor"]))
    return {
        "deg_N": J.rat_out(p.deg_N),
        "deg_N_clean": J.rat_out(p.deg_N_clean),
        "deg_R": J.rat_out(p.deg_R),
        "delta_clean": J.rat_out(p.delta_clean),
        "twist": J.divisor_out(p.twist),
        "N_sq_is_minus_R": p.N_sq_is_minus_R,
    }


def _higgs_filtrable(x):
    c = x["case"]
    if c["kind"] == "PullbackExtension":
        case = PullbackExtension(c.get("F_stable", True))
    else:
        cls = RegularGeneric if c["kind"] == "RegularGeneric" else NotExtension
        case = cls(J.integer(c["H_deg"]), J.flags(c.get("flags", {})))
    return {"h0": J.h0_out(filtrable_higgs_h0(case, J.integer(x["g"])))}


def _higgs_nonfiltrable(x):
    v = nonfiltrable_existence(J.integer(x["g"]), J.bundle(x["delta"]), J.integer(x["c2"]))
    return {"kind": v.kind.value, "h0": J.h0_out(v.h0), "citation": v.citation}


def g2_input(x) -> G2HiggsInput:
    return G2HiggsInput(
        x["e_inv"],
        x["k"],
        tuple(J.jump(j) for j in x.get("jumps", [])),
        None if x.get("R") is None else J.divisor(x["R"]),
        None if x.get("N_bar") is None else J.divisor(x["N_bar"]),
    )


def _decision_out(d):
    return {"verdict": d.verdict.value, "h0": J.h0_out(d.h0), "citation": d.citation, "rule": d.rule, "deg_NK": d.deg_NK}


def _higgs_genus2(x):
    return _decision_out(g2_higgs_decide(g2_input(x)))


def _higgs_smooth(x):
    gi = g2_input(x["g2_input"]) if "g2_input" in x else None
    v = smoothness_verdict(J.integer(x["g"]), J.bundle(x["delta"]), J.integer(x["c2"]), gi)
    out = {"verdict": v.verdict.value, "scope": v.scope, "citation": v.citation, "moduli_verdict": v.moduli_verdict.value}
    if v.higgs is not None:
        out["higgs"] = _decision_out(v.higgs)
    return out


HANDLERS = {
    ("surface", "validate"): _surface_validate,
    ("surface", "degree"): _surface_degree,
    ("surface", "canon"): _surface_canon,
    ("range", "classify"): _range_classify,
    ("hopf", "nf-even"): _nf_even,
    ("hopf", "nf-odd"): _nf_odd,
    ("hopf", "integrable"): _integrable,
    ("hopf", "h0"): _hopf_h0,
    ("hopf", "classify"): _hopf_classify,
    ("hopf", "example"): _hopf_example,
    ("jumps", "stats"): _jump_stats,
    ("jumps", "modify"): _jump_modify,
    ("jumps", "reduce"): _jump_reduce,
    ("jumps", "pushforward"): _jump_push,
    ("higgs", "filtrable"): _higgs_filtrable,
    ("higgs", "nonfiltrable"): _higgs_nonfiltrable,
    ("higgs", "genus2"): _higgs_genus2,
    ("higgs", "smooth"): _higgs_smooth,
}


# --- sweep ---

SWEEP_HEADER = [
    "g",
    "e_inv",
    "n_delta",
    "c2",
    "Delta",
    "m",
    "floor",
    "exists",
    "filtrable_exists",
    "in_nonfiltrable_range",
    "higgs_gate",
    "higgs_existence",
    "verdict",
    "citation",
]


def _axis(spec) -> list:
    if isinstance(spec, dict):
        lo, hi = J.integer(spec["from"]), J.integer(spec["to"])
        return list(range(lo, hi + 1))
    if isinstance(spec, list):
        return [J.integer(v) for v in spec]
    return [J.integer(spec)]


def sweep_rows(cfg) -> list:
    axes = [_axis(cfg[k]) for k in ("g", "e_inv", "n_delta", "c2")]
    if any(not a for a in axes):
        raise J.InputError("empty sweep grid")
    rows = []
    for g, e, n, c2 in product(*axes):
        rows.append(sweep_row(g, e, n, c2))
    return rows


def sweep_row(g: int, e: int, n: int, c2: int) -> list:
    if g < 0 or n < 0 or not -g <= e <= 0:
        return [g, e, n, c2] + [""] * 8 + ["Invalid", "e_inv outside [-g, 0] or negative g, n_delta"]
    delta = surface.LineBundleX(0, 0, n, e)
    rv = invariants.classify_range(c2, delta)
    gate = invariants.twist_gate(invariants.Twist.Cotangent, g).value
    existence = nonfiltrable_existence(g, delta, c2).kind.value if rv.in_nonfiltrable_range else ""
    v = smoothness_verdict(g, delta, c2)
    b = lambda t: "true" if t else "false"  # noqa: E731
    return [
        g, e, n, c2,
        J.rat_out(rv.delta), J.rat_out(rv.m), J.rat_out(rv.floor),
        b(rv.exists), b(rv.filtrable_exists), b(rv.in_nonfiltrable_range),
        gate, existence, v.verdict.value, v.citation,
    ]


def sweep_csv(cfg) -> str:
    buf = io.StringIO()
    w = csv.writer(buf)  # RFC 4180: CRLF line ends, minimal quoting
    w.writerow(SWEEP_HEADER)
    w.writerows(sweep_rows(cfg))
    return buf.getvalue()


# --- plumbing ---


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def _validator(schema):
    return jsonschema.Draft202012Validator(schema)


def run_command(words: tuple, payload, decompose: bool = False):
    """Validate payload, run the command and return its JSON-ready result (or CSV text for sweep)."""
    _validator(SCHEMAS[words]["input"]).validate(payload)
    if words == ("sweep",):
        return sweep_csv(payload)
    if words == ("hopf", "integrable"):
        return _integrable(payload, decompose)
    return HANDLERS[words](payload)


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="nkhiggs", description="Higgs and co-Higgs bundles on non-Kaehler elliptic surfaces.")
    p.add_argument("--schema", action="store_true", help="print the input/output JSON schema of the command and exit")
    sub = p.add_subparsers(dest="group", required=True)
    groups: dict = {}
    for words in SCHEMAS:
        groups.setdefault(words[0], []).append(words[1:])
    for g, subs in groups.items():
        gp = sub.add_parser(g)
        io_args(gp)
        if subs == [()]:
            continue
        s2 = gp.add_subparsers(dest="cmd", required=True)
        for (name,) in subs:
            cp = s2.add_parser(name)
            io_args(cp)
            if (g, name) == ("hopf", "integrable"):
                cp.add_argument("--decompose", action="store_true", help="also return (phi0, [alpha:beta])")
    return p


def io_args(p):
    p.add_argument("--in", dest="inp", default=None, help="input JSON file (default: stdin)")
    p.add_argument("--out", dest="out", default=None, help="output file (default: stdout)")


def _error(kind: str, detail: str, code: int) -> int:
    sys.stderr.write(dumps({"error": kind, "detail": detail}))
    return code


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    args = _parser().parse_args(argv)
    words = (args.group,) if getattr(args, "cmd", None) is None else (args.group, args.cmd)
    if args.schema:
        sys.stdout.write(dumps(SCHEMAS[words]))
        return EXIT_OK
    try:
        if args.inp:
            with open(args.inp, encoding="utf-8") as fh:
                text = fh.read()
        else:
            text = sys.stdin.read()
        payload = json.loads(text)
        result = run_command(words, payload, getattr(args, "decompose", False))
    except json.JSONDecodeError as exc:
        return _error("MalformedJSON", str(exc), EXIT_SCHEMA)
    except jsonschema.ValidationError as exc:
        return _error("SchemaViolation", exc.message, EXIT_SCHEMA)
    except J.InputError as exc:
        return _error("MalformedInput", str(exc), EXIT_SCHEMA)
    except DomainError as exc:
        return _error(exc.name, str(exc), EXIT_DOMAIN)
    text = result if isinstance(result, str) else dumps(result)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
