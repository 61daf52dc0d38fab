"""JSON schemas for every CLI command (input and output)."""
from __future__ import annotations

RAT = {"oneOf": [{"type": "integer"}, {"type": "string", "pattern": r"^\s*-?\d+(\s*/\s*\d+)?\s*$"}]}
RAT_OUT = {"type": "string", "pattern": r"^-?\d+(/[1-9]\d*)?$"}
INT = {"oneOf": [{"type": "integer"}, {"type": "string", "pattern": r"^\s*-?\d+\s*$"}]}
GAUSS = {"oneOf": [RAT, {"type": "array", "items": RAT, "minItems": 2, "maxItems": 2}]}
GAUSS_OUT = {"type": "array", "items": RAT_OUT, "minItems": 2, "maxItems": 2}
FIELD_OUT = {
    "oneOf": [
        GAUSS_OUT,
        {
            "type": "object",
            "required": ["a", "b", "t_squared"],
            "properties": {"a": GAUSS_OUT, "b": GAUSS_OUT, "t_squared": GAUSS_OUT},
            "additionalProperties": False,
        },
    ]
}


def _pair(item):
    return {"type": "array", "items": item, "minItems": 2, "maxItems": 2}


MAT = _pair(_pair(GAUSS))
MAT_OUT = _pair(_pair(FIELD_OUT))
POLY = {"type": "array", "items": GAUSS, "minItems": 1}
POLY_OUT = {"type": "array", "items": GAUSS_OUT, "minItems": 1}
POLYMAT = _pair(_pair(POLY))
POLYMAT_OUT = _pair(_pair(POLY_OUT))

POINT = {
    "oneOf": [
        {"type": "string", "pattern": r"^W[1-6]$"},
        {"type": "string", "pattern": r"^pt:.+$"},
        {
            "type": "object",
            "required": ["generic"],
            "properties": {"generic": {"type": "string", "minLength": 1}, "sheet": {"enum": ["+", "-"]}},
            "additionalProperties": False,
        },
    ]
}
DIVISOR = {
    "type": "array",
    "items": {
        "type": "object",
        "required": ["at"],
        "properties": {"at": POINT, "mult": INT},
        "additionalProperties": False,
    },
}
DIVISOR_OUT = {
    "type": "array",
    "items": {
        "type": "object",
        "required": ["at", "mult"],
        "properties": {"at": POINT, "mult": {"type": "integer"}},
        "additionalProperties": False,
    },
}
JUMP = {
    "type": "object",
    "required": ["at", "heights"],
    "properties": {"at": POINT, "heights": {"type": "array", "items": INT, "minItems": 1}},
    "additionalProperties": False,
}
JUMP_OUT = {
    "type": "object",
    "required": ["at", "heights"],
    "properties": {"at": POINT, "heights": {"type": "array", "items": {"type": "integer"}, "minItems": 1}},
    "additionalProperties": False,
}
SURFACE = {
    "type": "object",
    "required": ["g", "d"],
    "properties": {"g": INT, "d": INT, "tau_log": RAT},
    "additionalProperties": False,
}
SURFACE_OUT = {
    "type": "object",
    "required": ["g", "d", "tau_log"],
    "properties": {"g": {"type": "integer"}, "d": {"type": "integer"}, "tau_log": RAT_OUT},
    "additionalProperties": False,
}
BUNDLE = {
    "type": "object",
    "properties": {"h_deg": INT, "q": RAT, "n_delta": INT, "e_inv": INT, "phase": {"type": "string"}},
    "additionalProperties": False,
}
BUNDLE_OUT = {
    "type": "object",
    "required": ["h_deg", "q", "n_delta", "e_inv"],
    "properties": {
        "h_deg": {"type": "integer"},
        "q": RAT_OUT,
        "n_delta": {"type": "integer"},
        "e_inv": {"type": "integer"},
        "phase": {"type": "string"},
    },
    "additionalProperties": False,
}
DESCRIPTOR = {
    "type": "object",
    "required": ["delta", "c2"],
    "properties": {
        "delta": BUNDLE,
        "c2": INT,
        "jumps": {"type": "array", "items": JUMP},
        "filtrable": {"type": "boolean"},
        "regular_generic_fibre": {"type": "boolean"},
    },
    "additionalProperties": False,
}
DESCRIPTOR_OUT = {
    "type": "object",
    "required": ["delta", "c2", "jumps", "filtrable", "regular_generic_fibre"],
    "properties": {
        "delta": BUNDLE_OUT,
        "c2": {"type": "integer"},
        "jumps": {"type": "array", "items": JUMP_OUT},
        "filtrable": {"type": "boolean"},
        "regular_generic_fibre": {"type": "boolean"},
    },
    "additionalProperties": False,
}
H0 = {
    "oneOf": [
        {
            "type": "object",
            "required": ["kind", "value"],
            "properties": {"kind": {"const": "Exact"}, "value": {"type": "integer", "minimum": 0}},
            "additionalProperties": False,
        },
        {
            "type": "object",
            "required": ["kind", "lo", "hi"],
            "properties": {
                "kind": {"const": "Interval"},
                "lo": {"type": "integer", "minimum": 0},
                "hi": {"type": ["integer", "null"], "minimum": 0},
            },
            "additionalProperties": False,
        },
        {
            "type": "object",
            "required": ["kind"],
            "properties": {"kind": {"const": "Undecidable"}},
            "additionalProperties": False,
        },
    ]
}
H0_OR_NULL = {"oneOf": [H0, {"type": "null"}]}
BOOL_OR_NULL = {"type": ["boolean", "null"]}
FLAGS = {
    "type": "object",
    "properties": {
        k: BOOL_OR_NULL
        for k in ("is_trivial", "is_canonical", "is_effective", "point_class", "canonical_minus_point", "generic")
    },
    "additionalProperties": False,
}
G2_INPUT = {
    "type": "object",
    "required": ["e_inv", "k"],
    "properties": {
        "e_inv": {"enum": [-2, -1, 0]},
        "k": {"type": "integer", "minimum": 0},
        "jumps": {"type": "array", "items": JUMP},
        "R": {"oneOf": [DIVISOR, {"type": "null"}]},
        "N_bar": {"oneOf": [DIVISOR, {"type": "null"}]},
    },
    "additionalProperties": False,
}
G2_OUTPUT = {
    "type": "object",
    "required": ["verdict", "h0", "citation", "rule", "deg_NK"],
    "properties": {
        "verdict": {"enum": ["HiggsExists", "NoHiggs", "Undecidable"]},
        "h0": H0,
        "citation": {"type": "string"},
        "rule": {"type": "string"},
        "deg_NK": {"type": "integer"},
    },
    "additionalProperties": False,
}
SMOOTH_ENUM = {"enum": ["Smooth", "NotSmooth", "Unknown"]}


def _obj(required, props, extra=False):
    return {"type": "object", "required": list(required), "properties": props, "additionalProperties": extra}


def _inout(inp, out):
    return {"input": inp, "output": out}


_SURF_BUNDLE = _obj(["surface", "bundle"], {"surface": SURFACE, "bundle": BUNDLE})

SCHEMAS = {
    ("surface", "validate"): _inout(
        _obj(["surface"], {"surface": SURFACE}),
        _obj(["valid", "surface"], {"valid": {"const": True}, "surface": SURFACE_OUT}),
    ),
    ("surface", "degree"): _inout(_SURF_BUNDLE, _obj(["degree"], {"degree": RAT_OUT})),
    ("surface", "canon"): _inout(
        _SURF_BUNDLE, _obj(["bundle", "degree"], {"bundle": BUNDLE_OUT, "degree": RAT_OUT})
    ),
    ("range", "classify"): _inout(
        _obj(["c2", "delta"], {"c2": INT, "delta": BUNDLE}),
        _obj(
            ["exists", "filtrable_exists", "in_nonfiltrable_range", "delta", "m", "floor"],
            {
                "exists": {"type": "boolean"},
                "filtrable_exists": {"type": "boolean"},
                "in_nonfiltrable_range": {"type": "boolean"},
                "delta": RAT_OUT,
                "m": RAT_OUT,
                "floor": RAT_OUT,
            },
        ),
    ),
    ("hopf", "nf-even"): _inout(
        _obj(["A1", "A2"], {"A1": MAT, "A2": MAT}),
        {
            "oneOf": [
                _obj(
                    ["stable", "point", "certificate", "A1_normal", "A2_normal", "t", "commutator_det"],
                    {
                        "stable": {"const": True},
                        "point": _obj(["t_sq", "s_p", "v_p"], {k: FIELD_OUT for k in ("t_sq", "s_p", "v_p")}),
                        "certificate": MAT_OUT,
                        "A1_normal": MAT_OUT,
                        "A2_normal": MAT_OUT,
                        "t": FIELD_OUT,
                        "commutator_det": FIELD_OUT,
                    },
                ),
                _obj(["stable", "common"], {"stable": {"const": False}, "common": _pair(FIELD_OUT)}),
            ]
        },
    ),
    ("hopf", "nf-odd"): _inout(
        _obj(["a", "b", "c"], {"a": POLY, "b": POLY, "c": GAUSS}),
        {
            "oneOf": [
                _obj(
                    ["stable", "point"],
                    {"stable": {"const": True}, "point": _obj(["b1", "b2", "b3"], {k: GAUSS_OUT for k in ("b1", "b2", "b3")})},
                ),
                _obj(["stable"], {"stable": {"const": False}}),
            ]
        },
    ),
    ("hopf", "integrable"): _inout(
        _obj(["Phi1", "Phi2"], {"Phi1": POLYMAT, "Phi2": POLYMAT}),
        _obj(
            ["integrable"],
            {
                "integrable": {"type": "boolean"},
                "decomposition": {
                    "oneOf": [
                        _obj(["phi0", "scale"], {"phi0": POLYMAT_OUT, "scale": _pair(GAUSS_OUT)}),
                        {"type": "null"},
                    ]
                },
            },
        ),
    ),
    ("hopf", "h0"): _inout(
        _obj(
            ["regular_generic_fibre", "extension_of_line_bundles", "c2", "m"],
            {
                "regular_generic_fibre": {"type": "boolean"},
                "extension_of_line_bundles": {"type": "boolean"},
                "c2": INT,
                "m": INT,
                "ell": {"oneOf": [INT, {"type": "null"}]},
            },
        ),
        _obj(["h0"], {"h0": H0}),
    ),
    ("hopf", "classify"): _inout(
        _obj(
            ["filtrable", "c2", "phi_nonzero", "E_stable", "shape"],
            {
                "filtrable": {"type": "boolean"},
                "c2": INT,
                "phi_nonzero": {"type": "boolean"},
                "E_stable": {"type": "boolean"},
                "shape": {"enum": ["KplusK", "KplusKminusT", "Other"]},
            },
        ),
        _obj(
            ["verdict"],
            {"verdict": {"enum": ["OnlyZeroHiggs", "StablePair", "UnstablePair", "StableCapable", "NoStableHiggs"]}},
        ),
    ),
    ("hopf", "example"): _inout(
        _obj(["c2"], {"c2": INT, "gap": RAT}),
        _obj(
            ["c2", "L1", "L2", "det", "mu", "destabilising_degrees", "m", "stable", "regular_generic_fibre", "h0_end0_T", "cohiggs_dim"],
            {
                "c2": {"type": "integer"},
                "L1": BUNDLE_OUT,
                "L2": BUNDLE_OUT,
                "det": BUNDLE_OUT,
                "mu": RAT_OUT,
                "destabilising_degrees": {"type": "array", "items": RAT_OUT},
                "m": {"type": "integer"},
                "stable": {"type": "boolean"},
                "regular_generic_fibre": {"type": "boolean"},
                "h0_end0_T": H0,
                "cohiggs_dim": {"type": "integer"},
            },
        ),
    ),
    ("jumps", "stats"): _inout(
        _obj(["heights"], {"heights": {"type": "array", "items": INT, "minItems": 1}, "at": POINT}),
        _obj(["l", "mu", "s"], {k: {"type": "integer"} for k in ("l", "mu", "s")}),
    ),
    ("jumps", "modify"): _inout(
        _obj(["descriptor", "at", "deg_lambda"], {"descriptor": DESCRIPTOR, "at": POINT, "deg_lambda": INT}),
        _obj(["descriptor", "discriminant"], {"descriptor": DESCRIPTOR_OUT, "discriminant": RAT_OUT}),
    ),
    ("jumps", "reduce"): _inout(
        _obj(["descriptor"], {"descriptor": DESCRIPTOR}),
        _obj(["clean", "delta_shift", "twist"], {"clean": DESCRIPTOR_OUT, "delta_shift": RAT_OUT, "twist": DIVISOR_OUT}),
    ),
    ("jumps", "pushforward"): _inout(
        _obj(["descriptor"], {"descriptor": DESCRIPTOR}),
        _obj(
            ["deg_N", "deg_N_clean", "deg_R", "delta_clean", "twist", "N_sq_is_minus_R"],
            {
                "deg_N": RAT_OUT,
                "deg_N_clean": RAT_OUT,
                "deg_R": RAT_OUT,
                "delta_clean": RAT_OUT,
                "twist": DIVISOR_OUT,
                "N_sq_is_minus_R": {"type": "boolean"},
            },
        ),
    ),
    ("higgs", "filtrable"): _inout(
        _obj(
            ["g", "case"],
            {
                "g": INT,
                "case": {
                    "oneOf": [
                        _obj(["kind", "H_deg"], {"kind": {"enum": ["RegularGeneric", "NotExtension"]}, "H_deg": INT, "flags": FLAGS}),
                        _obj(["kind"], {"kind": {"const": "PullbackExtension"}, "F_stable": {"type": "boolean"}}),
                    ]
                },
            },
        ),
        _obj(["h0"], {"h0": H0}),
    ),
    ("higgs", "nonfiltrable"): _inout(
        _obj(["g", "delta", "c2"], {"g": INT, "delta": BUNDLE, "c2": INT}),
        _obj(
            ["kind", "h0", "citation"],
            {"kind": {"enum": ["Exists", "NotGuaranteed", "None"]}, "h0": H0_OR_NULL, "citation": {"type": "string"}},
        ),
    ),
    ("higgs", "genus2"): _inout(G2_INPUT, G2_OUTPUT),
    ("higgs", "smooth"): _inout(
        _obj(["g", "delta", "c2"], {"g": INT, "delta": BUNDLE, "c2": INT, "g2_input": G2_INPUT}),
        _obj(
            ["verdict", "scope", "citation", "moduli_verdict"],
            {
                "verdict": SMOOTH_ENUM,
                "scope": {"enum": ["moduli", "point"]},
                "citation": {"type": "string"},
                "moduli_verdict": SMOOTH_ENUM,
                "higgs": G2_OUTPUT,
            },
        ),
    ),
}

_RANGE = {
    "oneOf": [
        {"type": "array", "items": INT, "minItems": 0},
        _obj(["from", "to"], {"from": INT, "to": INT}),
        INT,
    ]
}

SCHEMAS[("sweep",)] = _inout(
    _obj(["g", "e_inv", "n_delta", "c2"], {k: _RANGE for k in ("g", "e_inv", "n_delta", "c2")}),
    {"type": "string", "description": "CSV text with a fixed header row"},
)
