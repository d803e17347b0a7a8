"""JSON schemas (draft 2020-12) for every ``--format json`` output of the CLI.

Plain dicts, so any validator can consume them; the test-suite uses the
``jsonschema`` package.
"""

_SCALAR = {"type": "string", "minLength": 1}
_COUNT = {"type": "integer", "minimum": 0}
_VERTEX = {"type": "integer", "minimum": 1}


def _obj(props: dict, required=None, extra=False) -> dict:
    return {
        "type": "object",
        "properties": props,
        "required": list(props) if required is None else required,
        "additionalProperties": extra,
    }


VIOLATION = _obj({
    "kind": {"enum": ["orthogonality", "square"]},
    "i": _VERTEX,
    "j": _VERTEX,
    "expected": _SCALAR,
    "actual": _SCALAR,
    "message": {"type": "string"},
}, required=["kind", "i", "message"], extra=True)

VERDICT_PROPS = {
    "product_preserving": {"type": "boolean"},
    "natural_basis_extendable": {"enum": ["yes", "no", "undetermined"]},
    "is_isomorphism": {"enum": ["yes", "no", "undetermined"]},
    "certificate": {"type": "array", "items": {"type": "string"}},
    "violation": {"oneOf": [{"type": "null"}, VIOLATION]},
}

BUILD = _obj({
    "graph": {"type": "string"},
    "kind": {"enum": ["graph", "random-walk", "custom"]},
    "n": _VERTEX,
    "approximate": {"type": "boolean"},
    "structure": {"type": "array", "items": {"type": "array", "items": _SCALAR}},
})

WITNESS = _obj({
    "graph": {"type": "string"},
    "approximate": {"type": "boolean"},
    "witness": {"type": ["string", "null"]},
    "verified": {"type": "boolean"},
    "scalars": {"type": "array", "items": _obj({
        "vertices": {"type": "array", "items": _VERTEX},
        "value": _SCALAR,
        "formula": _SCALAR,
    })},
    "verdict": _obj(VERDICT_PROPS),
    "message": {"type": "string"},
}, required=["graph", "approximate", "witness"])

VERIFY = _obj({"graph": {"type": "string"}, "direction": {"enum": ["a-to-rw", "rw-to-a"]}, **VERDICT_PROPS})

MONOMIAL_MAP = _obj({
    "targets": {"type": "array", "items": {"oneOf": [{"type": "null"}, _VERTEX]}},
    "scales": {"type": "array", "items": _SCALAR},
})

SOLVE = _obj({
    "graph": {"type": "string"},
    "direction": {"enum": ["a-to-rw", "rw-to-a"]},
    "class": {"const": "monomial"},
    "includes_null_map": {"type": "boolean"},
    "null_only": {"type": "boolean"},
    "complete": {"type": "boolean"},
    "solutions": {"type": "array", "items": MONOMIAL_MAP},
    "outside_scalar_domain": {"type": "array"},
    "parametric_branches": {"type": "array"},
    "truncated": {"type": "boolean"},
    "timed_out": {"type": "boolean"},
    "nodes": _COUNT,
    "leaves": _COUNT,
    "elapsed_ms": {"type": "number", "minimum": 0},
})

NUMERIC = _obj({
    "graph": {"type": "string"},
    "direction": {"enum": ["a-to-rw", "rw-to-a"]},
    "restarts": {"type": "integer", "minimum": 1},
    "seed": _COUNT,
    "constraint": {"enum": ["unit-frobenius", "unit-rows"]},
    "best_residual": {"type": "number", "minimum": 0},
    "evidence_only": {"const": True},
    "candidates": {"type": "array", "maxItems": 10, "items": _obj({
        "restart_index": _COUNT,
        "residual": {"type": "number", "minimum": 0},
        "converged": {"type": "boolean"},
        "iterations": _COUNT,
        "entries": {"type": "array", "items": {"type": "array", "items": {"type": "number"}}},
    })},
})

_POLY_ROW = {"type": "string"}
IDEAL = _obj({
    "graph": {"type": "string"},
    "direction": {"enum": ["a-to-rw", "rw-to-a"]},
    "n": _VERTEX,
    "orthogonality": {"type": "array", "items": _obj({"i": _VERTEX, "j": _VERTEX, "l": _VERTEX, "poly": _POLY_ROW})},
    "squares": {"type": "array", "items": _obj({"i": _VERTEX, "l": _VERTEX, "poly": _POLY_ROW})},
})

WALK = _obj({
    "graph": {"type": "string"},
    "seed": _COUNT,
    "start": _VERTEX,
    "steps": _COUNT,
    "visit_counts": {"type": "array", "items": _COUNT},
    "final": _VERTEX,
    "generator": {"const": "splitmix64"},
})

STATIONARY = _obj({
    "graph": {"type": "string"},
    "probs": {"type": "array", "items": {"type": "string", "pattern": r"^\d+(/\d+)?$"}},
})

SURVEY = _obj({
    "class": {"const": "monomial"},
    "rows": {"type": "array", "items": _obj({
        "parts": {"type": "array", "items": _VERTEX, "minItems": 2},
        "classification": {"enum": ["WITNESS", "NULL-ONLY-MONOMIAL", "UNDETERMINED"]},
        "witness_scalars": {"type": "array", "items": _SCALAR},
        "elapsed_ms": {"type": "number", "minimum": 0},
        "method": {"type": "string"},
        "certificate": {},
    })},
})

SCHEMAS = {
    "build": BUILD,
    "witness": WITNESS,
    "verify": VERIFY,
    "solve-monomial": SOLVE,
    "numeric-search": NUMERIC,
    "ideal": IDEAL,
    "walk": WALK,
    "stationary": STATIONARY,
    "survey": SURVEY,
}


def schema_for(command: str) -> dict:
    """Schema of the JSON document printed by ``command``."""
    return {"$schema": "https://json-schema.org/draft/2020-12/schema", "title": f"evoalg {command}",
            **SCHEMAS[command]}
