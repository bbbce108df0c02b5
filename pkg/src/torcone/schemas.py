"""JSON schemas for CLI requests and responses.

Rationals travel as strings ``"p"`` or ``"p/q"``; plain JSON integers are
accepted on input as a convenience.
"""

from __future__ import annotations

import json
from fractions import Fraction

import jsonschema

from .errors import InvalidInput

RATIONAL = {"type": "string", "pattern": r"^-?[0-9]+(/[0-9]*[1-9][0-9]*)?$"}
INTEGER_STRING = {"type": "string", "pattern": r"^-?[0-9]+$"}
RATIONAL_IN = {"oneOf": [RATIONAL, {"type": "integer"}]}
VECTOR_IN = {"type": "array", "items": RATIONAL_IN, "minItems": 1}

CONE_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "cone",
    "type": "object",
    "properties": {
        "dim": {"type": "integer", "minimum": 1},
        "generators": {"type": "array", "items": VECTOR_IN},
        "facet_normals": {"type": "array", "items": VECTOR_IN},
        "winding": {"enum": ["convex", "straight", "reflex", "full"]},
    },
    "required": ["dim"],
    "anyOf": [{"required": ["generators"]}, {"required": ["facet_normals"]}],
    "additionalProperties": False,
}

_VEC = {"type": "array", "items": RATIONAL}
_INT_VEC = {"type": "array", "items": INTEGER_STRING}
_MATRIX = {"type": "array", "items": _INT_VEC}
_STATUS = {"enum": ["ok", "verdict-failure", "invalid-input", "unsupported"]}

_SLICE = {
    "type": "object",
    "properties": {
        "reebVector": _INT_VEC,
        "vertices": {"type": "array", "items": _VEC},
        "bounded": {"type": "boolean"},
    },
    "required": ["reebVector", "vertices", "bounded"],
    "additionalProperties": False,
}

_WITNESSES = {
    "type": "object",
    "properties": {
        "standardForm": {
            "type": "object",
            "properties": {"k": INTEGER_STRING, "matrix": _MATRIX},
            "required": ["k", "matrix"],
            "additionalProperties": False,
        },
        "reeb": _INT_VEC,
        "slice": _SLICE,
        "tripleReduction": {
            "type": "object",
            "properties": {"gcd": INTEGER_STRING, "matrix": _MATRIX},
            "required": ["gcd", "matrix"],
            "additionalProperties": False,
        },
    },
    "additionalProperties": False,
}

_SAMPLE = {
    "type": "object",
    "properties": {"coords": _VEC},
    "required": ["coords"],
    "additionalProperties": False,
}

_IDENTITY = {
    "type": "object",
    "properties": {"holds": {"type": "boolean"}, "residual": {"type": "string"}},
    "required": ["holds", "residual"],
    "additionalProperties": False,
}

_REPORT_FIELDS = {
    "checked": INTEGER_STRING,
    "failures": INTEGER_STRING,
    "minMargin": {"oneOf": [RATIONAL, {"type": "null"}]},
    "witnesses": {"type": "array", "items": _SAMPLE},
    "identities": {"type": "object", "additionalProperties": _IDENTITY},
}


def _response(command: str, props: dict, required: list) -> dict:
    return {
        "type": "object",
        "properties": {
            "status": _STATUS,
            "command": {"const": command},
            **props,
        },
        "required": ["status", "command", *required],
        "additionalProperties": False,
    }


RESPONSE_SCHEMAS = {
    "classify": _response(
        "classify",
        {
            "manifold": {"type": "string"},
            "reebType": {"type": "boolean"},
            "verdict": {
                "enum": [
                    "StronglyFillable",
                    "WeaklyFillableOnly",
                    "WeaklyFillableStrongOpen",
                    "Overtwisted",
                ]
            },
            "steinNote": {"type": ["string", "null"]},
            "witnesses": _WITNESSES,
        },
        ["manifold", "reebType", "verdict", "steinNote", "witnesses"],
    ),
    "reduce-triple": _response(
        "reduce-triple",
        {"gcd": INTEGER_STRING, "matrix": _MATRIX, "image": _INT_VEC},
        ["gcd", "matrix", "image"],
    ),
    "normalize": _response(
        "normalize",
        {"k": INTEGER_STRING, "matrix": _MATRIX, "inverse": _MATRIX},
        ["k", "matrix", "inverse"],
    ),
    "reeb": _response("reeb", {"reebVector": _INT_VEC}, ["reebVector"]),
    "slice": _response("slice", _SLICE["properties"], ["reebVector", "vertices", "bounded"]),
    "verify": _response(
        "verify",
        {
            "kind": {"enum": ["contact", "weakfill", "strongfill", "moment"]},
            "chart": {"type": "string"},
            "form": {"type": "string"},
            "tStar": RATIONAL,
            **_REPORT_FIELDS,
        },
        ["kind", "checked", "failures", "minMargin", "witnesses", "identities"],
    ),
}

ERROR_SCHEMA = {
    "type": "object",
    "properties": {
        "status": {"enum": ["verdict-failure", "invalid-input", "unsupported"]},
        "command": {"type": ["string", "null"]},
        "error": {"type": "string"},
        "message": {"type": "string"},
    },
    "required": ["status", "command", "error", "message"],
    "additionalProperties": False,
}


def validate_cone_payload(text: str) -> dict:
    """Parse and validate a cone JSON document."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"cone is not valid JSON: {exc}") from None
    try:
        jsonschema.validate(data, CONE_SCHEMA)
    except jsonschema.ValidationError as exc:
        raise InvalidInput(f"cone JSON does not match the schema: {exc.message}") from None
    return data


def validate_response(body: dict) -> None:
    """Raise ``jsonschema.ValidationError`` if a response body is malformed."""
    if body.get("status") != "ok" and "error" in body:
        jsonschema.validate(body, ERROR_SCHEMA)
        return
    jsonschema.validate(body, RESPONSE_SCHEMAS[body["command"]])


def parse_rational(x) -> Fraction:
    if isinstance(x, bool):
        raise InvalidInput("booleans are not numbers")
    if isinstance(x, int):
        return Fraction(x)
    try:
        value = Fraction(x)
    except (ValueError, ZeroDivisionError):
        raise InvalidInput(f"{x!r} is not a rational number") from None
    return value


def rational_str(x) -> str:
    return str(Fraction(x))
