"""JSON schemas for everything the CLI writes."""

SCHEMA_VERSION = "1"

_partition = {"type": "array", "items": {"type": "integer", "minimum": 1}}
_term = {
    "type": "object",
    "required": ["lambda", "coeff"],
    "properties": {"lambda": _partition, "coeff": {"type": "integer"}},
    "additionalProperties": False,
}

GRAPH = {
    "type": "object",
    "required": ["vertices", "edges"],
    "properties": {
        "vertices": {"type": "integer", "minimum": 0},
        "edges": {
            "type": "array",
            "items": {"type": "array", "items": {"type": "integer", "minimum": 0}, "minItems": 2, "maxItems": 2},
        },
    },
    "additionalProperties": False,
}

POSITIVITY_REPORT = {
    "type": "object",
    "required": ["nu", "vertices", "schur", "negative", "schur_positive"],
    "properties": {
        "nu": _partition,
        "vertices": {"type": "integer", "minimum": 0},
        "schur": {"type": "array", "items": _term},
        "negative": {"type": "array", "items": _term},
        "schur_positive": {"type": "boolean"},
    },
    "additionalProperties": False,
}

VERIFY_REPORT = {
    "type": "object",
    "required": ["schema_version", "n", "reports", "verdict"],
    "properties": {
        "schema_version": {"const": SCHEMA_VERSION},
        "n": {"type": "integer", "minimum": 1},
        "reports": {"type": "array", "items": POSITIVITY_REPORT},
        "verdict": {"enum": ["VERIFIED", "COUNTEREXAMPLE-ABSENT"]},
    },
    "additionalProperties": False,
}

REPORT_DOCUMENT = {
    "type": "object",
    "required": ["schema_version", "command", "inputs", "results", "timing"],
    "properties": {
        "schema_version": {"const": SCHEMA_VERSION},
        "command": {"enum": ["spider", "expand", "verify", "chartable"]},
        "inputs": {"type": "object"},
        "results": {"type": "object"},
        "timing": {"type": "object", "additionalProperties": {"type": "number", "minimum": 0}},
    },
    "additionalProperties": False,
}

RESULTS = {
    "spider": GRAPH,
    "expand": POSITIVITY_REPORT,
    "verify": VERIFY_REPORT,
    "chartable": {
        "type": "object",
        "required": ["n", "count", "path", "rebuilt"],
        "properties": {
            "n": {"type": "integer", "minimum": 0},
            "count": {"type": "integer", "minimum": 1},
            "path": {"type": "string"},
            "rebuilt": {"type": "boolean"},
        },
        "additionalProperties": False,
    },
}
