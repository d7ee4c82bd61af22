"""JSON schemas for the machine-readable CLI outputs.

All counts are decimal strings so consumers never hit 53-bit float precision
limits; structural values (orders, depths, vertex labels) stay numbers.
"""

_DECIMAL = {"type": "string", "pattern": "^-?[0-9]+$"}
_DECIMAL_OR_NULL = {"type": ["string", "null"], "pattern": "^-?[0-9]+$"}
_LEVEL_SEQ = {"type": "array", "items": {"type": "integer", "minimum": 0}}

COUNT_REPORT_SCHEMA = {
    "type": "object",
    "required": ["n", "F", "Fstar", "W", "f", "fstar"],
    "additionalProperties": False,
    "properties": {
        "n": {"type": "integer", "minimum": 1},
        "F": _DECIMAL,
        "Fstar": _DECIMAL,
        "W": _DECIMAL,
        "f": {"type": "object", "additionalProperties": _DECIMAL},
        "fstar": {"type": "object", "additionalProperties": _DECIMAL},
    },
}

PROFILE_SCHEMA = {
    "type": "object",
    "required": ["matching", "domination", "diameter", "leafCount",
                 "maxDegree", "centers", "hasPerfectMatching"],
    "additionalProperties": False,
    "properties": {
        "matching": {"type": "integer", "minimum": 0},
        "domination": {"type": "integer", "minimum": 1},
        "diameter": {"type": "integer", "minimum": 0},
        "leafCount": {"type": "integer", "minimum": 1},
        "maxDegree": {"type": "integer", "minimum": 0},
        "centers": {"type": "array", "items": {"type": "integer", "minimum": 0}},
        "hasPerfectMatching": {"type": "boolean"},
    },
}

TRANSFORM_DELTA_SCHEMA = {
    "type": "object",
    "required": ["tree", "F_before", "F_after", "Fstar_before", "Fstar_after"],
    "additionalProperties": False,
    "properties": {
        "tree": {"type": "string"},
        "F_before": _DECIMAL,
        "F_after": _DECIMAL,
        "Fstar_before": _DECIMAL,
        "Fstar_after": _DECIMAL,
    },
}

VERIFICATION_SCHEMA = {
    "type": "array",
    "items": {
        "type": "object",
        "required": ["theorem", "n", "constraint", "claimed", "achieved",
                     "extremizers", "expected", "pass", "classSize",
                     "counterexample", "notes"],
        "additionalProperties": False,
        "properties": {
            "theorem": {"type": "string"},
            "n": {"type": ["integer", "null"]},
            "constraint": {"type": "object"},
            "claimed": _DECIMAL_OR_NULL,
            "achieved": _DECIMAL_OR_NULL,
            "extremizers": {"type": "array", "items": _LEVEL_SEQ},
            "expected": {**_LEVEL_SEQ, "type": ["array", "null"]},
            "pass": {"type": "boolean"},
            "classSize": {"type": ["integer", "null"]},
            "counterexample": {"type": ["string", "null"]},
            "notes": {"type": "string"},
        },
    },
}

SCHEMAS = {
    "count": COUNT_REPORT_SCHEMA,
    "profile": PROFILE_SCHEMA,
    "transform": TRANSFORM_DELTA_SCHEMA,
    "verify": VERIFICATION_SCHEMA,
}
