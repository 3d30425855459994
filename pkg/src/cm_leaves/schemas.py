"""JSON Schemas (draft 2020-12) for the documents printed by the command line."""

RATIONAL = {"type": "string", "pattern": r"^-?\d+(/[1-9]\d*)?$"}
PARTITION = {"type": "string", "pattern": r"^(\d+(,\d+)*)?$"}
INT_VECTOR = {"type": "array", "items": {"type": "integer"}}
NAT_VECTOR = {"type": "array", "items": {"type": "integer", "minimum": 0}}
RAT_VECTOR = {"type": "array", "items": RATIONAL}
RESIDUES = {"type": "array", "items": {"type": "integer", "minimum": 0}, "uniqueItems": True}
ELL = {"type": "integer", "minimum": 1}


def _object(properties: dict) -> dict:
    return {
        "type": "object",
        "properties": properties,
        "required": sorted(properties),
        "additionalProperties": False,
    }


NORMALIZATION = _object({
    "a": RATIONAL,
    "k": RAT_VECTOR,
    "degenerate": {"enum": [None, "point", "rank-one"]},
    "up_to_permutation": {"const": True},
})

LEAF = _object({
    "id": {"type": "integer", "minimum": 0},
    "core": PARTITION,
    "r": {"type": "integer", "minimum": 0},
    "dim": {"type": "integer", "minimum": 0},
    "d_std": NAT_VECTOR,
    "d_orig": INT_VECTOR,
    "normalization": NORMALIZATION,
    "covers": {"type": "array", "items": {"type": "integer", "minimum": 0}},
})

SCHEMAS = {
    "leaves": _object({
        "l": ELL,
        "n": {"type": "integer", "minimum": 0},
        "a": RATIONAL,
        "k": RAT_VECTOR,
        "theta": RAT_VECTOR,
        "theta_std": RAT_VECTOR,
        "J": RESIDUES,
        "word": INT_VECTOR,
        "core": PARTITION,
        "open_leaf": {"type": "integer", "minimum": 0},
        "leaves": {"type": "array", "items": LEAF, "minItems": 1},
        "edges": {
            "type": "array",
            "items": {"type": "array", "items": {"type": "integer"}, "minItems": 2, "maxItems": 2},
        },
    }),
    "core": _object({
        "core": PARTITION,
        "r": {"type": "integer", "minimum": 0},
        "residues": NAT_VECTOR,
    }),
    "jcore": _object({
        "partition": PARTITION,
        "J": RESIDUES,
        "jcore": PARTITION,
        "removed": NAT_VECTOR,
        "dim_reg": NAT_VECTOR,
    }),
    "residues": _object({
        "partition": PARTITION,
        "l": {"oneOf": [ELL, {"const": "inf"}]},
        "residues": {"oneOf": [
            NAT_VECTOR,
            {"type": "object", "additionalProperties": {"type": "integer", "minimum": 1}},
        ]},
    }),
    "decompose": _object({
        "l": ELL,
        "d": INT_VECTOR,
        "core": PARTITION,
        "r": {"type": "integer"},
        "word": INT_VECTOR,
    }),
    "standardize": _object({
        "l": ELL,
        "d": INT_VECTOR,
        "theta": RAT_VECTOR,
        "d_std": INT_VECTOR,
        "theta_std": RAT_VECTOR,
        "word": INT_VECTOR,
        "J": RESIDUES,
        "core": PARTITION,
        "r": {"type": "integer"},
    }),
    "verify-rep": _object({
        "l": ELL,
        "partition": PARTITION,
        "theta": RAT_VECTOR,
        "dims": NAT_VECTOR,
        "hooks": {"type": "array", "items": _object({
            "arm": {"type": "integer", "minimum": 0},
            "leg": {"type": "integer", "minimum": 0},
            "beta": RATIONAL,
        })},
        "moment_defect": {"type": "array", "items": _object({
            "vertex": {"type": "integer", "minimum": 0},
            "zero": {"type": "boolean"},
            "max_abs": RATIONAL,
        })},
        "moment_exact": {"type": "boolean"},
        "J": RESIDUES,
        "standard": {"type": "boolean"},
        "simple": {"type": ["boolean", "null"]},
        "witness": {"oneOf": [
            {"type": "null"},
            _object({
                "kind": {"enum": ["sub", "quotient"]},
                "vertex": {"type": "integer", "minimum": 0},
                "vector": RAT_VECTOR,
            }),
        ]},
    }),
    "fixed-points": _object({
        "l": ELL,
        "n": {"type": "integer", "minimum": 0},
        "theta": RAT_VECTOR,
        "J": RESIDUES,
        "core": PARTITION,
        "r": {"type": "integer"},
        "count": {"type": "integer", "minimum": 0},
        "fixed_points": {"type": "array", "items": _object({
            "jcore": PARTITION,
            "dim_reg": NAT_VECTOR,
        })},
    }),
}

ERROR = _object({
    "error": {"enum": ["usage", "domain"]},
    "message": {"type": "string"},
})
