"""JSON Schemas for the machine-readable outputs."""

SYMELT = {
    "type": "object",
    "required": ["basis", "terms"],
    "additionalProperties": False,
    "properties": {
        "basis": {"enum": ["schur", "elementary", "complete", "power"]},
        "terms": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["partition", "num", "den"],
                "additionalProperties": False,
                "properties": {
                    "partition": {"type": "array", "items": {"type": "integer", "minimum": 1}},
                    "num": {"type": "string", "pattern": "^-?[0-9]+$"},
                    "den": {"type": "string", "pattern": "^[1-9][0-9]*$"},
                },
            },
        },
    },
}

SPAN = {
    "type": "object",
    "required": ["p", "degrees"],
    "properties": {
        "p": {"type": "integer", "minimum": 2},
        "degrees": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["n", "dimension", "basis"],
                "properties": {
                    "n": {"type": "integer", "minimum": 0},
                    "dimension": {"type": "integer", "minimum": 0},
                    "basis": {"type": "array", "items": SYMELT},
                },
            },
        },
    },
}

REPORT = {
    "type": "object",
    "required": ["suite", "config", "cases", "failures", "pass"],
    "properties": {
        "suite": {"type": "string"},
        "config": {"type": "object"},
        "cases": {"type": "integer", "minimum": 0},
        "failures": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["input", "expected", "got"],
                "properties": {
                    "input": {"type": "string"},
                    "expected": {"type": "string"},
                    "got": {"type": "string"},
                },
            },
        },
        "pass": {"type": "boolean"},
        "notes": {"type": "array", "items": {"type": "string"}},
    },
}
