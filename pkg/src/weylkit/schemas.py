"""Published shapes of the CLI's JSON outputs, with a small checker.

Every top-level JSON document carries a versioned ``schema`` key. The shape
language is deliberately tiny: a spec is one of the types ``int``, ``bool``,
``str``, ``list``, ``dict``; a named shape ``"rational"``, ``"int_list"`` or
``"int_matrix"``; a literal value; a dict of field specs; ``ListOf(spec)``;
or ``OneOf(spec, ...)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class ListOf:
    item: object


@dataclass(frozen=True)
class OneOf:
    alternatives: tuple

    def __init__(self, *alternatives):
        object.__setattr__(self, "alternatives", alternatives)


_NAMED = ("rational", "int_list", "int_matrix")

DATUM = {
    "rank": int,
    "roots": "int_matrix",
    "coroots": "int_matrix",
    "simple": "int_list",
}

REPORT = {
    "schema": "weylkit/report/1",
    "matrix": "int_matrix",
    "gcm": bool,
    "finite": OneOf(bool, None),
    "type": OneOf(list, None),
    "node_maps": OneOf(list, None),
    "symmetrizer": OneOf("int_list", None),
    "positive_roots": OneOf(int, None),
    "dimension": OneOf(int, None),
    "weyl_order": OneOf(int, None),
    "weyl_order_enumerated": OneOf(int, None, "skipped"),
    "poincare": OneOf("int_list", None, "skipped"),
    "fundamental_group": OneOf("int_list", None),
    "errors": list,
}

ROOTS = {
    "schema": "weylkit/roots/1",
    "type": str,
    "roots": ListOf({"root": "int_list", "coroot": "int_list",
                     "positive": bool, "length": OneOf("short", "long")}),
}

WEYL = {
    "schema": "weylkit/weyl/1",
    "type": str,
    "order": int,
    "enumerated": OneOf(int, "skipped"),
    "longest_length": int,
    "poincare": OneOf("int_list", "skipped"),
    "reflections": int,
}

BS_WEIGHTS = {
    "schema": "weylkit/bs-weights/1",
    "type": str,
    "word": "int_list",
    "weight": "int_list",
    "entries": ListOf({"weight": "int_list", "degree": int, "mult": int}),
}

DIM = {
    "schema": "weylkit/dim/1",
    "type": str,
    "weight": "int_list",
    "value": int,
}

VOL = {
    "schema": "weylkit/vol/1",
    "type": str,
    "weight": "int_list",
    "value": "rational",
}

ISOGENIES = {
    "schema": "weylkit/isogenies/1",
    "type": str,
    "p": int,
    "isogenies": ListOf({"source": DATUM, "target": DATUM, "f": "int_matrix",
                         "u": "int_list", "q": "int_list", "p": int}),
}

ISOGENY_VALIDATION = {
    "schema": "weylkit/isogeny-validation/1",
    "valid": bool,
    "primitive": OneOf(bool, None),
    "constant": OneOf(bool, None),
    "frobenius_exponent": OneOf(int, None),
    "error": OneOf(dict, None),
}

CHEVALLEY = {
    "schema": "weylkit/chevalley/1",
    "type": str,
    "p": int,
    "passed": bool,
    "bracket_triples": ListOf({"alpha": "int_list", "beta": "int_list",
                               "sum": "int_list", "m": int}),
    "square_triples": ListOf({"alpha": "int_list", "beta": "int_list",
                              "sum": "int_list"}),
    "violations": list,
    "steinberg": ListOf({"alpha": "int_list", "beta": "int_list",
                         "down": int, "up": int, "ratio": int, "holds": bool}),
}

DATUM_DOC = {
    "schema": "weylkit/datum/1",
    "type": str,
    "kind": OneOf("adjoint", "simply-connected"),
    **DATUM,
}

SELFCHECK = {
    "schema": "weylkit/selfcheck/1",
    "type": str,
    "seed": int,
    "samples": int,
    "antisymmetry": bool,
    "equivariance": bool,
}

ERROR = {
    "schema": "weylkit/error/1",
    "error": dict,
}

BY_SCHEMA = {
    "weylkit/report/1": REPORT,
    "weylkit/roots/1": ROOTS,
    "weylkit/weyl/1": WEYL,
    "weylkit/bs-weights/1": BS_WEIGHTS,
    "weylkit/dim/1": DIM,
    "weylkit/vol/1": VOL,
    "weylkit/isogenies/1": ISOGENIES,
    "weylkit/isogeny-validation/1": ISOGENY_VALIDATION,
    "weylkit/chevalley/1": CHEVALLEY,
    "weylkit/datum/1": DATUM_DOC,
    "weylkit/selfcheck/1": SELFCHECK,
    "weylkit/error/1": ERROR,
}


class SchemaViolation(ValueError):
    pass


def _matches(value, alt) -> bool:
    if alt is None:
        return value is None
    if isinstance(alt, str) and alt not in _NAMED:
        return value == alt
    try:
        _check(value, alt, "")
        return True
    except SchemaViolation:
        return False


def _check(value, spec, path: str) -> None:
    if spec is int:
        if not isinstance(value, int) or isinstance(value, bool):
            raise SchemaViolation(f"{path}: expected int, got {value!r}")
    elif spec is bool:
        if not isinstance(value, bool):
            raise SchemaViolation(f"{path}: expected bool, got {value!r}")
    elif spec is str:
        if not isinstance(value, str):
            raise SchemaViolation(f"{path}: expected str, got {value!r}")
    elif spec is list or spec is dict:
        if not isinstance(value, spec):
            raise SchemaViolation(f"{path}: expected {spec.__name__}")
    elif spec == "rational":
        if not isinstance(value, str):
            raise SchemaViolation(f"{path}: expected p/q rational string")
        try:
            Fraction(value)
        except (ValueError, ZeroDivisionError):
            raise SchemaViolation(f"{path}: expected p/q rational string") from None
    elif spec == "int_list":
        if not isinstance(value, list) or any(
            not isinstance(x, int) or isinstance(x, bool) for x in value
        ):
            raise SchemaViolation(f"{path}: expected list of ints")
    elif spec == "int_matrix":
        if not isinstance(value, list):
            raise SchemaViolation(f"{path}: expected list of rows")
        for row in value:
            _check(row, "int_list", path)
    elif isinstance(spec, ListOf):
        if not isinstance(value, list):
            raise SchemaViolation(f"{path}: expected list")
        for k, item in enumerate(value):
            _check(item, spec.item, f"{path}[{k}]")
    elif isinstance(spec, OneOf):
        if not any(_matches(value, alt) for alt in spec.alternatives):
            raise SchemaViolation(f"{path}: matches no alternative")
    elif isinstance(spec, dict):
        if not isinstance(value, dict):
            raise SchemaViolation(f"{path}: expected object")
        for key, sub in spec.items():
            if key not in value:
                raise SchemaViolation(f"{path}.{key}: missing")
            _check(value[key], sub, f"{path}.{key}")
    elif isinstance(spec, str):
        if value != spec:
            raise SchemaViolation(f"{path}: expected literal {spec!r}, got {value!r}")
    else:
        raise SchemaViolation(f"{path}: unknown spec {spec!r}")


def validate_document(doc) -> None:
    """Check a CLI JSON document against its declared schema."""
    if not isinstance(doc, dict) or "schema" not in doc:
        raise SchemaViolation("document must be an object with a schema key")
    name = doc["schema"]
    if name not in BY_SCHEMA:
        raise SchemaViolation(f"unknown schema {name!r}")
    _check(doc, BY_SCHEMA[name], name)
