"""Command-line front end.

Subcommands mirror the library modules; all output is deterministic JSON
(sorted keys, no timestamps) unless ``--format text`` asks for tables.
Words are passed and printed 1-based on the command line; weight vectors
are read in coroot coordinates (the fundamental-weight basis) unless
``--basis root`` converts them through the Cartan matrix.

Exit codes for ``classify``: 0 finite type, 2 valid Cartan matrix but not
finite, 3 not a generalized Cartan matrix, 4 unreadable input. Other
subcommands exit 0 on success and 1 with a machine-readable error object.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import re
import sys
from fractions import Fraction

from . import cartan, chevalley, isogeny, pushforward, rootdata, roots, weyl
from .characters import (CharacterError, EulerData,
                         shifted_euler_characteristic, volume, weyl_dim)

DEFAULT_CAP = weyl.DEFAULT_CAP

# let values like "-2,1" pass as option arguments rather than flags
_NEGATIVE_VECTOR = re.compile(r"^-\d+(,-?\d+)*$")


class ParseError(ValueError):
    code = "ParseError"


def _emit(doc: dict, fmt: str = "json") -> None:
    if fmt == "text":
        sys.stdout.write(_render_text(doc))
    else:
        sys.stdout.write(json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n")


def _render_text(doc: dict, indent: str = "") -> str:
    lines = []
    for key in sorted(doc):
        value = doc[key]
        if isinstance(value, list) and value and all(isinstance(x, dict) for x in value):
            lines.append(f"{indent}{key}:")
            cols = sorted({k for item in value for k in item})
            rows = [[_cell(item.get(c)) for c in cols] for item in value]
            widths = [max(len(c), *(len(r[i]) for r in rows)) for i, c in enumerate(cols)]
            lines.append(indent + "  " + "  ".join(c.ljust(w) for c, w in zip(cols, widths)))
            for r in rows:
                lines.append(indent + "  " + "  ".join(x.ljust(w) for x, w in zip(r, widths)))
        elif isinstance(value, dict):
            lines.append(f"{indent}{key}:")
            lines.append(_render_text(value, indent + "  ").rstrip("\n"))
        else:
            lines.append(f"{indent}{key}: {_cell(value)}")
    return "\n".join(lines) + "\n"


def _cell(value) -> str:
    if isinstance(value, (list, tuple)):
        return json.dumps(value, separators=(",", ":"))
    return str(value)


def _error_doc(exc: Exception) -> dict:
    payload = getattr(exc, "to_json", None)
    if callable(payload):
        err = payload()
    else:
        err = {"code": getattr(exc, "code", type(exc).__name__), "message": str(exc)}
    return {"schema": "weylkit/error/1", "error": err}


def _parse_ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip() != ""]
    except ValueError:
        raise ParseError(f"expected comma-separated integers, got {text!r}") from None


def _parse_word(text: str, rank: int) -> tuple[int, ...]:
    letters = _parse_ints(text) if text else []
    word = []
    for x in letters:
        if not 1 <= x <= rank:
            raise weyl.IndexOutOfRange(x, rank)
        word.append(x - 1)
    return tuple(word)


def _parse_weight(text: str, gcm: cartan.GCM, basis: str) -> tuple[int, ...]:
    coords = _parse_ints(text)
    if len(coords) != gcm.n:
        raise ParseError(f"weight must have {gcm.n} coordinates")
    if basis == "root":
        return tuple(
            sum(a * gcm.entries[k][j] for k, a in enumerate(coords))
            for j in range(gcm.n)
        )
    return tuple(coords)


def _type_gcm(label: str) -> cartan.GCM:
    return cartan.parse_type(label)


# ---------------------------------------------------------------------------
# classify
# ---------------------------------------------------------------------------

def _cmd_classify(args) -> int:
    try:
        if args.input and args.input != "-":
            with open(args.input, "r", encoding="utf-8") as fh:
                payload = json.load(fh)
        else:
            payload = json.load(sys.stdin)
        matrix = payload["matrix"]
        if not isinstance(matrix, list):
            raise KeyError("matrix")
    except (OSError, json.JSONDecodeError, KeyError, TypeError) as exc:
        _emit({"schema": "weylkit/error/1",
               "error": {"code": "ParseError", "message": str(exc)}}, args.format)
        return 4
    if args.transpose:
        matrix = [list(row) for row in zip(*matrix)]

    report = {
        "schema": "weylkit/report/1",
        "matrix": matrix,
        "gcm": False,
        "finite": None,
        "type": None,
        "node_maps": None,
        "symmetrizer": None,
        "positive_roots": None,
        "dimension": None,
        "weyl_order": None,
        "weyl_order_enumerated": None,
        "poincare": None,
        "fundamental_group": None,
        "errors": [],
    }
    try:
        gcm = cartan.validate_gcm(matrix)
    except cartan.GCMError as exc:
        report["errors"].append(exc.to_json())
        _emit(report, args.format)
        return 3
    report["gcm"] = True
    if not cartan.is_finite_type(gcm):
        report["finite"] = False
        _emit(report, args.format)
        return 2
    report["finite"] = True
    dtype = cartan.classify(gcm)
    report["type"] = [[f, r] for f, r, _ in dtype.components]
    report["node_maps"] = [list(nodes) for _, _, nodes in dtype.components]
    report["symmetrizer"] = list(cartan.symmetrizer(gcm).d)
    rs = roots.generate_roots(gcm)
    report["positive_roots"] = rs.num_positive
    report["dimension"] = rs.num_positive
    order = weyl.weyl_order(dtype)
    report["weyl_order"] = order
    cap = args.cap
    if order <= cap:
        group = weyl.enumerate_weyl(rs, cap=cap)
        report["weyl_order_enumerated"] = group.order
        report["poincare"] = weyl.poincare_polynomial(group)
    else:
        report["weyl_order_enumerated"] = "skipped"
        report["poincare"] = "skipped"
    report["fundamental_group"] = list(rootdata.fundamental_group(gcm))
    _emit(report, args.format)
    return 0


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def _cmd_roots(args) -> int:
    rs = roots.generate_roots(_type_gcm(args.type))
    doc = {
        "schema": "weylkit/roots/1",
        "type": args.type,
        "roots": [
            {"root": list(r.coords), "coroot": list(r.coroot),
             "positive": r.positive, "length": r.length_class}
            for r in rs.roots
        ],
    }
    _emit(doc, args.format)
    return 0


def _cmd_weyl(args) -> int:
    gcm = _type_gcm(args.type)
    rs = roots.generate_roots(gcm)
    dtype = cartan.classify(gcm)
    order = weyl.weyl_order(dtype)
    doc = {
        "schema": "weylkit/weyl/1",
        "type": args.type,
        "order": order,
        "longest_length": rs.num_positive,
        "reflections": rs.num_positive,
    }
    if order <= args.cap:
        group = weyl.enumerate_weyl(rs, cap=args.cap)
        doc["enumerated"] = group.order
        doc["poincare"] = weyl.poincare_polynomial(group)
    else:
        doc["enumerated"] = "skipped"
        doc["poincare"] = "skipped"
    _emit(doc, args.format)
    return 0


def _cmd_bs_weights(args) -> int:
    gcm = _type_gcm(args.type)
    rs = roots.generate_roots(gcm)
    word = _parse_word(args.word, rs.rank)
    weight = _parse_weight(args.weight, gcm, args.basis)
    gw = pushforward.pushforward_word(rs, word, weight)
    doc = {
        "schema": "weylkit/bs-weights/1",
        "type": args.type,
        "word": [i + 1 for i in word],
        "weight": list(weight),
        "entries": [
            {"weight": list(w), "degree": d, "mult": m}
            for w, d, m in pushforward.sorted_entries(gw)
        ],
    }
    _emit(doc, args.format)
    return 0


def _cmd_dim(args) -> int:
    gcm = _type_gcm(args.type)
    rs = roots.generate_roots(gcm)
    weight = _parse_weight(args.weight, gcm, args.basis)
    value = weyl_dim(EulerData.from_root_system(rs), weight)
    _emit({"schema": "weylkit/dim/1", "type": args.type,
           "weight": list(weight), "value": value}, args.format)
    return 0


def _cmd_vol(args) -> int:
    gcm = _type_gcm(args.type)
    rs = roots.generate_roots(gcm)
    weight = _parse_weight(args.weight, gcm, args.basis)
    value = volume(EulerData.from_root_system(rs), weight)
    _emit({"schema": "weylkit/vol/1", "type": args.type,
           "weight": list(weight), "value": str(value)}, args.format)
    return 0


def _cmd_isogeny(args) -> int:
    if args.action == "enumerate":
        gcm = _type_gcm(args.type)
        dtype = cartan.classify(gcm)
        morphisms = isogeny.enumerate_special_for_type(dtype, args.p)
        doc = {
            "schema": "weylkit/isogenies/1",
            "type": args.type,
            "p": args.p,
            "isogenies": [m.to_json() for m in morphisms],
        }
        _emit(doc, args.format)
        return 0
    with open(args.file, "r", encoding="utf-8") as fh:
        payload = json.load(fh)
    phi = _pmorphism_from_json(payload)
    doc = {"schema": "weylkit/isogeny-validation/1", "valid": False,
           "primitive": None, "constant": None,
           "frobenius_exponent": None, "error": None}
    try:
        isogeny.validate_pmorphism(phi)
    except isogeny.IsogenyError as exc:
        doc["error"] = exc.to_json()
        _emit(doc, args.format)
        return 1
    doc["valid"] = True
    doc["primitive"] = isogeny.is_primitive(phi)
    doc["constant"] = isogeny.is_constant(phi)
    doc["frobenius_exponent"] = isogeny.factor_primitive_constant(phi)[1]
    _emit(doc, args.format)
    return 0


def _pmorphism_from_json(payload: dict) -> isogeny.PMorphism:
    def datum(doc):
        return rootdata.PinnedRootDatum(
            rank=doc["rank"],
            roots=tuple(tuple(r) for r in doc["roots"]),
            coroots=tuple(tuple(c) for c in doc["coroots"]),
            simples=tuple(doc["simple"]),
        )

    try:
        return isogeny.PMorphism(
            source=datum(payload["source"]),
            target=datum(payload["target"]),
            f=tuple(tuple(r) for r in payload["f"]),
            u=tuple(payload["u"]),
            q=tuple(payload["q"]),
            p=payload["p"],
        )
    except (KeyError, TypeError) as exc:
        raise ParseError(f"bad p-morphism document: {exc}") from None


def _cmd_chevalley(args) -> int:
    gcm = _type_gcm(args.type)
    rs = roots.generate_roots(gcm)
    report = chevalley.short_root_ideal_check(rs, args.p)
    steinberg = []
    for a in rs.roots:
        if a.length != 1:
            continue
        for b in rs.roots:
            try:
                rep = chevalley.steinberg_check(rs, a.coords, b.coords)
            except chevalley.HypothesesNotMet:
                continue
            steinberg.append({
                "alpha": list(rep.alpha), "beta": list(rep.beta),
                "down": rep.down, "up": rep.up,
                "ratio": rep.length_ratio, "holds": rep.holds,
            })
    doc = {
        "schema": "weylkit/chevalley/1",
        "type": args.type,
        "p": args.p,
        "passed": report.passed,
        "bracket_triples": [
            {"alpha": list(a), "beta": list(b), "sum": list(s), "m": m}
            for a, b, s, m in report.bracket_triples
        ],
        "square_triples": [
            {"alpha": list(a), "beta": list(b), "sum": list(s)}
            for a, b, s in report.square_triples
        ],
        "violations": [
            {"kind": v[0], "alpha": list(v[1]), "beta": list(v[2]), "sum": list(v[3])}
            for v in report.violations
        ],
        "steinberg": steinberg,
    }
    _emit(doc, args.format)
    return 0


def _cmd_datum(args) -> int:
    gcm = _type_gcm(args.type)
    if args.kind == "adjoint":
        datum = rootdata.adjoint_datum(gcm)
        kind = "adjoint"
    else:
        datum = rootdata.simply_connected_datum(gcm)
        kind = "simply-connected"
    doc = {"schema": "weylkit/datum/1", "type": args.type, "kind": kind}
    doc.update(datum.to_json())
    _emit(doc, args.format)
    return 0


def _cmd_selfcheck(args) -> int:
    gcm = _type_gcm(args.type)
    rs = roots.generate_roots(gcm)
    ed = EulerData.from_root_system(rs)
    rng = random.Random(args.seed)
    anti = True
    equi = True
    for _ in range(args.samples):
        d = tuple(rng.randint(-6, 6) for _ in range(rs.rank))
        for i in range(rs.rank):
            if shifted_euler_characteristic(ed, weyl.reflect(rs, i, d)) != \
                    -shifted_euler_characteristic(ed, d):
                anti = False
        word = [rng.randrange(rs.rank) for _ in range(rng.randint(0, 8))]
        w = weyl.element_from_word(rs, word)
        if volume(ed, w.act_weight(d)) != Fraction(w.det()) * volume(ed, d):
            equi = False
    doc = {
        "schema": "weylkit/selfcheck/1",
        "type": args.type,
        "seed": args.seed,
        "samples": args.samples,
        "antisymmetry": anti,
        "equivariance": equi,
    }
    _emit(doc, args.format)
    return 0 if anti and equi else 1


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self._negative_number_matcher = _NEGATIVE_VECTOR


def _build_parser() -> argparse.ArgumentParser:
    cap_default = int(os.environ.get("WEYLKIT_WEYL_CAP", DEFAULT_CAP))
    top = _Parser(
        prog="weylkit",
        description="Exact root-system, Weyl-group and root-datum computations",
    )
    sub = top.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, type_arg=True):
        p.add_argument("--format", choices=("json", "text"), default="json")
        if type_arg:
            p.add_argument("--type", required=True,
                           help="catalog type label, e.g. G2 or A1+A1")

    p = sub.add_parser("classify", help="validate and classify a Cartan matrix")
    p.add_argument("input", nargs="?", default="-",
                   help="path to {\"matrix\": [[...]]} JSON, or - for stdin")
    p.add_argument("--transpose", action="store_true",
                   help="transpose the input (for the opposite pairing convention)")
    p.add_argument("--cap", type=int, default=cap_default)
    common(p, type_arg=False)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("roots", help="list roots with coroots and lengths")
    common(p)
    p.set_defaults(func=_cmd_roots)

    p = sub.add_parser("weyl", help="Weyl group order, histogram, longest length")
    common(p)
    p.add_argument("--cap", type=int, default=cap_default)
    p.set_defaults(func=_cmd_weyl)

    p = sub.add_parser("bs-weights", help="push a weight down a word")
    common(p)
    p.add_argument("--word", required=True, help="1-based letters, e.g. 1,2,1")
    p.add_argument("--weight", required=True, help="coroot coordinates, e.g. -2,1")
    p.add_argument("--basis", choices=("coroot", "root"), default="coroot")
    p.set_defaults(func=_cmd_bs_weights)

    p = sub.add_parser("dim", help="Weyl dimension of a dominant weight")
    common(p)
    p.add_argument("--weight", required=True)
    p.add_argument("--basis", choices=("coroot", "root"), default="coroot")
    p.set_defaults(func=_cmd_dim)

    p = sub.add_parser("vol", help="volume polynomial value")
    common(p)
    p.add_argument("--weight", required=True)
    p.add_argument("--basis", choices=("coroot", "root"), default="coroot")
    p.set_defaults(func=_cmd_vol)

    p = sub.add_parser("isogeny", help="special isogenies and validation")
    act = p.add_subparsers(dest="action", required=True)
    pe = act.add_parser("enumerate")
    common(pe)
    pe.add_argument("--p", type=int, required=True)
    pe.set_defaults(func=_cmd_isogeny, action="enumerate")
    pv = act.add_parser("validate")
    pv.add_argument("--file", required=True)
    pv.add_argument("--format", choices=("json", "text"), default="json")
    pv.set_defaults(func=_cmd_isogeny, action="validate")

    p = sub.add_parser("chevalley", help="structure-constant and ideal checks")
    act = p.add_subparsers(dest="action", required=True)
    pc = act.add_parser("check")
    common(pc)
    pc.add_argument("--p", type=int, required=True)
    pc.set_defaults(func=_cmd_chevalley)

    p = sub.add_parser("datum", help="pinned root datum of a catalog type")
    common(p)
    p.add_argument("--kind", choices=("adjoint", "sc"), default="adjoint")
    p.set_defaults(func=_cmd_datum)

    p = sub.add_parser("selfcheck", help="sampled reflection/volume identities")
    common(p)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=100)
    p.set_defaults(func=_cmd_selfcheck)

    return top


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        _emit(_error_doc(exc), getattr(args, "format", "json"))
        return 4 if args.command == "classify" else 1
    except (cartan.GCMError, roots.RootsError, weyl.WeylError,
            pushforward.PushforwardError, chevalley.ChevalleyError,
            isogeny.IsogenyError, rootdata.RootDatumError,
            CharacterError) as exc:
        _emit(_error_doc(exc), getattr(args, "format", "json"))
        return 1


if __name__ == "__main__":
    sys.exit(main())
