"""JSON reading and writing for towers, polytopes, cross-polytope specs and certificates.

Rationals are always written as ``"p"`` or ``"p/q"`` strings; integers are
accepted on input, floats never are.
"""
from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .bott import BottTower, GbmPolytope, build_polytope
from .bounds import CrossPolytopeSpec
from .exact_lattice import format_rational, parse_rational
from .polytope import LatticePolytope
from .width import ChainReport, SimplexCertificate


class FormatError(ValueError):
    """Malformed input; the message names the offending field."""


def _rat(value, where: str) -> Fraction:
    if isinstance(value, float):
        raise FormatError(f"{where}: floats are not accepted, write {value!r} as a 'p/q' string")
    try:
        return parse_rational(value)
    except ValueError as exc:
        raise FormatError(f"{where}: {exc}") from None


def _int(value, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise FormatError(f"{where}: expected an integer, got {value!r}")
    return value


def _list(value, where: str) -> list:
    if not isinstance(value, list):
        raise FormatError(f"{where}: expected a list, got {type(value).__name__}")
    return value


def _field(d: dict, key: str, where: str = ""):
    if not isinstance(d, dict):
        raise FormatError(f"{where or 'document'}: expected an object")
    if key not in d:
        raise FormatError(f"missing field '{where + '.' if where else ''}{key}'")
    return d[key]


def read_json(path) -> dict:
    text = Path(path).read_text()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from None


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


def kind_of(doc) -> str:
    if isinstance(doc, dict):
        if "n" in doc:
            return "tower"
        if "eta" in doc:
            return "polytope"
        if "center" in doc:
            return "diamond"
        if "points" in doc and "lambda" in doc:
            return "certificate"
    raise FormatError("unrecognised document: expected fields 'n' (tower), 'eta' (polytope) or 'center' (diamond)")


# -- towers -----------------------------------------------------------------

def tower_from_dict(doc: dict) -> BottTower:
    n = [_int(x, f"n[{i}]") for i, x in enumerate(_list(_field(doc, "n"), "n"))]
    a = {}
    for i, entry in enumerate(_list(doc.get("a", []), "a")):
        where = f"a[{i}]"
        j = _int(_field(entry, "j", where), f"{where}.j")
        l = _int(_field(entry, "l", where), f"{where}.l")
        vec = [_int(x, f"{where}.vec[{k}]") for k, x in enumerate(_list(_field(entry, "vec", where), f"{where}.vec"))]
        if (j, l) in a:
            raise FormatError(f"{where}: duplicate twist (j={j}, l={l})")
        a[(j, l)] = tuple(vec)
    try:
        return BottTower(tuple(n), a)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def gbm_from_dict(doc: dict) -> GbmPolytope:
    tower = tower_from_dict(doc)
    lam = _field(doc, "lambda")
    if isinstance(lam, dict):
        zf = _list(_field(lam, "zero_form", "lambda"), "lambda.zero_form")
        lam = {"zero_form": [_rat(x, f"lambda.zero_form[{i}]") for i, x in enumerate(zf)]}
    else:
        lam = [_rat(x, f"lambda[{i}]") for i, x in enumerate(_list(lam, "lambda"))]
    return build_polytope(tower, lam)


def tower_to_dict(P: GbmPolytope | BottTower, zero_form: bool = False) -> dict:
    tower = P.tower if isinstance(P, GbmPolytope) else P
    doc = {"n": list(tower.n),
           "a": [{"j": j, "l": l, "vec": list(v)} for (j, l), v in tower.a.items()]}
    if isinstance(P, GbmPolytope):
        if zero_form and P.is_standard_form():
            doc["lambda"] = {"zero_form": [format_rational(P.offsets[(l, 0)]) for l in range(1, tower.m + 1)]}
        else:
            doc["lambda"] = [format_rational(x) for x in P.offset_vector()]
    return doc


# -- polytopes --------------------------------------------------------------

def polytope_from_dict(doc: dict) -> LatticePolytope:
    eta = _list(_field(doc, "eta"), "eta")
    kappa = _list(_field(doc, "kappa"), "kappa")
    if len(eta) != len(kappa):
        raise FormatError(f"eta has {len(eta)} rows but kappa has {len(kappa)} entries")
    rows = [[_int(x, f"eta[{i}][{c}]") for c, x in enumerate(_list(row, f"eta[{i}]"))] for i, row in enumerate(eta)]
    offs = [_rat(x, f"kappa[{i}]") for i, x in enumerate(kappa)]
    return LatticePolytope(rows, offs)


def polytope_to_dict(P: LatticePolytope) -> dict:
    return P.to_dict()


def load_polytope(doc: dict):
    """A :class:`GbmPolytope` for tower documents, a :class:`LatticePolytope` otherwise."""
    kind = kind_of(doc)
    if kind == "tower":
        return gbm_from_dict(doc)
    if kind == "polytope":
        return polytope_from_dict(doc)
    raise FormatError(f"expected a tower or polytope document, got a {kind}")


# -- cross-polytope specs ---------------------------------------------------

def _vec(v, where) -> tuple[Fraction, ...]:
    return tuple(_rat(x, f"{where}[{i}]") for i, x in enumerate(_list(v, where)))


def diamond_from_dict(doc: dict) -> CrossPolytopeSpec:
    center = _vec(_field(doc, "center"), "center")
    segs = []
    for i, seg in enumerate(_list(_field(doc, "segments"), "segments")):
        seg = _list(seg, f"segments[{i}]")
        if len(seg) != 2:
            raise FormatError(f"segments[{i}]: expected two endpoints")
        segs.append((_vec(seg[0], f"segments[{i}][0]"), _vec(seg[1], f"segments[{i}][1]")))
    return CrossPolytopeSpec(center, tuple(segs), _rat(_field(doc, "rho"), "rho"))


def _fmt_vec(v) -> list[str]:
    return [format_rational(x) for x in v]


def diamond_to_dict(spec: CrossPolytopeSpec) -> dict:
    return {"center": _fmt_vec(spec.center),
            "segments": [[_fmt_vec(p), _fmt_vec(q)] for p, q in spec.segments],
            "rho": format_rational(spec.rho)}


# -- certificates -----------------------------------------------------------

def _label(lab) -> str:
    return f"{lab[0]},{lab[1]}"


def _unlabel(text: str, where: str) -> tuple[int, int]:
    try:
        l, k = text.split(",")
        return int(l), int(k)
    except ValueError:
        raise FormatError(f"{where}: bad facet label {text!r}, expected 'l,k'") from None


def certificate_to_dict(cert: SimplexCertificate, chains: list[ChainReport] = ()) -> dict:
    doc = {
        "lambda": format_rational(cert.lam),
        "points": {_label(lab): _fmt_vec(v) for lab, v in cert.points.items()},
        "directions": {_label(lab): list(d) for lab, d in cert.directions.items()},
        "links": {_label(lab): (_label(x) if x else None) for lab, x in cert.links.items()},
    }
    if chains:
        doc["chains"] = [chain_to_dict(c) for c in chains]
    return doc


def certificate_from_dict(doc: dict) -> SimplexCertificate:
    lam = _rat(_field(doc, "lambda"), "lambda")
    dirs = {}
    raw = _field(doc, "directions")
    for key, d in raw.items():
        dirs[_unlabel(key, "directions")] = tuple(_int(x, f"directions[{key}]") for x in d)
    links = {_unlabel(k, "links"): (_unlabel(v, "links") if v else None) for k, v in doc.get("links", {}).items()}
    cert = SimplexCertificate(lam, dirs, links)
    if "points" in doc:
        for key, v in doc["points"].items():
            if _vec(v, f"points[{key}]") != cert.points.get(_unlabel(key, "points")):
                raise FormatError(f"points[{key}] disagrees with lambda * direction")
    return cert


def chain_to_dict(c: ChainReport) -> dict:
    return {
        "block": c.block,
        "k": c.k,
        "chain": [list(p) for p in c.chain],
        "splits": [[list(p) for p in s] for s in c.splits],
        "implied": [{"larger": i.larger, "smaller": i.smaller,
                     "values": [format_rational(i.larger_value), format_rational(i.smaller_value)],
                     "holds": i.holds} for i in c.implied],
    }
