"""Command-line front end.

Exit codes: 0 success, 1 a verification came back negative, 2 invalid or
malformed input, 3 the search was incomplete (no witness under the cap, or
no rational threshold under the denominator bound).
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

from . import formats
from .bott import GbmPolytope
from .bounds import NoWitnessUnderCap, is_fano, lu_bound, lu_value_caveat, verify_cross_polytope
from .cremona import BlowupVector, ThresholdNotRational, ball_capacity
from .exact_lattice import format_rational as fr
from .intersect import check_block_intersections
from .polytope import InvalidPolytope, LatticePolytope, is_delzant, volume, volume_upper_bound
from .recognize import recognize_tower
from .svg import render_svg
from .width import admissible_chains, block_data, certificate, verify_certificate, width_witness

EXIT_OK, EXIT_NEGATIVE, EXIT_INVALID, EXIT_INCOMPLETE = 0, 1, 2, 3


class Incomplete(Exception):
    pass


def _vec(v) -> str:
    return "(" + ", ".join(fr(x) for x in v) + ")"


def _load(path):
    return formats.load_polytope(formats.read_json(path))


def _base(P) -> LatticePolytope:
    return P.base if isinstance(P, GbmPolytope) else P


def _lu_lines(P: LatticePolytope, cap: int) -> tuple[list[str], dict]:
    try:
        w = lu_bound(P, cap)
    except NoWitnessUnderCap:
        return [f"Lu bound: no witness under cap {cap}"], {"lu": None, "cap": cap}
    caveat = lu_value_caveat(P)
    return ([f"Lu bound = {fr(w.value)} (cap {cap}), witness a = {tuple(w.a)}", f"  {caveat}"],
            {"lu": fr(w.value), "lu_witness": list(w.a), "cap": cap, "lu_status": caveat})


def _volume_lines(P: LatticePolytope) -> tuple[list[str], dict]:
    vb = volume_upper_bound(P)
    return ([f"volume bound: w <= {vb.approx} (w^{vb.dim} <= {fr(vb.scaled_volume)})"],
            {"scaled_volume": fr(vb.scaled_volume), "volume_bound": str(vb.approx)})


# -- commands ---------------------------------------------------------------

def cmd_width(args):
    P = _load(args.input)
    doc: dict = {}
    lines = []
    rec = None
    if isinstance(P, LatticePolytope):
        rec = recognize_tower(P)
        gbm = rec.polytope if rec else None
    else:
        gbm = P
    if gbm is not None:
        w, l = width_witness(gbm)
        lines.append(f"w_G = {fr(w)}, witness block ℓ={l}")
        doc.update(width=fr(w), witness_block=l)
        zero = [b for b in block_data(gbm) if b.is_zero_block]
        lines.append("zero blocks: " + ", ".join(f"ℓ={b.block}: λ={fr(b.lam_sum)}" for b in zero))
        doc["zero_blocks"] = {str(b.block): fr(b.lam_sum) for b in zero}
        if rec is not None:
            blocks = [[c + 1 for c in blk] for blk in rec.blocks]
            lines.append(f"recognized as a generalized Bott tower: n={list(gbm.tower.n)}, block coordinates {blocks}")
            doc["recognized"] = formats.tower_to_dict(gbm.tower)
            doc["block_coordinates"] = blocks
    else:
        lines.append("not a generalized Bott tower: no closed-form width; bounds only")
        doc["width"] = None
        more, d = _lu_lines(P, args.cap)
        lines += more
        doc.update(d)
        more, d = _volume_lines(P)
        lines += more
        doc.update(d)
        if args.diamond:
            spec = formats.diamond_from_dict(formats.read_json(args.diamond))
            v = verify_cross_polytope(P, spec)
            lines.append(f"cross-polytope lower bound {fr(spec.rho)}: "
                         + ("verified" if v else f"rejected ({v.reason}: {v.detail})"))
            doc["diamond"] = {"rho": fr(spec.rho), "ok": v.ok, "reason": v.reason}
    return lines, doc, EXIT_OK


def cmd_certificate(args):
    P = _load(args.input)
    if not isinstance(P, GbmPolytope):
        rec = recognize_tower(P)
        if rec is None:
            raise ValueError("certificate needs a generalized Bott tower")
        P = rec.polytope
    std, shift = P.standard_form()
    cert = certificate(std)
    verdict = verify_certificate(std, cert)
    chains, notes = [], []
    t = std.tower
    for l in range(1, t.m + 1):
        if t.is_zero_block(l):
            continue
        for k in range(1, t.n[l - 1] + 1):
            try:
                chains.append(admissible_chains(std, l, k))
            except ValueError as exc:
                notes.append(f"chain ({l},{k}): {exc}")
    lines = []
    if any(shift):
        lines.append(f"translated to standard form by {_vec(shift)}")
    lines.append(f"λ = {fr(cert.lam)}")
    for lab, d in cert.directions.items():
        lines.append(f"v{lab} = {fr(cert.lam)} * {tuple(d)} = {_vec(cert.points[lab])}")
    lines.append("verified" if verdict else f"NOT verified ({verdict.reason}: {verdict.detail})")
    for c in chains:
        ineq = ", ".join(f"λ{i.larger} >= λ{i.smaller} ({fr(i.larger_value)} >= {fr(i.smaller_value)})"
                         for i in c.implied)
        lines.append(f"chain ({c.block},{c.k}): {c.chain}; splits {c.splits}; {ineq}")
    lines += notes
    doc = formats.certificate_to_dict(cert, chains)
    doc["shift"] = [fr(x) for x in shift]
    doc["verified"] = verdict.ok
    if notes:
        doc["notes"] = notes
    return lines, doc, EXIT_OK if verdict else EXIT_NEGATIVE


def cmd_lu(args):
    P = _base(_load(args.input))
    try:
        w = lu_bound(P, args.cap)
    except NoWitnessUnderCap as exc:
        raise Incomplete(f"{exc}; try a larger --cap") from None
    caveat = lu_value_caveat(P)
    lines = [f"Lu bound = {fr(w.value)} (cap {args.cap}), witness a = {tuple(w.a)}", caveat]
    return lines, {"lu": fr(w.value), "witness": list(w.a), "cap": args.cap, "status": caveat}, EXIT_OK


def cmd_verify_diamond(args):
    P = _base(_load(args.input))
    spec = formats.diamond_from_dict(formats.read_json(args.spec))
    v = verify_cross_polytope(P, spec)
    if v:
        lines = [f"verified: cross-polytope of lattice length {fr(spec.rho)} fits, so w_G >= {fr(spec.rho)}"]
    else:
        lines = [f"rejected ({v.reason}): {v.detail}"]
    return lines, {"ok": v.ok, "reason": v.reason, "detail": v.detail, "rho": fr(spec.rho)}, \
        EXIT_OK if v else EXIT_NEGATIVE


def cmd_volume(args):
    P = _base(_load(args.input))
    vol = volume(P)
    more, doc = _volume_lines(P)
    lines = [f"volume = {fr(vol)}", f"{P.dim}! * volume = {fr(vol * math.factorial(P.dim))}"] + more
    doc["volume"] = fr(vol)
    return lines, doc, EXIT_OK


def cmd_intersect_check(args):
    P = _load(args.input)
    if not isinstance(P, GbmPolytope):
        rec = recognize_tower(P)
        if rec is None:
            raise ValueError("intersect-check needs a generalized Bott tower")
        P = rec.polytope
    t = P.tower
    blocks = [args.block] if args.block else [l for l in range(1, t.m + 1) if t.is_zero_block(l)]
    lines, doc, ok = [], {"blocks": []}, True
    for l in blocks:
        rep = check_block_intersections(P, l)
        ok &= rep.ok
        first = rep.checked[0] if rep.checked else None
        status = "pass" if rep.ok else "FAIL"
        summary = f"block {l}: {status} ({len(rep.checked)} edges"
        if first:
            summary += f", omega = {fr(first.omega)}, c1 = {first.c1}"
        lines.append(summary + ")")
        edges = []
        for chk in rep.checked:
            a, b = chk.edge.endpoints
            edges.append({"from": [fr(x) for x in a.point], "to": [fr(x) for x in b.point],
                          "class": list(chk.curve.pairings), "omega": fr(chk.omega), "c1": chk.c1})
            if args.verbose:
                lines.append(f"  {_vec(a.point)} -- {_vec(b.point)}: {chk.curve.pairings}, "
                             f"omega = {fr(chk.omega)}, c1 = {chk.c1}")
        if rep.counterexample is not None:
            c = rep.counterexample
            lines.append(f"  counterexample: class {c.curve.pairings}, omega {fr(c.omega)}, c1 {c.c1}")
        doc["blocks"].append({"block": l, "ok": rep.ok, "edges": edges})
    return lines, doc, EXIT_OK if ok else EXIT_NEGATIVE


def cmd_cremona(args):
    v = BlowupVector.parse(args.vector)
    try:
        c = ball_capacity(v, args.denom)
    except ThresholdNotRational as exc:
        raise Incomplete(str(exc)) from None
    return [f"capacity = {fr(c)}"], {"vector": str(v), "capacity": fr(c), "denom": args.denom}, EXIT_OK


def cmd_svg(args):
    P = _base(_load(args.input))
    text = render_svg(P)
    if args.out:
        Path(args.out).write_text(text)
        return [f"wrote {args.out}"], {"out": args.out, "vertices": len(P.vertices)}, EXIT_OK
    sys.stdout.write(text)
    return [], None, EXIT_OK


def cmd_info(args):
    P = _load(args.input)
    base = _base(P)
    lines = [f"dimension {base.dim}, {base.num_facets} facets, {len(base.vertices)} vertices"]
    delz = is_delzant(base)
    fano = is_fano(base) if base.is_simple() else False
    lines.append(f"Delzant: {'yes' if delz else 'no'}; Fano: {'yes' if fano else 'no'}")
    doc = {"dim": base.dim, "facets": base.num_facets, "vertices": len(base.vertices),
           "delzant": delz, "fano": fano}
    if isinstance(P, GbmPolytope):
        gbm = P
    else:
        rec = recognize_tower(P)
        gbm = rec.polytope if rec else None
    if gbm is not None:
        t = gbm.tower
        lines.append(f"Bott tower n={list(t.n)}, twists {{{', '.join(f'{k}: {list(v)}' for k, v in t.a.items())}}}")
        lines.append(f"standard form: {'yes' if gbm.is_standard_form() else 'no'}")
        doc["tower"] = formats.tower_to_dict(t)
    return lines, doc, EXIT_OK


# -- driver -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cap", type=int, default=4, help="coefficient cap for the Lu search (default 4)")
    common.add_argument("--denom", type=int, default=10000, help="denominator bound for capacities (default 10000)")
    common.add_argument("--out", help="write the report (or SVG) to this path")
    common.add_argument("--json", action="store_true", help="machine-readable report")

    parser = argparse.ArgumentParser(prog="bottwidth", description="Gromov width of generalized Bott manifolds")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("width", parents=[common], help="exact width of a Bott polytope, or bounds for other polytopes")
    p.add_argument("input")
    p.add_argument("--diamond", help="cross-polytope spec to check as a lower bound")
    p.set_defaults(func=cmd_width)

    p = sub.add_parser("certificate", parents=[common], help="embedded simplex and chain report")
    p.add_argument("input")
    p.set_defaults(func=cmd_certificate)

    p = sub.add_parser("lu", parents=[common], help="integer-relation upper bound")
    p.add_argument("input")
    p.set_defaults(func=cmd_lu)

    p = sub.add_parser("verify-diamond", parents=[common], help="check a cross-polytope lower bound")
    p.add_argument("input")
    p.add_argument("spec")
    p.set_defaults(func=cmd_verify_diamond)

    p = sub.add_parser("volume", parents=[common], help="exact volume and the ball-volume bound")
    p.add_argument("input")
    p.set_defaults(func=cmd_volume)

    p = sub.add_parser("intersect-check", parents=[common], help="edge classes of zero blocks")
    p.add_argument("input")
    p.add_argument("--block", type=int)
    p.add_argument("-v", "--verbose", action="store_true")
    p.set_defaults(func=cmd_intersect_check)

    p = sub.add_parser("cremona", parents=[common], help="ball capacity of a blowup vector like '18;6,6,6,5,5,5'")
    p.add_argument("vector")
    p.set_defaults(func=cmd_cremona)

    p = sub.add_parser("svg", parents=[common], help="draw a 2-D polytope")
    p.add_argument("input")
    p.set_defaults(func=cmd_svg)

    p = sub.add_parser("info", parents=[common], help="summary of an input file")
    p.add_argument("input")
    p.set_defaults(func=cmd_info)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        lines, doc, code = args.func(args)
    except Incomplete as exc:
        print(f"incomplete: {exc}", file=sys.stderr)
        return EXIT_INCOMPLETE
    except (formats.FormatError, InvalidPolytope, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    if doc is None:
        return code
    text = json.dumps(doc, indent=2, ensure_ascii=False) + "\n" if args.json else "\n".join(lines) + "\n"
    if args.out and args.command != "svg":
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
