"""Recompute the headline values for the worked examples and print a table."""
import argparse

from bottwidth.bounds import lu_bound, lu_value_caveat, verify_cross_polytope
from bottwidth.cremona import BlowupVector, ball_capacity
from bottwidth.exact_lattice import format_rational as fr
from bottwidth.instances import SURFACE_BLOWUP, b5, fano_bundle, fano_diamond, h1, lu_gbm, surface_polytope
from bottwidth.polytope import volume, volume_upper_bound
from bottwidth.width import certificate, verify_certificate, width_witness


def rows(cap: int):
    for name, P in (("Lu tower", lu_gbm()), ("H1(2,1)", h1()), ("B5", b5())):
        w, l = width_witness(P)
        S, _ = P.standard_form()
        ok = bool(verify_certificate(S, certificate(S)))
        yield name, "width", f"{fr(w)} (block {l}, certificate {'ok' if ok else 'FAILED'})"
    yield "Lu tower", "lu", fr(lu_bound(lu_gbm().base, cap).value)
    S = surface_polytope()
    yield "surface", "lu", f"{fr(lu_bound(S, cap).value)} [{lu_value_caveat(S)}]"
    yield "surface", "area", fr(volume(S))
    yield "surface", "volume bound", str(volume_upper_bound(S).approx)
    yield "surface", "ball capacity", fr(ball_capacity(BlowupVector.parse(SURFACE_BLOWUP)))
    Fb = fano_bundle()
    yield "Fano bundle", "lu", f"{fr(lu_bound(Fb, min(cap, 2)).value)} [{lu_value_caveat(Fb)}]"
    yield "Fano bundle", "cross-polytope 2", "fits" if verify_cross_polytope(Fb, fano_diamond()) else "rejected"


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--cap", type=int, default=3)
    args = ap.parse_args()
    for name, what, value in rows(args.cap):
        print(f"{name:<12} {what:<18} {value}")


if __name__ == "__main__":
    main()
