import itertools
from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bottwidth.bott import BottTower, build_polytope
from bottwidth.bounds import (
    CrossPolytopeSpec,
    NoWitnessUnderCap,
    is_fano,
    lu_bound,
    lu_value_caveat,
    nonnegative_relations,
    verify_cross_polytope,
)
from bottwidth.instances import (
    fano_bundle,
    fano_diamond,
    h1,
    h1_corner_diamond,
    lu_gbm,
    lu_polytope,
    surface_polytope,
)
from bottwidth.polytope import LatticePolytope
from bottwidth.width import gromov_width, width_witness
from oracles import brute_lu


@pytest.mark.parametrize("P,cap,value,a", [
    (lu_polytope(), 3, 1, (0, 1, 1, 1, 0, 1)),
    (surface_polytope(), 3, 12, (1, 0, 0, 0, 0, 1, 0, 0, 0)),
    (fano_bundle(), 2, 2, (0, 0, 1, 0, 0, 1, 0, 0)),
])
def test_lu_examples(P, cap, value, a):
    w = lu_bound(P, cap)
    assert w.value == value
    assert w.a == a


@pytest.mark.parametrize("make,cap", [(lu_polytope, 2), (surface_polytope, 2), (fano_bundle, 2),
                                      (lambda: h1().base, 3), (lambda: lu_gbm().base, 2)])
def test_lu_matches_brute_force(make, cap):
    P = make()
    w = lu_bound(P, cap)
    value, a = brute_lu(P.normals, P.offsets, cap)
    assert (w.value, w.a) == (value, a)


def test_relations_enumeration_is_complete():
    P = surface_polytope()
    got = set(nonnegative_relations(P.normals, 1))
    want = {a for a in itertools.product((0, 1), repeat=9) if any(a)
            and all(sum(x * eta[c] for x, eta in zip(a, P.normals)) == 0 for c in range(2))}
    assert got == want


def test_no_witness_under_cap():
    # the only relation is eta_1 + 2 eta_2 + eta_3 = 0
    P = LatticePolytope([(1, 0), (0, 1), (-1, -2)], [1, 1, 1])
    with pytest.raises(NoWitnessUnderCap):
        lu_bound(P, 1)
    assert lu_bound(P, 2).a == (1, 2, 1)


def test_cap_must_be_positive():
    with pytest.raises(ValueError):
        lu_bound(lu_polytope(), 0)


def test_lu_nonincreasing_in_cap():
    P = surface_polytope()
    vals = [lu_bound(P, c).value for c in (1, 2, 3)]
    assert vals == sorted(vals, reverse=True)


def test_witness_is_a_relation():
    for P in (lu_polytope(), surface_polytope(), fano_bundle(3)):
        w = lu_bound(P, 2)
        assert all(sum(a * eta[c] for a, eta in zip(w.a, P.normals)) == 0 for c in range(P.dim))
        assert w.value == sum(a * k for a, k in zip(w.a, P.offsets))


def test_fano_detection():
    assert is_fano(fano_bundle())
    assert is_fano(h1().base)
    assert not is_fano(surface_polytope())
    # eta_1 + eta_5 = 2 eta_6 is a degree-zero primitive relation
    assert not is_fano(lu_polytope())
    assert lu_value_caveat(surface_polytope()) == "conjectural upper bound (non-Fano)"
    assert lu_value_caveat(fano_bundle()) == "upper bound (Fano)"


def test_lu_equals_width_on_bott_examples():
    assert lu_bound(lu_polytope(), 3).value == gromov_width(lu_gbm()) == 1


def test_corpus_lu_below_zero_block_width(corpus):
    for P in corpus:
        w, _ = width_witness(P)
        assert lu_bound(P.base, 1).value <= w


def test_fano_diamond():
    assert verify_cross_polytope(fano_bundle(), fano_diamond())


def test_h1_corner_diamond():
    assert verify_cross_polytope(h1().base, h1_corner_diamond())
    big = CrossPolytopeSpec.from_values((0, 0), [((0, 0), (-3, 0)), ((0, 0), (0, -3))], 3)
    v = verify_cross_polytope(h1().base, big)
    assert not v and v.reason == "containment"


def test_diamond_rejections():
    P = fano_bundle()
    s = fano_diamond()
    off_center = CrossPolytopeSpec(((F(-1), F(0), F(1, 2))), s.segments, s.rho)
    assert verify_cross_polytope(P, off_center).reason == "center"
    wrong_rho = CrossPolytopeSpec(s.center, s.segments, F(1))
    assert verify_cross_polytope(P, wrong_rho).reason == "length"
    skew = CrossPolytopeSpec.from_values(
        (0, 0), [((-1, -1), (1, 1)), ((-1, 1), (1, -1))], 2)
    square = LatticePolytope([(1, 0), (0, 1), (-1, 0), (0, -1)], [2, 2, 2, 2])
    assert verify_cross_polytope(square, skew).reason == "basis"


@given(st.fractions(min_value=F(1, 4), max_value=F(3, 2), max_denominator=8))
def test_diamond_never_exceeds_width(rho):
    # cross-polytopes through the corner of H1 with lattice length rho fit iff rho <= width
    P = h1()
    spec = CrossPolytopeSpec.from_values((0, 0), [((0, 0), (-rho, 0)), ((0, 0), (0, -rho))], rho)
    if verify_cross_polytope(P.base, spec):
        assert rho <= gromov_width(P)


def test_product_lu_equals_width():
    P = build_polytope(BottTower((1, 2)), {"zero_form": [3, 5]})
    assert lu_bound(P.base, 1).value == gromov_width(P) == 3
