from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bottwidth.instances import b5, h1, lu_gbm, surface_polytope
from bottwidth.polytope import (
    InvalidPolytope,
    LatticePolytope,
    contains,
    cyclic_vertices,
    is_delzant,
    nth_root_truncated,
    translate,
    vertices,
    volume,
    volume_upper_bound,
)
from oracles import brute_vertices, shoelace

SQUARE = LatticePolytope([(1, 0), (0, 1), (-1, 0), (0, -1)], [1, 1, 0, 0])
TRIANGLE = LatticePolytope([(-1, 0), (0, -1), (1, 2)], [0, 0, 2])  # conv{(0,0),(2,0),(0,1)}
SIMPLEX2 = LatticePolytope([(-1, 0), (0, -1), (1, 1)], [0, 0, 2])

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=7)


def points(P):
    return {v.point for v in vertices(P)}


def test_contains_examples():
    P = h1().base
    assert contains(P, (-1, -1))
    assert not contains(P, (1, 0))
    assert all(contains(P, v.point) for v in P.vertices)
    with pytest.raises(ValueError):
        contains(P, (0, 0, 0))


def test_h1_vertices_match_brute_force():
    P = h1().base
    oracle = brute_vertices(P.normals, P.offsets)
    assert points(P) == set(oracle) == {(-2, 0), (-1, -1), (0, -1), (0, 0)}
    assert {v.point: v.active_facets for v in P.vertices} == oracle


@pytest.mark.parametrize("make", [lambda: SQUARE, lambda: surface_polytope(), lambda: lu_gbm().base,
                                  lambda: b5().base])
def test_vertices_match_brute_force(make):
    P = make()
    oracle = brute_vertices(P.normals, P.offsets)
    assert {v.point: v.active_facets for v in P.vertices} == oracle


def test_vertex_counts():
    assert len(SQUARE.vertices) == 4
    assert len(lu_gbm().base.vertices) == 8


def test_vertices_sorted_and_tight():
    P = surface_polytope()
    pts = [v.point for v in P.vertices]
    assert pts == sorted(pts)
    for v in P.vertices:
        for i, (eta, k) in enumerate(zip(P.normals, P.offsets)):
            pair = sum(a * b for a, b in zip(eta, v.point))
            assert (pair == k) == (i in v.active_facets)
            assert pair <= k


@pytest.mark.parametrize("normals,offsets,reason", [
    ([(1, 0), (0, 1)], [0, 0], "unbounded"),
    ([(1, 0), (-1, 0), (0, 1), (0, -1)], [0, -1, 1, 1], "empty"),
    ([(1, 0), (-1, 0), (0, 1), (0, -1), (1, 1)], [1, 0, 1, 0, 5], "redundant inequality 4"),
    ([(2, 0), (-1, 0), (0, 1), (0, -1)], [1, 0, 1, 0], "not primitive"),
])
def test_invalid_polytopes(normals, offsets, reason):
    with pytest.raises(InvalidPolytope, match=reason):
        LatticePolytope(normals, offsets)


def test_delzant_examples():
    assert is_delzant(h1().base)
    assert is_delzant(SQUARE)
    assert not is_delzant(TRIANGLE)
    assert is_delzant(surface_polytope())


@pytest.mark.parametrize("P,vol", [(SQUARE, 1), (h1().base, F(3, 2)), (surface_polytope(), F(141, 2)),
                                   (SIMPLEX2, 2)])
def test_volume_examples(P, vol):
    assert volume(P) == vol
    assert volume(P, method="triangulation") == vol
    assert volume(P, method="lawrence") == vol


def test_volume_matches_shoelace_on_polygons():
    for P in (SQUARE, TRIANGLE, SIMPLEX2, h1().base, surface_polytope(), h1(7, 3).base):
        assert volume(P) == shoelace(list(points(P)))


def test_volume_methods_agree_in_higher_dimension():
    for P in (lu_gbm().base, b5().base):
        assert volume(P, method="lawrence") == volume(P, method="triangulation")


def test_translate_examples():
    P = h1().base
    assert translate(P, (0, 0)).offsets == P.offsets
    T = translate(P, (-1, 0))
    assert T.offsets[P.normals.index((1, 0))] == -1


@given(st.lists(rationals, min_size=2, max_size=2))
def test_translation_covariance(t):
    P = surface_polytope()
    T = translate(P, t)
    assert points(T) == {tuple(a + b for a, b in zip(p, t)) for p in points(P)}
    assert volume(T) == volume(P)


@given(st.lists(rationals, min_size=4, max_size=4))
def test_translation_invariance_4d(t):
    P = lu_gbm().base
    assert volume(translate(P, t)) == volume(P)


def test_volume_upper_bound():
    vb = volume_upper_bound(surface_polytope())
    assert vb.scaled_volume == 141
    assert str(vb.approx) == "11.874342"
    assert not vb.admits(12) and vb.admits(11)
    assert volume_upper_bound(SQUARE).scaled_volume == 2
    assert volume_upper_bound(SIMPLEX2).approx == 2


@given(st.fractions(min_value=0, max_value=1000, max_denominator=50), st.integers(1, 5))
def test_nth_root_truncated_brackets(x, n):
    r = nth_root_truncated(x, n, 4)
    lo = F(r)
    hi = lo + F(1, 10 ** 4)
    assert lo ** n <= x < hi ** n


def test_cyclic_order_is_counter_clockwise():
    cyc = cyclic_vertices(surface_polytope())
    assert len(cyc) == 9
    for a, b in zip(cyc, cyc[1:] + cyc[:1]):
        assert len(a.active_facets & b.active_facets) == 1
    area2 = sum(a.point[0] * b.point[1] - b.point[0] * a.point[1] for a, b in zip(cyc, cyc[1:] + cyc[:1]))
    assert area2 == 141


def test_edges_of_square():
    assert len(SQUARE.edges()) == 4


def test_to_dict():
    assert SQUARE.to_dict() == {"eta": [[1, 0], [0, 1], [-1, 0], [0, -1]], "kappa": ["1", "1", "0", "0"]}
