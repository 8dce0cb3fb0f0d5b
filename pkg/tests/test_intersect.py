import pytest
import sympy

from bottwidth.bott import BottTower, build_polytope
from bottwidth.instances import b5, h1
from bottwidth.intersect import (
    CurveClass,
    block_edges,
    check_block_intersections,
    divisor_rewrite,
    edge_curve_class,
    edge_ref,
    pair_omega_c1,
    pair_rewrite,
)
from bottwidth.width import width_witness


def _edge(P, p, q):
    vs = {v.point: v for v in P.base.vertices}
    return edge_ref(vs[p], vs[q])


def test_h1_edge_classes():
    P = h1()
    assert edge_curve_class(P, _edge(P, (0, 0), (0, -1))).pairings == (0, 0, 1, 1)
    assert edge_curve_class(P, _edge(P, (0, 0), (-2, 0))).pairings == (1, 1, 0, 1)
    # orientation does not matter
    assert edge_curve_class(P, _edge(P, (-2, 0), (0, 0))).pairings == (1, 1, 0, 1)


def test_product_bottom_edge():
    P = build_polytope(BottTower((1, 1)), {"zero_form": [2, 3]})
    # bottom edge lies on the (2,1) facet y = 0 and runs in x
    C = edge_curve_class(P, _edge(P, (0, 0), (-2, 0)))
    assert C.pairings == (1, 1, 0, 0)


def test_not_an_edge():
    P = h1()
    with pytest.raises(ValueError, match="not an edge"):
        _edge(P, (0, 0), (-1, -1))


def test_pairings():
    P = h1()
    assert pair_omega_c1(P, CurveClass((0, 0, 1, 1))) == (1, 2)
    assert pair_omega_c1(P, CurveClass((1, 1, 0, 1))) == (2, 3)
    assert pair_omega_c1(P, CurveClass((0, 0, 0, 0))) == (0, 0)


def test_divisor_rewrite_examples():
    P = h1()
    assert divisor_rewrite(P, 2, 0, (0, 1)) == {(2, 1): 1, (1, 0): -1}
    for s in P.tower.sequences():
        for p in (1, 2):
            coeff = divisor_rewrite(P, p, s[p - 1], s)
            assert coeff[(p, s[p - 1])] == 1 and sum(abs(c) for c in coeff.values()) == 1
    prod = build_polytope(BottTower((2, 1)), {"zero_form": [1, 1]})
    assert divisor_rewrite(prod, 2, 0, (1, 1)) == {(2, 1): 1, (1, 1): 0}


def test_divisor_rewrite_is_linear_equivalence():
    # coefficient vector minus the unit vector lies in the row space of the normal matrix
    P = b5()
    M = sympy.Matrix(P.normal_matrix())
    for s in [(0, 0, 0, 0, 0), (1, 1, 0, 1, 2), (0, 1, 1, 0, 1)]:
        for lab in P.labels:
            coeff = divisor_rewrite(P, *lab, s)
            diff = [0] * len(P.labels)
            for k, c in coeff.items():
                diff[P.index[k]] += c
            diff[P.index[lab]] -= 1
            aug = M.col_join(sympy.Matrix([diff]))
            assert aug.rank() == M.rank()


def test_block_checks():
    assert check_block_intersections(h1(), 2)
    rep = check_block_intersections(b5(), 5)
    assert rep.ok and len(rep.checked) == 48
    prod = build_polytope(BottTower((1, 2)), {"zero_form": [2, 5]})
    assert check_block_intersections(prod, 1) and check_block_intersections(prod, 2)


def test_block_check_precondition():
    with pytest.raises(ValueError, match=r"u\(1\) != 0"):
        check_block_intersections(h1(), 1)


def test_h1_block_edges():
    edges = block_edges(h1(), 2)
    assert len(edges) == 2
    assert {edge_curve_class(h1(), E).pairings for E in edges} == {(0, 0, 1, 1)}


def test_corpus_wall_relation_and_rewrite_agree(corpus):
    for P in corpus[::2]:
        for v, w in P.base.edges():
            E = edge_ref(v, w)
            C = edge_curve_class(P, E)
            # wall relation: the class is in the kernel of the normal matrix
            assert all(sum(c * P.rays[lab][r] for c, lab in zip(C.pairings, P.labels)) == 0
                       for r in range(P.dim))
            s = P.sequence_of(v)
            for lab in P.labels:
                assert pair_rewrite(P, divisor_rewrite(P, *lab, s), C) == C[P.index[lab]]


def test_corpus_zero_blocks(corpus):
    for P in corpus:
        w, l0 = width_witness(P)
        for l in range(1, P.tower.m + 1):
            if P.tower.is_zero_block(l):
                rep = check_block_intersections(P, l)
                assert rep.ok, (P, l)
                if l == l0:
                    assert rep.checked[0].omega == w
