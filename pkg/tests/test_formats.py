import re
from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bottwidth import formats
from bottwidth.bott import BottTower, build_polytope
from bottwidth.corpus import CorpusConfig, generate_corpus
from bottwidth.instances import b5, fano_diamond, h1, lu_gbm, lu_polytope, surface_polytope
from bottwidth.polytope import LatticePolytope, cyclic_vertices
from bottwidth.recognize import recognize_tower
from bottwidth.svg import render_svg
from bottwidth.width import admissible_chains, certificate, gromov_width

# -- round trips --------------------------------------------------------------


@pytest.mark.parametrize("make", [h1, b5, lu_gbm])
def test_tower_round_trip(make):
    P = make()
    for zf in (False, True):
        Q = formats.gbm_from_dict(formats.tower_to_dict(P, zero_form=zf))
        assert Q.tower.n == P.tower.n and Q.tower.a == P.tower.a
        assert Q.offset_vector() == P.offset_vector()


def test_corpus_tower_round_trip(corpus):
    for P in corpus[::10]:
        Q = formats.gbm_from_dict(formats.tower_to_dict(P))
        assert Q.offset_vector() == P.offset_vector() and Q.tower.a == P.tower.a


@pytest.mark.parametrize("make", [lu_polytope, surface_polytope])
def test_polytope_round_trip(make):
    P = make()
    Q = formats.polytope_from_dict(formats.polytope_to_dict(P))
    assert Q.normals == P.normals and Q.offsets == P.offsets


def test_diamond_round_trip():
    s = fano_diamond()
    assert formats.diamond_from_dict(formats.diamond_to_dict(s)) == s


def test_certificate_round_trip():
    P = b5()
    cert = certificate(P)
    doc = formats.certificate_to_dict(cert, [admissible_chains(P, 1, 1)])
    back = formats.certificate_from_dict(doc)
    assert back.lam == cert.lam and back.directions == cert.directions and back.points == cert.points
    doc["points"]["1,1"] = ["5", "0", "0", "0", "0", "0"]
    with pytest.raises(formats.FormatError, match="disagrees"):
        formats.certificate_from_dict(doc)


@given(st.lists(st.fractions(min_value=F(1, 7), max_value=50, max_denominator=7), min_size=2, max_size=2))
def test_zero_form_strings_round_trip(zf):
    P = build_polytope(BottTower((1, 2)), {"zero_form": zf})
    doc = formats.tower_to_dict(P, zero_form=True)
    assert all(isinstance(x, str) for x in doc["lambda"]["zero_form"])
    assert formats.gbm_from_dict(doc).offset_vector() == P.offset_vector()


# -- field diagnostics ----------------------------------------------------------


@pytest.mark.parametrize("doc,where", [
    ({"n": [1, "x"], "lambda": ["1", "1"]}, "n[1]"),
    ({"n": [1], "lambda": {"zero_form": [0.5]}}, "lambda.zero_form[0]"),
    ({"n": [1, 1], "a": [{"j": 2, "l": 1}], "lambda": ["1"] * 4}, "a[0]"),
    ({"eta": [[1, 0]], "kappa": []}, "kappa"),
    ({"eta": [[1, 0.0]], "kappa": ["1"]}, "eta[0][1]"),
    ({"foo": 1}, "unrecognised"),
])
def test_field_errors(doc, where):
    with pytest.raises(formats.FormatError, match=re.escape(where)):
        formats.load_polytope(doc)


def test_rational_strings():
    P = formats.gbm_from_dict({"n": [1], "lambda": {"zero_form": ["7/3"]}})
    assert gromov_width(P) == F(7, 3)


# -- recognition ----------------------------------------------------------------


def test_recognize_lu_polytope():
    rec = recognize_tower(lu_polytope())
    assert rec is not None and gromov_width(rec.polytope) == 1
    assert sorted(rec.polytope.tower.n) == [1, 3]


def test_recognize_rejects_non_towers():
    assert recognize_tower(surface_polytope()) is None
    assert recognize_tower(LatticePolytope([(1, 0), (0, 1), (-1, -2)], [1, 1, 1])) is None


def test_recognize_permuted_coordinates():
    # swap the two coordinates of H1 and shuffle the facets
    P = h1().base
    perm = [2, 0, 3, 1]
    Q = LatticePolytope([tuple(reversed(P.normals[i])) for i in perm], [P.offsets[i] for i in perm])
    rec = recognize_tower(Q)
    assert rec is not None and rec.polytope.tower.a == h1().tower.a
    assert gromov_width(rec.polytope) == 1


def test_recognize_corpus_bases(corpus):
    for P in corpus[::8]:
        rec = recognize_tower(P.base)
        assert rec is not None and gromov_width(rec.polytope) == gromov_width(P)


# -- svg -------------------------------------------------------------------------


def _polygon_points(text):
    (pts,) = re.findall(r'<polygon points="([^"]+)"', text)
    return pts.split()


def test_svg_h1_quadrilateral():
    P = h1().base
    text = render_svg(P)
    assert len(_polygon_points(text)) == 4
    assert {v.point for v in cyclic_vertices(P)} == {(0, 0), (-2, 0), (-1, -1), (0, -1)}
    assert text.count("<text") == 4 and render_svg(P) == text


def test_svg_surface_nonagon():
    text = render_svg(surface_polytope())
    assert len(_polygon_points(text)) == 9
    assert "eta9" in text


def test_svg_unit_square():
    sq = LatticePolytope([(1, 0), (0, 1), (-1, 0), (0, -1)], [1, 1, 0, 0])
    assert len(_polygon_points(render_svg(sq))) == 4


def test_svg_dimension_error():
    with pytest.raises(ValueError, match="SVG supports dimension 2 only"):
        render_svg(lu_polytope())


# -- corpus ----------------------------------------------------------------------


def test_corpus_shape(corpus):
    assert len(corpus) >= 200
    for P in corpus:
        t = P.tower
        assert t.m <= 5 and all(1 <= x <= 3 for x in t.n)
        assert all(abs(c) <= 3 for v in t.a.values() for c in v)


def test_corpus_is_seeded():
    cfg = CorpusConfig(size=5)
    a, b = generate_corpus(cfg), generate_corpus(cfg)
    assert [formats.tower_to_dict(P) for P in a] == [formats.tower_to_dict(P) for P in b]
