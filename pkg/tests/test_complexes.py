from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from homchord import (alexander_dual, build_complex, clique_complex, cone, delete, extended_link,
                      induced, join, link, missing_faces, skeleton, star)
from homchord.complexes import RelativeComplex, boundary_of_face, void_complex
from homchord.corpus import jk, octahedron, rp2_6, simplex
from homchord.errors import FaceError

import oracles
from conftest import cx_of

C4 = cx_of(["12", "23", "34", "41"], labels="1234")


def facets(cx):
    return {"".join(f) for f in cx.facet_list()}


def test_build_simplex_and_square():
    tri = cx_of(["abc"])
    assert len(tri.faces) == 8 and tri.dim == 2
    assert C4.dim == 1 and C4.f_vector() == [4, 4]


def test_non_maximal_facet_dropped():
    cx = cx_of(["ab", "abc"])
    assert facets(cx) == {"abc"}


def test_void_and_empty_face_complex_differ():
    v = void_complex("ab")
    e = build_complex("ab", [[]])
    assert v.is_void and v.dim == -2 and not v.faces
    assert not e.is_void and e.dim == -1 and e.faces == {0}


def test_duplicate_and_unknown_labels_rejected():
    with pytest.raises(ValueError):
        build_complex("aa", [["a"]])
    with pytest.raises(FaceError):
        build_complex("ab", [["c"]])


def test_faces_of_dim():
    assert len(cx_of(["abc"]).faces_of_dim(1)) == 3
    assert C4.faces_of_dim(2) == []
    assert len(octahedron().faces_of_dim(2)) == 8


def test_skeleton():
    k4 = skeleton(simplex(3), 1)
    assert k4.f_vector() == [4, 6] and k4.dim == 1
    assert skeleton(C4, 1) == C4
    sk = skeleton(jk(2), 2)
    assert len(sk.faces_of_dim(2)) == 18 == 20 - 2


def test_induced():
    path = induced(C4, C4.face("123"))
    assert facets(path) == {"12", "23"}
    assert induced(C4, C4.vertex_mask) == C4
    rp = rp2_6()
    for v in rp.vertices:
        mob = induced(rp, rp.vertex_mask & ~(1 << v))
        # five of the ten triangles contain v; the rest form a Möbius band
        assert len(mob.faces_of_dim(2)) == 5
        assert mob == delete(rp, 1 << v)


def test_delete():
    tri = cx_of(["abc"])
    assert delete(tri, tri.face("abc")) == boundary_of_face(tri.labels, tri.face("abc"))
    assert facets(delete(C4, C4.face("1"))) == {"23", "34"}
    cx = delete(C4, C4.face("12"))
    assert C4.face("12") not in cx


def test_star_link_extended_link():
    cs = cone(C4, "v")
    v = cs.face("v")
    sq = facets(link(cs, v))
    assert sq == {"12", "23", "34", "14"}
    assert facets(extended_link(cs, v)) == sq
    tri = cx_of(["abc"])
    assert facets(extended_link(tri, tri.face("ab"))) == {"ac", "bc"}
    assert link(C4, 0) == C4
    assert star(C4, C4.face("1")) == cx_of(["12", "41"], labels="1234")


def test_join():
    pt = build_complex("v", [["v"]])
    assert join(pt, C4) == cone(C4, "v")
    j = jk(2)
    assert len(j.facets) == 9 and j.f_vector() == [6, 15, 18, 9]
    empty = build_complex([], [[]])
    assert join(empty, C4) == C4
    with pytest.raises(ValueError):
        join(C4, C4)


def test_clique_complex():
    assert clique_complex(C4, 1) == C4
    assert clique_complex(skeleton(simplex(3), 1), 1) == simplex(3)
    assert clique_complex(octahedron(), 2) == octahedron()


def test_missing_faces():
    assert {"".join(C4.face_labels(m)) for m in missing_faces(C4)} == {"13", "24"}
    mf = missing_faces(rp2_6())
    assert len(mf) == 10 and {m.bit_count() for m in mf} == {3}
    j = jk(2)
    assert missing_faces(j) == [7, 56]


def test_alexander_dual():
    bd = boundary_of_face("abc", 0b111)
    assert alexander_dual(bd).faces == {0}
    assert facets(alexander_dual(C4)) == {"13", "24"}
    for cx in (C4, bd, rp2_6(), octahedron()):
        assert alexander_dual(alexander_dual(cx)) == cx


def test_relative_complex_validates():
    edge = build_complex("abc", [["a", "b"]])
    tri = build_complex("abc", [["a", "b", "c"]])
    with pytest.raises(ValueError):
        RelativeComplex(edge, tri)
    rel = RelativeComplex(tri, edge)
    assert rel.faces_of_dim(1) == [tri.face("ac"), tri.face("bc")]
    assert tri.face("ab") not in rel


# -- properties against the frozenset oracle ----------------------------------------

facet_lists = st.lists(st.sets(st.integers(0, 6), min_size=1, max_size=4), min_size=1, max_size=7)


def _cx(fs):
    labels = [str(i) for i in range(7)]
    return build_complex(labels, [[str(v) for v in f] for f in fs])


@settings(max_examples=80, deadline=None)
@given(facet_lists)
def test_faces_are_downward_closure(fs):
    cx = _cx(fs)
    assert oracles.faces_of(cx) == oracles.closure([{str(v) for v in f} for f in fs])
    assert all(not (a != b and a & b == a) for a in cx.facets for b in cx.facets)


@settings(max_examples=60, deadline=None)
@given(facet_lists, st.integers(1, 3))
def test_clique_complex_matches_oracle(fs, k):
    cx = _cx(fs)
    want = oracles.clique(oracles.faces_of(cx), k)
    assert oracles.faces_of(clique_complex(cx, k)) == want


@settings(max_examples=60, deadline=None)
@given(facet_lists)
def test_missing_faces_are_minimal_nonfaces(fs):
    cx = _cx(fs)
    faces = oracles.faces_of(cx)
    verts = sorted(oracles.vertex_set(faces))
    want = set()
    for r in range(1, len(verts) + 1):
        for s in combinations(verts, r):
            s = frozenset(s)
            if s not in faces and all(s - {x} in faces for x in s):
                want.add(s)
    got = {frozenset(cx.face_labels(m)) for m in missing_faces(cx)}
    assert got == want


@settings(max_examples=60, deadline=None)
@given(facet_lists)
def test_extended_link_is_boundary_join_link(fs):
    cx = _cx(fs)
    faces = oracles.faces_of(cx)
    for sigma in sorted(cx.faces):
        if not sigma:
            continue
        s = frozenset(cx.face_labels(sigma))
        want = {f for f in faces if (f | s) in faces and not s <= f}
        assert oracles.faces_of(extended_link(cx, sigma)) == want
