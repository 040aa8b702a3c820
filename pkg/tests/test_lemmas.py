"""Randomized property suites for the cone, link, join and gluing lemmas.

Every suite counts its instances; the session total is checked against the
required minimum at the end of the module.
"""

import random
from itertools import combinations

import pytest

from homchord import F2, Q, RelativeComplex, betti, extended_link, is_resolution_chordal, link, star
from homchord.complexes import build_complex, delete, intersection, join, union
from homchord.corpus import cone_square, cycle, random_complex, simplex_boundary

from conftest import SCANNABLE

FIELDS = [Q, F2]
COUNTS: dict[str, int] = {}


def tally(name, n=1):
    COUNTS[name] = COUNTS.get(name, 0) + n


def res(cx, k, f):
    return is_resolution_chordal(cx, k, f).holds


def random_family(n_complexes, seed0, n=7):
    out = []
    for i in range(n_complexes):
        seed = seed0 + i
        model = ("flag", "pure", "pure", "graph")[i % 4]
        if model == "flag":
            cx = random_complex("flag", n, (0.5,), seed)
        elif model == "pure":
            cx = random_complex("pure", n, (2 + i % 2, 0.3), seed)
        else:
            cx = random_complex("graph", n, (0.45,), seed)
        out.append(cx)
    return out


def pair_vertex(cx, v):
    st = star(cx, 1 << v)
    return RelativeComplex(st, delete(st, 1 << v))


def pair_face(cx, tau):
    st = star(cx, tau)
    return RelativeComplex(st, extended_link(cx, tau))


# -- Cone lemma ---------------------------------------------------------------------


def test_cone_lemma_betti_and_chordality(corpus):
    cxs = [corpus[n] for n in SCANNABLE if corpus[n].vertex_mask.bit_count() <= 8]
    cxs += random_family(30, 100)
    for cx in cxs:
        for v in cx.vertices:
            rel, lk = pair_vertex(cx, v), link(cx, 1 << v)
            for k in range(0, cx.dim + 1):
                for f in FIELDS:
                    assert betti(rel, k, f).betti == betti(lk, k - 1, f).betti
                    if k >= 1:
                        assert res(rel, k, f) == res(lk, k - 1, f)
                    tally("cone")


# -- Extended cone lemma ----------------------------------------------------------


def test_extended_cone_lemma_betti(corpus):
    cxs = [corpus[n] for n in SCANNABLE if corpus[n].vertex_mask.bit_count() <= 8]
    cxs += random_family(20, 300)
    for cx in cxs:
        for tau in sorted(cx.faces):
            if tau.bit_count() < 2:
                continue
            rel, elk = pair_face(cx, tau), extended_link(cx, tau)
            for k in range(1, cx.dim + 1):
                for f in FIELDS:
                    assert betti(rel, k, f).betti == betti(elk, k - 1, f).betti
                    # the chordality form holds in one direction only
                    if k >= 1 and res(elk, k - 1, f):
                        assert res(rel, k, f)
                    tally("extended_cone")


def test_extended_cone_converse_fails_at_chordality_level():
    # τ = ab joined with a triangle boundary: the pair is 2-chordal while the
    # extended link has the induced 1-cycle xyz.
    cx = join(build_complex("ab", [["a", "b"]]), build_complex("xyz", [["x", "y"], ["y", "z"], ["x", "z"]]))
    tau = cx.face("ab")
    assert res(pair_face(cx, tau), 2, Q)
    v = is_resolution_chordal(extended_link(cx, tau), 1, Q)
    assert not v.holds and v.witness_labels() == ["x", "y", "z"]
    for k in range(0, 4):
        assert betti(pair_face(cx, tau), k, Q).betti == betti(extended_link(cx, tau), k - 1, Q).betti


# -- Links lemma -------------------------------------------------------------------


def test_links_lemma_implication():
    hits = 0
    for cx in random_family(80, 500):
        for F in sorted(cx.faces):
            if not F:
                continue
            l = F.bit_count() - 1
            for k in range(l + 1, cx.dim + 2):
                for f in FIELDS:
                    tally("links")
                    if all(res(cx, j, f) for j in range(k - l - 1, k + 1)):
                        hits += 1
                        assert res(link(cx, F), k - l - 1, f)
    assert hits > 50


def test_links_lemma_tightness_fixture():
    cs = cone_square()
    v = cs.face("v")
    assert res(cs, 2, Q)
    assert not res(cs, 1, Q)
    assert not res(link(cs, v), 1, Q)


# -- Join lemma --------------------------------------------------------------------


def cycle_complexes():
    yield 0, build_complex(["p", "q"], [["p"], ["q"]])
    c3 = cycle(3)
    yield 1, build_complex([f"c{x}" for x in c3.labels], [[f"c{x}" for x in e] for e in c3.facet_list()])
    c4 = cycle(4)
    yield 1, build_complex([f"c{x}" for x in c4.labels], [[f"c{x}" for x in e] for e in c4.facet_list()])
    s = simplex_boundary(3)
    yield 2, build_complex([f"s{x}" for x in s.labels], [[f"s{x}" for x in e] for e in s.facet_list()])


def test_join_lemma_implication():
    hits = 0
    base = random_family(24, 700, n=5)
    for cx in base:
        for d, c in cycle_complexes():
            if c.vertex_mask.bit_count() + cx.vertex_mask.bit_count() > 9:
                continue
            j = join(cx, c)
            for k in range(d + 1, j.dim + 1):
                for f in FIELDS:
                    tally("join")
                    if res(j, k, f):
                        hits += 1
                        assert res(cx, k - d - 1, f)
    assert hits > 20


# -- Gluing lemma ------------------------------------------------------------------


def glued_pair(seed):
    """Two random complexes on overlapping vertex windows of a common 8-label order."""
    rng = random.Random(seed)
    labels = [str(i) for i in range(8)]
    shared = rng.randint(2, 4)
    a_verts = list(range(0, 4 + shared // 2))
    b_verts = list(range(len(a_verts) - shared, 8))

    def piece(verts):
        d = rng.choice([1, 2])
        p = rng.choice([0.4, 0.6, 0.8])
        facets = [[labels[v] for v in s] for s in combinations(verts, d + 1) if rng.random() < p]
        facets += [[labels[v]] for v in verts]
        return build_complex(labels, facets)

    return piece(a_verts), piece(b_verts)


def test_gluing_lemma_implications():
    used = {"i": 0, "ii": 0, "iii": 0}
    for seed in range(60):
        D, G = glued_pair(seed)
        M, I = union(D, G), intersection(D, G)
        rel = RelativeComplex(G, I)
        for k in (1, 2):
            for f in FIELDS:
                tally("gluing")
                rD, rG, rM, rI = res(D, k, f), res(G, k, f), res(M, k, f), res(I, k, f)
                if rD and rG and res(I, k - 1, f):
                    used["i"] += 1
                    assert rM
                if rD and res(rel, k, f):
                    used["ii"] += 1
                    assert rM
                if rD and rM and rI:
                    used["iii"] += 1
                    assert rG
    assert min(used.values()) > 10, used


def test_instance_total():
    # runs last in this module: at least 500 lemma instances were checked
    assert sum(COUNTS.values()) >= 500, COUNTS
    assert all(COUNTS.get(k, 0) > 0 for k in ("cone", "extended_cone", "links", "join", "gluing"))


@pytest.fixture(autouse=True, scope="module")
def _report():
    yield
    print("lemma instances:", dict(sorted(COUNTS.items())))
