import pytest
from hypothesis import given, settings, strategies as st

from homchord import (F2, F3, Q, Chain, alexander_dual, betti_table, boundary, build_complex,
                      check_propagation, clique_complex, complete_cycle, decompose_cycle,
                      has_linear_resolution, herzog_srinivasan_holds, is_cohen_macaulay, is_cycle,
                      is_decomposition_chordal, is_resolution_chordal, leray_number, missing_faces,
                      regularity, resolve_cycle)
from homchord.chains import cycle_basis
from homchord.chordality import is_leray
from homchord.complexes import skeleton, union
from homchord.corpus import (cone_square, cycle, dunce8, flag_dunce, jk, octahedron,
                             random_chordal_graph, random_complex, rp2_6, simplex)
from homchord.errors import ChainError, NotApplicableError
from homchord.scan import subsets_by_size

import oracles
from conftest import SCANNABLE, cx_of

FIELDS = [Q, F2, F3]


def square_cycle(cx):
    return Chain(1, {cx.face("12"): 1, cx.face("23"): 1, cx.face("34"): 1, cx.face("14"): -1}, Q, cx)


# -- examples -----------------------------------------------------------------------


def test_resolve_cycle_examples():
    tri = cx_of(["abc"])
    z = boundary(Chain(2, {tri.face("abc"): 1}, Q, tri))
    c = resolve_cycle(tri, z)
    assert c.terms == {tri.face("abc"): 1}
    cs = cone_square()
    assert resolve_cycle(cs, square_cycle(cs)) is None
    j = jk(2)
    (fund,) = cycle_basis(j, 3, Q)
    assert fund.support == j.vertex_mask
    assert resolve_cycle(j, fund) is None


def test_resolve_cycle_rejects_non_cycle():
    tri = cx_of(["abc"])
    with pytest.raises(ChainError):
        resolve_cycle(tri, Chain(1, {tri.face("ab"): 1}, Q, tri))


def test_decompose_cycle_examples():
    k3 = clique_complex(cx_of(["ab", "bc", "ac"]), 1)
    z = complete_cycle(0b111, 1, Q)
    assert decompose_cycle(k3, z) == [(1, 0b111)]
    c4 = cycle(4)
    assert decompose_cycle(c4, square_cycle(c4)) is None
    octa = octahedron()
    (fund,) = cycle_basis(octa, 2, Q)
    assert decompose_cycle(octa, fund) is None


def test_decompose_cycle_uses_linear_combinations():
    # square with a diagonal: the square is the sum of two triangles
    cx = clique_complex(cx_of(["12", "23", "34", "14", "13"], labels="1234"), 1)
    dec = decompose_cycle(cx, square_cycle(cx))
    assert dec is not None and {s for _, s in dec} == {cx.face("123"), cx.face("134")}
    total = Chain(1, {}, Q)
    for coeff, s in dec:
        total = total + complete_cycle(s, 1, Q).scale(coeff)
    assert total.terms == square_cycle(cx).terms


def test_simplex_is_resolution_chordal():
    for n in range(1, 5):
        for k in range(0, n + 1):
            for f in FIELDS:
                assert is_resolution_chordal(simplex(n), k, f).holds


def test_cone_square_verdicts():
    cs = cone_square()
    assert is_resolution_chordal(cs, 2, Q).holds
    v = is_resolution_chordal(cs, 1, Q)
    assert not v.holds and v.witness_labels() == ["1", "2", "3", "4"]
    assert is_cycle(v.witness_cycle) and resolve_cycle(cs, v.witness_cycle) is None


def test_jk2_verdicts():
    j = jk(2)
    assert is_resolution_chordal(j, 2, Q).holds
    v = is_resolution_chordal(j, 3, Q)
    assert not v.holds and v.witness_vertices == j.vertex_mask


def test_decomposition_examples():
    assert is_decomposition_chordal(flag_dunce(), 2, Q).holds
    v = is_decomposition_chordal(octahedron(), 2, Q)
    assert not v.holds
    assert decompose_cycle(octahedron(), v.witness_cycle) is None
    c4 = is_decomposition_chordal(cycle(4), 1, Q)
    assert not c4.holds and c4.witness_labels() == ["1", "2", "3", "4"]


def test_leray_examples():
    assert leray_number(simplex(3), Q) == 0
    assert leray_number(cycle(4), Q) == 2
    for seed in range(10):
        g = random_chordal_graph(8, seed)
        assert leray_number(clique_complex(g, 1), Q) <= 1
    assert leray_number(rp2_6(), F2) == 3
    assert leray_number(rp2_6(), Q) == 2
    assert is_leray(rp2_6(), 2, Q) and not is_leray(rp2_6(), 2, F2)


def test_betti_table_examples():
    t = betti_table(simplex(3), Q)
    assert all(v == 0 for (a, _), v in t.entries.items() if a >= 1) and t.regularity == 0
    c4 = betti_table(cycle(4), Q)
    assert c4[1, 2] == 2 and c4[2, 4] == 1 and c4.regularity == 2
    assert c4.t(1) == 2 and c4.t(2) == 4 and c4.projective_dimension == 2
    assert c4.rows() == [[1, 0, 0, 0, 0], [0, 2, 0, 0, 0], [0, 0, 1, 0, 0]]
    assert regularity(rp2_6(), F2) == 3 and regularity(rp2_6(), Q) == 2


def test_linear_resolution_examples():
    for seed in range(5):
        g = random_chordal_graph(7, seed)
        cl = clique_complex(g, 1)
        if not missing_faces(cl):
            continue
        for f in FIELDS:
            assert has_linear_resolution(cl, f)
    assert has_linear_resolution(rp2_6(), Q)
    assert not has_linear_resolution(rp2_6(), F2)
    assert not has_linear_resolution(cycle(4), Q)


def test_linear_resolution_not_applicable():
    with pytest.raises(NotApplicableError):
        has_linear_resolution(simplex(2), Q)
    mixed = cx_of(["12", "23", "13", "34"], labels="1234")
    assert {m.bit_count() for m in missing_faces(mixed)} == {2, 3}
    with pytest.raises(NotApplicableError):
        has_linear_resolution(mixed, Q)


def test_cohen_macaulay_examples():
    assert is_cohen_macaulay(skeleton(simplex(3), 2), Q)
    assert is_cohen_macaulay(cx_of(["12", "23"]), Q)
    assert not is_cohen_macaulay(cx_of(["12", "23", "34", "41", "5"], labels="12345"), Q)
    dual = alexander_dual(rp2_6())
    assert is_cohen_macaulay(dual, Q) and not is_cohen_macaulay(dual, F2)


def test_propagation_examples():
    g = random_chordal_graph(8, 4)
    rep = check_propagation(clique_complex(g, 1), 1, Q)
    assert rep.hypotheses_hold and rep.conclusions_hold and not rep.counterexamples
    j = check_propagation(jk(2), 2, Q)
    assert j.decomposition_low == {2: True, 3: False}
    assert not j.hypotheses_hold and j.leray == 4 and not j.counterexamples


# -- invariants --------------------------------------------------------------------


@pytest.mark.parametrize("name", SCANNABLE + ["flag_dunce"])
def test_resolution_implies_decomposition(corpus, name):
    cx = corpus[name]
    for k in range(1, min(cx.dim, 3) + 1):
        for f in (Q, F2):
            if is_resolution_chordal(cx, k, f).holds:
                assert is_decomposition_chordal(cx, k, f).holds


def _brute_resolution(cx, k, p):
    faces = oracles.faces_of(cx)
    return oracles.some_induced_homology(faces, k, oracles.order_of(cx), p) is None


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10 ** 6), st.sampled_from(["flag", "graph", "pure"]), st.integers(1, 2))
def test_chordality_matches_brute_force(seed, model, k):
    params = (2, 0.45) if model == "pure" else (0.5,)
    cx = random_complex(model, 7, params, seed)
    for p, f in [(0, Q), (2, F2)]:
        assert is_resolution_chordal(cx, k, f).holds == _brute_resolution(cx, k, p)
        # decomposition computed on an independently built clique complex
        cl = build_complex(cx.labels, [sorted(s) for s in oracles.clique(oracles.faces_of(cx), k)])
        assert is_decomposition_chordal(cx, k, f).holds == _brute_resolution(cl, k, p)


@pytest.mark.parametrize("seed", range(12))
def test_subset_scan_agrees_with_per_cycle_solving(seed):
    cx = random_complex("flag", 7, (0.5,), seed) if seed % 2 else random_complex("pure", 7, (2, 0.35), seed)
    for k in (1, 2):
        for f in (Q, F2):
            verdict = is_resolution_chordal(cx, k, f).holds
            per_cycle = all(resolve_cycle(cx, z) is not None
                            for W in subsets_by_size(cx.vertex_mask)
                            for z in cycle_basis(cx, k, f, within=W))
            assert verdict == per_cycle


@pytest.mark.parametrize("name", SCANNABLE)
def test_leray_and_table_match_hochster_oracle(corpus, name):
    cx = corpus[name]
    if cx.vertex_mask.bit_count() > 8:
        pytest.skip("dense oracle limited to 8 vertices")
    faces, order = oracles.faces_of(cx), oracles.order_of(cx)
    for p, f in [(0, Q), (2, F2)]:
        want = oracles.hochster(faces, order, p)
        assert betti_table(cx, f).entries == want
        assert leray_number(cx, f) == oracles.leray(faces, order, p)


@pytest.mark.parametrize("name", SCANNABLE)
def test_regularity_equals_leray(corpus, name):
    cx = corpus[name]
    for f in (Q, F2):
        assert regularity(cx, f) == leray_number(cx, f)


@pytest.mark.parametrize("name", SCANNABLE)
def test_eagon_reiner_leg(corpus, name):
    cx = corpus[name]
    dims = {m.bit_count() - 1 for m in missing_faces(cx)}
    if len(dims) != 1:
        pytest.skip("missing faces not equidimensional")
    for f in (Q, F2):
        assert has_linear_resolution(cx, f) == is_cohen_macaulay(alexander_dual(cx, cx.vertex_mask), f)


def test_eagon_reiner_random():
    seen = 0
    for seed in range(60):
        cx = random_complex("pure", 7, (2, 0.5), seed)
        if seed % 2:
            cx = union(cx, skeleton(simplex_on_labels(cx), 1))
        dims = {m.bit_count() - 1 for m in missing_faces(cx)}
        if dims != {2}:
            continue
        seen += 1
        for f in (Q, F2):
            assert has_linear_resolution(cx, f) == is_cohen_macaulay(alexander_dual(cx, cx.vertex_mask), f)
    assert seen >= 10


def simplex_on_labels(cx):
    return build_complex(cx.labels, [cx.labels])


def test_herzog_srinivasan_helper():
    assert herzog_srinivasan_holds(betti_table(cycle(5), Q))
    assert herzog_srinivasan_holds(betti_table(octahedron(), F2))


def test_dunce8_is_acyclic_but_not_chordal():
    d = dunce8()
    for f in (Q, F2):
        assert all(b == 0 for b in oracles_betti(d, f))
    # contractible yet some induced subcomplex carries a 1-cycle
    assert not is_resolution_chordal(d, 1, Q).holds


def oracles_betti(cx, f):
    p = f.p
    return [oracles.reduced_betti(oracles.faces_of(cx), d, oracles.order_of(cx), p)
            for d in range(-1, cx.dim + 1)]
