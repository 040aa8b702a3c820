"""Named complexes and seeded random models.

Every named complex is built once per (name, parameters) pair and checked
against its f-vector / homology signature before it is handed out; the two
vendored triangulations (``rp2_6``, ``dunce8``) live in ``homchord/data``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from itertools import combinations

from .chains import betti_numbers
from .complexes import (SimplicialComplex, bits, boundary_of_face, build_complex, clique_complex,
                        cone, face_key, join, skeleton, union)
from .errors import HomchordError
from .field import F2, Q
from .formats import parse_complex


class CorpusError(HomchordError, ValueError):
    pass


@dataclass(frozen=True)
class CorpusSpec:
    name: str
    params: tuple[int, ...] = ()
    seed: int | None = None


# -- deterministic constructions ------------------------------------------


def simplex(n: int) -> SimplicialComplex:
    """The n-simplex on vertices 0..n."""
    if n < 0:
        raise CorpusError("simplex dimension must be >= 0")
    labels = [str(i) for i in range(n + 1)]
    return build_complex(labels, [labels])


def simplex_skeleton(n: int, k: int) -> SimplicialComplex:
    return skeleton(simplex(n), k)


def simplex_boundary(n: int) -> SimplicialComplex:
    s = simplex(n)
    return boundary_of_face(s.labels, s.vertex_mask)


def cycle(n: int) -> SimplicialComplex:
    """The n-gon C_n on vertices 1..n."""
    if n < 3:
        raise CorpusError("a cycle needs at least 3 vertices")
    labels = [str(i) for i in range(1, n + 1)]
    return build_complex(labels, [[labels[i], labels[(i + 1) % n]] for i in range(n)])


def jk(k: int) -> SimplicialComplex:
    """Join of two disjoint copies of the boundary of the k-simplex."""
    if k < 1:
        raise CorpusError("jk needs k >= 1")
    a = [f"a{i}" for i in range(k + 1)]
    b = [f"b{i}" for i in range(k + 1)]
    da = build_complex(a, [list(c) for c in combinations(a, k)])
    db = build_complex(b, [list(c) for c in combinations(b, k)])
    return join(da, db)


def octahedron() -> SimplicialComplex:
    labels = ["+1", "-1", "+2", "-2", "+3", "-3"]
    facets = [[f"{s1}1", f"{s2}2", f"{s3}3"] for s1 in "+-" for s2 in "+-" for s3 in "+-"]
    return build_complex(labels, facets)


def cone_square() -> SimplicialComplex:
    return cone(cycle(4), apex="v")


def woodroofe_join() -> SimplicialComplex:
    """Edge xy joined with the square 1234, plus both diagonals of the square."""
    edge = build_complex(["x", "y"], [["x", "y"]])
    j = join(edge, cycle(4))
    diagonals = build_complex(j.labels, [["1", "3"], ["2", "4"]])
    return union(j, diagonals)


def glued_tetra_boundaries() -> SimplicialComplex:
    """Two tetrahedron boundaries abcd, abce sharing the triangle abc."""
    labels = list("abcde")
    facets = [list(t) for t in combinations("abcd", 3)] + [list(t) for t in combinations("abce", 3)]
    return build_complex(labels, facets)


def _vendored(name: str) -> SimplicialComplex:
    text = resources.files("homchord").joinpath("data", f"{name}.txt").read_text()
    return parse_complex(text)


def rp2_6() -> SimplicialComplex:
    return _vendored("rp2_6")


def dunce8() -> SimplicialComplex:
    return _vendored("dunce8")


def barycentric_subdivision(cx: SimplicialComplex) -> SimplicialComplex:
    """Order complex of the face poset; vertices are labelled by concatenated face labels."""
    faces = sorted((f for f in cx.faces if f), key=lambda f: (f.bit_count(), face_key(f)))
    sep = "" if all(len(x) == 1 for x in cx.labels) else "."
    name = {f: sep.join(cx.face_labels(f)) for f in faces}
    index = {f: i for i, f in enumerate(faces)}
    masks = []

    def chains(top):
        subs = [g for g in faces if g != top and g & top == g]
        if not subs:
            yield [top]
            return
        for g in subs:
            if g.bit_count() == top.bit_count() - 1:
                for ch in chains(g):
                    yield ch + [top]

    for facet in cx.facets:
        for ch in chains(facet):
            m = 0
            for f in ch:
                m |= 1 << index[f]
            masks.append(m)
    return SimplicialComplex.from_masks(tuple(name[f] for f in faces), masks)


def flag_dunce() -> SimplicialComplex:
    return barycentric_subdivision(dunce8())


# -- validation oracles ----------------------------------------------------


def _edges_in_two_triangles(cx: SimplicialComplex) -> bool:
    tris = cx.faces_of_dim(2)
    return all(sum(1 for t in tris if t & e == e) >= 2 for e in cx.faces_of_dim(1))


def _is_flag(cx: SimplicialComplex) -> bool:
    return clique_complex(skeleton(cx, 1), 1).facets == cx.facets


_SIGNATURES = {
    # name -> (f-vector, reduced betti over Q, reduced betti over F2) ; degrees -1..dim
    "rp2_6": ([6, 15, 10], [0, 0, 0, 0], [0, 0, 1, 1]),
    "dunce8": ([8, 24, 17], [0, 0, 0, 0], [0, 0, 0, 0]),
    "flag_dunce": ([49, 150, 102], [0, 0, 0, 0], [0, 0, 0, 0]),
    "jk2": ([6, 15, 18, 9], [0, 0, 0, 0, 1], [0, 0, 0, 0, 1]),
    "octahedron": ([6, 12, 8], [0, 0, 0, 1], [0, 0, 0, 1]),
}


def validate(name: str, cx: SimplicialComplex) -> None:
    """Raise CorpusError unless ``cx`` matches the recorded signature of ``name``."""
    sig = _SIGNATURES.get(name)
    if sig is not None:
        fv, bq, b2 = sig
        if cx.f_vector() != fv:
            raise CorpusError(f"{name}: f-vector {cx.f_vector()} != {fv}")
        if betti_numbers(cx, Q) != bq or betti_numbers(cx, F2) != b2:
            raise CorpusError(f"{name}: homology signature mismatch")
    if name in ("dunce8", "flag_dunce"):
        if cx.dim != 2 or not _edges_in_two_triangles(cx):
            raise CorpusError(f"{name}: expected a 2-complex without free edges")
    if name == "flag_dunce" and not _is_flag(cx):
        raise CorpusError("flag_dunce: not a flag complex")
    if name == "rp2_6" and len(cx.faces_of_dim(1)) != 15:
        raise CorpusError("rp2_6: 1-skeleton must be complete")


_BUILDERS = {
    "simplex": (simplex, 1),
    "simplex_skeleton": (simplex_skeleton, 2),
    "simplex_boundary": (simplex_boundary, 1),
    "cycle": (cycle, 1),
    "jk": (jk, 1),
    "octahedron": (octahedron, 0),
    "cone_square": (cone_square, 0),
    "woodroofe_join": (woodroofe_join, 0),
    "glued_tetra_boundaries": (glued_tetra_boundaries, 0),
    "rp2_6": (rp2_6, 0),
    "dunce8": (dunce8, 0),
    "flag_dunce": (flag_dunce, 0),
}

NAMES = tuple(_BUILDERS)


@lru_cache(maxsize=None)
def _named(name: str, params: tuple[int, ...]) -> SimplicialComplex:
    builder, arity = _BUILDERS[name]
    cx = builder(*params)
    sig_name = f"jk{params[0]}" if name == "jk" else name
    validate(sig_name, cx)
    return cx


def named_complex(spec: CorpusSpec | str, *params: int) -> SimplicialComplex:
    if isinstance(spec, str):
        spec = CorpusSpec(spec, tuple(params))
    if spec.name not in _BUILDERS:
        raise CorpusError(f"unknown corpus name {spec.name!r}; known: {', '.join(NAMES)}")
    _, arity = _BUILDERS[spec.name]
    if len(spec.params) != arity:
        raise CorpusError(f"{spec.name} takes {arity} integer parameter(s), got {len(spec.params)}")
    return _named(spec.name, tuple(int(p) for p in spec.params))


def standard_corpus() -> dict[str, SimplicialComplex]:
    """The fixed list of corpus members used by the test suites."""
    specs = [
        ("simplex_3", "simplex", (3,)),
        ("simplex_skeleton_4_1", "simplex_skeleton", (4, 1)),
        ("simplex_boundary_3", "simplex_boundary", (3,)),
        ("cycle_4", "cycle", (4,)),
        ("cycle_5", "cycle", (5,)),
        ("jk_1", "jk", (1,)),
        ("jk_2", "jk", (2,)),
        ("octahedron", "octahedron", ()),
        ("cone_square", "cone_square", ()),
        ("woodroofe_join", "woodroofe_join", ()),
        ("glued_tetra_boundaries", "glued_tetra_boundaries", ()),
        ("rp2_6", "rp2_6", ()),
        ("dunce8", "dunce8", ()),
        ("flag_dunce", "flag_dunce", ()),
    ]
    return {key: named_complex(CorpusSpec(name, params)) for key, name, params in specs}


# -- random models ---------------------------------------------------------

MODELS = ("graph", "flag", "pure", "chordal_graph")


def random_graph(n: int, p: float, seed: int) -> SimplicialComplex:
    rng = random.Random(seed)
    labels = [str(i) for i in range(n)]
    facets = [[x] for x in labels]
    facets += [[labels[i], labels[j]] for i, j in combinations(range(n), 2) if rng.random() < p]
    return build_complex(labels, facets)


def random_flag(n: int, p: float, seed: int) -> SimplicialComplex:
    return clique_complex(random_graph(n, p, seed), 1)


def random_pure(n: int, k: int, p: float, seed: int) -> SimplicialComplex:
    """Downward closure of independently sampled k-subsets of n vertices."""
    rng = random.Random(seed)
    labels = [str(i) for i in range(n)]
    facets = [[labels[i] for i in c] for c in combinations(range(n), k + 1) if rng.random() < p]
    return build_complex(labels, facets)


def random_chordal_graph(n: int, seed: int) -> SimplicialComplex:
    """Each new vertex is joined to a random subset of one existing maximal clique."""
    rng = random.Random(seed)
    labels = [str(i) for i in range(n)]
    cliques: list[set[int]] = []
    edges = []
    for v in range(n):
        if cliques:
            base = rng.choice(cliques)
            nbrs = {u for u in sorted(base) if rng.random() < 0.6}
        else:
            nbrs = set()
        edges += [(u, v) for u in sorted(nbrs)]
        new = nbrs | {v}
        cliques = [c for c in cliques if not c <= new] + [new]
    facets = [[x] for x in labels] + [[labels[u], labels[v]] for u, v in edges]
    return build_complex(labels, facets)


def random_complex(model: str, n: int, params=(), seed: int = 0) -> SimplicialComplex:
    """``graph(p)``, ``flag(p)``, ``pure(k, p)`` or ``chordal_graph()`` on n vertices."""
    params = tuple(params)
    try:
        if model == "graph":
            (p,) = params
            return random_graph(n, p, seed)
        if model == "flag":
            (p,) = params
            return random_flag(n, p, seed)
        if model == "pure":
            k, p = params
            return random_pure(n, int(k), p, seed)
        if model == "chordal_graph":
            if params:
                raise ValueError
            return random_chordal_graph(n, seed)
    except ValueError:
        raise CorpusError(f"bad parameters {params} for model {model!r}") from None
    raise CorpusError(f"unknown random model {model!r}; known: {', '.join(MODELS)}")


def is_chordal_graph(cx: SimplicialComplex) -> bool:
    """Perfect-elimination oracle: repeatedly strip a simplicial vertex."""
    adj = {v: set() for v in bits(cx.vertex_mask)}
    for e in cx.faces_of_dim(1):
        a, b = bits(e)
        adj[a].add(b)
        adj[b].add(a)
    alive = set(adj)
    while alive:
        for v in sorted(alive):
            nb = adj[v] & alive
            if all(b in adj[a] for a, b in combinations(sorted(nb), 2)):
                alive.remove(v)
                break
        else:
            return False
    return True
