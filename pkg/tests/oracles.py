"""Independent reference implementations used only by the tests.

Nothing here imports the linear algebra or the subset scan of the package:
complexes are sets of frozensets of labels, boundary matrices are dense, and
ranks come from sympy (over Q) or a small dense eliminator (over F_p).
"""

from __future__ import annotations

from itertools import combinations

import networkx as nx
import sympy


def closure(facets) -> set[frozenset]:
    out = set()
    for f in facets:
        f = tuple(f)
        for r in range(len(f) + 1):
            out.update(frozenset(c) for c in combinations(f, r))
    return out


def faces_of(cx) -> set[frozenset]:
    """Label-set faces of a package complex (void complex -> empty set)."""
    return closure(cx.facet_list())


def order_of(cx) -> dict[str, int]:
    return {lab: i for i, lab in enumerate(cx.labels)}


def _sorted(face, order):
    return tuple(sorted(face, key=order.__getitem__))


def boundary_matrix(faces, k, order) -> list[list[int]]:
    """Dense ∂_k with the alternating (-1)^i convention; rows = (k-1)-faces."""
    lo = sorted((_sorted(f, order) for f in faces if len(f) == k), key=lambda t: [order[x] for x in t])
    hi = sorted((_sorted(f, order) for f in faces if len(f) == k + 1), key=lambda t: [order[x] for x in t])
    pos = {f: i for i, f in enumerate(lo)}
    m = [[0] * len(hi) for _ in lo]
    for j, s in enumerate(hi):
        for i in range(len(s)):
            m[pos[s[:i] + s[i + 1:]]][j] = (-1) ** i
    return m


def rank(matrix, p: int = 0) -> int:
    if not matrix or not matrix[0]:
        return 0
    if p == 0:
        return sympy.Matrix(matrix).rank()
    m = [[x % p for x in row] for row in matrix]
    r = 0
    cols = len(m[0])
    for c in range(cols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][c], -1, p)
        m[r] = [x * inv % p for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [(a - f * b) % p for a, b in zip(m[i], m[r])]
        r += 1
    return r


def reduced_betti(faces, k: int, order, p: int = 0) -> int:
    """dim H̃_k with C_{-1} spanned by the empty face (when present)."""
    n_k = sum(1 for f in faces if len(f) == k + 1)
    if n_k == 0:
        return 0
    out = rank(boundary_matrix(faces, k, order), p) if k >= 0 else 0
    inn = rank(boundary_matrix(faces, k + 1, order), p)
    return n_k - out - inn


def induced(faces, V) -> set[frozenset]:
    return {f for f in faces if f <= V}


def vertex_set(faces) -> frozenset:
    return frozenset(v for f in faces for v in f)


def some_induced_homology(faces, k, order, p=0) -> frozenset | None:
    verts = sorted(vertex_set(faces), key=order.__getitem__)
    for r in range(k + 2, len(verts) + 1):
        for V in combinations(verts, r):
            if reduced_betti(induced(faces, frozenset(V)), k, order, p):
                return frozenset(V)
    return None


def leray(faces, order, p=0) -> int:
    top = max((len(f) for f in faces), default=0) - 1
    for j in range(top, -1, -1):
        if some_induced_homology(faces, j, order, p) is not None:
            return j + 1
    return 0


def hochster(faces, order, p=0) -> dict[tuple[int, int], int]:
    verts = sorted(vertex_set(faces), key=order.__getitem__)
    out: dict[tuple[int, int], int] = {}
    for r in range(len(verts) + 1):
        for W in combinations(verts, r):
            sub = induced(faces, frozenset(W))
            for i in range(-1, r):
                b = reduced_betti(sub, i, order, p)
                if b:
                    a = r - i - 1
                    out[a, r] = out.get((a, r), 0) + b
    return out


def clique(faces, k) -> set[frozenset]:
    verts = sorted(vertex_set(faces))
    out = set()
    for r in range(len(verts) + 1):
        for s in combinations(verts, r):
            if all(frozenset(t) in faces for j in range(min(r, k + 1) + 1) for t in combinations(s, j)):
                out.add(frozenset(s))
    return out


def is_chordal(cx) -> bool:
    g = nx.Graph()
    g.add_nodes_from(cx.labels[i] for i in cx.vertices)
    g.add_edges_from(cx.face_labels(e) for e in cx.faces_of_dim(1))
    return nx.is_chordal(g)
