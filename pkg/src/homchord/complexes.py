"""Finite abstract simplicial complexes over an ordered label set.

A face is an ``int`` bitmask over positions in ``labels``; bit ``i`` set means
the ``i``-th label is a vertex of the face.  The order of ``labels`` is the
total vertex order from which every orientation sign is derived.  The empty
face is ``0``.

Two complexes are distinguished at the bottom: the *void* complex has no
faces at all (``facets == frozenset()``) while ``{∅}`` has the single facet
``0``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from .errors import FaceError


def bits(mask: int) -> list[int]:
    """Indices of the set bits of ``mask``, increasing."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def face_key(mask: int) -> tuple[int, ...]:
    """Sort key putting faces in lexicographic order of their vertex tuples."""
    return tuple(bits(mask))


def dim_of(mask: int) -> int:
    return mask.bit_count() - 1


def submasks(mask: int):
    """All submasks of ``mask`` including 0 and ``mask`` itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def maximal(masks: Iterable[int]) -> frozenset[int]:
    """Inclusion-maximal members of ``masks``."""
    ordered = sorted(set(masks), key=lambda m: -m.bit_count())
    kept: list[int] = []
    for m in ordered:
        if not any(m & k == m for k in kept):
            kept.append(m)
    return frozenset(kept)


@dataclass(frozen=True)
class SimplicialComplex:
    labels: tuple[str, ...]
    facets: frozenset[int]

    @classmethod
    def from_masks(cls, labels: Sequence[str], masks: Iterable[int]) -> "SimplicialComplex":
        return cls(tuple(labels), maximal(masks))

    # -- basic data -------------------------------------------------------

    @cached_property
    def index(self) -> dict[str, int]:
        return {lab: i for i, lab in enumerate(self.labels)}

    @cached_property
    def faces(self) -> frozenset[int]:
        out: set[int] = set()
        for f in self.facets:
            if f in out:
                continue
            out.update(submasks(f))
        return frozenset(out)

    @cached_property
    def _by_dim(self) -> dict[int, list[int]]:
        groups: dict[int, list[int]] = {}
        for f in self.faces:
            groups.setdefault(dim_of(f), []).append(f)
        for d in groups:
            groups[d].sort(key=face_key)
        return groups

    def faces_of_dim(self, k: int) -> list[int]:
        """The k-faces in lexicographic order (k = -1 gives ``[0]``)."""
        return list(self._by_dim.get(k, ()))

    @cached_property
    def vertex_mask(self) -> int:
        m = 0
        for f in self.facets:
            m |= f
        return m

    @property
    def vertices(self) -> list[int]:
        return bits(self.vertex_mask)

    @property
    def dim(self) -> int:
        """Largest face dimension; -1 for ``{∅}`` and -2 for the void complex."""
        if not self.facets:
            return -2
        return max(f.bit_count() for f in self.facets) - 1

    @property
    def is_void(self) -> bool:
        return not self.facets

    def f_vector(self) -> list[int]:
        """Face counts in dimensions 0..dim (the empty face is not counted)."""
        return [len(self._by_dim.get(d, ())) for d in range(self.dim + 1)]

    def is_pure(self) -> bool:
        return len({f.bit_count() for f in self.facets}) <= 1

    def __contains__(self, face: int) -> bool:
        return face in self.faces

    def __len__(self):
        return len(self.faces)

    # -- label conversion -------------------------------------------------

    def face(self, labels: Iterable[str]) -> int:
        m = 0
        for lab in labels:
            try:
                m |= 1 << self.index[lab]
            except KeyError:
                raise FaceError(f"unknown vertex label {lab!r}") from None
        return m

    def face_labels(self, mask: int) -> tuple[str, ...]:
        return tuple(self.labels[i] for i in bits(mask))

    def facet_list(self) -> list[tuple[str, ...]]:
        return [self.face_labels(f) for f in sorted(self.facets, key=face_key)]

    def require_face(self, mask: int) -> None:
        if mask not in self.faces:
            raise FaceError(f"{{{', '.join(self.face_labels(mask))}}} is not a face")

    def __repr__(self):
        body = ", ".join("".join(f) if all(len(x) == 1 for x in f) else "-".join(f)
                         for f in self.facet_list())
        return f"SimplicialComplex([{body}])"


@dataclass(frozen=True)
class RelativeComplex:
    """A pair (total, removed) with ``removed`` a subcomplex of ``total``."""

    total: SimplicialComplex
    removed: SimplicialComplex

    def __post_init__(self):
        if self.total.labels != self.removed.labels:
            raise ValueError("relative pair must share one label order")
        if not self.removed.faces <= self.total.faces:
            raise ValueError("removed complex is not a subcomplex of total")

    @property
    def labels(self):
        return self.total.labels

    def faces_of_dim(self, k: int) -> list[int]:
        gone = self.removed.faces
        return [f for f in self.total.faces_of_dim(k) if f not in gone]

    @property
    def vertex_mask(self) -> int:
        return self.total.vertex_mask

    @property
    def dim(self) -> int:
        return self.total.dim

    def __contains__(self, face: int) -> bool:
        return face in self.total.faces and face not in self.removed.faces


# -- constructions --------------------------------------------------------


def build_complex(labels: Sequence, facets: Iterable[Iterable]) -> SimplicialComplex:
    """Complex on the ordered ``labels`` generated by ``facets`` (label sets)."""
    labels = tuple(str(x) for x in labels)
    if len(set(labels)) != len(labels):
        dup = sorted({x for x in labels if labels.count(x) > 1})
        raise ValueError(f"duplicate vertex label(s): {', '.join(dup)}")
    index = {lab: i for i, lab in enumerate(labels)}
    masks = []
    for facet in facets:
        m = 0
        for lab in facet:
            try:
                m |= 1 << index[str(lab)]
            except KeyError:
                raise FaceError(f"unknown vertex label {lab!r}") from None
        masks.append(m)
    return SimplicialComplex.from_masks(labels, masks)


def void_complex(labels: Sequence[str] = ()) -> SimplicialComplex:
    return SimplicialComplex(tuple(labels), frozenset())


def simplex_on(labels: Sequence[str], mask: int) -> SimplicialComplex:
    return SimplicialComplex(tuple(labels), frozenset([mask]))


def faces_of_dim(cx: SimplicialComplex, k: int) -> list[int]:
    return cx.faces_of_dim(k)


def skeleton(cx: SimplicialComplex, k: int) -> SimplicialComplex:
    """All faces of dimension at most ``k``."""
    masks = [f for f in cx.facets if f.bit_count() <= k + 1]
    for f in cx.facets:
        if f.bit_count() > k + 1:
            masks.extend(mask_of(c) for c in combinations(bits(f), k + 1))
    return SimplicialComplex.from_masks(cx.labels, masks)


def induced(cx: SimplicialComplex, vertex_mask: int) -> SimplicialComplex:
    """Induced subcomplex on the vertices in ``vertex_mask``.

    The label order (ground set) is kept so faces stay comparable with the
    parent complex.
    """
    if cx.is_void:
        return cx
    return SimplicialComplex.from_masks(cx.labels, [f & vertex_mask for f in cx.facets])


def delete(cx: SimplicialComplex, faces: int | Iterable[int]) -> SimplicialComplex:
    """Largest subcomplex containing none of the given faces."""
    if isinstance(faces, int):
        faces = [faces]
    out = cx
    for sigma in faces:
        out.require_face(sigma)
        masks = []
        for f in out.facets:
            if f & sigma != sigma:
                masks.append(f)
            else:
                masks.extend(f & ~(1 << v) for v in bits(sigma))
        out = SimplicialComplex.from_masks(out.labels, masks)
    return out


def star(cx: SimplicialComplex, sigma: int) -> SimplicialComplex:
    cx.require_face(sigma)
    return SimplicialComplex(cx.labels, frozenset(f for f in cx.facets if f & sigma == sigma))


def link(cx: SimplicialComplex, sigma: int) -> SimplicialComplex:
    cx.require_face(sigma)
    return SimplicialComplex.from_masks(
        cx.labels, [f & ~sigma for f in cx.facets if f & sigma == sigma])


def extended_link(cx: SimplicialComplex, sigma: int) -> SimplicialComplex:
    """Star of ``sigma`` with ``sigma`` deleted, i.e. the join of its boundary with its link."""
    return delete(star(cx, sigma), sigma)


def boundary_of_face(labels: Sequence[str], sigma: int) -> SimplicialComplex:
    """The complex of proper faces of ``sigma``."""
    if sigma == 0:
        return void_complex(labels)
    return SimplicialComplex.from_masks(labels, [sigma & ~(1 << v) for v in bits(sigma)])


def join(a: SimplicialComplex, b: SimplicialComplex) -> SimplicialComplex:
    """Join on disjoint label sets; ``a``'s vertices precede ``b``'s."""
    overlap = set(a.labels) & set(b.labels)
    if overlap:
        raise ValueError(f"join needs disjoint labels, shared: {sorted(overlap)}")
    shift = len(a.labels)
    return SimplicialComplex(
        a.labels + b.labels,
        frozenset(fa | (fb << shift) for fa in a.facets for fb in b.facets))


def cone(cx: SimplicialComplex, apex: str = "v") -> SimplicialComplex:
    """Cone with the apex placed first in the vertex order."""
    return join(build_complex([apex], [[apex]]), cx)


def embed(cx: SimplicialComplex, labels: Sequence[str]) -> SimplicialComplex:
    """The same complex re-expressed over a (super)set of labels."""
    labels = tuple(labels)
    pos = {lab: i for i, lab in enumerate(labels)}
    try:
        remap = [pos[lab] for lab in cx.labels]
    except KeyError as err:
        raise FaceError(f"label {err.args[0]!r} missing from target order") from None
    return SimplicialComplex(labels, frozenset(mask_of(remap[i] for i in bits(f)) for f in cx.facets))


def union(a: SimplicialComplex, b: SimplicialComplex) -> SimplicialComplex:
    _same_labels(a, b)
    return SimplicialComplex.from_masks(a.labels, list(a.facets) + list(b.facets))


def intersection(a: SimplicialComplex, b: SimplicialComplex) -> SimplicialComplex:
    _same_labels(a, b)
    return SimplicialComplex.from_masks(a.labels, [x & y for x in a.facets for y in b.facets])


def _same_labels(a, b):
    if a.labels != b.labels:
        raise ValueError("complexes must share one label order")


def clique_complex(cx: SimplicialComplex, k: int) -> SimplicialComplex:
    """All vertex sets whose k-skeleton lies in ``cx``."""
    if k < 0:
        raise ValueError("clique complex needs k >= 0")
    if cx.is_void:
        return cx
    if k == 0:
        return simplex_on(cx.labels, cx.vertex_mask)
    verts = cx.vertices
    # facets below dimension k are kept; everything else lies under a k-face
    found = [f for f in cx.facets if f.bit_count() < k + 1]
    level = set(cx.faces_of_dim(k))
    while level:
        found.extend(level)
        nxt = set()
        for s in level:
            top = s.bit_length()
            for v in verts:
                if v < top:
                    continue
                t = s | (1 << v)
                if all((t & ~(1 << u)) in level for u in bits(s)):
                    nxt.add(t)
        level = nxt
    return SimplicialComplex.from_masks(cx.labels, found)


def missing_faces(cx: SimplicialComplex) -> list[int]:
    """Minimal nonfaces on the vertex set of ``cx`` (lexicographic within each dimension)."""
    faces = cx.faces
    verts = cx.vertices
    out = []
    for f in faces:
        top = f.bit_length()
        for v in verts:
            if v < top:
                continue
            s = f | (1 << v)
            if s in faces:
                continue
            if all((s & ~(1 << u)) in faces for u in bits(f)):
                out.append(s)
    out.sort(key=lambda m: (m.bit_count(), face_key(m)))
    return out


def alexander_dual(cx: SimplicialComplex, ground: int | None = None) -> SimplicialComplex:
    """``{F ⊆ ground : ground \\ F is not a face}``; ground defaults to all labels."""
    if ground is None:
        ground = (1 << len(cx.labels)) - 1
    if cx.vertex_mask & ~ground:
        raise ValueError("ground set must contain every vertex of the complex")
    if cx.is_void:
        return simplex_on(cx.labels, ground)
    minimal_nonfaces = list(missing_faces(cx))
    minimal_nonfaces += [1 << v for v in bits(ground & ~cx.vertex_mask)]
    return SimplicialComplex.from_masks(cx.labels, [ground & ~m for m in minimal_nonfaces])
