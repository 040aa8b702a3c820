"""Oriented chains, boundary maps and reduced homology ranks.

Faces are oriented by the ambient label order.  For ``tau ⊆ sigma`` the sign
``sign(tau, sigma)`` is the parity of the permutation taking ``sigma`` to the
concatenation ``(tau, sigma - tau)``.  The boundary of a face is

    ∂σ = Σ_{v ∈ σ} sign({v}, σ) · (σ - v)

which gives ``∂[abc] = [bc] - [ac] + [ab]`` and satisfies the join rule
``∂(σ1*σ2) = ∂σ1*σ2 + (-1)^(dim σ1 + 1) σ1*∂σ2`` when the vertices of the
first factor precede those of the second.  Homology is reduced: the empty
face spans degree -1.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Iterable, Union

from . import linalg
from .complexes import RelativeComplex, SimplicialComplex, bits, face_key
from .errors import ChainError, FaceError
from .field import Field

Ambient = Union[SimplicialComplex, RelativeComplex]


def sign(tau: int, sigma: int) -> int:
    """+1 or -1: parity of the inversions of ``(tau, sigma - tau)``."""
    if tau & sigma != tau:
        raise ValueError("sign(tau, sigma) needs tau ⊆ sigma")
    rest = sigma & ~tau
    inv = 0
    t = tau
    while t:
        low = t & -t
        inv += (rest & (low - 1)).bit_count()
        t ^= low
    return -1 if inv & 1 else 1


def face_boundary(sigma: int) -> dict[int, int]:
    """Integer boundary of one face as ``{facet: ±1}``."""
    out = {}
    below = 0
    for v in bits(sigma):
        out[sigma & ~(1 << v)] = -1 if below & 1 else 1
        below += 1
    return out


def oriented_union(a: int, b: int) -> tuple[int, int]:
    """(face, sign) for the ordered concatenation of disjoint faces ``a``, ``b``."""
    if a & b:
        raise ValueError("faces overlap")
    return a | b, sign(a, a | b)


def _removed_faces(ambient) -> frozenset:
    if isinstance(ambient, RelativeComplex):
        return ambient.removed.faces
    return frozenset()


@dataclass
class Chain:
    """A finite combination of oriented ``degree``-faces with field coefficients."""

    degree: int
    terms: dict[int, object]
    field: Field
    ambient: Ambient | None = dc_field(default=None, compare=False, repr=False)

    def __post_init__(self):
        f = self.field
        clean = {}
        for face, c in self.terms.items():
            if face.bit_count() != self.degree + 1:
                raise ChainError(f"face of dimension {face.bit_count() - 1} in a {self.degree}-chain")
            c = f(c)
            if c:
                clean[face] = c
        self.terms = clean
        if self.ambient is not None:
            for face in self.terms:
                if face not in self.ambient:
                    labels = ", ".join(self.ambient.labels[i] for i in bits(face))
                    raise FaceError(f"{{{labels}}} is not a face of the ambient complex")

    @classmethod
    def zero(cls, degree: int, field: Field, ambient=None) -> "Chain":
        return cls(degree, {}, field, ambient)

    def _like(self, terms) -> "Chain":
        out = Chain.__new__(Chain)
        out.degree, out.terms, out.field, out.ambient = self.degree, terms, self.field, self.ambient
        return out

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other: "Chain") -> "Chain":
        self._check(other)
        f = self.field
        terms = dict(self.terms)
        for face, c in other.terms.items():
            v = f.add(terms.get(face, 0), c)
            if v:
                terms[face] = v
            else:
                terms.pop(face, None)
        return self._like(terms)

    def __neg__(self) -> "Chain":
        return self._like({face: self.field.neg(c) for face, c in self.terms.items()})

    def __sub__(self, other: "Chain") -> "Chain":
        return self + (-other)

    def scale(self, a) -> "Chain":
        f = self.field
        a = f(a)
        if not a:
            return self._like({})
        return self._like({face: f.mul(c, a) for face, c in self.terms.items()})

    def _check(self, other):
        if other.degree != self.degree or other.field != self.field:
            raise ChainError("chains differ in degree or field")

    @property
    def support(self) -> int:
        """Vertex support as a mask."""
        m = 0
        for face in self.terms:
            m |= face
        return m

    def sorted_terms(self) -> list[tuple[int, object]]:
        return sorted(self.terms.items(), key=lambda t: face_key(t[0]))

    def restrict(self, keep) -> "Chain":
        """Summands whose face satisfies ``keep(face)``."""
        return self._like({f: c for f, c in self.terms.items() if keep(f)})


def chain_from_faces(faces: dict, field: Field, ambient=None, degree: int | None = None) -> Chain:
    if degree is None:
        if not faces:
            raise ChainError("cannot infer the degree of an empty chain")
        degree = next(iter(faces)).bit_count() - 1
    return Chain(degree, dict(faces), field, ambient)


def boundary(c: Chain) -> Chain:
    """Boundary of ``c``; for a relative ambient the terms in the removed part vanish."""
    if c.degree < 0:
        return c._like({})
    f = c.field
    gone = _removed_faces(c.ambient)
    terms: dict[int, object] = {}
    for face, coeff in c.terms.items():
        for g, s in face_boundary(face).items():
            if g in gone:
                continue
            v = f.add(terms.get(g, 0), coeff if s == 1 else f.neg(coeff))
            if v:
                terms[g] = v
            else:
                del terms[g]
    out = c._like(terms)
    out.degree = c.degree - 1
    return out


def is_cycle(c: Chain) -> bool:
    return not boundary(c).terms


def complete_cycle(vertices: int, k: int, field: Field, ambient=None) -> Chain:
    """The k-cycle ∂S of the (k+1)-simplex on ``vertices`` (|S| must be k+2)."""
    if vertices.bit_count() != k + 2:
        raise ChainError(f"a complete {k}-cycle needs {k + 2} vertices")
    terms = {g: field(s) for g, s in face_boundary(vertices).items()}
    return Chain(k, terms, field) if ambient is None else _attach(Chain(k, terms, field), ambient)


def _attach(c: Chain, ambient) -> Chain:
    c.ambient = ambient
    return c


def link_map(c: Chain, v: int) -> Chain:
    """Σ g_σ · sign(v, σ) · (σ - v) over faces σ containing vertex ``v``."""
    bit = 1 << v
    f = c.field
    terms = {}
    for face, coeff in c.terms.items():
        if face & bit:
            terms[face & ~bit] = coeff if sign(bit, face) == 1 else f.neg(coeff)
    out = c._like(terms)
    out.degree = c.degree - 1
    out.ambient = None
    return out


def extended_link_map(c: Chain, tau: int) -> Chain:
    """Σ_{σ ⊇ τ} g_σ · sign(τ, σ) · (∂τ * (σ - τ))."""
    f = c.field
    tau_bd = face_boundary(tau) if tau else {}
    terms: dict[int, object] = {}
    for face, coeff in c.terms.items():
        if face & tau != tau:
            continue
        rest = face & ~tau
        s0 = sign(tau, face)
        for g, s1 in tau_bd.items():
            h, s2 = oriented_union(g, rest)
            s = s0 * s1 * s2
            v = f.add(terms.get(h, 0), coeff if s == 1 else f.neg(coeff))
            if v:
                terms[h] = v
            else:
                terms.pop(h, None)
    out = c._like(terms)
    out.degree = c.degree - 1
    out.ambient = None
    return out


def join_chains(a: Chain, b: Chain, shift: int, ambient=None) -> Chain:
    """The chain a*b on a join whose second factor's labels start at ``shift``."""
    f = a.field
    terms = {}
    for fa, ca in a.terms.items():
        for fb, cb in b.terms.items():
            terms[fa | (fb << shift)] = f.mul(ca, cb)
    out = Chain(a.degree + b.degree + 1, terms, f)
    out.ambient = ambient
    return out


# -- homology -------------------------------------------------------------


def _coerce_row(row: dict[int, int], field: Field) -> dict:
    if field.p:
        return {g: s % field.p for g, s in row.items()}
    return row


def boundary_rows(ambient: Ambient, k: int, field: Field, within: int | None = None):
    """Yields ``(face, ∂face)`` for the k-faces of ``ambient`` (optionally
    only those inside the vertex mask ``within``), with removed terms dropped."""
    gone = _removed_faces(ambient)
    for face in ambient.faces_of_dim(k):
        if within is not None and face & ~within:
            continue
        row = {g: s for g, s in face_boundary(face).items() if g not in gone}
        yield face, _coerce_row(row, field)


def chain_space(ambient: Ambient, k: int, within: int | None = None) -> list[int]:
    faces = ambient.faces_of_dim(k)
    if within is not None:
        faces = [f for f in faces if not f & ~within]
    return faces


@dataclass(frozen=True)
class HomologyReport:
    degree: int
    field: Field
    betti: int
    rank_boundary_out: int  # rank of ∂_k
    rank_boundary_in: int  # rank of ∂_{k+1}
    chain_rank: int  # dim C_k

    @property
    def cycle_rank(self) -> int:
        return self.chain_rank - self.rank_boundary_out


def boundary_rank(ambient: Ambient, k: int, field: Field, within: int | None = None) -> int:
    return linalg.rank((row for _, row in boundary_rows(ambient, k, field, within)), field)


def betti(ambient: Ambient, k: int, field: Field) -> HomologyReport:
    """Reduced (or relative) homology dimension in degree ``k``."""
    if k < -1:
        raise ValueError("homology degree must be >= -1")
    n_k = len(ambient.faces_of_dim(k))
    out_rank = boundary_rank(ambient, k, field) if k >= 0 else 0
    in_rank = boundary_rank(ambient, k + 1, field)
    return HomologyReport(k, field, n_k - out_rank - in_rank, out_rank, in_rank, n_k)


def betti_numbers(ambient: Ambient, field: Field) -> list[int]:
    """Reduced Betti numbers in degrees -1..dim."""
    top = ambient.dim
    ranks = [0] + [boundary_rank(ambient, d, field) for d in range(0, top + 2)]
    # ranks[d + 1] is the rank of ∂_d
    return [len(ambient.faces_of_dim(d)) - ranks[d + 1] - ranks[d + 2]
            for d in range(-1, top + 1)]


def cycle_basis(ambient: Ambient, k: int, field: Field, within: int | None = None) -> list[Chain]:
    """A basis of the k-cycles of ``ambient`` (restricted to a vertex mask)."""
    gens = list(boundary_rows(ambient, k, field, within)) if k >= 0 else \
        [(f, {}) for f in chain_space(ambient, -1, within)]
    rels = linalg.kernel(gens, field)
    return [Chain(k, r, field, ambient) for r in rels]


def solve_boundary(z: Chain, allowed: Iterable[int], field: Field | None = None) -> Chain | None:
    """A chain ``c`` on the ``allowed`` (k+1)-faces with ``∂c = z``, or None."""
    field = field or z.field
    if not is_cycle(z):
        raise ChainError("solve_boundary needs a cycle")
    gone = _removed_faces(z.ambient)
    gens = []
    for face in sorted(allowed, key=face_key):
        if face.bit_count() != z.degree + 2:
            raise ChainError("allowed faces must have dimension degree + 1")
        if z.ambient is not None and face not in z.ambient:
            raise FaceError("allowed face is not a face of the ambient complex")
        row = {g: s for g, s in face_boundary(face).items() if g not in gone}
        gens.append((face, _coerce_row(row, field)))
    sol = linalg.solve(dict(z.terms), gens, field)
    if sol is None:
        return None
    return Chain(z.degree + 1, sol, field, z.ambient)


def in_boundary_span(z: Chain, allowed: Iterable[int]) -> bool:
    """Rank test: is ``z`` a boundary of a chain on ``allowed``?"""
    field = z.field
    gone = _removed_faces(z.ambient)
    rows = []
    for face in allowed:
        rows.append(_coerce_row({g: s for g, s in face_boundary(face).items() if g not in gone}, field))
    r = linalg.rank(rows, field)
    return linalg.rank(rows + [dict(z.terms)], field) == r

