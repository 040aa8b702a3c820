"""Resolution and decomposition chordality, Leray numbers and Hochster Betti tables.

A complex is resolution k-chordal exactly when no induced subcomplex has
reduced homology in degree k, and decomposition k-chordal exactly when its
k-clique complex is resolution k-chordal; both verdicts are decided that way
here.  Per-cycle witnesses (:func:`resolve_cycle`, :func:`decompose_cycle`)
solve the corresponding linear systems explicitly.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import combinations

from . import linalg
from .chains import Chain, face_boundary, is_cycle, solve_boundary
from .complexes import (RelativeComplex, SimplicialComplex, alexander_dual, bits,
                        clique_complex, face_key, link, mask_of, missing_faces)
from .errors import ChainError, NotApplicableError
from .field import Field
from .scan import subset_homology


@dataclass
class ChordalityVerdict:
    holds: bool
    kind: str  # "resolution" or "decomposition"
    k: int
    field: Field
    witness_vertices: int | None = None
    witness_cycle: Chain | None = None
    labels: tuple[str, ...] = dc_field(default=(), repr=False)

    def __bool__(self):
        return self.holds

    def witness_labels(self) -> list[str] | None:
        if self.witness_vertices is None:
            return None
        return [self.labels[i] for i in bits(self.witness_vertices)]


def _require_cycle(z: Chain):
    if not is_cycle(z):
        raise ChainError("expected a cycle")


def resolve_cycle(ambient, z: Chain, field: Field | None = None) -> Chain | None:
    """A (k+1)-chain on the vertex support of ``z`` with boundary ``z``, or None."""
    field = field or z.field
    _require_cycle(z)
    if z.ambient is None:
        z = Chain(z.degree, dict(z.terms), field, ambient)
    supp = z.support
    total = ambient.total if isinstance(ambient, RelativeComplex) else ambient
    allowed = [f for f in total.faces_of_dim(z.degree + 1) if not f & ~supp and f in ambient]
    return solve_boundary(z, allowed, field)


def eligible_complete_cycles(cx: SimplicialComplex, support: int, k: int) -> list[int]:
    """(k+2)-subsets of ``support`` whose complete k-cycle lies in ``cx``."""
    faces = cx.faces
    out = []
    for combo in combinations(bits(support), k + 2):
        s = mask_of(combo)
        if all((s & ~(1 << v)) in faces for v in combo):
            out.append(s)
    return out


def decompose_cycle(cx: SimplicialComplex, z: Chain, field: Field | None = None):
    """Write ``z`` as Σ λ_i · ∂S_i over complete k-cycles on its own vertices.

    Returns a list of ``(coefficient, vertex mask)`` pairs in lexicographic
    order, or None when no such combination exists.
    """
    field = field or z.field
    _require_cycle(z)
    k = z.degree
    gens = []
    for s in eligible_complete_cycles(cx, z.support, k):
        row = {g: field(c) for g, c in face_boundary(s).items()}
        gens.append((s, row))
    sol = linalg.solve(dict(z.terms), gens, field)
    if sol is None:
        return None
    return sorted(((c, s) for s, c in sol.items()), key=lambda t: face_key(t[1]))


def is_resolution_chordal(ambient, k: int, field: Field) -> ChordalityVerdict:
    """No induced (relative) subcomplex has homology in degree ``k``."""
    if k < 0:
        raise ValueError("chordality degree must be >= 0")
    sh = subset_homology(ambient, field)
    V = sh.find_nonvanishing(k)
    if V is None:
        return ChordalityVerdict(True, "resolution", k, field, labels=ambient.labels)
    z = sh.nonbounding_cycle(V, k)
    return ChordalityVerdict(False, "resolution", k, field, V, z, labels=ambient.labels)


def is_decomposition_chordal(cx: SimplicialComplex, k: int, field: Field) -> ChordalityVerdict:
    verdict = is_resolution_chordal(clique_complex(cx, k), k, field)
    verdict.kind = "decomposition"
    if verdict.witness_cycle is not None:
        # k-faces of the clique complex are exactly the k-faces of cx
        verdict.witness_cycle.ambient = cx
    return verdict


def leray_number(cx, field: Field) -> int:
    """Least L with vanishing homology of every induced subcomplex in degrees >= L."""
    sh = subset_homology(cx, field)
    for j in range(cx.dim, -1, -1):
        if sh.find_nonvanishing(j) is not None:
            return j + 1
    return 0


def is_leray(cx, k: int, field: Field) -> bool:
    return leray_number(cx, field) <= k


# -- Hochster's formula ---------------------------------------------------


@dataclass
class BettiTable:
    """Graded Betti numbers β_{a,j} of the Stanley-Reisner ring."""

    field: Field
    n: int
    entries: dict[tuple[int, int], int]

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.entries.get(key, 0)

    def t(self, a: int) -> int | None:
        """Largest j with β_{a,j} != 0 (None when row a vanishes)."""
        js = [j for (aa, j), v in self.entries.items() if aa == a and v]
        return max(js) if js else None

    @property
    def regularity(self) -> int:
        return max(j - a for (a, j), v in self.entries.items() if v)

    @property
    def projective_dimension(self) -> int:
        return max(a for (a, _), v in self.entries.items() if v)

    def rows(self) -> list[list[int]]:
        """Macaulay-style table: row r lists β_{a, a+r} for a = 0..n."""
        reg = self.regularity
        return [[self[a, a + r] for a in range(self.n + 1)] for r in range(reg + 1)]


def betti_table(cx: SimplicialComplex, field: Field, threads: int = 1) -> BettiTable:
    """β_{a,j} = Σ_{|W|=j} dim H̃_{j-a-1}(cx|W) over all vertex subsets W."""
    sh = subset_homology(cx, field)
    entries: dict[tuple[int, int], int] = {}
    for W, vec in sh.full_scan(threads).items():
        j = W.bit_count()
        for idx, b in enumerate(vec):
            if b:
                a = j - (idx - 1) - 1
                entries[a, j] = entries.get((a, j), 0) + b
    return BettiTable(field, cx.vertex_mask.bit_count(), entries)


def regularity(cx: SimplicialComplex, field: Field, threads: int = 1) -> int:
    return betti_table(cx, field, threads).regularity


def has_linear_resolution(cx: SimplicialComplex, field: Field) -> bool:
    """Whether the Stanley-Reisner ideal has a linear resolution.

    Raises NotApplicableError when the ideal is zero or its minimal
    generators (the missing faces) live in more than one dimension.
    """
    mf = missing_faces(cx)
    if not mf:
        raise NotApplicableError("no missing faces: the Stanley-Reisner ideal is zero")
    dims = {m.bit_count() - 1 for m in mf}
    if len(dims) > 1:
        raise NotApplicableError(
            f"missing faces in several dimensions {sorted(dims)}: generators are not equigenerated")
    (k,) = dims
    return regularity(cx, field) <= k


def is_cohen_macaulay(cx: SimplicialComplex, field: Field) -> bool:
    """Reisner's criterion: every link has homology only in its top dimension."""
    from .chains import betti_numbers

    for F in sorted(cx.faces, key=face_key):
        lk = link(cx, F)
        top = lk.dim
        bs = betti_numbers(lk, field)  # degrees -1..top
        if any(bs[i + 1] for i in range(-1, top)):
            return False
    return True


# -- propagation harness --------------------------------------------------


@dataclass
class PropagationReport:
    k: int
    field: Field
    no_high_missing_faces: bool
    decomposition_low: dict[int, bool]  # ℓ in [k, 2k-1]
    resolution_low: dict[int, bool]
    resolution_high: dict[int, bool]  # ℓ in [k, dim]
    decomposition_high: dict[int, bool]
    leray: int
    regularity: int | None
    linear_resolution: bool | None = None
    dual_cohen_macaulay: bool | None = None
    t_values: dict[int, int | None] = dc_field(default_factory=dict)
    herzog_srinivasan: bool | None = None
    counterexamples: list[str] = dc_field(default_factory=list)

    @property
    def hypotheses_hold(self) -> bool:
        return self.no_high_missing_faces and all(self.decomposition_low.values())

    @property
    def conclusions_hold(self) -> bool:
        return (all(self.decomposition_high.values()) and all(self.resolution_high.values())
                and self.leray <= self.k)

    @property
    def equivalences_hold(self) -> bool:
        """Whether the equivalent conditions agree (meaningful under the missing-face hypothesis)."""
        vals = [all(self.resolution_low.values()), all(self.resolution_high.values()),
                self.leray <= self.k]
        if self.regularity is not None:
            vals.append(self.regularity <= self.k)
        if self.linear_resolution is not None:
            vals.append(self.linear_resolution)
        if self.dual_cohen_macaulay is not None:
            vals.append(self.dual_cohen_macaulay)
        return len(set(vals)) == 1


def herzog_srinivasan_holds(table: BettiTable) -> bool:
    """t_a <= t_{a-1} + t_1 wherever row a is nonzero."""
    t1 = table.t(1)
    for a in range(1, table.n + 1):
        ta = table.t(a)
        if ta is None:
            continue
        prev = table.t(a - 1)
        if t1 is None or prev is None or ta > prev + t1:
            return False
    return True


def check_propagation(cx: SimplicialComplex, k: int, field: Field,
                      with_table: bool = True, threads: int = 1) -> PropagationReport:
    """Evaluate hypotheses and conclusions of chordality propagation at degree ``k``."""
    mf = missing_faces(cx)
    mf_dims = {m.bit_count() - 1 for m in mf}
    no_high = all(d <= k for d in mf_dims)
    low = range(k, 2 * k)
    dec_low = {l: is_decomposition_chordal(cx, l, field).holds for l in low}
    res_low = {l: is_resolution_chordal(cx, l, field).holds for l in low}
    high = range(k, max(cx.dim, 2 * k - 1) + 1)
    res_high = {l: is_resolution_chordal(cx, l, field).holds for l in high}
    dec_high = {l: is_decomposition_chordal(cx, l, field).holds for l in high}
    L = leray_number(cx, field)
    table = None
    if with_table:
        table = betti_table(cx, field, threads)
    rep = PropagationReport(k, field, no_high, dec_low, res_low, res_high, dec_high, L,
                            table.regularity if table else None)
    if table is not None:
        rep.t_values = {a: table.t(a) for a in range(table.n + 1)}
        rep.herzog_srinivasan = herzog_srinivasan_holds(table)
        if not rep.herzog_srinivasan:
            rep.counterexamples.append("t_a > t_(a-1) + t_1 for some a")
        if rep.regularity != L:
            rep.counterexamples.append(f"regularity {rep.regularity} != Leray number {L}")
    if no_high and mf and mf_dims == {k} and table is not None:
        # the dual's faces grow like 2^n, so this leg shares the scan cap of the table
        rep.linear_resolution = table.regularity <= k
        # dual over the vertex set: the ring in which the missing faces generate the ideal
        rep.dual_cohen_macaulay = is_cohen_macaulay(alexander_dual(cx, cx.vertex_mask), field)
    if rep.hypotheses_hold and not rep.conclusions_hold:
        rep.counterexamples.append("hypotheses hold but a conclusion fails")
    if no_high and not rep.equivalences_hold:
        rep.counterexamples.append("equivalent conditions disagree")
    return rep
