"""Face adjacency graphs, relative k-cuts, homology cuts and reverse propagation.

Γ_k has the k-faces as nodes; two k-faces are adjacent when they share a
(k-1)-face, which labels the edge.  A set 𝒞 of (k-1)-faces blocks a path

* ``mode="edge"`` (default): when the path traverses an edge labelled by a
  member of 𝒞.  For graphs (k=1) these are exactly vertex separators.
* ``mode="face"``: when the path enters a k-face containing a member of 𝒞
  (the start face is exempt).

Results under the two modes are never mixed; every report records its mode.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field as dc_field
from itertools import combinations

from . import linalg
from .chains import boundary_rows
from .chordality import is_decomposition_chordal
from .complexes import SimplicialComplex, bits, extended_link, face_key, skeleton
from .errors import FaceError, NotApplicableError
from .field import Field, Q

MODES = ("edge", "face")


@dataclass
class FaceAdjacencyGraph:
    k: int
    nodes: list[int]
    adj: dict[int, list[tuple[int, int]]]  # node -> [(neighbour, label)]

    def edges(self) -> list[tuple[int, int, int]]:
        out = []
        for a in self.nodes:
            for b, lab in self.adj[a]:
                if face_key(a) < face_key(b):
                    out.append((a, b, lab))
        return out

    def degree(self, node: int) -> int:
        return len(self.adj[node])

    def is_connected(self) -> bool:
        if not self.nodes:
            return True
        seen = {self.nodes[0]}
        todo = [self.nodes[0]]
        while todo:
            a = todo.pop()
            for b, _ in self.adj[a]:
                if b not in seen:
                    seen.add(b)
                    todo.append(b)
        return len(seen) == len(self.nodes)


def face_adjacency_graph(cx: SimplicialComplex, k: int) -> FaceAdjacencyGraph:
    if k < 1:
        raise ValueError("face adjacency graphs need k >= 1")
    nodes = sorted(cx.faces_of_dim(k), key=face_key)
    by_ridge: dict[int, list[int]] = {}
    for f in nodes:
        for v in bits(f):
            by_ridge.setdefault(f & ~(1 << v), []).append(f)
    adj: dict[int, list[tuple[int, int]]] = {f: [] for f in nodes}
    for ridge, fs in by_ridge.items():
        for a, b in combinations(fs, 2):
            adj[a].append((b, ridge))
            adj[b].append((a, ridge))
    for f in nodes:
        adj[f].sort(key=lambda t: face_key(t[0]))
    return FaceAdjacencyGraph(k, nodes, adj)


@dataclass
class CutReport:
    k: int
    mode: str
    cut: list[int]
    source: int
    target: int
    is_cut: bool
    component_source: SimplicialComplex
    component_target: SimplicialComplex
    is_minimal: bool | None = None
    homology_source: bool | None = None
    homology_target: bool | None = None
    labels: tuple[str, ...] = dc_field(default=(), repr=False)
    route: str | None = None  # how find_extended_link_minimal_cut found it

    @property
    def two_sided(self) -> bool | None:
        if self.homology_source is None or self.homology_target is None:
            return None
        return self.homology_source and self.homology_target

    def to_json(self) -> dict:
        lab = lambda m: [self.labels[i] for i in bits(m)]  # noqa: E731
        return {
            "k": self.k, "mode": self.mode,
            "cut": [lab(c) for c in self.cut],
            "source": lab(self.source), "target": lab(self.target),
            "is_cut": self.is_cut, "is_minimal": self.is_minimal,
            "component_source": [list(f) for f in self.component_source.facet_list()],
            "component_target": [list(f) for f in self.component_target.facet_list()],
            "homology_source": self.homology_source, "homology_target": self.homology_target,
            "two_sided": self.two_sided, "route": self.route,
        }


class _Cutter:
    """Reachability in Γ_k avoiding a cut; shared by all cut queries on one complex."""

    def __init__(self, cx: SimplicialComplex, k: int, mode: str = "edge"):
        if mode not in MODES:
            raise ValueError(f"cut mode must be one of {MODES}")
        self.cx, self.k, self.mode = cx, k, mode
        self.graph = face_adjacency_graph(cx, k)

    def sources(self, sigma: int) -> list[int]:
        return [f for f in self.graph.nodes if f & sigma == sigma]

    def star_faces(self, sigma: int) -> list[int]:
        faces = self.cx.faces
        return [f for f in self.graph.nodes if (f | sigma) in faces]

    def reach(self, start, cut: frozenset) -> set[int]:
        seen = set(start)
        todo = deque(sorted(seen, key=face_key))
        edge_mode = self.mode == "edge"
        while todo:
            a = todo.popleft()
            for b, lab in self.graph.adj[a]:
                if b in seen:
                    continue
                if edge_mode:
                    if lab in cut:
                        continue
                elif any(c & b == c for c in cut):
                    continue
                seen.add(b)
                todo.append(b)
        return seen

    def component(self, faces) -> SimplicialComplex:
        return SimplicialComplex.from_masks(self.cx.labels, faces)

    def separates(self, cut: frozenset, sigma: int, tau: int) -> bool:
        targets = set(self.sources(tau))
        return not (self.reach(self.sources(sigma), cut) & targets)


def _validate(cx: SimplicialComplex, cutter: _Cutter, cut, sigma: int, tau: int) -> frozenset:
    for face, name in ((sigma, "source"), (tau, "target")):
        cx.require_face(face)
        if not cutter.sources(face):
            raise FaceError(f"{name} {{{', '.join(cx.face_labels(face))}}} lies in no {cutter.k}-face")
    cut = frozenset(cut)
    for c in cut:
        if c.bit_count() != cutter.k or c not in cx.faces:
            raise FaceError(f"cut member {{{', '.join(cx.face_labels(c))}}} is not a ({cutter.k - 1})-face")
    return cut


def is_cut(cx: SimplicialComplex, cut, sigma: int, tau: int, k: int,
           mode: str = "edge") -> CutReport:
    """Does ``cut`` separate the k-faces containing ``sigma`` from those containing ``tau``?"""
    cutter = _Cutter(cx, k, mode)
    return _report(cutter, _validate(cx, cutter, cut, sigma, tau), sigma, tau)


def _report(cutter: _Cutter, cut: frozenset, sigma: int, tau: int) -> CutReport:
    ok = cutter.separates(cut, sigma, tau)
    comp_s = cutter.component(cutter.reach(cutter.star_faces(sigma), cut))
    comp_t = cutter.component(cutter.reach(cutter.star_faces(tau), cut))
    return CutReport(cutter.k, cutter.mode, sorted(cut, key=face_key), sigma, tau, ok,
                     comp_s, comp_t, labels=cutter.cx.labels)


def _is_minimal(cutter: _Cutter, cut: frozenset, sigma: int, tau: int) -> bool:
    return all(not cutter.separates(cut - {c}, sigma, tau) for c in cut)


def minimal_cut(cx: SimplicialComplex, sigma: int, tau: int, k: int,
                mode: str = "edge") -> CutReport:
    """Greedy lexicographic thinning of the ridges of the k-faces containing ``sigma``."""
    cutter = _Cutter(cx, k, mode)
    if len(cutter.graph.nodes) < 2:
        raise NotApplicableError(f"need at least two {k}-faces")
    start = set()
    for f in cutter.sources(sigma):
        start.update(f & ~(1 << v) for v in bits(f))
    cut = _validate(cx, cutter, start, sigma, tau)
    if not cutter.separates(cut, sigma, tau):
        raise NotApplicableError("some k-face contains both faces; no cut separates them")
    for c in sorted(cut, key=face_key):
        if cutter.separates(cut - {c}, sigma, tau):
            cut = cut - {c}
    rep = _report(cutter, cut, sigma, tau)
    rep.is_minimal = _is_minimal(cutter, cut, sigma, tau)
    return rep


# -- homology cuts ----------------------------------------------------------


class _SideTest:
    """Decides, for one component L, whether every (k-1)-cycle of the cut
    complex bounds in L with support meeting the cut's vertices only inside
    its own support."""

    def __init__(self, cut_cx: SimplicialComplex, side: SimplicialComplex, k: int, field: Field):
        self.cut_cx, self.k, self.field = cut_cx, k, field
        self.cut_vertices = cut_cx.vertex_mask
        self.rows = dict(boundary_rows(cut_cx, k - 1, field))
        self.side_rows = [(f, row) for f, row in boundary_rows(side, k, field)]

    def cycles(self, W: int) -> list[dict]:
        gens = [(f, self.rows[f]) for f in self.cut_cx.faces_of_dim(self.k - 1) if not f & ~W]
        return linalg.kernel(gens, self.field)

    def holds_at(self, W: int, cycles) -> bool:
        ech = linalg.RowEchelon(self.field)
        outside = self.cut_vertices & ~W
        for f, row in self.side_rows:
            if not f & outside:
                ech.insert(row)
        return all(ech.contains(z) for z in cycles)

    def holds(self) -> bool:
        seen: set[int] = set()
        stack = [self.cut_vertices]
        while stack:
            U = stack.pop()
            zs = self.cycles(U)
            S = 0
            for z in zs:
                for f in z:
                    S |= f
            if not S or S in seen:
                continue
            seen.add(S)
            if not self.holds_at(S, zs):
                return False
            stack.extend(S & ~(1 << v) for v in reversed(bits(S)))
        return True


def cut_complex(labels, cut) -> SimplicialComplex:
    return SimplicialComplex.from_masks(labels, list(cut))


def is_homology_cut(cx: SimplicialComplex, cut, sigma: int, tau: int, k: int,
                    field: Field = Q, mode: str = "edge",
                    sides: tuple[str, ...] = ("source", "target")) -> CutReport:
    """Cut report with the per-side homology flags filled in for ``sides``."""
    rep = is_cut(cx, cut, sigma, tau, k, mode)
    if not rep.is_cut:
        raise NotApplicableError("not a cut; homology-cut flags are undefined")
    return _fill_homology(rep, field, sides)


def _fill_homology(rep: CutReport, field: Field, sides) -> CutReport:
    C = cut_complex(rep.labels, rep.cut)
    for side in sides:
        comp = rep.component_source if side == "source" else rep.component_target
        flag = _SideTest(C, comp, rep.k, field).holds()
        setattr(rep, f"homology_{side}", flag)
    return rep


# -- extended-link cuts ------------------------------------------------------


def elink_cut_faces(cx: SimplicialComplex, sigma: int, k: int) -> frozenset:
    return frozenset(extended_link(cx, sigma).faces_of_dim(k - 1))


def _outside_representatives(cutter: _Cutter, cut: frozenset, sigma: int) -> list[int]:
    """First k-face of every cut-avoiding component not touching St_σ."""
    seen = cutter.reach(cutter.star_faces(sigma), cut)
    reps = []
    for f in cutter.graph.nodes:
        if f in seen:
            continue
        reps.append(f)
        seen |= cutter.reach([f], cut)
    return reps


def _elink_report(cutter: _Cutter, sigma: int) -> CutReport | None:
    """A minimal cut report for eLk_σ relative to σ and some outside k-face, if any."""
    cut = elink_cut_faces(cutter.cx, sigma, cutter.k)
    if not cut:
        return None
    for tau in _outside_representatives(cutter, cut, sigma):
        if not cutter.separates(cut, sigma, tau):
            continue
        if _is_minimal(cutter, cut, sigma, tau):
            rep = _report(cutter, cut, sigma, tau)
            rep.is_minimal = True
            return rep
    return None


def _is_elink_cut(cutter: _Cutter, sigma: int) -> bool:
    cut = elink_cut_faces(cutter.cx, sigma, cutter.k)
    return any(cutter.separates(cut, sigma, t) for t in _outside_representatives(cutter, cut, sigma))


def _guided_candidate(cutter: _Cutter) -> int | None:
    """Follow the constructive existence argument once; None if it stalls."""
    cx, k = cutter.cx, cutter.k
    ridges = sorted(cx.faces_of_dim(k - 1), key=face_key)
    tau = next((t for t in ridges if _is_elink_cut(cutter, t)), None)
    if tau is None:
        return None
    if _elink_report(cutter, tau) is not None:
        return tau
    star_tau = set(cutter.sources(tau))
    for tp in sorted(elink_cut_faces(cx, tau, k), key=face_key):
        if not set(cutter.sources(tp)) <= star_tau:
            continue
        sigma_p = tau | tp
        if sigma_p not in cx.faces:
            continue
        free = [sigma_p & ~(1 << v) for v in bits(sigma_p)]
        free = [r for r in free if cutter.sources(r) == [sigma_p]]
        if not free:
            continue
        meet = sigma_p
        for r in free:
            meet &= r
        if meet:
            return meet
    return None


def find_extended_link_minimal_cut(cx: SimplicialComplex, k: int, field: Field = Q,
                                   mode: str = "edge") -> tuple[int, CutReport]:
    """A face σ (dim <= k-1) whose extended link's (k-1)-faces form a minimal k-cut.

    The report's ``homology_source`` flag is the St_σ-side homology-cut test.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    cutter = _Cutter(cx, k, mode)
    if cx.dim != k or not cx.is_pure:
        raise NotApplicableError(f"complex must be pure of dimension {k}")
    if len(cutter.graph.nodes) < 2:
        raise NotApplicableError(f"need at least two {k}-faces")
    if not cutter.graph.is_connected():
        raise NotApplicableError(f"Γ_{k} is disconnected")
    guided = _guided_candidate(cutter)
    candidates = [] if guided is None else [(guided, "guided")]
    rest = sorted((f for f in cx.faces if f and f.bit_count() <= k),
                  key=lambda f: (f.bit_count(), face_key(f)))
    candidates += [(f, "scan") for f in rest if f != guided]
    for sigma, route in candidates:
        rep = _elink_report(cutter, sigma)
        if rep is None:
            continue
        rep.route = route
        _fill_homology(rep, field, ("source",))
        return sigma, rep
    raise NotApplicableError("no face has an extended link that is a minimal cut")


@dataclass
class ElinkCutCheck:
    sigma: int
    is_cut: bool
    two_sided: bool
    reports: list[CutReport]


def extended_link_two_sided(cx: SimplicialComplex, sigma: int, k: int, field: Field = Q,
                            mode: str = "edge") -> ElinkCutCheck:
    """Is eLk_σ (its (k-1)-faces) a two-sided homology k-cut relative to σ and some k-face?"""
    cx.require_face(sigma)
    cutter = _Cutter(cx, k, mode)
    if not cutter.sources(sigma):
        raise FaceError(f"face lies in no {k}-face")
    cut = elink_cut_faces(cx, sigma, k)
    reports = []
    for tau in _outside_representatives(cutter, cut, sigma):
        rep = _report(cutter, cut, sigma, tau)
        if not rep.is_cut:
            continue
        # the far side is usually the one that fails, so test it first
        _fill_homology(rep, field, ("target",))
        if rep.homology_target:
            _fill_homology(rep, field, ("source",))
        reports.append(rep)
        if rep.two_sided:
            return ElinkCutCheck(sigma, True, True, reports)
    return ElinkCutCheck(sigma, bool(reports), False, reports)


# -- reverse propagation ------------------------------------------------------


@dataclass
class ReversePropagationReport:
    sigma: int
    k: int
    field: Field
    decomposition_chordal: bool  # hypothesis (a)
    two_sided_cut: bool  # hypothesis (b)
    upper_cut: bool  # hypothesis (c)
    upper_cut_vacuous: bool
    conclusion: bool
    witness_pair: tuple[int, int] | None = None
    upper_pair: tuple[int, int] | None = None

    @property
    def hypotheses_hold(self) -> bool:
        return self.decomposition_chordal and self.two_sided_cut and self.upper_cut

    @property
    def violated(self) -> bool:
        return self.hypotheses_hold and not self.conclusion


def _pair_search(cutter: _Cutter, cut: frozenset):
    """Pairs (F, G) of k-faces separated by ``cut``, one per pair of components."""
    done = set()
    nodes = cutter.graph.nodes
    reach = {f: frozenset(cutter.reach([f], cut)) for f in nodes}
    for F in nodes:
        for G in nodes:
            # a k-face is the only k-face containing itself
            if G in reach[F]:
                continue
            key = (reach[F], reach[G])
            if key in done:
                continue
            done.add(key)
            yield F, G


def check_reverse_propagation(cx: SimplicialComplex, sigma: int, k: int, field: Field = Q,
                              mode: str = "edge") -> ReversePropagationReport:
    if k < 1:
        raise ValueError("k must be >= 1")
    cx.require_face(sigma)
    if sigma.bit_count() != k + 1:
        raise FaceError(f"σ must be a {k}-face")
    elk = extended_link(cx, sigma)
    a = is_decomposition_chordal(cx, k, field).holds

    sk = skeleton(cx, k)
    cutter = _Cutter(sk, k, mode)
    cut = frozenset(elk.faces_of_dim(k - 1))
    b, pair = False, None
    for F, G in _pair_search(cutter, cut):
        rep = _fill_homology(_report(cutter, cut, F, G), field, ("target",))
        if rep.homology_target and _fill_homology(rep, field, ("source",)).two_sided:
            b, pair = True, (F, G)
            break

    upper = skeleton(cx, k + 1)
    vacuous = not upper.faces_of_dim(k + 1)
    c, upair = vacuous, None
    if not vacuous:
        ucut = _Cutter(upper, k + 1, mode)
        for F, G in _pair_search(ucut, frozenset(elk.faces_of_dim(k))):
            c, upair = True, (F, G)
            break

    concl = is_decomposition_chordal(elk, k - 1, field).holds
    return ReversePropagationReport(sigma, k, field, a, b, c, vacuous, concl, pair, upair)
