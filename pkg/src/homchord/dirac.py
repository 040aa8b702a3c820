"""Recognition of k-Dirac complexes by exhaustive memoized search.

A complex is k-Dirac when its k-skeleton is that of a simplex, or when some
face σ with dim σ <= k-1 can be eliminated: Δ-σ is k-Dirac, eLk_σΔ is
(k-1)-Dirac and Cl_{k-1}(eLk_σΔ) = eLk_σ(Cl_kΔ).  The search tries faces in
(dimension, lexicographic) order, so the certificate it returns is the
least one at every level.  ``replay`` re-checks a certificate using plain
frozensets of labels and shares no code with the search.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from itertools import combinations
from math import comb

from .complexes import SimplicialComplex, clique_complex, delete, extended_link, face_key
from .errors import BudgetExceeded

CERTIFIED, EXHAUSTED, BUDGET = "certified", "exhausted", "budget"


@dataclass
class DiracCertificate:
    k: int
    facets: list[tuple[str, ...]]  # the complex this node certifies
    sigma: tuple[str, ...] | None = None  # None marks the base case
    rest: "DiracCertificate | None" = None  # certificate of Δ - σ at level k
    link: "DiracCertificate | None" = None  # certificate of eLk_σ Δ at level k-1

    @property
    def is_base(self) -> bool:
        return self.sigma is None

    def steps(self) -> list[tuple[str, ...]]:
        """Faces eliminated along the top-level chain."""
        out, node = [], self
        while node is not None and not node.is_base:
            out.append(node.sigma)
            node = node.rest
        return out

    def to_json(self) -> dict:
        d = {"k": self.k, "facets": [list(f) for f in self.facets]}
        if self.is_base:
            d["base"] = "complete k-skeleton of a simplex"
        else:
            d["sigma"] = list(self.sigma)
            d["rest"] = self.rest.to_json()
            d["extended_link"] = self.link.to_json()
        return d

    @classmethod
    def from_json(cls, d: dict) -> "DiracCertificate":
        facets = [tuple(f) for f in d["facets"]]
        if "sigma" not in d:
            return cls(d["k"], facets)
        return cls(d["k"], facets, tuple(d["sigma"]), cls.from_json(d["rest"]),
                   cls.from_json(d["extended_link"]))


@dataclass
class DiracResult:
    status: str
    certificate: DiracCertificate | None
    nodes: int

    @property
    def holds(self) -> bool | None:
        return {CERTIFIED: True, EXHAUSTED: False}.get(self.status)


def complete_skeleton(cx: SimplicialComplex, k: int) -> bool:
    """Whether Sk_k(cx) is the k-skeleton of the simplex on its vertices."""
    if cx.is_void:
        return False
    n = cx.vertex_mask.bit_count()
    return all(len(cx.faces_of_dim(j)) == comb(n, j + 1) for j in range(0, k + 1))


class _Search:
    def __init__(self, labels, budget: int | None):
        self.labels = labels
        self.budget = budget
        self.nodes = 0
        self.memo: dict[tuple[frozenset, int], DiracCertificate | None] = {}

    def cert(self, cx: SimplicialComplex, k: int, **kw) -> DiracCertificate:
        return DiracCertificate(k, cx.facet_list(), **kw)

    def run(self, cx: SimplicialComplex, k: int) -> DiracCertificate | None:
        key = (cx.facets, k)
        if key in self.memo:
            return self.memo[key]
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise BudgetExceeded(f"Dirac search exceeded {self.budget} nodes")
        out = None
        if complete_skeleton(cx, k):
            out = self.cert(cx, k)
        elif k >= 1:
            out = self._step(cx, k)
        self.memo[key] = out
        return out

    def _step(self, cx: SimplicialComplex, k: int) -> DiracCertificate | None:
        cl_k = clique_complex(cx, k)
        candidates = sorted((f for f in cx.faces if f and f.bit_count() <= k),
                            key=lambda f: (f.bit_count(), face_key(f)))
        for sigma in candidates:
            elk = extended_link(cx, sigma)
            if clique_complex(elk, k - 1).facets != extended_link(cl_k, sigma).facets:
                continue
            link_cert = self.run(elk, k - 1)
            if link_cert is None:
                continue
            rest_cert = self.run(delete(cx, sigma), k)
            if rest_cert is None:
                continue
            return self.cert(cx, k, sigma=cx.face_labels(sigma), rest=rest_cert, link=link_cert)
        return None


def dirac_search(cx: SimplicialComplex, k: int, budget: int | None = None) -> DiracResult:
    """Search for a k-Dirac certificate; ``budget`` caps the number of distinct subproblems."""
    if k < 0:
        raise ValueError("k must be >= 0")
    s = _Search(cx.labels, budget)
    old = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old, 20000))
    try:
        cert = s.run(cx, k)
    except BudgetExceeded:
        return DiracResult(BUDGET, None, s.nodes)
    finally:
        sys.setrecursionlimit(old)
    return DiracResult(CERTIFIED if cert else EXHAUSTED, cert, s.nodes)


def is_k_dirac(cx: SimplicialComplex, k: int, budget: int | None = None) -> DiracCertificate | None:
    """Certificate or None (a proof of non-Diracness); raises BudgetExceeded when undecided."""
    res = dirac_search(cx, k, budget)
    if res.status == BUDGET:
        raise BudgetExceeded(f"Dirac search exceeded {budget} nodes")
    return res.certificate


# -- independent replay -----------------------------------------------------


def _closure(facets) -> set[frozenset]:
    out = set()
    for f in facets:
        f = tuple(f)
        for r in range(len(f) + 1):
            out.update(frozenset(c) for c in combinations(f, r))
    return out


def _maximal(faces: set[frozenset]) -> set[frozenset]:
    return {f for f in faces if not any(f < g for g in faces)}


def _clique(faces: set[frozenset], k: int) -> set[frozenset]:
    verts = sorted({v for f in faces for v in f})
    out = set()
    for r in range(len(verts) + 1):
        for s in combinations(verts, r):
            if all(frozenset(t) in faces for j in range(min(r, k + 1) + 1) for t in combinations(s, j)):
                out.add(frozenset(s))
    return out


def _elink(faces: set[frozenset], sigma: frozenset) -> set[frozenset]:
    return {f for f in faces if (f | sigma) in faces and not sigma <= f}


def replay(cert: DiracCertificate, facets=None) -> bool:
    """Re-verify ``cert`` from scratch; ``facets`` (label sets) pins the complex it must certify."""
    faces = _closure(cert.facets)
    if facets is not None and _closure(facets) != faces:
        return False
    if cert.k < 0:
        return False
    if cert.is_base:
        if not faces:
            return False
        verts = {v for f in faces for v in f}
        need = {frozenset(c) for j in range(min(cert.k + 1, len(verts)) + 1)
                for c in combinations(sorted(verts), j)}
        return need <= faces
    sigma = frozenset(cert.sigma)
    if not sigma or sigma not in faces or len(sigma) > cert.k or cert.k < 1:
        return False
    elk = _elink(faces, sigma)
    if _clique(elk, cert.k - 1) != _elink(_clique(faces, cert.k), sigma):
        return False
    rest = {f for f in faces if not sigma <= f}
    if cert.rest.k != cert.k or cert.link.k != cert.k - 1:
        return False
    return (replay(cert.link, _maximal(elk) if elk else [])
            and replay(cert.rest, _maximal(rest) if rest else []))
