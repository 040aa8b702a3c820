"""Homology of induced subcomplexes, cached per vertex subset.

Every question of the form "does some induced subcomplex have homology in
degree j" goes through :class:`SubsetHomology`.  Two searches are offered:

* :meth:`SubsetHomology.find_nonvanishing` decides existence without
  enumerating all subsets.  A non-bounding cycle on ``V`` is still a
  non-bounding cycle on its own vertex support, so the search only visits
  vertex supports of cycle spaces and never descends below a set whose cycle
  space is zero (or which spans a simplex).
* :meth:`SubsetHomology.full_scan` enumerates every subset; it backs
  Hochster-formula Betti tables and is capped at ``MAX_SCAN_VERTICES``.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from functools import lru_cache

from . import linalg
from .chains import Chain, boundary_rows
from .complexes import RelativeComplex, SimplicialComplex, bits
from .errors import ScanTooLargeError
from .field import Field

MAX_SCAN_VERTICES = int(os.environ.get("HOMCHORD_MAX_SCAN", "18"))
# upper bound on cached (subset, degree) rank entries; 0 disables the cap
CACHE_LIMIT = int(os.environ.get("HOMCHORD_CACHE_MAX", "2000000"))


def subsets_by_size(mask: int):
    """All submasks of ``mask`` ordered by size, then lexicographically."""
    verts = bits(mask)
    out = []
    for sub in range(1 << len(verts)):
        m = 0
        j = 0
        while sub:
            if sub & 1:
                m |= 1 << verts[j]
            sub >>= 1
            j += 1
        out.append(m)
    out.sort(key=lambda m: (m.bit_count(), bits(m)))
    return out


class SubsetHomology:
    """Reduced (relative) homology of ``ambient|V`` for vertex masks ``V``."""

    def __init__(self, ambient: SimplicialComplex | RelativeComplex, field: Field):
        self.ambient = ambient
        self.field = field
        self.relative = isinstance(ambient, RelativeComplex)
        top = ambient.dim
        self.top = top
        self.faces = {d: ambient.faces_of_dim(d) for d in range(-1, top + 1)}
        self.rows = {d: dict(boundary_rows(ambient, d, field)) for d in range(0, top + 1)}
        self._ranks: dict[tuple[int, int], int] = {}
        self.vertex_mask = ambient.vertex_mask
        self._simplex_faces = None if self.relative else ambient.faces

    def _store(self, key, value):
        if CACHE_LIMIT and len(self._ranks) >= CACHE_LIMIT:
            self._ranks.clear()
        self._ranks[key] = value

    def boundary_rank(self, V: int, d: int) -> int:
        """Rank of ∂_d on the induced (relative) chain complex on ``V``."""
        if d < 0 or d > self.top:
            return 0
        key = (V, d)
        r = self._ranks.get(key)
        if r is None:
            rows = self.rows[d]
            r = linalg.rank((rows[f] for f in self.faces[d] if not f & ~V and rows[f]), self.field)
            self._store(key, r)
        return r

    def chain_rank(self, V: int, d: int) -> int:
        return sum(1 for f in self.faces.get(d, ()) if not f & ~V)

    def betti(self, V: int, d: int) -> int:
        n = self.chain_rank(V, d)
        if not n:
            return 0
        return n - self.boundary_rank(V, d) - self.boundary_rank(V, d + 1)

    def vector(self, V: int) -> tuple[int, ...]:
        """Betti numbers of the induced complex in degrees -1..dim."""
        return tuple(self.betti(V, d) for d in range(-1, self.top + 1))

    def cycle_basis(self, V: int, d: int) -> list[dict]:
        if d == -1:
            return [{0: 1}] if 0 in self.faces[-1] else []
        if d < -1 or d > self.top:
            return []
        rows = self.rows[d]
        gens = [(f, rows[f]) for f in self.faces[d] if not f & ~V]
        return linalg.kernel(gens, self.field)

    def cycle_support(self, V: int, d: int) -> int:
        """Vertices of faces occurring in some d-cycle of ``ambient|V``."""
        m = 0
        for z in self.cycle_basis(V, d):
            for f in z:
                m |= f
        return m

    def bounds(self, V: int, d: int, z: dict) -> bool:
        rows = self.rows.get(d + 1, {})
        ech = linalg.RowEchelon(self.field)
        for f in self.faces.get(d + 1, ()):
            if not f & ~V and rows[f]:
                ech.insert(rows[f])
        return ech.contains(z)

    def nonbounding_cycle(self, V: int, d: int) -> Chain | None:
        rows = self.rows.get(d + 1, {})
        ech = linalg.RowEchelon(self.field)
        for f in self.faces.get(d + 1, ()):
            if not f & ~V and rows[f]:
                ech.insert(rows[f])
        for z in self.cycle_basis(V, d):
            if not ech.contains(z):
                return Chain(d, z, self.field, self.ambient)
        return None

    # -- searches ---------------------------------------------------------

    def find_nonvanishing(self, d: int, within: int | None = None) -> int | None:
        """An inclusion-minimal ``V`` with nonzero homology in degree ``d``, or None."""
        root = self.vertex_mask if within is None else within & self.vertex_mask
        if d < 0:
            return 0 if d == -1 and self.betti(0, -1) else None
        seen: set[int] = set()
        stack = [root]
        while stack:
            U = stack.pop()
            S = self.cycle_support(U, d)
            if not S or S in seen:
                continue
            seen.add(S)
            if self._simplex_faces is not None and S in self._simplex_faces:
                continue
            if self.betti(S, d):
                return self.shrink(S, d)
            for v in reversed(bits(S)):
                stack.append(S & ~(1 << v))
        return None

    def shrink(self, V: int, d: int) -> int:
        """Drop vertices (lowest first) while homology in degree d survives."""
        for v in bits(V):
            W = V & ~(1 << v)
            if self.betti(W, d):
                V = W
        return V

    def full_scan(self, threads: int = 1) -> dict[int, tuple[int, ...]]:
        """Betti vectors of every induced subcomplex on a subset of the vertices."""
        n = self.vertex_mask.bit_count()
        if n > MAX_SCAN_VERTICES:
            raise ScanTooLargeError(
                f"full subset scan over {n} vertices exceeds the limit of {MAX_SCAN_VERTICES}")
        subsets = subsets_by_size(self.vertex_mask)
        if threads > 1:
            with ThreadPoolExecutor(max_workers=threads) as pool:
                vectors = list(pool.map(self.vector, subsets))
        else:
            vectors = [self.vector(V) for V in subsets]
        return dict(zip(subsets, vectors))


@lru_cache(maxsize=256)
def subset_homology(ambient, field: Field) -> SubsetHomology:
    return SubsetHomology(ambient, field)
