"""Sparse exact Gaussian elimination over a :class:`~homchord.field.Field`.

Vectors are ``dict[int, coeff]`` keyed by column index with no zero entries.
Pivoting is deterministic: every stored row is keyed by its smallest column
and rows are consumed in the order they are inserted, so witnesses and
solutions are reproducible run to run.
"""

from __future__ import annotations

import heapq
from typing import Hashable, Iterable

from .field import Field


class RowEchelon:
    """Incrementally maintained echelon basis of a row space.

    With ``track=True`` every stored row remembers how it was formed from the
    inserted vectors (by their tags), which is what :func:`solve` and
    :func:`kernel` need.
    """

    def __init__(self, field: Field, track: bool = False):
        self.field = field
        self.rows: dict[int, dict] = {}
        self.combos: dict[int, dict] | None = {} if track else None

    def __len__(self):
        return len(self.rows)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def _eliminate(self, vec: dict, combo: dict | None, stop_at_free: bool):
        """Reduce ``vec`` in place; returns the first non-pivot column hit
        when ``stop_at_free`` is set, otherwise None."""
        p = self.field.p
        rows, combos = self.rows, self.combos
        heap = list(vec)
        heapq.heapify(heap)
        while heap:
            c = heapq.heappop(heap)
            a = vec.get(c)
            if a is None:
                continue
            row = rows.get(c)
            if row is None:
                if stop_at_free:
                    return c
                continue
            for col, val in row.items():
                old = vec.get(col)
                if old is None:
                    nv = -a * val
                    if p:
                        nv %= p
                    vec[col] = nv
                    heapq.heappush(heap, col)
                else:
                    nv = old - a * val
                    if p:
                        nv %= p
                    if nv:
                        vec[col] = nv
                    else:
                        del vec[col]
            if combo is not None:
                for tag, val in combos[c].items():
                    nv = combo.get(tag, 0) - a * val
                    if p:
                        nv %= p
                    if nv:
                        combo[tag] = nv
                    else:
                        combo.pop(tag, None)
        return None

    def insert(self, vec: dict, tag: Hashable = None):
        """Add ``vec`` to the row space.

        Returns ``None`` when ``vec`` was independent.  When it was dependent
        and tracking is on, returns the relation (tag -> coeff) whose
        combination of inserted vectors is zero; without tracking returns
        an empty dict.
        """
        vec = dict(vec)
        combo = {tag: 1} if self.combos is not None else None
        lead = self._eliminate(vec, combo, stop_at_free=True)
        if lead is None:
            return combo if combo is not None else {}
        f = self.field
        a = vec[lead]
        if a != 1:
            inv = f.inv(a)
            vec = {c: f.mul(v, inv) for c, v in vec.items()}
            if combo is not None:
                combo = {t: f.mul(v, inv) for t, v in combo.items()}
        self.rows[lead] = vec
        if combo is not None:
            self.combos[lead] = combo
        return None

    def reduce(self, vec: dict) -> tuple[dict, dict | None]:
        """Fully reduce ``vec``; returns (residual, combination used).

        ``vec - residual == sum(coeff * inserted[tag])`` over the returned
        combination when tracking is on.
        """
        vec = dict(vec)
        combo = {} if self.combos is not None else None
        self._eliminate(vec, combo, stop_at_free=False)
        if combo is not None:
            f = self.field
            combo = {t: f.neg(v) for t, v in combo.items()}
        return vec, combo

    def contains(self, vec: dict) -> bool:
        return not self.reduce(vec)[0]


def rank(rows: Iterable[dict], field: Field) -> int:
    ech = RowEchelon(field)
    for r in rows:
        if r:
            ech.insert(r)
    return ech.rank


def solve(target: dict, generators: Iterable[tuple[Hashable, dict]], field: Field):
    """Find coefficients ``x`` with ``sum(x[t] * g_t) == target``.

    Returns a dict tag -> nonzero coefficient, or None when ``target`` is not
    in the span of the generators.
    """
    ech = RowEchelon(field, track=True)
    for tag, vec in generators:
        ech.insert(vec, tag)
    residual, combo = ech.reduce(target)
    if residual:
        return None
    return {t: v for t, v in combo.items() if v}


def kernel(generators: Iterable[tuple[Hashable, dict]], field: Field) -> list[dict]:
    """Basis of linear relations among the generators (tag -> coeff)."""
    ech = RowEchelon(field, track=True)
    out = []
    for tag, vec in generators:
        rel = ech.insert(vec, tag)
        if rel is not None:
            out.append(rel)
    return out
