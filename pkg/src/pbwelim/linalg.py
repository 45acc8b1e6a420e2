"""Sparse exact row reduction.

Vectors are dicts column -> nonzero scalar. Columns are ranked by a
caller-supplied priority key (smaller key = eliminated first), which is how
the elimination oracle forces non-kept monomials out before kept ones.
"""
from __future__ import annotations

from typing import Callable, Hashable, Mapping

from .polynomial import add_scaled


class EchelonBasis:
    """Incrementally maintained row-echelon basis over an exact field."""

    def __init__(self, priority: Callable[[Hashable], object] | None = None):
        self._priority = priority or (lambda c: c)
        self.pivots: dict = {}  # pivot column -> row with coefficient 1 there

    def __len__(self):
        return len(self.pivots)

    def lead(self, vec: Mapping):
        return min(vec, key=self._priority)

    def reduce(self, vec: Mapping) -> dict:
        """Return ``vec`` reduced so that its leading column is not a pivot."""
        v = dict(vec)
        while v:
            col = self.lead(v)
            row = self.pivots.get(col)
            if row is None:
                break
            add_scaled(v, row, -v[col])
        return v

    def insert(self, vec: Mapping) -> dict | None:
        """Reduce and add ``vec``; return the new pivot row or ``None`` if dependent."""
        v = self.reduce(vec)
        if not v:
            return None
        col = self.lead(v)
        inv = 1 / v[col]
        v = {c: x * inv for c, x in v.items()}
        self.pivots[col] = v
        return v


def rank(rows, priority=None) -> int:
    basis = EchelonBasis(priority)
    for r in rows:
        basis.insert(r)
    return len(basis)
