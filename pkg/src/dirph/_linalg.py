"""Small exact linear algebra over the rationals.

Vectors are sparse dicts ``index -> Fraction``.  ``Echelon`` keeps a row
space in reduced form and supports incremental insertion, which is all the
rank bookkeeping in this package needs.
"""

from __future__ import annotations

from fractions import Fraction

SparseVector = dict[int, Fraction]


def _reduce_against(vector: SparseVector, *pivot_maps: dict[int, SparseVector]) -> SparseVector:
    """Reduce the top entry repeatedly against every pivot map at once.

    Interleaving matters: cancelling the leading entry with one map can
    expose an entry whose pivot lives in another.
    """
    v = dict(vector)
    while v:
        pivot = max(v)
        row = None
        for pivots in pivot_maps:
            row = pivots.get(pivot)
            if row is not None:
                break
        if row is None:
            return v
        factor = v[pivot] / row[pivot]
        for j, c in row.items():
            value = v.get(j, Fraction(0)) - factor * c
            if value == 0:
                v.pop(j, None)
            else:
                v[j] = value
    return v


class Echelon:
    """Incrementally built echelon basis of a rational row space."""

    __slots__ = ("pivots",)

    def __init__(self) -> None:
        self.pivots: dict[int, SparseVector] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def residual(self, vector: SparseVector) -> SparseVector:
        """Reduce ``vector`` against the basis without inserting it."""
        return _reduce_against(vector, self.pivots)

    def contains(self, vector: SparseVector) -> bool:
        return not self.residual(vector)

    def add(self, vector: SparseVector) -> bool:
        """Insert a vector; returns True when it enlarged the space."""
        residual = self.residual(vector)
        if not residual:
            return False
        self.pivots[max(residual)] = residual
        return True

    def extended_rank(self, vectors: list[SparseVector]) -> int:
        """Rank of ``span(self) + span(vectors)`` minus ``self.rank``,
        computed without mutating the basis."""
        extra: dict[int, SparseVector] = {}
        count = 0
        for vector in vectors:
            residual = _reduce_against(vector, self.pivots, extra)
            if residual:
                extra[max(residual)] = residual
                count += 1
        return count

    def basis(self) -> list[SparseVector]:
        return [dict(self.pivots[p]) for p in sorted(self.pivots)]


def rank_of(vectors: list[SparseVector]) -> int:
    e = Echelon()
    for v in vectors:
        e.add(v)
    return e.rank
