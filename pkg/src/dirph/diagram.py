"""Persistence diagrams and barcodes.

A diagram is a multiset of (birth, death) pairs per dimension; ``None`` plays
the role of +infinity for deaths and is a distinguished value rather than a
large sentinel rational, so that downstream distance code can implement
``inf - inf == 0`` explicitly.  Producers never emit zero-length pairs.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from typing import Iterable, Mapping

Death = Fraction | None  # None encodes +infinity
Point = tuple[Fraction, Death]


def _point_key(p: Point) -> tuple:
    birth, death = p
    return (birth, death is None, death if death is not None else 0)


class PersistenceDiagram:
    """Multiset of (birth, death) points of one homology dimension."""

    __slots__ = ("dimension", "points")

    def __init__(self, dimension: int, points: Mapping[Point, int] | Iterable[Point] = ()):
        self.dimension = dimension
        counts: Counter = Counter()
        if isinstance(points, Mapping):
            for p, m in points.items():
                counts[p] += m
        else:
            counts.update(points)
        for (birth, death), multiplicity in counts.items():
            if multiplicity < 1:
                raise ValueError(f"multiplicity must be >= 1, got {multiplicity}")
            if death is not None and not birth < death:
                raise ValueError(f"need birth < death, got {(birth, death)}")
        self.points = dict(sorted(counts.items(), key=lambda item: _point_key(item[0])))

    def total(self) -> int:
        """Number of points counted with multiplicity."""
        return sum(self.points.values())

    def expand(self) -> list[Point]:
        """Points repeated by multiplicity, in sorted order."""
        return [p for p, m in self.points.items() for _ in range(m)]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PersistenceDiagram):
            return NotImplemented
        return self.dimension == other.dimension and self.points == other.points

    def __len__(self) -> int:
        return len(self.points)

    def __repr__(self) -> str:
        pairs = ", ".join(
            f"({b}, {'inf' if d is None else d})x{m}" for (b, d), m in self.points.items()
        )
        return f"PersistenceDiagram(dim={self.dimension}, [{pairs}])"


def to_barcode(d: PersistenceDiagram) -> list[tuple[Fraction, Death, int]]:
    """Diagram rendered as intervals: sorted (birth, death, multiplicity) rows.

    >>> from fractions import Fraction as F
    >>> dgm = PersistenceDiagram(1, {(F(1), None): 1, (F(2), F(3)): 1})
    >>> to_barcode(dgm)
    [(Fraction(1, 1), None, 1), (Fraction(2, 1), Fraction(3, 1), 1)]
    """
    return [(b, death, m) for (b, death), m in d.points.items()]


def from_barcode(dimension: int, bars: Iterable[tuple[Fraction, Death, int]]) -> PersistenceDiagram:
    return PersistenceDiagram(dimension, {(b, d): m for b, d, m in bars})
