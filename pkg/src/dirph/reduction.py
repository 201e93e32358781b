"""Column reduction of the signed boundary matrix (standard algorithm).

The boundary matrix of a filtration in compatible order is upper triangular;
column ``j`` holds the signed boundary of the ``j``-th simplex expressed in
earlier simplices.  Reducing columns left to right until all lows are
distinct yields the persistence pairs: a zero column creates a class
("positive" simplex), a column with low ``i`` kills the class created at
``i`` ("negative" simplex).  Pivot arithmetic is exact rational.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .chains import signed_face_coefficients
from .complexes import simplex_dim
from .diagram import PersistenceDiagram, Point
from .rips import FilteredComplex

Column = dict[int, Fraction]


@dataclass
class SparseColumnMatrix:
    columns: list[Column]

    def __len__(self) -> int:
        return len(self.columns)

    def copy(self) -> "SparseColumnMatrix":
        return SparseColumnMatrix([dict(col) for col in self.columns])


@dataclass
class ReducedMatrix:
    r: SparseColumnMatrix
    lows: dict[int, int]  # low row index -> column index owning it


def boundary_matrix(filtration: FilteredComplex) -> SparseColumnMatrix:
    """Signed boundary columns in the filtration's compatible order.

    Coinciding faces of degenerate tuples cancel or combine by sign, so a
    loop ``(v, v)`` yields an empty column while ``(v, v, v)`` yields the
    single entry ``+1`` at the row of ``(v, v)``.
    """
    columns: list[Column] = []
    for s, _ in filtration.simplices:
        if simplex_dim(s) == 0:
            columns.append({})
            continue
        columns.append(
            {filtration.index[f]: c for f, c in signed_face_coefficients(s).items()}
        )
    return SparseColumnMatrix(columns)


def _low(column: Column) -> int | None:
    return max(column) if column else None


def _subtract(target: Column, source: Column, factor: Fraction) -> None:
    for row, value in source.items():
        updated = target.get(row, Fraction(0)) - factor * value
        if updated == 0:
            target.pop(row, None)
        else:
            target[row] = updated


def reduce(matrix: SparseColumnMatrix, strategy: str = "standard",
           rng: random.Random | None = None) -> ReducedMatrix:
    """Reduce by column operations until all nonzero lows are distinct.

    ``strategy="standard"`` sweeps columns left to right.  With
    ``strategy="random"`` collisions are resolved in random order; any order
    is valid as long as a column is only ever modified by earlier columns,
    and the resulting low indices are the same either way.
    """
    if strategy == "standard":
        return _reduce_standard(matrix)
    if strategy == "random":
        return _reduce_random(matrix, rng or random.Random())
    raise ValueError(f"unknown reduction strategy {strategy!r}")


def _reduce_standard(matrix: SparseColumnMatrix) -> ReducedMatrix:
    reduced = matrix.copy()
    lows: dict[int, int] = {}
    for j, column in enumerate(reduced.columns):
        low = _low(column)
        while low is not None and low in lows:
            owner = reduced.columns[lows[low]]
            _subtract(column, owner, column[low] / owner[low])
            low = _low(column)
        if low is not None:
            lows[low] = j
    return ReducedMatrix(reduced, lows)


def _reduce_random(matrix: SparseColumnMatrix, rng: random.Random) -> ReducedMatrix:
    reduced = matrix.copy()
    while True:
        by_low: dict[int, list[int]] = {}
        for j, column in enumerate(reduced.columns):
            low = _low(column)
            if low is not None:
                by_low.setdefault(low, []).append(j)
        collisions = [cols for cols in by_low.values() if len(cols) > 1]
        if not collisions:
            lows = {low: cols[0] for low, cols in by_low.items()}
            return ReducedMatrix(reduced, lows)
        group = rng.choice(collisions)
        j = rng.choice(group[1:])  # any column but the earliest may be reduced
        k = rng.choice([c for c in group if c < j])
        target, source = reduced.columns[j], reduced.columns[k]
        low = _low(target)
        _subtract(target, source, target[low] / source[low])


def extract_diagram(
    reduced: ReducedMatrix, filtration: FilteredComplex, k: int
) -> PersistenceDiagram:
    """Dimension-``k`` persistence diagram of a reduced matrix.

    Deaths in dimension ``k`` require (k+1)-simplices, so ``k`` must stay
    below the filtration's dimension cap for finite bars to be visible.
    Zero-length pairs (born and killed at one entrance value) are dropped;
    they are an artifact of simultaneous entrances, e.g. a loop ``(v, v)``
    and its filling ``(v, v, v)``.  ``persistence_pairs`` retains them.
    """
    if k > filtration.dim_cap:
        raise ValueError(f"dimension {k} above the cap {filtration.dim_cap}")
    points: list[Point] = []
    for birth, death in persistence_pairs(reduced, filtration, k):
        if death is None or birth < death:
            points.append((birth, death))
    return PersistenceDiagram(k, points)


def persistence_pairs(
    reduced: ReducedMatrix, filtration: FilteredComplex, k: int
) -> list[tuple[Fraction, Fraction | None]]:
    """All raw (birth, death) pairs of dimension ``k`` including zero-length
    ones, for inspection and tests."""
    pairs: list[tuple[Fraction, Fraction | None]] = []
    entrances = [value for _, value in filtration.simplices]
    dims = [simplex_dim(s) for s, _ in filtration.simplices]
    for i, column in enumerate(reduced.r.columns):
        if dims[i] != k or column:
            continue
        j = reduced.lows.get(i)
        pairs.append((entrances[i], None if j is None else entrances[j]))
    return pairs


def positive_negative_counts(
    reduced: ReducedMatrix, filtration: FilteredComplex
) -> dict[int, tuple[int, int]]:
    """Per dimension: (number of zero columns, number of killing columns)."""
    counts: dict[int, tuple[int, int]] = {}
    dims = [simplex_dim(s) for s, _ in filtration.simplices]
    for i, column in enumerate(reduced.r.columns):
        d = dims[i]
        pos, neg = counts.get(d, (0, 0))
        if column:
            counts[d] = (pos, neg + 1)
        else:
            counts[d] = (pos + 1, neg)
    return counts
