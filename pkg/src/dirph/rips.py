"""Directed Rips filtrations of dissimilarity functions.

A dissimilarity function on ``n`` points is an arbitrary square matrix of
exact rationals: no symmetry, no triangle inequality, no zero diagonal.  The
directed Rips complex at scale ``delta`` contains an ordered tuple exactly
when ``d(v_i, v_j) <= delta`` for every pair of positions ``i <= j``, so
the diagonal entries gate the vertices themselves.  The filtration is
materialised as one list of simplices with entrance values in a compatible
total order: faces precede cofaces, earlier entrances precede later ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Sequence

from .coeff import as_rational
from .complexes import Simplex, faces, simplex_dim, validate_simplex
from .errors import ResourceBudgetExceeded

DEFAULT_DIM_CAP = 2
DEFAULT_SIMPLEX_BUDGET = 5_000_000


@dataclass(frozen=True)
class DissimilarityMatrix:
    """Square matrix of exact rationals, ``d[i][j]`` read as "from i to j"."""

    d: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.d)
        for row in self.d:
            if len(row) != n:
                raise ValueError("dissimilarity matrix must be square")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "DissimilarityMatrix":
        return cls(tuple(tuple(as_rational(x) for x in row) for row in rows))

    @property
    def n(self) -> int:
        return len(self.d)

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.d[i][j]


def entrance_value(t: Simplex, matrix: DissimilarityMatrix) -> Fraction:
    """Scale at which the tuple enters the filtration: the maximum of
    ``d(x_j, x_k)`` over positions ``j <= k`` (including ``j == k``)."""
    validate_simplex(t)
    if max(t) >= matrix.n:
        raise ValueError(f"vertex index out of range for a {matrix.n}-point matrix: {t!r}")
    d = matrix.d
    return max(d[t[j]][t[k]] for j in range(len(t)) for k in range(j, len(t)))


class FilteredComplex:
    """Simplices with entrance values in a compatible total order.

    The order sorts by (entrance, dimension, tuple); since a face never
    enters later than a coface this puts proper faces first and earlier
    entrances first.  Rips-built instances contain every tuple of length
    at most ``dim_cap + 1`` whose entrance is within the threshold.
    """

    __slots__ = ("simplices", "dim_cap", "index", "_entrance")

    def __init__(self, simplices: Iterable[tuple[Simplex, Fraction]], dim_cap: int):
        items = [(validate_simplex(s), as_rational(v)) for s, v in simplices]
        items.sort(key=lambda item: (item[1], len(item[0]), item[0]))
        self.simplices: tuple[tuple[Simplex, Fraction], ...] = tuple(items)
        self.dim_cap = dim_cap
        self.index: dict[Simplex, int] = {}
        self._entrance: dict[Simplex, Fraction] = {}
        for position, (s, value) in enumerate(items):
            if s in self.index:
                raise ValueError(f"duplicate simplex {s!r}")
            if simplex_dim(s) > dim_cap:
                raise ValueError(f"simplex {s!r} above the dimension cap {dim_cap}")
            self.index[s] = position
            self._entrance[s] = value
        for s, value in items:
            if len(s) > 1:
                for f in faces(s):
                    if f not in self._entrance:
                        raise ValueError(f"missing face {f!r} of {s!r}")
                    if self._entrance[f] > value:
                        raise ValueError(
                            f"entrance of face {f!r} exceeds entrance of {s!r}"
                        )

    def __len__(self) -> int:
        return len(self.simplices)

    def entrance(self, s: Simplex) -> Fraction:
        return self._entrance[s]

    def critical_values(self) -> list[Fraction]:
        return sorted({v for _, v in self.simplices})

    def of_dimension(self, dim: int) -> list[tuple[Simplex, Fraction]]:
        return [(s, v) for s, v in self.simplices if simplex_dim(s) == dim]

    def max_value(self) -> Fraction:
        if not self.simplices:
            raise ValueError("empty filtration")
        return self.simplices[-1][1]


def build_filtration(
    matrix: DissimilarityMatrix,
    dim_cap: int = DEFAULT_DIM_CAP,
    max_value: Fraction | None = None,
    simplex_budget: int = DEFAULT_SIMPLEX_BUDGET,
) -> FilteredComplex:
    """Directed Rips filtration of ``matrix`` up to ``dim_cap``.

    All ``n ** k`` tuples of each length ``k <= dim_cap + 1`` are enumerated
    (repetitions included; dropping them breaks stability).  ``max_value``
    truncates the filtration: tuples entering strictly later are omitted,
    and classes alive at the threshold are reported as immortal downstream.
    Since faces never enter after cofaces, truncation preserves closure.
    """
    if dim_cap < 0:
        raise ValueError("dim_cap must be >= 0")
    n = matrix.n
    total = sum(n**k for k in range(1, dim_cap + 2))
    if total > simplex_budget:
        raise ResourceBudgetExceeded(
            f"{total} tuples exceed the simplex budget of {simplex_budget}", count=total
        )
    cutoff = None if max_value is None else as_rational(max_value)
    d = matrix.d
    items: list[tuple[Simplex, Fraction]] = []
    for k in range(1, dim_cap + 2):
        for t in product(range(n), repeat=k):
            value = max(d[t[j]][t[l]] for j in range(k) for l in range(j, k))
            if cutoff is None or value <= cutoff:
                items.append((t, value))
    return FilteredComplex(items, dim_cap)


def filtration_from_simplices(
    simplices: Iterable[tuple[Simplex, Fraction]], dim_cap: int | None = None
) -> FilteredComplex:
    """Wrap an explicit list of (simplex, entrance) pairs as a filtration.

    The list must already be face-closed with monotone entrances; this is the
    entry point for hand-specified filtrations in tests and experiments.
    """
    items = [(validate_simplex(s), as_rational(v)) for s, v in simplices]
    cap = dim_cap if dim_cap is not None else max((simplex_dim(s) for s, _ in items), default=0)
    return FilteredComplex(items, cap)
