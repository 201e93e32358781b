"""Shared fixtures: hand-specified filtrations and matrix encodings."""

from __future__ import annotations

from fractions import Fraction

from dirph import DissimilarityMatrix, FilteredComplex, filtration_from_simplices

FAR = 100  # placeholder for "no arc"; pipelines truncate below it
THRESHOLD = Fraction(10)


def staged_pentagon_filtration() -> FilteredComplex:
    """Five vertices, eight edges arriving in four steps, no triangles.

    The closing edge (5, 1) at step 3 turns every hole directed at once.
    """
    verts = [((i,), 0) for i in range(1, 6)]
    edges = [
        ((1, 2), 0), ((2, 4), 0), ((2, 3), 0),
        ((3, 4), 1), ((3, 5), 1),
        ((4, 5), 2), ((1, 3), 2),
        ((5, 1), 3),
    ]
    return filtration_from_simplices(verts + edges, dim_cap=2)


def staged_chord_square_filtration() -> FilteredComplex:
    """Square plus a chord; the chord triangle gets filled at the last step."""
    verts = [((i,), 0) for i in (1, 2, 4)] + [((3,), 1)]
    edges = [((2, 4), 0), ((1, 2), 1), ((3, 4), 1), ((2, 3), 1), ((4, 1), 2)]
    triangles = [((2, 3, 4), 3)]
    return filtration_from_simplices(verts + edges + triangles, dim_cap=2)


def staged_mixed_triangle_filtration() -> FilteredComplex:
    """One hole whose edges never form a circuit, one that becomes directed."""
    verts = [((i,), 0) for i in (1, 2, 4)] + [((3,), 1)]
    edges = [((2, 4), 0), ((1, 2), 1), ((3, 4), 1), ((3, 2), 1), ((4, 1), 2)]
    return filtration_from_simplices(verts + edges, dim_cap=2)


def _matrix(n: int, arcs: dict[tuple[int, int], int | Fraction]) -> DissimilarityMatrix:
    rows = [[Fraction(FAR)] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = Fraction(0)
    for (i, j), value in arcs.items():
        rows[i][j] = Fraction(value)
    return DissimilarityMatrix(tuple(tuple(row) for row in rows))


def square_late_closure_matrix() -> DissimilarityMatrix:
    """Five points realizing one immortal hole born at 1 that turns directed
    at 2, plus a directed triangle born at 2 and filled at 3."""
    return _matrix(5, {
        (0, 1): 1, (1, 2): 1, (2, 3): 1, (0, 3): 1,
        (3, 0): 2, (1, 4): 2, (4, 0): 2,
        (0, 4): 3,
    })


def split_square_triangle_matrix() -> DissimilarityMatrix:
    """A never-directed square hole at 1 and a directed triangle at 2."""
    return _matrix(7, {
        (0, 1): 1, (1, 2): 1, (3, 2): 1, (0, 3): 1,
        (4, 5): 2, (5, 6): 2, (6, 4): 2,
    })


def staggered_gadget_matrix() -> DissimilarityMatrix:
    """Fifteen points: four immortal holes born 1, 2, 2, 3 which all become
    directed at 3 (three reversible squares and one cyclic triangle)."""
    arcs: dict[tuple[int, int], int] = {}

    def square(base: int, born: int, closed: int) -> None:
        a, b, c, d = base, base + 1, base + 2, base + 3
        arcs.update({(a, b): born, (b, c): born, (c, d): born, (a, d): born,
                     (d, a): closed})

    square(0, 1, 3)
    square(4, 2, 3)
    square(8, 2, 3)
    arcs.update({(12, 13): 3, (13, 14): 3, (14, 12): 3})
    return _matrix(15, arcs)
