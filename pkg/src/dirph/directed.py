"""Directed persistence in dimension 1.

Over a zerosumfree semiring the 1-cycles of a complex are exactly the
non-negative circulations of its 1-skeleton viewed as a digraph, so they are
generated by the elementary circuits (self-loops and 2-cycles included).
Per filtration scale we enumerate the circuits, take the rational span of
their signed images, and measure the rank of that span inside homology at
every later scale; the resulting rank function determines the directed
diagram by inclusion-exclusion.  Circuit enumeration is Johnson's algorithm
(via networkx), whose cost is O((n + e)(c + 1)) in the circuit count c.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import networkx as nx

from ._linalg import Echelon, SparseVector
from .chains import Chain, chain_from_simplices, signed_face_coefficients
from .complexes import Simplex, simplex_dim
from .diagram import PersistenceDiagram, Point
from .errors import ResourceBudgetExceeded
from .rips import FilteredComplex

DEFAULT_CIRCUIT_BUDGET = 100_000


def _canonical_rotation(cycle: list[int]) -> tuple[int, ...]:
    pivot = cycle.index(min(cycle))
    return tuple(cycle[pivot:] + cycle[:pivot])


def elementary_circuits(
    edges: list[Simplex], circuit_budget: int = DEFAULT_CIRCUIT_BUDGET
) -> list[Chain]:
    """All elementary circuits of the digraph whose arcs are the 1-simplices.

    Each circuit is returned as the natural chain summing its arcs once;
    a self-loop arc ``(v, v)`` becomes the one-term chain ``[v, v]``.  The
    output is sorted by (length, vertex sequence) for determinism.
    """
    graph = nx.DiGraph()
    for e in edges:
        if simplex_dim(e) != 1:
            raise ValueError(f"expected 1-simplices, got {e!r}")
        graph.add_edge(e[0], e[1])
    rotations: list[tuple[int, ...]] = []
    for cycle in nx.simple_cycles(graph):
        rotations.append(_canonical_rotation(cycle))
        if len(rotations) > circuit_budget:
            raise ResourceBudgetExceeded(
                f"more than {circuit_budget} elementary circuits", count=len(rotations)
            )
    chains = []
    for rotation in sorted(rotations, key=lambda r: (len(r), r)):
        arcs = [(rotation[i], rotation[(i + 1) % len(rotation)]) for i in range(len(rotation))]
        chains.append(chain_from_simplices(arcs))
    return chains


def _edge_vector(chain: Chain, edge_index: dict[Simplex, int]) -> SparseVector:
    return {edge_index[s]: Fraction(c) for s, c in chain.terms.items()}


@dataclass
class CircuitBasis:
    """Circuits of a sublevel 1-skeleton and the span of their signed images."""

    delta: Fraction
    circuits: list[Chain]
    span_basis: list[Chain]

    @property
    def rank(self) -> int:
        return len(self.span_basis)


@dataclass
class RankFunction:
    """Ranks of the directed classes at scale i inside homology at scale j.

    ``r[(i, j)]`` for ``i <= j`` (indices into ``critical_values``) is the
    dimension of the image of the directed subspace born by scale i in the
    dimension-1 homology at scale j.  ``r[(i, i)]`` is the dimension of the
    directed subspace itself.
    """

    critical_values: list[Fraction]
    r: dict[tuple[int, int], int] = field(default_factory=dict)

    def rank(self, i: int, j: int) -> int:
        if i < 0:
            return 0
        return self.r[(i, j)]


class _SkeletonIndex:
    """Shared edge indexing plus per-scale arcs and triangle boundaries."""

    def __init__(self, filtration: FilteredComplex):
        self.edges = [s for s, _ in filtration.of_dimension(1)]
        self.edge_index = {s: i for i, s in enumerate(self.edges)}
        self.edge_entrance = {s: filtration.entrance(s) for s in self.edges}
        self.triangles = [(s, v) for s, v in filtration.of_dimension(2)]

    def arcs_at(self, delta: Fraction) -> list[Simplex]:
        return [s for s in self.edges if self.edge_entrance[s] <= delta]


def directed_space(
    filtration: FilteredComplex,
    delta: Fraction,
    circuit_budget: int = DEFAULT_CIRCUIT_BUDGET,
) -> CircuitBasis:
    """Circuits of the ``delta``-sublevel 1-skeleton and a row-reduced basis
    of the rational space they span (boundaries not yet quotiented out)."""
    skeleton = _SkeletonIndex(filtration)
    circuits = elementary_circuits(skeleton.arcs_at(delta), circuit_budget)
    echelon = Echelon()
    for chain in circuits:
        echelon.add(_edge_vector(chain, skeleton.edge_index))
    span = [
        Chain(1, {skeleton.edges[i]: c for i, c in vector.items()})
        for vector in echelon.basis()
    ]
    return CircuitBasis(delta=delta, circuits=circuits, span_basis=span)


def rank_function(
    filtration: FilteredComplex, circuit_budget: int = DEFAULT_CIRCUIT_BUDGET
) -> RankFunction:
    """Rank table of the directed persistence module of ``filtration``.

    For critical scales ``d_i <= d_j``,

        r(i, j) = dim(span(circuits at d_i) + B1(d_j)) - dim B1(d_j)

    where ``B1(d_j)`` is the span of the signed boundaries of the 2-simplices
    present at ``d_j``.  Everything is exact Gaussian elimination in the
    final edge coordinates; entries are filled j-increasing so the boundary
    space grows incrementally.
    """
    if filtration.dim_cap < 2:
        raise ValueError("directed persistence needs 2-simplices: dim_cap >= 2")
    skeleton = _SkeletonIndex(filtration)
    critical = filtration.critical_values()
    rf = RankFunction(critical_values=critical)

    # a circuit of a sublevel digraph is a final-stage circuit whose arcs
    # have all entered, so one enumeration and an entrance filter give the
    # per-scale circuit sets
    dated_circuits = sorted(
        (
            (max(skeleton.edge_entrance[s] for s in chain.terms), chain)
            for chain in elementary_circuits(skeleton.edges, circuit_budget)
        ),
        key=lambda item: item[0],
    )
    circuit_spans: list[list[SparseVector]] = []
    running = Echelon()
    cursor = 0
    for delta in critical:
        while cursor < len(dated_circuits) and dated_circuits[cursor][0] <= delta:
            running.add(_edge_vector(dated_circuits[cursor][1], skeleton.edge_index))
            cursor += 1
        circuit_spans.append(running.basis())

    boundary = Echelon()
    triangle_cursor = 0
    triangles = sorted(skeleton.triangles, key=lambda item: item[1])
    for j, delta in enumerate(critical):
        while triangle_cursor < len(triangles) and triangles[triangle_cursor][1] <= delta:
            s, _ = triangles[triangle_cursor]
            vector = {
                skeleton.edge_index[f]: c for f, c in signed_face_coefficients(s).items()
            }
            boundary.add(vector)
            triangle_cursor += 1
        for i in range(j + 1):
            rf.r[(i, j)] = boundary.extended_rank(circuit_spans[i])
    return rf


def directed_diagram(rf: RankFunction) -> PersistenceDiagram:
    """Diagram of the directed persistence module from its rank function.

    Multiplicity of a bar [d_i, d_{j+1}) is the usual inclusion-exclusion
    r(i,j) - r(i,j+1) - r(i-1,j) + r(i-1,j+1); bars alive at the last scale
    are immortal.
    """
    critical = rf.critical_values
    m = len(critical)
    points: list[Point] = []
    last = m - 1
    for i in range(m):
        for j in range(i, last):
            multiplicity = (
                rf.rank(i, j)
                - rf.rank(i, j + 1)
                - rf.rank(i - 1, j)
                + rf.rank(i - 1, j + 1)
            )
            if multiplicity < 0:
                raise AssertionError("rank function is not monotone")
            points.extend([(critical[i], critical[j + 1])] * multiplicity)
        multiplicity = rf.rank(i, last) - rf.rank(i - 1, last)
        points.extend([(critical[i], None)] * multiplicity)
    return PersistenceDiagram(1, points)


@dataclass
class SubbarcodeMatch:
    """Injective matching of directed bars into undirected bars.

    Matched bars die at the same time and the directed bar is born no
    earlier.  ``ok`` is False when some directed bar cannot be matched; the
    unmatched bars are then listed for inspection.
    """

    pairs: list[tuple[Point, Point]]
    unmatched_directed: list[Point]
    unmatched_undirected: list[Point]

    @property
    def ok(self) -> bool:
        return not self.unmatched_directed


def subbarcode_match(
    directed: PersistenceDiagram, undirected: PersistenceDiagram
) -> SubbarcodeMatch:
    """Match each directed bar to an undirected bar with the same death and
    an earlier-or-equal birth, via maximum bipartite matching."""
    if directed.dimension != undirected.dimension:
        raise ValueError("diagrams must share a dimension")
    dir_bars = directed.expand()
    undir_bars = undirected.expand()

    def admissible(d: Point, u: Point) -> bool:
        return d[1] == u[1] and d[0] >= u[0]

    match_of_undir: dict[int, int] = {}

    def augment(di: int, seen: set[int]) -> bool:
        for ui, u in enumerate(undir_bars):
            if ui in seen or not admissible(dir_bars[di], u):
                continue
            seen.add(ui)
            if ui not in match_of_undir or augment(match_of_undir[ui], seen):
                match_of_undir[ui] = di
                return True
        return False

    for di in range(len(dir_bars)):
        augment(di, set())
    matched_dir = set(match_of_undir.values())

    def bar_key(p: Point) -> tuple:
        return (p[0], p[1] is None, p[1] if p[1] is not None else 0)

    pairs = sorted(
        ((dir_bars[di], undir_bars[ui]) for ui, di in match_of_undir.items()),
        key=lambda pair: (bar_key(pair[0]), bar_key(pair[1])),
    )
    return SubbarcodeMatch(
        pairs=pairs,
        unmatched_directed=[b for i, b in enumerate(dir_bars) if i not in matched_dir],
        unmatched_undirected=[
            b for i, b in enumerate(undir_bars) if i not in match_of_undir
        ],
    )
