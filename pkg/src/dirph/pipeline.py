"""End-to-end orchestration: matrix -> filtration -> diagrams."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .diagram import PersistenceDiagram
from .directed import DEFAULT_CIRCUIT_BUDGET, directed_diagram, rank_function
from .reduction import boundary_matrix, extract_diagram, reduce
from .rips import (
    DEFAULT_SIMPLEX_BUDGET,
    DissimilarityMatrix,
    FilteredComplex,
    build_filtration,
)


@dataclass
class DiagramSet:
    """Undirected diagrams per dimension, plus directed ones where defined.

    The directed module in dimension 0 is isomorphic to the undirected one,
    so its diagram is shared; dimension 1 is computed from circuits.
    """

    undirected: dict[int, PersistenceDiagram] = field(default_factory=dict)
    directed: dict[int, PersistenceDiagram] = field(default_factory=dict)


def diagrams_of_filtration(
    filtration: FilteredComplex,
    max_dim: int = 1,
    directed: bool = True,
    circuit_budget: int = DEFAULT_CIRCUIT_BUDGET,
) -> DiagramSet:
    reduced = reduce(boundary_matrix(filtration))
    out = DiagramSet()
    for k in range(max_dim + 1):
        out.undirected[k] = extract_diagram(reduced, filtration, k)
    if directed:
        out.directed[0] = out.undirected[0]
        if max_dim >= 1 and filtration.dim_cap >= 2:
            out.directed[1] = directed_diagram(rank_function(filtration, circuit_budget))
    return out


def compute_diagrams(
    matrix: DissimilarityMatrix,
    max_dim: int = 1,
    directed: bool = True,
    threshold: Fraction | None = None,
    simplex_budget: int = DEFAULT_SIMPLEX_BUDGET,
    circuit_budget: int = DEFAULT_CIRCUIT_BUDGET,
) -> DiagramSet:
    """Full pipeline for a dissimilarity matrix.

    The filtration is built one dimension above ``max_dim`` so that deaths
    in the top requested dimension are visible.
    """
    filtration = build_filtration(
        matrix, dim_cap=max_dim + 1, max_value=threshold, simplex_budget=simplex_budget
    )
    return diagrams_of_filtration(
        filtration, max_dim=max_dim, directed=directed, circuit_budget=circuit_budget
    )
