"""Persistent homology of dissimilarity functions, directed cycles included.

The pipeline: a square matrix of exact rationals (no symmetry assumed)
defines a directed Rips filtration of ordered tuple complexes; column
reduction of the signed boundary matrix gives the classical diagrams, and
the span of elementary circuits per scale gives the directed ones.
"""

from .chains import Chain, boundary_neg, boundary_pos, is_cycle, signed_boundary
from .complexes import DirectedComplex, close, faces, weak_components
from .diagram import PersistenceDiagram, to_barcode
from .directed import (
    CircuitBasis,
    RankFunction,
    directed_diagram,
    directed_space,
    elementary_circuits,
    rank_function,
    subbarcode_match,
)
from .errors import FormatError, ResourceBudgetExceeded
from .metrics import (
    MapPair,
    StabilityReport,
    bottleneck,
    codistortion,
    correspondence_distortion,
    distortion,
    stability_check,
)
from .pipeline import DiagramSet, compute_diagrams, diagrams_of_filtration
from .reduction import boundary_matrix, extract_diagram, reduce
from .rips import (
    DissimilarityMatrix,
    FilteredComplex,
    build_filtration,
    entrance_value,
    filtration_from_simplices,
)
from .semihomology import (
    HomologousWitness,
    even_cycles_trivial,
    h0_rank,
    is_acyclic_full_simplex,
    is_homologous,
    z1_generators,
)

__version__ = "0.1.0"

__all__ = [
    "Chain",
    "CircuitBasis",
    "DiagramSet",
    "DirectedComplex",
    "DissimilarityMatrix",
    "FilteredComplex",
    "FormatError",
    "HomologousWitness",
    "MapPair",
    "PersistenceDiagram",
    "RankFunction",
    "ResourceBudgetExceeded",
    "StabilityReport",
    "bottleneck",
    "boundary_matrix",
    "boundary_neg",
    "boundary_pos",
    "build_filtration",
    "close",
    "codistortion",
    "compute_diagrams",
    "correspondence_distortion",
    "diagrams_of_filtration",
    "directed_diagram",
    "directed_space",
    "distortion",
    "elementary_circuits",
    "entrance_value",
    "even_cycles_trivial",
    "extract_diagram",
    "faces",
    "filtration_from_simplices",
    "h0_rank",
    "is_acyclic_full_simplex",
    "is_cycle",
    "is_homologous",
    "rank_function",
    "reduce",
    "signed_boundary",
    "stability_check",
    "subbarcode_match",
    "to_barcode",
    "weak_components",
    "z1_generators",
]
