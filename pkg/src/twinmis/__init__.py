"""Weighted maximal independent sets: twin-class normalization, orthogonal
pairings, pendant embeddings, conjugate-graph duality and exact solvers."""

from twinmis.graph import (
    GraphError,
    WeightedGraph,
    build_graph,
    is_independent,
    is_mis,
    neighborhood,
    weight_of,
)
from twinmis.normalization import (
    NormalizationMap,
    TwinPartition,
    expand_normal,
    is_normal,
    lift_set,
    normalize,
    twin_classes,
)
from twinmis.orthogonality import (
    OrthogonalPairing,
    PairStructure,
    are_orthogonal,
    find_pairing,
    is_trivial,
    orthogonal_pairs,
    verify_pair_structure,
)
from twinmis.embedding import EmbeddingInfo, embed_full, embed_minimal, project
from twinmis.duality import ConjugateResult, complement_of_mis, conjugate, gap_bound
from twinmis.solvers import (
    CapacityError,
    SolveResult,
    enumerate_mis,
    mis_count_bound,
    solve_max,
    solve_min,
    solve_via_reduction,
)

__all__ = [
    "CapacityError",
    "ConjugateResult",
    "EmbeddingInfo",
    "GraphError",
    "NormalizationMap",
    "OrthogonalPairing",
    "PairStructure",
    "SolveResult",
    "TwinPartition",
    "WeightedGraph",
    "are_orthogonal",
    "build_graph",
    "complement_of_mis",
    "conjugate",
    "embed_full",
    "embed_minimal",
    "enumerate_mis",
    "expand_normal",
    "find_pairing",
    "gap_bound",
    "is_independent",
    "is_mis",
    "is_normal",
    "is_trivial",
    "lift_set",
    "mis_count_bound",
    "neighborhood",
    "normalize",
    "orthogonal_pairs",
    "project",
    "solve_max",
    "solve_min",
    "solve_via_reduction",
    "twin_classes",
    "verify_pair_structure",
    "weight_of",
]
