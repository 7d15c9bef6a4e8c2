"""Cut dimension of weighted graphs, computed exactly.

Minimum and near-minimum cuts are enumerated exhaustively, spans are ranked
over the rationals, and the linear-query adversary is solved with an exact
simplex.  Hot loops run in a compiled extension when available.
"""

from ._backend import BACKEND, available_backends
from .adversary import AlphaCertificate, FoolingPair, alpha, cut_matrix, find_fooling
from .approx import (
    PerturbationInstance,
    cdim_lower_via_mincuts,
    check_k4_union_rank,
    check_lem2k,
    perturbation_valid,
)
from .constructors import (
    ConstructionReport,
    complete,
    cycle,
    cycle_plus_eps,
    explicit_from_family,
    fixture_fig2,
    fixture_fig8,
    k4_union,
    merge_construction,
)
from .cuts import (
    AlphaReport,
    MincutReport,
    all_cut_weights,
    cdim_alpha,
    cut_dimension,
    enumerate_cuts,
    mincuts,
    near_mincuts,
)
from .errors import (
    CapExceededError,
    CutDimError,
    DimensionMismatchError,
    InvalidEdgeError,
    InvalidParameterError,
    InvalidShoreError,
    InvariantViolation,
    MalformedInputError,
    NotLaminarError,
    PreconditionError,
)
from .graph import CutVector, Graph, Shore, char_vector, cut_weight
from .graphops import (
    MincutStructure,
    SeparationPair,
    classify_mincut_structure,
    cut_graph_connected,
    direct_union,
    is_crossless,
    merge,
    separation,
    verify_crossless_decomposition,
)
from .laminar import (
    ArborescenceRep,
    SetFamily,
    beach,
    cross,
    family_from_tree,
    is_cross_free,
    is_laminar,
    maximal_cross_free_subset,
    overlap,
    random_maximal_cross_free,
    tree_representation,
    uncross,
)
from .linalg import RationalMatrix, in_rowspace, nullspace_basis, rank, rref
from .lp import LinearProgram, LPResult, LPStatus, lp_solve

__version__ = "0.1.0"

__all__ = [
    "AlphaCertificate",
    "AlphaReport",
    "ArborescenceRep",
    "BACKEND",
    "CapExceededError",
    "ConstructionReport",
    "CutDimError",
    "CutVector",
    "DimensionMismatchError",
    "FoolingPair",
    "Graph",
    "InvalidEdgeError",
    "InvalidParameterError",
    "InvalidShoreError",
    "InvariantViolation",
    "LPResult",
    "LPStatus",
    "LinearProgram",
    "MalformedInputError",
    "MincutReport",
    "MincutStructure",
    "NotLaminarError",
    "PerturbationInstance",
    "PreconditionError",
    "RationalMatrix",
    "SeparationPair",
    "SetFamily",
    "Shore",
    "all_cut_weights",
    "alpha",
    "available_backends",
    "beach",
    "cdim_alpha",
    "cdim_lower_via_mincuts",
    "char_vector",
    "check_k4_union_rank",
    "check_lem2k",
    "classify_mincut_structure",
    "complete",
    "cross",
    "cut_dimension",
    "cut_graph_connected",
    "cut_matrix",
    "cut_weight",
    "cycle",
    "cycle_plus_eps",
    "direct_union",
    "enumerate_cuts",
    "explicit_from_family",
    "family_from_tree",
    "find_fooling",
    "fixture_fig2",
    "fixture_fig8",
    "in_rowspace",
    "is_cross_free",
    "is_crossless",
    "is_laminar",
    "k4_union",
    "lp_solve",
    "maximal_cross_free_subset",
    "merge",
    "merge_construction",
    "mincuts",
    "near_mincuts",
    "nullspace_basis",
    "overlap",
    "perturbation_valid",
    "random_maximal_cross_free",
    "rank",
    "rref",
    "separation",
    "tree_representation",
    "uncross",
    "verify_crossless_decomposition",
]
