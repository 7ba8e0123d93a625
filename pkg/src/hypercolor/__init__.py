"""Perfect colorings of hypergraphs, their parameter tensors, coverings and spectra."""

from .coloring import (
    Coloring,
    IncidenceParams,
    color_matrix,
    color_ranges,
    construct_from_params,
    incidence_parameters,
    is_perfect,
    load_coloring,
    monochromatic,
    parameter_tensor,
    parameter_tensor_from_counts,
    symmetrized,
    verify_tensor_equation,
)
from .covering import (
    CoveringMap,
    common_cover,
    covering_as_coloring,
    lift_coloring,
    load_covering,
    multipartite_cover,
    verify_covering,
)
from .errors import GuardExceeded, HypercolorError, NotACovering, NotPerfect, ValidationError
from .hypergraph import (
    Hypergraph,
    adjacency_tensor,
    dual,
    enumerate_k_transversals,
    fano,
    incidence_graph,
    incidence_matrix,
    is_connected,
    load_hypergraph,
    profile,
)
from .multimatrix import (
    MultiMatrix,
    apply_vector,
    hyperplane_sum,
    identity_tensor,
    is_symmetric,
    mm_product,
)
from .polynomial import Polynomial, poly_roots
from .refinement import coarsest_perfect, is_refinement, wl_refine
from .spectra import (
    EigenPair,
    TwoColorThreeUniformParams,
    charpoly_2color_3uniform,
    eigen_order2,
    lift_eigenpair,
    transversal_eigenvalues,
    transversal_parameter_tensor,
    verify_eigenpair,
)

__version__ = "0.1.0"

__all__ = [
    "Coloring",
    "CoveringMap",
    "EigenPair",
    "GuardExceeded",
    "HypercolorError",
    "Hypergraph",
    "IncidenceParams",
    "MultiMatrix",
    "NotACovering",
    "NotPerfect",
    "Polynomial",
    "TwoColorThreeUniformParams",
    "ValidationError",
    "adjacency_tensor",
    "apply_vector",
    "charpoly_2color_3uniform",
    "coarsest_perfect",
    "color_matrix",
    "color_ranges",
    "common_cover",
    "construct_from_params",
    "covering_as_coloring",
    "dual",
    "eigen_order2",
    "enumerate_k_transversals",
    "fano",
    "hyperplane_sum",
    "identity_tensor",
    "incidence_graph",
    "incidence_matrix",
    "incidence_parameters",
    "is_connected",
    "is_perfect",
    "is_refinement",
    "is_symmetric",
    "lift_coloring",
    "lift_eigenpair",
    "load_coloring",
    "load_covering",
    "load_hypergraph",
    "mm_product",
    "monochromatic",
    "multipartite_cover",
    "parameter_tensor",
    "parameter_tensor_from_counts",
    "poly_roots",
    "profile",
    "symmetrized",
    "transversal_eigenvalues",
    "transversal_parameter_tensor",
    "verify_covering",
    "verify_eigenpair",
    "verify_tensor_equation",
    "wl_refine",
]
