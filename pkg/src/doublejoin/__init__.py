"""Laplacian spectra of subdivision, Q-graph, R-graph and total double joins."""

from .analytics import (
    CospectralCertificate,
    cospectral_double_join,
    cospectral_mate_search,
    kirchhoff_index,
    spanning_tree_count,
    spanning_trees,
)
from .closed_form import (
    ClosedFormInstance,
    classical_join_spectrum,
    closed_form_spectrum,
    double_join_laplacian_spectrum,
    reduced_spectrum,
)
from .errors import ConditionViolation, ConsistencyError, PreconditionError
from .graph import (
    Graph,
    adjacency_matrix,
    family,
    incidence_matrix,
    is_connected,
    laplacian,
    line_graph,
    regularity,
    signless_laplacian,
)
from .operations import Variant, double_join, q_graph, r_graph, subdivision, total_graph
from .oracle import EigenPair, SpectralMultiset, spectra_equal, symmetric_eigen, zero_multiplicity
from .solver import (
    DoubleJoinBlocks,
    DoubleJoinScalars,
    eigenvectors_from_blocks,
    quartic_eigenvalues,
    scalars_from_blocks,
    spectrum_from_scalars,
    spectrum_reduced,
)

__version__ = "0.1.0"
