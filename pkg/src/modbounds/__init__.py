"""Modularity matrices, nodal-domain cuts and certified modularity bounds.

Typical use::

    from modbounds import generators, analyze
    report = analyze(generators.barbell())
"""

__version__ = "0.1.0"

from .errors import ModBoundsError
from .graph import (
    Graph,
    VertexSet,
    build_graph,
    classify_structure,
    edge_count_between,
    is_bipartite,
    is_connected,
)
from .edgelist import read_edge_list, write_edge_list
from .measures import (
    CutReport,
    cut_functionals,
    modularity,
    partition_modularity,
    sandwich_check,
)
from .linalg import Spectrum, eig_sym
from .spectral import (
    algebraic_modularity,
    laplacian_lambda2,
    modularity_matrix,
    nodal_domain,
    normalized_algebraic_modularity,
    normalized_modularity_matrix,
    spectral_predicates,
)
from .certificates import (
    BoundCertificate,
    CertName,
    Verdict,
    angle_corollary,
    certify_eigenpair,
    laplacian_cheeger,
    module_cert_a,
    module_cert_b,
    perturbation_cheeger,
    perturbation_data,
    positive_part_sum,
    simple_cheeger,
)
from .oracle import OracleResult, brute_force_cuts, brute_force_partitions, verify_bounds
from .report import AnalysisReport, analyze
from . import generators

__all__ = [
    "ModBoundsError",
    "Graph",
    "VertexSet",
    "build_graph",
    "classify_structure",
    "edge_count_between",
    "is_bipartite",
    "is_connected",
    "read_edge_list",
    "write_edge_list",
    "CutReport",
    "cut_functionals",
    "modularity",
    "partition_modularity",
    "sandwich_check",
    "Spectrum",
    "eig_sym",
    "algebraic_modularity",
    "laplacian_lambda2",
    "modularity_matrix",
    "nodal_domain",
    "normalized_algebraic_modularity",
    "normalized_modularity_matrix",
    "spectral_predicates",
    "BoundCertificate",
    "CertName",
    "Verdict",
    "angle_corollary",
    "certify_eigenpair",
    "laplacian_cheeger",
    "module_cert_a",
    "module_cert_b",
    "perturbation_cheeger",
    "perturbation_data",
    "positive_part_sum",
    "simple_cheeger",
    "OracleResult",
    "brute_force_cuts",
    "brute_force_partitions",
    "verify_bounds",
    "AnalysisReport",
    "analyze",
    "generators",
]
