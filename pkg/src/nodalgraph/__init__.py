"""Nodal domains of Schrödinger operators on finite weighted graphs."""

__version__ = "0.1.0"

from .courant import (
    CaseRecord,
    DomainWeights,
    TestFunction,
    VerificationReport,
    build_test_function,
    rayleigh_sandwich,
    remainder,
    verify_eigenfunction,
    verify_graph,
)
from .gallery import (
    ExactEigenpair,
    certify_exact,
    index_check,
    star_counterexample,
    tree7_counterexample,
)
from .generators import generate_graph
from .graph_core import WeightedGraph, apply_operator, assemble_operator, quadratic_form, validate_graph
from .nodal import (
    NodalDomain,
    NodalPartition,
    SignVector,
    brute_force_domains,
    classify_signs,
    domain_adjacency,
    strong_domains,
    weak_domains,
)
from .quadfield import QuadNumber
from .spectra import (
    EigenGroups,
    Spectrum,
    eigendecompose,
    group_eigenvalues,
    perron_check,
    sample_eigenfunction,
)
