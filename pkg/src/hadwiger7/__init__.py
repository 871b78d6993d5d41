"""Certifying workbench for K7- minors and 7-colorings of small graphs."""

from .colorer import (
    Certificate,
    MinorWitness,
    ProperColoring,
    ReductionTrace,
    Step,
    color7,
    reduction_step,
    verify_certificate,
)
from .coloring import exact_k_color
from .connectivity import PathSystem, Separation, disjoint_paths, is_k_connected, minimum_separation, vertex_connectivity
from .errors import BudgetExceeded, GraphInputError, Hadwiger7Error, PreconditionError, TheoremViolation
from .formats import from_graph6, from_sparse6, read_graph6, to_graph6
from .graph import (
    Graph,
    PatternGraph,
    complete,
    contract_edge,
    delete_vertices,
    from_edge_list,
    identify_vertices,
    induced_subgraph,
    pattern,
)
from .minors import MinorModel, RootSpec, find_minor, find_rooted_minor, verify_model
from .planarity import is_planar

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded",
    "Certificate",
    "Graph",
    "GraphInputError",
    "Hadwiger7Error",
    "MinorModel",
    "MinorWitness",
    "PathSystem",
    "PatternGraph",
    "PreconditionError",
    "ProperColoring",
    "ReductionTrace",
    "RootSpec",
    "Separation",
    "Step",
    "TheoremViolation",
    "color7",
    "complete",
    "contract_edge",
    "delete_vertices",
    "disjoint_paths",
    "exact_k_color",
    "find_minor",
    "find_rooted_minor",
    "from_edge_list",
    "from_graph6",
    "from_sparse6",
    "identify_vertices",
    "induced_subgraph",
    "is_k_connected",
    "is_planar",
    "minimum_separation",
    "pattern",
    "read_graph6",
    "reduction_step",
    "to_graph6",
    "verify_certificate",
    "verify_model",
    "vertex_connectivity",
]
