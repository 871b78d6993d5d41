from .census import degree8_census, edge_budget, k5_pattern_report
from .cockade import (
    Cockade,
    CockadeGluing,
    CockadeLeaf,
    MinorFound,
    check_decomposition,
    generate_cockade,
    jakobsen_classify,
    leaves,
    meets_jakobsen_threshold,
    recognize_cockade,
)
from .dichotomy import CirculantFound, K4Found, Neither, neighborhood_dichotomy, neighborhood_shape
from .stable import (
    cliques_of_size,
    contains_fixed_subgraph,
    enumerate_k5,
    find_triangle_in_alpha2,
    has_stable_set,
    independence_number,
)
from .triangular import circuits, is_triangular_wrt

__all__ = [
    "CirculantFound",
    "Cockade",
    "CockadeGluing",
    "CockadeLeaf",
    "K4Found",
    "MinorFound",
    "Neither",
    "check_decomposition",
    "circuits",
    "cliques_of_size",
    "contains_fixed_subgraph",
    "degree8_census",
    "edge_budget",
    "enumerate_k5",
    "find_triangle_in_alpha2",
    "generate_cockade",
    "has_stable_set",
    "independence_number",
    "is_triangular_wrt",
    "jakobsen_classify",
    "k5_pattern_report",
    "leaves",
    "meets_jakobsen_threshold",
    "neighborhood_dichotomy",
    "neighborhood_shape",
    "recognize_cockade",
]
