"""Exact classification of Ulrich and special cycles on resolution dual
graphs of two-dimensional rational surface singularities."""

from .builders import (
    GraphFormatError,
    ValidationReport,
    build_ade,
    build_cyclic,
    hj_expansion,
    parse_graph,
    validate,
)
from .classify import (
    ChainDepthError,
    ClassificationEntry,
    InvalidGraphError,
    RdpVerification,
    brute_force_anti_nef,
    enumerate_special,
    enumerate_ulrich,
    expected_ulrich_count,
    golden_table,
    is_special_cycle,
    is_ulrich_cycle,
    oracle_classify,
    verify_rdp,
)
from .invariants import (
    Filtration,
    colength,
    filtration,
    fundamental_cycle,
    min_gens,
    multiplicity,
    special_module_indices,
    u_invariant,
)
from .lattice import (
    Cycle,
    CycleError,
    DimensionError,
    DualGraph,
    Order,
    canonical_degree,
    compare,
    inf_cycles,
    intersection,
    is_anti_nef,
    support,
    virtual_genus,
)

__version__ = "0.1.0"

__all__ = [
    "ChainDepthError",
    "ClassificationEntry",
    "Cycle",
    "CycleError",
    "DimensionError",
    "DualGraph",
    "Filtration",
    "GraphFormatError",
    "InvalidGraphError",
    "Order",
    "RdpVerification",
    "ValidationReport",
    "brute_force_anti_nef",
    "build_ade",
    "build_cyclic",
    "canonical_degree",
    "colength",
    "compare",
    "enumerate_special",
    "enumerate_ulrich",
    "expected_ulrich_count",
    "filtration",
    "fundamental_cycle",
    "golden_table",
    "hj_expansion",
    "inf_cycles",
    "intersection",
    "is_anti_nef",
    "is_special_cycle",
    "is_ulrich_cycle",
    "min_gens",
    "multiplicity",
    "oracle_classify",
    "parse_graph",
    "special_module_indices",
    "support",
    "u_invariant",
    "validate",
    "verify_rdp",
    "virtual_genus",
]
