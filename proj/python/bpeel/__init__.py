"""Butterfly counting, tip/wing decompositions and projection baselines."""

from ._bpeel import (
    ArgumentError,
    BipartiteGraph,
    CountOverflowError,
    EmptyGraphError,
    Error,
    ParseError,
    PreconditionError,
    ResourceError,
    core_decompose,
    core_hierarchy,
    count_per_edge,
    count_per_vertex,
    count_triangles,
    extract_k_tips,
    extract_k_wings,
    fractional_core_decompose,
    load_edge_list,
    nucleus23_decompose,
    nucleus23_hierarchy,
    parse_edge_list,
    project,
    run,
    tip_decompose,
    tip_hierarchy,
    wing_decompose,
    wing_hierarchy,
)

__all__ = [name for name in dir() if not name.startswith("_")]
