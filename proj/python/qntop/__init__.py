"""Lifting properties and orthogonality classes of maps of finite topological spaces."""

from _qntop import (  # noqa: F401
    CapExceeded,
    EngineError,
    Map,
    NotationError,
    Space,
    canonical_space,
    class_names,
    classify,
    count_maps,
    count_spaces,
    find_counterexample,
    graph_dot,
    graph_json,
    is_complete_lattice,
    is_in_class,
    lift_witness,
    lifts,
    normalize,
    orbit_nodes,
    orbit_step,
    parse_map,
    parse_space,
    print_map,
    print_space,
    sets_mode_verify,
    verify_all,
    verify_edge,
)

__all__ = [n for n in dir() if not n.startswith("_")]
