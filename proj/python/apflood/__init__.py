"""Adaptive probabilistic flooding: route discovery simulator and path oracle."""

from ._core import (
    Graph,
    ParseError,
    ValidationError,
    brute_force_secondary,
    diameter,
    bfs_distances,
    flood_probability,
    is_primary_optimal,
    is_secondary_optimal,
    load_topology,
    message_bound,
    message_bound_corrected,
    modified_graph,
    optimal_secondary,
    parse_topology,
    random_graph,
    run_full_round,
    run_one,
    similarity,
    sweep_csv,
    topology_stats,
    write_topology,
)

__all__ = [
    "Graph",
    "ParseError",
    "ValidationError",
    "bfs_distances",
    "brute_force_secondary",
    "diameter",
    "flood_probability",
    "is_primary_optimal",
    "is_secondary_optimal",
    "load_topology",
    "message_bound",
    "message_bound_corrected",
    "modified_graph",
    "optimal_secondary",
    "parse_topology",
    "random_graph",
    "run_full_round",
    "run_one",
    "similarity",
    "sweep_csv",
    "topology_stats",
    "write_topology",
]
