"""Mutual-visibility sets of distance-hereditary graphs."""

from ._mutvis import (
    CapExceededError,
    DisconnectedGraphError,
    Graph,
    MuResult,
    SPARSE_WEIGHTS,
    NotDistanceHereditaryError,
    bfs_distances,
    cut_vertices,
    decompose,
    decomposition_dot,
    family,
    is_dh_metric,
    is_distance_hereditary,
    is_mutual_visibility_set,
    mu_bruteforce,
    mu_number,
    mu_set,
    pair_visible,
    parse_edge_list,
    random_dh,
    to_edge_list,
)

__all__ = [
    "CapExceededError",
    "DisconnectedGraphError",
    "Graph",
    "MuResult",
    "SPARSE_WEIGHTS",
    "NotDistanceHereditaryError",
    "bfs_distances",
    "cut_vertices",
    "decompose",
    "decomposition_dot",
    "family",
    "is_dh_metric",
    "is_distance_hereditary",
    "is_mutual_visibility_set",
    "mu_bruteforce",
    "mu_number",
    "mu_set",
    "pair_visible",
    "parse_edge_list",
    "random_dh",
    "to_edge_list",
]
