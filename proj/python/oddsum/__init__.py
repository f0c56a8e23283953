"""Odd-sum chromatic numbers, odd-dominating sets and the graph families used to study them."""

from ._oddsum import (
    Graph,
    InvalidArgument,
    ResourceLimit,
    attach_bowtie,
    brute_force_odd_dominating_sets,
    cartesian_product,
    chios,
    chromatic_coloring,
    chromatic_number,
    coloring_from_partition,
    family,
    family_names,
    forced_excluded_vertices,
    girth,
    is_biconnected,
    is_bipartite,
    is_connected,
    is_odd_dominating,
    is_odd_sum_coloring,
    normalize_coloring,
    odd_dominating_sets,
    odd_sum_chromatic,
    ods_count,
    ods_nullity,
    oracle_chios,
    path_gadget_extension,
    planarity_necessary,
    subdivide_edges,
    surfaces,
    verify,
    verify_ids,
)

__version__ = "0.1.0"
