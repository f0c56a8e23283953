#pragma once

#include "oddsum/graph.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace oddsum {

/// One representative of every isomorphism class of connected graphs on
/// exactly n vertices (n <= 6), canonical under brute-force relabeling.
auto connected_graphs(std::size_t n) -> std::vector<Graph>;

/// connected_graphs(1) ... connected_graphs(max_n), in order.
auto connected_graphs_up_to(std::size_t max_n) -> std::vector<Graph>;

/// `count` random graphs with n drawn uniformly from [min_n, max_n] and edge
/// probability drawn uniformly from [0.2, 0.8], all from one seeded stream.
auto random_graph_sample(std::size_t count, std::size_t min_n, std::size_t max_n, std::uint64_t seed)
    -> std::vector<Graph>;

} // namespace oddsum
