#pragma once

#include "oddsum/graph.hpp"

#include <cstdint>
#include <vector>

namespace oddsum {

using Color = std::uint32_t;

/// Proper coloring with colors exactly 1..k.
struct ProperColoring {
  std::vector<Color> colors;
  std::size_t k = 0;
};

inline constexpr std::uint64_t default_node_budget = 100'000'000;

/// Exact χ(G) by DSATUR branch and bound, one connected component at a time.
///
/// Vertex selection is by saturation, then degree in the component, then
/// lowest index. A new color may only be the next unused one. The lower bound
/// is a greedy clique (raised to 3 for non-bipartite components). Throws
/// BudgetExceeded once more than `node_budget` search nodes are expanded.
auto chromatic_number(const Graph & g, std::uint64_t node_budget = default_node_budget) -> ProperColoring;

auto chromatic_number_induced(const Graph & g, const VertexSet & s,
                              std::uint64_t node_budget = default_node_budget) -> std::size_t;

/// True iff adjacent vertices differ and the used colors are exactly 1..k.
auto is_proper_coloring(const Graph & g, const ProperColoring & c) -> bool;

inline constexpr std::size_t brute_force_chromatic_max_vertices = 12;

/// χ(G) by exhaustive assignment in vertex order, for n <= 12. Shares no code
/// with chromatic_number.
auto brute_force_chromatic(const Graph & g) -> std::size_t;

/// Size of a clique found greedily; a lower bound on χ.
auto greedy_clique_size(const Graph & g) -> std::size_t;
/// Colors used by first-fit in vertex order; an upper bound on χ.
auto greedy_coloring_size(const Graph & g) -> std::size_t;

} // namespace oddsum
