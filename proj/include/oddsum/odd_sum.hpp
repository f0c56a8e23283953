#pragma once

#include "oddsum/coloring.hpp"
#include "oddsum/graph.hpp"
#include "oddsum/odd_domination.hpp"

#include <json.hpp>

#include <cstdint>
#include <vector>

namespace oddsum {

/// Witness for χos(G): D is odd-dominating, colored 1,3,5,... on D and
/// 2,4,6,... on V∖D, with chios distinct colors in total.
struct OddSumCertificate {
  std::size_t chios = 0;
  VertexSet dominating_set;
  std::vector<Color> colors;

  auto odd_colored() const -> const VertexSet & { return dominating_set; }
  auto even_colored() const -> VertexSet { return dominating_set.complement(); }
};

/// χos(G) = min over odd-dominating D of χ(G[D]) + χ(G[V∖D]).
///
/// Candidates come in Gray-code order; the first D reaching the minimum wins.
/// The complement is only colored when χ(G[D]) plus a lower bound for the
/// complement still beats the running best.
auto odd_sum_chromatic(const Graph & g, std::uint64_t cap = default_cap,
                       std::uint64_t node_budget = default_node_budget) -> OddSumCertificate;

struct OddSumViolations {
  std::vector<Edge> improper_edges;
  /// Vertices whose closed-neighborhood color sum is even.
  std::vector<Vertex> even_sums;

  auto valid() const -> bool { return improper_edges.empty() && even_sums.empty(); }
  explicit operator bool() const { return valid(); }
};

/// Throws InvalidArgument if `colors` is not total on V or holds a zero.
auto validate_odd_sum_coloring(const Graph & g, const std::vector<Color> & colors) -> OddSumViolations;

/// Number of distinct values in a coloring.
auto range_size(const std::vector<Color> & colors) -> std::size_t;

/// Colors G[d] with 1,3,5,... and G[V∖d] with 2,4,6,..., each side optimally.
auto coloring_from_partition(const Graph & g, const VertexSet & d,
                             std::uint64_t node_budget = default_node_budget) -> std::vector<Color>;

/// Odd colors remapped order-preservingly onto 1,3,5,..., even ones onto
/// 2,4,6,.... Throws InvalidArgument unless `colors` is an odd-sum coloring of g.
auto normalize_coloring(const Graph & g, const std::vector<Color> & colors) -> std::vector<Color>;

inline constexpr std::size_t oracle_max_vertices = 8;

struct OracleResult {
  std::size_t chios = 0;
  std::vector<Color> colors;
};

/// χos straight from the definition: search colorings V → {1..2r} for the
/// smallest range size r, one representative per parity-preserving relabeling.
/// Does not use odd-dominating sets or chromatic numbers.
auto oracle_odd_sum_chromatic(const Graph & g) -> OracleResult;

auto to_json(const OddSumCertificate & cert) -> nlohmann::json;
auto coloring_to_json(const std::vector<Color> & colors) -> nlohmann::json;
/// Accepts {"colors": {v: int}} / {"colors": [..]} or a bare array or object.
auto coloring_from_json(const nlohmann::json & j, std::size_t n) -> std::vector<Color>;

} // namespace oddsum
