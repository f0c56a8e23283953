#pragma once

#include "oddsum/vertex_set.hpp"

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace oddsum {

using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency is stored as one bit-vector row per vertex. Labels are optional;
/// when present there is exactly one per vertex (possibly empty strings).
class Graph {
public:
  Graph() = default;

  auto size() const -> std::size_t { return adjacency_.size(); }
  auto edge_count() const -> std::size_t { return edge_count_; }

  auto adjacent(Vertex u, Vertex v) const -> bool { return adjacency_[u].test(v); }
  auto neighbors(Vertex v) const -> const VertexSet & { return adjacency_[v]; }
  auto degree(Vertex v) const -> std::size_t { return adjacency_[v].count(); }
  auto max_degree() const -> std::size_t;
  auto degree_sum() const -> std::size_t;

  /// N[v]: the neighbors of v together with v itself.
  auto closed_neighborhood(Vertex v) const -> VertexSet {
    VertexSet s = adjacency_[v];
    s.set(v);
    return s;
  }

  /// Edges with u < v, lexicographic.
  auto edges() const -> std::vector<Edge>;

  auto has_labels() const -> bool { return !labels_.empty(); }
  auto labels() const -> const std::vector<std::string> & { return labels_; }
  auto label(Vertex v) const -> std::string_view {
    return labels_.empty() ? std::string_view{} : std::string_view{labels_[v]};
  }
  /// Lowest vertex carrying exactly this label.
  auto find_label(std::string_view label) const -> std::optional<Vertex>;
  auto vertices_labeled(std::string_view label) const -> std::vector<Vertex>;

  /// Subgraph induced by `keep`, vertices renumbered in increasing order.
  auto induced_subgraph(const VertexSet & keep) const -> Graph;

  auto with_labels(std::vector<std::string> labels) const -> Graph;

  friend auto operator==(const Graph & a, const Graph & b) -> bool {
    return a.adjacency_ == b.adjacency_;
  }

private:
  friend class GraphBuilder;

  std::vector<VertexSet> adjacency_;
  std::vector<std::string> labels_;
  std::size_t edge_count_ = 0;
};

/// Mutable staging area for constructing a Graph. Duplicate edges are merged.
class GraphBuilder {
public:
  GraphBuilder() = default;
  explicit GraphBuilder(std::size_t n);
  /// Starts from a copy of an existing graph (its labels included).
  explicit GraphBuilder(const Graph & g);

  auto size() const -> std::size_t { return adj_.size(); }
  auto add_vertex(std::string label = {}) -> Vertex;
  auto add_edge(Vertex u, Vertex v) -> void;
  auto adjacent(Vertex u, Vertex v) const -> bool;
  auto degree(Vertex v) const -> std::size_t { return adj_[v].size(); }
  auto set_label(Vertex v, std::string label) -> void;

  auto build() && -> Graph;
  auto build() const & -> Graph { return GraphBuilder(*this).build(); }

private:
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::string> labels_;
  bool labeled_ = false;
};

/// Builds a graph from an explicit edge list. Throws InvalidArgument naming
/// the offending pair on an out-of-range endpoint or a self-loop.
auto build_graph(std::size_t n, const std::vector<Edge> & edges) -> Graph;

/// Girth of a graph; forests have infinite girth, kept as an explicit state.
class Girth {
public:
  static auto infinite() -> Girth { return Girth{}; }
  static auto of(std::size_t length) -> Girth { return Girth{length}; }

  auto is_infinite() const -> bool { return !length_; }
  auto value() const -> std::size_t { return length_.value(); }
  auto to_string() const -> std::string { return length_ ? std::to_string(*length_) : "inf"; }

  friend auto operator==(const Girth &, const Girth &) -> bool = default;
  friend auto operator<<(std::ostream & os, const Girth & g) -> std::ostream & { return os << g.to_string(); }

private:
  Girth() = default;
  explicit Girth(std::size_t length) : length_(length) {}
  std::optional<std::size_t> length_;
};

auto girth(const Graph & g) -> Girth;

auto closed_neighborhood(const Graph & g, Vertex v) -> VertexSet;

struct Bipartition {
  VertexSet part_a;
  VertexSet part_b;
};

/// Two-coloring witness, or nullopt when an odd cycle exists. In each
/// component the lowest-index vertex goes to part A.
auto is_bipartite(const Graph & g) -> std::optional<Bipartition>;

auto is_connected(const Graph & g) -> bool;

/// Connected with no cut vertex. Requires n >= 3.
auto is_biconnected(const Graph & g) -> bool;

/// |E| <= 3n-6 and, with finite girth γ, |E| <= γ/(γ-2)·(n-2). Necessary for
/// planarity, not sufficient.
auto planarity_necessary(const Graph & g) -> bool;

/// Connected components as vertex sets, ordered by lowest member.
auto connected_components(const Graph & g) -> std::vector<VertexSet>;

} // namespace oddsum
