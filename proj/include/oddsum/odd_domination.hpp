#pragma once

#include "oddsum/graph.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace oddsum {

/// Solution space of (A+I)x = 1 over GF(2) for a graph with adjacency A.
///
/// The odd-dominating sets are exactly particular ⊕ span(basis). The basis is
/// ordered by increasing free variable; free variables are 0 in `particular`.
struct GF2System {
  std::vector<VertexSet> matrix;
  VertexSet particular;
  std::vector<VertexSet> basis;

  auto nullity() const -> std::size_t { return basis.size(); }
};

/// Number of odd-dominating sets, always 2^exponent.
class PowerOfTwo {
public:
  explicit PowerOfTwo(std::size_t exponent) : exponent_(exponent) {}

  auto exponent() const -> std::size_t { return exponent_; }
  auto fits_u64() const -> bool { return exponent_ < 64; }
  auto to_u64() const -> std::uint64_t;
  /// Exact decimal representation.
  auto to_string() const -> std::string;

  friend auto operator==(const PowerOfTwo &, const PowerOfTwo &) -> bool = default;

private:
  std::size_t exponent_;
};

inline constexpr std::uint64_t default_cap = std::uint64_t{1} << 20;

/// default_cap, unless the ODDSUM_CAP environment variable holds a positive integer.
auto default_enumeration_cap() -> std::uint64_t;

auto solve_odd_domination(const Graph & g) -> GF2System;

auto count_odd_dominating_sets(const Graph & g) -> PowerOfTwo;

/// Visits every solution once, in Gray-code order over the basis starting
/// from the particular solution. Throws SpaceTooLarge when 2^nullity > cap.
auto for_each_odd_dominating_set(const GF2System & system, std::uint64_t cap,
                                 const std::function<void(const VertexSet &)> & visit) -> void;

auto enumerate_odd_dominating_sets(const GF2System & system, std::uint64_t cap = default_cap)
    -> std::vector<VertexSet>;
auto enumerate_odd_dominating_sets(const Graph & g, std::uint64_t cap = default_cap) -> std::vector<VertexSet>;

struct DominationCheck {
  bool odd_dominating;
  /// Vertices x with |N[x] ∩ s| even, ascending.
  std::vector<Vertex> violators;

  explicit operator bool() const { return odd_dominating; }
};

auto is_odd_dominating(const Graph & g, const VertexSet & s) -> DominationCheck;

/// Vertices x for which some v, w satisfy x ∉ N[v] and N[w] = N[v] ∪ {x}.
/// No odd-dominating set contains any of them.
auto forced_excluded_vertices(const Graph & g) -> VertexSet;

inline constexpr std::size_t brute_force_max_vertices = 24;

/// Every subset passing is_odd_dominating, in numeric bit-pattern order.
auto brute_force_odd_dominating_sets(const Graph & g) -> std::vector<VertexSet>;

} // namespace oddsum
