#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace oddsum::surfaces {

/// ⌊(7 + √(1+48g))/2⌋, in integer arithmetic.
auto heawood_number(std::uint64_t genus) -> std::uint64_t;

/// Orientable genus of K_n, ⌈(n-3)(n-4)/12⌉; 0 for n <= 4.
auto genus_complete(std::uint64_t n) -> std::uint64_t;

/// First Betti number of K_{m,n}: mn - (m+n) + 1.
auto betti_complete_bipartite(std::uint64_t m, std::uint64_t n) -> std::uint64_t;

/// Upper bound on the genus of K_2 □ K_n from the product inequality:
/// 2·γ(K_n) + n·γ(K_2) + 𝓑(K_{2,n}).
auto product_genus_bound(std::uint64_t n) -> std::uint64_t;

/// Lower bound on the largest odd-sum chromatic number over graphs embeddable
/// in the orientable surface of genus g (g >= 3).
struct SurfaceBound {
  std::uint64_t genus;
  double bound;               ///< -3 + √(24g - 67)
  std::uint64_t witness_n;    ///< largest odd n with product_genus_bound(n) <= g
  std::uint64_t formula_n;    ///< ⌊(1 + √(24g - 67))/2⌋
  std::uint64_t heawood;
};

auto chios_surface_lower_bound(std::uint64_t genus) -> SurfaceBound;

struct GapRow {
  std::uint64_t genus;
  std::uint64_t heawood;
  double lower_bound;
  double gap;
};

/// Rows for g = 30, 60, 120, ... up to g_max (g_max >= 30).
auto gap_divergence_table(std::uint64_t g_max) -> std::vector<GapRow>;
auto gap_table_for(const std::vector<std::uint64_t> & genera) -> std::vector<GapRow>;

/// "g,heawood,lower_bound,gap" header, one line per row.
auto to_csv(const std::vector<GapRow> & rows) -> std::string;
auto to_json(const std::vector<GapRow> & rows) -> nlohmann::json;
auto to_json(const SurfaceBound & b) -> nlohmann::json;

auto isqrt(std::uint64_t x) -> std::uint64_t;

} // namespace oddsum::surfaces
