#include "oddsum/surfaces.hpp"

#include "oddsum/errors.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

namespace oddsum::surfaces {

auto isqrt(std::uint64_t x) -> std::uint64_t {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(x)));
  while (r > 0 && r * r > x)
    --r;
  while ((r + 1) * (r + 1) <= x)
    ++r;
  return r;
}

auto heawood_number(std::uint64_t genus) -> std::uint64_t {
  // ⌊(7 + y)/2⌋ = ⌊(7 + ⌊y⌋)/2⌋ for real y >= 0.
  return (7 + isqrt(1 + 48 * genus)) / 2;
}

auto genus_complete(std::uint64_t n) -> std::uint64_t {
  if (n <= 4)
    return 0;
  return ((n - 3) * (n - 4) + 11) / 12;
}

auto betti_complete_bipartite(std::uint64_t m, std::uint64_t n) -> std::uint64_t {
  if (m == 0 || n == 0)
    throw InvalidArgument("K_{m,n} needs m, n >= 1");
  return m * n - (m + n) + 1;
}

auto product_genus_bound(std::uint64_t n) -> std::uint64_t {
  if (n == 0)
    throw InvalidArgument("product_genus_bound needs n >= 1");
  return 2 * genus_complete(n) + n * genus_complete(2) + betti_complete_bipartite(2, n);
}

auto chios_surface_lower_bound(std::uint64_t genus) -> SurfaceBound {
  if (genus < 3)
    throw InvalidArgument("surface lower bound needs g >= 3 (24g - 67 must be non-negative), got " +
                          std::to_string(genus));
  const std::uint64_t radicand = 24 * genus - 67;
  SurfaceBound out{};
  out.genus = genus;
  out.bound = -3.0 + std::sqrt(static_cast<double>(radicand));
  // formula_n = ⌊(1 + √r)/2⌋ = ⌊(1 + ⌊√r⌋)/2⌋
  out.formula_n = (1 + isqrt(radicand)) / 2;
  out.witness_n = 1;
  for (std::uint64_t n = 3; product_genus_bound(n) <= genus; n += 2)
    out.witness_n = n;
  out.heawood = heawood_number(genus);
  return out;
}

auto gap_table_for(const std::vector<std::uint64_t> & genera) -> std::vector<GapRow> {
  std::vector<GapRow> rows;
  for (auto g : genera) {
    auto b = chios_surface_lower_bound(g);
    rows.push_back({g, b.heawood, b.bound, b.bound - static_cast<double>(b.heawood)});
  }
  return rows;
}

auto gap_divergence_table(std::uint64_t g_max) -> std::vector<GapRow> {
  if (g_max < 30)
    throw InvalidArgument("gap table needs g_max >= 30");
  std::vector<std::uint64_t> genera;
  for (std::uint64_t g = 30; g <= g_max; g *= 2)
    genera.push_back(g);
  return gap_table_for(genera);
}

auto to_csv(const std::vector<GapRow> & rows) -> std::string {
  std::ostringstream os;
  os << "g,heawood,lower_bound,gap\n";
  os << std::setprecision(12);
  for (const auto & r : rows)
    os << r.genus << ',' << r.heawood << ',' << r.lower_bound << ',' << r.gap << '\n';
  return os.str();
}

auto to_json(const std::vector<GapRow> & rows) -> nlohmann::json {
  auto j = nlohmann::json::array();
  for (const auto & r : rows)
    j.push_back({{"g", r.genus}, {"heawood", r.heawood}, {"lower_bound", r.lower_bound}, {"gap", r.gap}});
  return j;
}

auto to_json(const SurfaceBound & b) -> nlohmann::json {
  return {{"g", b.genus},         {"bound", b.bound},         {"witness_n", b.witness_n},
          {"formula_n", b.formula_n}, {"heawood", b.heawood}};
}

} // namespace oddsum::surfaces
