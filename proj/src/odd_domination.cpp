#include "oddsum/odd_domination.hpp"

#include "oddsum/errors.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <stdexcept>

namespace oddsum {

auto PowerOfTwo::to_u64() const -> std::uint64_t {
  if (!fits_u64())
    throw std::overflow_error("2^" + std::to_string(exponent_) + " does not fit in 64 bits");
  return std::uint64_t{1} << exponent_;
}

auto PowerOfTwo::to_string() const -> std::string {
  if (fits_u64())
    return std::to_string(to_u64());
  // Little-endian base-10^9 limbs, doubled exponent_ times.
  std::vector<std::uint32_t> limbs{1};
  for (std::size_t i = 0; i < exponent_; ++i) {
    std::uint32_t carry = 0;
    for (auto & limb : limbs) {
      std::uint64_t x = std::uint64_t{limb} * 2 + carry;
      limb = static_cast<std::uint32_t>(x % 1000000000U);
      carry = static_cast<std::uint32_t>(x / 1000000000U);
    }
    if (carry)
      limbs.push_back(carry);
  }
  std::string out = std::to_string(limbs.back());
  for (std::size_t i = limbs.size() - 1; i-- > 0;) {
    auto part = std::to_string(limbs[i]);
    out += std::string(9 - part.size(), '0') + part;
  }
  return out;
}

auto default_enumeration_cap() -> std::uint64_t {
  if (const char * env = std::getenv("ODDSUM_CAP")) {
    char * end = nullptr;
    auto value = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && value > 0)
      return value;
  }
  return default_cap;
}

auto solve_odd_domination(const Graph & g) -> GF2System {
  const auto n = g.size();
  GF2System system;
  system.matrix.reserve(n);
  for (Vertex v = 0; v < n; ++v)
    system.matrix.push_back(g.closed_neighborhood(v));

  // Augmented rows: columns 0..n-1 then the right-hand side at column n.
  std::vector<VertexSet> rows;
  rows.reserve(n);
  for (Vertex v = 0; v < n; ++v) {
    VertexSet row(n + 1);
    system.matrix[v].for_each([&](Vertex w) { row.set(w); });
    row.set(static_cast<Vertex>(n));
    rows.push_back(std::move(row));
  }

  // Reduced row echelon form, pivot = lowest-index row holding the column.
  std::vector<Vertex> pivot_col;
  std::vector<bool> is_pivot(n, false);
  std::size_t rank = 0;
  for (Vertex col = 0; col < n && rank < n; ++col) {
    std::size_t pivot = rank;
    while (pivot < n && !rows[pivot].test(col))
      ++pivot;
    if (pivot == n)
      continue;
    std::swap(rows[rank], rows[pivot]);
    const std::size_t first_word = col / VertexSet::word_bits;
    for (std::size_t r = 0; r < n; ++r)
      if (r != rank && rows[r].test(col))
        rows[r].xor_tail(rows[rank], first_word);
    pivot_col.push_back(col);
    is_pivot[col] = true;
    ++rank;
  }

  for (std::size_t r = rank; r < n; ++r)
    if (rows[r].test(static_cast<Vertex>(n)))
      throw std::logic_error("closed-neighborhood system is inconsistent; every graph has an odd-dominating set");

  system.particular = VertexSet(n);
  for (std::size_t r = 0; r < rank; ++r)
    if (rows[r].test(static_cast<Vertex>(n)))
      system.particular.set(pivot_col[r]);

  for (Vertex free = 0; free < n; ++free) {
    if (is_pivot[free])
      continue;
    VertexSet b(n);
    b.set(free);
    for (std::size_t r = 0; r < rank; ++r)
      if (rows[r].test(free))
        b.set(pivot_col[r]);
    system.basis.push_back(std::move(b));
  }
  return system;
}

auto count_odd_dominating_sets(const Graph & g) -> PowerOfTwo {
  return PowerOfTwo(solve_odd_domination(g).nullity());
}

auto for_each_odd_dominating_set(const GF2System & system, std::uint64_t cap,
                                 const std::function<void(const VertexSet &)> & visit) -> void {
  const auto k = system.nullity();
  if (k >= 64 || (std::uint64_t{1} << k) > cap)
    throw SpaceTooLarge(k, cap);
  VertexSet current = system.particular;
  visit(current);
  const std::uint64_t total = std::uint64_t{1} << k;
  for (std::uint64_t i = 1; i < total; ++i) {
    current ^= system.basis[static_cast<std::size_t>(std::countr_zero(i))];
    visit(current);
  }
}

auto enumerate_odd_dominating_sets(const GF2System & system, std::uint64_t cap) -> std::vector<VertexSet> {
  std::vector<VertexSet> out;
  for_each_odd_dominating_set(system, cap, [&](const VertexSet & s) { out.push_back(s); });
  return out;
}

auto enumerate_odd_dominating_sets(const Graph & g, std::uint64_t cap) -> std::vector<VertexSet> {
  return enumerate_odd_dominating_sets(solve_odd_domination(g), cap);
}

auto is_odd_dominating(const Graph & g, const VertexSet & s) -> DominationCheck {
  if (s.size() != g.size())
    throw InvalidArgument("vertex set size " + std::to_string(s.size()) + " does not match graph order " +
                          std::to_string(g.size()));
  DominationCheck check{true, {}};
  for (Vertex x = 0; x < g.size(); ++x) {
    // |N[x] ∩ s| = |N(x) ∩ s| + [x ∈ s]
    bool odd = g.neighbors(x).intersection_parity(s) != s.test(x);
    if (!odd) {
      check.odd_dominating = false;
      check.violators.push_back(x);
    }
  }
  return check;
}

auto forced_excluded_vertices(const Graph & g) -> VertexSet {
  const auto n = g.size();
  VertexSet excluded(n);
  std::vector<VertexSet> closed;
  closed.reserve(n);
  for (Vertex v = 0; v < n; ++v)
    closed.push_back(g.closed_neighborhood(v));

  // N[v] ⊆ N[w] forces w ∈ N[v], so only neighbors of v are candidates.
  for (Vertex v = 0; v < n; ++v)
    g.neighbors(v).for_each([&](Vertex w) {
      if (closed[w].count() != closed[v].count() + 1 || !closed[v].is_subset_of(closed[w]))
        return;
      VertexSet extra = closed[w];
      extra ^= closed[v];
      excluded.set(extra.first());
    });
  return excluded;
}

auto brute_force_odd_dominating_sets(const Graph & g) -> std::vector<VertexSet> {
  const auto n = g.size();
  if (n > brute_force_max_vertices)
    throw InvalidArgument("brute force odd-domination needs n <= " + std::to_string(brute_force_max_vertices) +
                          ", got " + std::to_string(n));
  std::vector<std::uint32_t> closed(n, 0);
  for (Vertex v = 0; v < n; ++v)
    g.closed_neighborhood(v).for_each([&](Vertex w) { closed[v] |= std::uint32_t{1} << w; });

  std::vector<VertexSet> out;
  const std::uint32_t limit = n == 0 ? 1 : (std::uint32_t{1} << n);
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    bool ok = std::all_of(closed.begin(), closed.end(),
                          [&](std::uint32_t nb) { return (std::popcount(nb & mask) & 1) == 1; });
    if (!ok)
      continue;
    VertexSet s(n);
    for (Vertex v = 0; v < n; ++v)
      if ((mask >> v) & 1U)
        s.set(v);
    out.push_back(std::move(s));
  }
  return out;
}

} // namespace oddsum
