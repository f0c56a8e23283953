#pragma once

#include "oddsum/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

namespace oddsum::testing {

/// Number of odd-dominating sets by exhaustive search over membership bits in
/// vertex-index order. A vertex's parity is checked as soon as its whole closed
/// neighborhood has been assigned, so the search stays small when vertices of
/// long paths are numbered consecutively (as after subdivision).
inline auto count_odd_dominating_by_search(const Graph & g) -> std::uint64_t {
  const auto n = g.size();
  std::vector<std::vector<Vertex>> closed(n);
  std::vector<std::vector<Vertex>> due(n);
  for (Vertex v = 0; v < n; ++v) {
    closed[v] = g.closed_neighborhood(v).to_vector();
    due[*std::max_element(closed[v].begin(), closed[v].end())].push_back(v);
  }
  std::vector<std::uint8_t> in(n, 0);
  std::uint64_t count = 0;
  auto search = [&](auto & self, std::size_t i) -> void {
    if (i == n) {
      ++count;
      return;
    }
    for (std::uint8_t bit : {0, 1}) {
      in[i] = bit;
      bool ok = true;
      for (auto v : due[i]) {
        unsigned parity = 0;
        for (auto w : closed[v])
          parity ^= in[w];
        if (!parity) {
          ok = false;
          break;
        }
      }
      if (ok)
        self(self, i + 1);
    }
  };
  search(search, 0);
  return count;
}

} // namespace oddsum::testing
