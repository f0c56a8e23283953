#include "oddsum/catalog.hpp"

#include "oddsum/errors.hpp"
#include "oddsum/families.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace oddsum {

namespace {

using Mask = std::uint32_t;

auto pair_index(std::size_t n) -> std::vector<std::vector<int>> {
  std::vector<std::vector<int>> index(n, std::vector<int>(n, -1));
  int next = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i)
      index[i][j] = index[j][i] = next++;
  return index;
}

auto mask_connected(Mask mask, std::size_t n, const std::vector<std::vector<int>> & index) -> bool {
  std::uint32_t reached = 1, frontier = 1;
  while (frontier) {
    std::uint32_t next = 0;
    for (std::size_t u = 0; u < n; ++u)
      if ((frontier >> u) & 1U)
        for (std::size_t v = 0; v < n; ++v)
          if (u != v && ((mask >> index[u][v]) & 1U) && !((reached >> v) & 1U))
            next |= 1U << v;
    reached |= next;
    frontier = next;
  }
  return reached == (1U << n) - 1;
}

} // namespace

auto connected_graphs(std::size_t n) -> std::vector<Graph> {
  if (n == 0 || n > 6)
    throw InvalidArgument("connected graph catalog supports 1 <= n <= 6");
  const auto index = pair_index(n);
  const std::size_t pairs = n * (n - 1) / 2;

  std::vector<std::pair<int, int>> pair_list(pairs);
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i)
      pair_list[static_cast<std::size_t>(index[i][j])] = {static_cast<int>(i), static_cast<int>(j)};

  std::vector<std::vector<int>> perms;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do
    perms.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));

  std::set<Mask> canon;
  for (Mask mask = 0; mask < (Mask{1} << pairs); ++mask) {
    if (!mask_connected(mask, n, index))
      continue;
    Mask best = mask;
    for (const auto & p : perms) {
      Mask image = 0;
      for (std::size_t e = 0; e < pairs; ++e)
        if ((mask >> e) & 1U)
          image |= Mask{1} << index[static_cast<std::size_t>(p[static_cast<std::size_t>(pair_list[e].first)])]
                                   [static_cast<std::size_t>(p[static_cast<std::size_t>(pair_list[e].second)])];
      best = std::min(best, image);
    }
    canon.insert(best);
  }

  std::vector<Graph> out;
  for (Mask mask : canon) {
    GraphBuilder b(n);
    for (std::size_t e = 0; e < pairs; ++e)
      if ((mask >> e) & 1U)
        b.add_edge(static_cast<Vertex>(pair_list[e].first), static_cast<Vertex>(pair_list[e].second));
    out.push_back(std::move(b).build());
  }
  return out;
}

auto connected_graphs_up_to(std::size_t max_n) -> std::vector<Graph> {
  std::vector<Graph> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    auto part = connected_graphs(n);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

auto random_graph_sample(std::size_t count, std::size_t min_n, std::size_t max_n, std::uint64_t seed)
    -> std::vector<Graph> {
  if (min_n > max_n)
    throw InvalidArgument("random sample needs min_n <= max_n");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> order(min_n, max_n);
  std::uniform_real_distribution<double> density(0.2, 0.8);
  std::vector<Graph> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    auto n = order(rng);
    auto p = density(rng);
    out.push_back(random_graph(n, p, rng));
  }
  return out;
}

} // namespace oddsum
