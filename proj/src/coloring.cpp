#include "oddsum/coloring.hpp"

#include "oddsum/errors.hpp"

#include <algorithm>

namespace oddsum {

namespace {

class DsaturSearch {
public:
  DsaturSearch(const Graph & g, std::uint64_t budget)
      : g_(g), n_(g.size()), budget_(budget), color_(n_, 0), degree_(n_), saturation_(n_, 0),
        neighbor_color_count_(n_, std::vector<std::uint32_t>(n_ + 2, 0)) {
    for (Vertex v = 0; v < n_; ++v)
      degree_[v] = g.degree(v);
  }

  auto run(std::size_t lower_bound) -> std::vector<Color> {
    lower_ = lower_bound;
    greedy();
    if (best_k_ > lower_)
      branch(0, 0);
    return best_;
  }

  auto best_k() const -> std::size_t { return best_k_; }

private:
  auto select() const -> Vertex {
    Vertex pick = static_cast<Vertex>(n_);
    for (Vertex v = 0; v < n_; ++v) {
      if (color_[v])
        continue;
      if (pick == n_ || saturation_[v] > saturation_[pick] ||
          (saturation_[v] == saturation_[pick] && degree_[v] > degree_[pick]))
        pick = v;
    }
    return pick;
  }

  auto assign(Vertex v, Color c) -> void {
    color_[v] = c;
    g_.neighbors(v).for_each([&](Vertex w) {
      if (neighbor_color_count_[w][c]++ == 0)
        ++saturation_[w];
    });
  }

  auto unassign(Vertex v) -> void {
    Color c = color_[v];
    color_[v] = 0;
    g_.neighbors(v).for_each([&](Vertex w) {
      if (--neighbor_color_count_[w][c] == 0)
        --saturation_[w];
    });
  }

  auto greedy() -> void {
    std::size_t used = 0;
    for (std::size_t step = 0; step < n_; ++step) {
      Vertex v = select();
      Color c = 1;
      while (neighbor_color_count_[v][c])
        ++c;
      assign(v, c);
      used = std::max<std::size_t>(used, c);
    }
    best_ = color_;
    best_k_ = used;
    for (Vertex v = 0; v < n_; ++v)
      unassign(v);
  }

  auto branch(std::size_t colored, std::size_t used) -> void {
    if (colored == n_) {
      best_ = color_;
      best_k_ = used;
      return;
    }
    if (++nodes_ > budget_)
      throw BudgetExceeded(budget_);
    Vertex v = select();
    const auto limit = std::min(used + 1, best_k_ - 1);
    for (Color c = 1; c <= limit; ++c) {
      if (neighbor_color_count_[v][c])
        continue;
      assign(v, c);
      branch(colored + 1, std::max<std::size_t>(used, c));
      unassign(v);
      if (best_k_ <= lower_)
        return;
      // best_k_ may have dropped; later colors are pointless past it.
      if (c + 1 > best_k_ - 1)
        break;
    }
  }

  const Graph & g_;
  std::size_t n_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::size_t lower_ = 0;
  std::vector<Color> color_;
  std::vector<std::size_t> degree_;
  std::vector<std::size_t> saturation_;
  std::vector<std::vector<std::uint32_t>> neighbor_color_count_;
  std::vector<Color> best_;
  std::size_t best_k_ = 0;
};

auto component_coloring(const Graph & comp, std::uint64_t budget) -> std::vector<Color> {
  const auto n = comp.size();
  if (comp.edge_count() == 0)
    return std::vector<Color>(n, 1);
  if (auto parts = is_bipartite(comp)) {
    std::vector<Color> colors(n);
    for (Vertex v = 0; v < n; ++v)
      colors[v] = parts->part_a.test(v) ? 1 : 2;
    return colors;
  }
  const auto lower = std::max<std::size_t>(3, greedy_clique_size(comp));
  DsaturSearch search(comp, budget);
  return search.run(lower);
}

} // namespace

auto chromatic_number(const Graph & g, std::uint64_t node_budget) -> ProperColoring {
  ProperColoring result;
  result.colors.assign(g.size(), 0);
  for (const auto & members : connected_components(g)) {
    Graph comp = g.induced_subgraph(members);
    auto colors = component_coloring(comp, node_budget);
    auto vertices = members.to_vector();
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      result.colors[vertices[i]] = colors[i];
      result.k = std::max<std::size_t>(result.k, colors[i]);
    }
  }
  return result;
}

auto chromatic_number_induced(const Graph & g, const VertexSet & s, std::uint64_t node_budget) -> std::size_t {
  if (s.size() != g.size())
    throw InvalidArgument("vertex set size does not match graph order");
  return chromatic_number(g.induced_subgraph(s), node_budget).k;
}

auto is_proper_coloring(const Graph & g, const ProperColoring & c) -> bool {
  if (c.colors.size() != g.size())
    return false;
  std::vector<bool> seen(c.k + 1, false);
  for (Vertex v = 0; v < g.size(); ++v) {
    if (c.colors[v] < 1 || c.colors[v] > c.k)
      return false;
    seen[c.colors[v]] = true;
  }
  for (std::size_t col = 1; col <= c.k; ++col)
    if (!seen[col])
      return false;
  for (auto [u, v] : g.edges())
    if (c.colors[u] == c.colors[v])
      return false;
  return true;
}

auto brute_force_chromatic(const Graph & g) -> std::size_t {
  const auto n = g.size();
  if (n > brute_force_chromatic_max_vertices)
    throw InvalidArgument("brute force chromatic number needs n <= " +
                          std::to_string(brute_force_chromatic_max_vertices) + ", got " + std::to_string(n));
  if (n == 0)
    return 0;

  std::vector<int> color(n, 0);
  // Vertex i takes a color already used or exactly one more than the maximum
  // so far, so each partition into color classes is tried once.
  auto fits = [&](auto & self, std::size_t i, int max_used, int k) -> bool {
    if (i == n)
      return true;
    for (int c = 1; c <= std::min(max_used + 1, k); ++c) {
      bool clash = false;
      for (std::size_t j = 0; j < i && !clash; ++j)
        clash = color[j] == c && g.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j));
      if (clash)
        continue;
      color[i] = c;
      if (self(self, i + 1, std::max(max_used, c), k))
        return true;
    }
    color[i] = 0;
    return false;
  };
  for (int k = 1;; ++k)
    if (fits(fits, 0, 0, k))
      return static_cast<std::size_t>(k);
}

auto greedy_clique_size(const Graph & g) -> std::size_t {
  std::size_t best = g.size() == 0 ? 0 : 1;
  for (Vertex seed = 0; seed < g.size(); ++seed) {
    if (g.degree(seed) + 1 <= best)
      continue;
    std::size_t size = 1;
    VertexSet candidates = g.neighbors(seed);
    while (!candidates.empty()) {
      Vertex pick = 0;
      std::size_t pick_degree = 0;
      bool found = false;
      candidates.for_each([&](Vertex u) {
        auto d = g.neighbors(u).intersection_count(candidates);
        if (!found || d > pick_degree) {
          pick = u;
          pick_degree = d;
          found = true;
        }
      });
      ++size;
      candidates &= g.neighbors(pick);
    }
    best = std::max(best, size);
  }
  return best;
}

auto greedy_coloring_size(const Graph & g) -> std::size_t {
  std::vector<Color> color(g.size(), 0);
  std::size_t used = 0;
  for (Vertex v = 0; v < g.size(); ++v) {
    std::vector<bool> taken(used + 2, false);
    g.neighbors(v).for_each([&](Vertex w) {
      if (color[w])
        taken[color[w]] = true;
    });
    Color c = 1;
    while (taken[c])
      ++c;
    color[v] = c;
    used = std::max<std::size_t>(used, c);
  }
  return used;
}

} // namespace oddsum
