#include "oddsum/odd_sum.hpp"

#include "oddsum/errors.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>

namespace oddsum {

namespace {

auto check_total(const Graph & g, const std::vector<Color> & colors) -> void {
  if (colors.size() != g.size())
    throw InvalidArgument("coloring has " + std::to_string(colors.size()) + " entries for " +
                          std::to_string(g.size()) + " vertices");
  for (Vertex v = 0; v < colors.size(); ++v)
    if (colors[v] == 0)
      throw InvalidArgument("vertex " + std::to_string(v) + " has color 0; colors must be positive");
}

} // namespace

auto odd_sum_chromatic(const Graph & g, std::uint64_t cap, std::uint64_t node_budget) -> OddSumCertificate {
  OddSumCertificate best;
  best.dominating_set = VertexSet(g.size());
  if (g.size() == 0)
    return best;

  auto system = solve_odd_domination(g);
  std::size_t best_total = std::numeric_limits<std::size_t>::max();
  for_each_odd_dominating_set(system, cap, [&](const VertexSet & d) {
    const auto chi_d = chromatic_number_induced(g, d, node_budget);
    const auto rest = d.complement();
    const std::size_t rest_floor = rest.empty() ? 0 : 1;
    if (chi_d + rest_floor >= best_total)
      return;
    const auto total = chi_d + chromatic_number_induced(g, rest, node_budget);
    if (total < best_total) {
      best_total = total;
      best.dominating_set = d;
    }
  });

  best.chios = best_total;
  best.colors = coloring_from_partition(g, best.dominating_set, node_budget);
  return best;
}

auto validate_odd_sum_coloring(const Graph & g, const std::vector<Color> & colors) -> OddSumViolations {
  check_total(g, colors);
  OddSumViolations out;
  for (auto [u, v] : g.edges())
    if (colors[u] == colors[v])
      out.improper_edges.emplace_back(u, v);
  for (Vertex v = 0; v < g.size(); ++v) {
    unsigned parity = colors[v] & 1U;
    g.neighbors(v).for_each([&](Vertex w) { parity ^= colors[w] & 1U; });
    if (!parity)
      out.even_sums.push_back(v);
  }
  return out;
}

auto range_size(const std::vector<Color> & colors) -> std::size_t {
  return std::set<Color>(colors.begin(), colors.end()).size();
}

auto coloring_from_partition(const Graph & g, const VertexSet & d, std::uint64_t node_budget) -> std::vector<Color> {
  if (!is_odd_dominating(g, d))
    throw InvalidArgument("partition set " + d.to_string() + " is not odd-dominating");
  std::vector<Color> colors(g.size(), 0);
  auto paint = [&](const VertexSet & side, Color offset) {
    auto sub = chromatic_number(g.induced_subgraph(side), node_budget);
    auto members = side.to_vector();
    for (std::size_t i = 0; i < members.size(); ++i)
      colors[members[i]] = 2 * sub.colors[i] - offset;
  };
  paint(d, 1);
  paint(d.complement(), 0);
  return colors;
}

auto normalize_coloring(const Graph & g, const std::vector<Color> & colors) -> std::vector<Color> {
  auto violations = validate_odd_sum_coloring(g, colors);
  if (!violations)
    throw InvalidArgument("normalize_coloring needs a valid odd-sum coloring");
  std::map<Color, Color> remap;
  Color next_odd = 1;
  Color next_even = 2;
  for (Color c : std::set<Color>(colors.begin(), colors.end())) {
    if (c & 1U) {
      remap[c] = next_odd;
      next_odd += 2;
    } else {
      remap[c] = next_even;
      next_even += 2;
    }
  }
  std::vector<Color> out(colors.size());
  std::transform(colors.begin(), colors.end(), out.begin(), [&](Color c) { return remap.at(c); });
  return out;
}

auto oracle_odd_sum_chromatic(const Graph & g) -> OracleResult {
  const auto n = g.size();
  if (n > oracle_max_vertices)
    throw InvalidArgument("odd-sum oracle needs n <= " + std::to_string(oracle_max_vertices) + ", got " +
                          std::to_string(n));
  if (n == 0)
    return {};

  // Every closed neighborhood is complete once its highest vertex is colored.
  std::vector<std::vector<Vertex>> completes_at(n);
  for (Vertex v = 0; v < n; ++v) {
    Vertex last = v;
    g.neighbors(v).for_each([&](Vertex w) { last = std::max(last, w); });
    completes_at[last].push_back(v);
  }

  std::vector<Color> color(n, 0);
  auto sum_is_odd = [&](Vertex v) {
    unsigned parity = color[v] & 1U;
    g.neighbors(v).for_each([&](Vertex w) { parity ^= color[w] & 1U; });
    return parity == 1;
  };

  // Colors introduced in first-appearance order: odd ones as 1,3,5,...,
  // even ones as 2,4,6,.... Any odd-sum coloring with range r relabels to
  // exactly one such assignment, whose colors lie in {1..2r}.
  auto search = [&](auto & self, Vertex i, Color odd_used, Color even_used, std::size_t r) -> bool {
    if (i == n)
      return true;
    std::vector<Color> options;
    for (Color k = 1; k <= odd_used; ++k)
      options.push_back(2 * k - 1);
    for (Color k = 1; k <= even_used; ++k)
      options.push_back(2 * k);
    if (odd_used + even_used < r) {
      options.push_back(2 * odd_used + 1);
      options.push_back(2 * even_used + 2);
    }
    for (Color c : options) {
      bool clash = false;
      g.neighbors(i).for_each([&](Vertex w) { clash = clash || (w < i && color[w] == c); });
      if (clash)
        continue;
      color[i] = c;
      bool parity_ok = std::all_of(completes_at[i].begin(), completes_at[i].end(), sum_is_odd);
      if (parity_ok) {
        Color new_odd = odd_used + (c == 2 * odd_used + 1 ? 1 : 0);
        Color new_even = even_used + (c == 2 * even_used + 2 ? 1 : 0);
        if (self(self, i + 1, new_odd, new_even, r))
          return true;
      }
    }
    color[i] = 0;
    return false;
  };

  for (std::size_t r = 1; r <= n; ++r)
    if (search(search, 0, 0, 0, r))
      return {r, color};
  throw std::logic_error("no odd-sum coloring with at most n colors; this cannot happen");
}

auto coloring_to_json(const std::vector<Color> & colors) -> nlohmann::json {
  auto j = nlohmann::json::object();
  for (Vertex v = 0; v < colors.size(); ++v)
    j[std::to_string(v)] = colors[v];
  return j;
}

auto to_json(const OddSumCertificate & cert) -> nlohmann::json {
  return {{"chios", cert.chios}, {"D", cert.dominating_set.to_vector()}, {"colors", coloring_to_json(cert.colors)}};
}

auto coloring_from_json(const nlohmann::json & j, std::size_t n) -> std::vector<Color> {
  try {
    const auto & body = (j.is_object() && j.contains("colors")) ? j.at("colors") : j;
    std::vector<Color> colors(n, 0);
    if (body.is_array()) {
      if (body.size() != n)
        throw InvalidArgument("coloring array has " + std::to_string(body.size()) + " entries for " +
                              std::to_string(n) + " vertices");
      for (std::size_t v = 0; v < n; ++v) {
        auto c = body[v].get<long long>();
        if (c <= 0)
          throw InvalidArgument("vertex " + std::to_string(v) + " has non-positive color");
        colors[v] = static_cast<Color>(c);
      }
    } else if (body.is_object()) {
      for (const auto & [key, value] : body.items()) {
        auto v = std::stoul(key);
        if (v >= n)
          throw InvalidArgument("coloring names vertex " + key + " outside the graph");
        auto c = value.get<long long>();
        if (c <= 0)
          throw InvalidArgument("vertex " + key + " has non-positive color");
        colors[v] = static_cast<Color>(c);
      }
      for (std::size_t v = 0; v < n; ++v)
        if (colors[v] == 0)
          throw InvalidArgument("coloring does not assign vertex " + std::to_string(v));
    } else {
      throw InvalidArgument("coloring JSON must be an object or array");
    }
    return colors;
  } catch (const nlohmann::json::exception & e) {
    throw InvalidArgument(std::string("coloring JSON: ") + e.what());
  } catch (const std::invalid_argument & e) {
    if (dynamic_cast<const InvalidArgument *>(&e))
      throw;
    throw InvalidArgument(std::string("coloring JSON: ") + e.what());
  }
}

} // namespace oddsum
