#include "oddsum/graph.hpp"

#include "oddsum/errors.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace oddsum {

auto VertexSet::from_vector(std::size_t size, const std::vector<Vertex> & members) -> VertexSet {
  VertexSet s(size);
  for (auto v : members) {
    if (v >= size)
      throw InvalidArgument("vertex " + std::to_string(v) + " out of range for set of size " + std::to_string(size));
    s.set(v);
  }
  return s;
}

auto VertexSet::to_string() const -> std::string {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for_each([&](Vertex v) {
    if (!first)
      os << ',';
    os << v;
    first = false;
  });
  os << '}';
  return os.str();
}

auto Graph::max_degree() const -> std::size_t {
  std::size_t best = 0;
  for (const auto & row : adjacency_)
    best = std::max(best, row.count());
  return best;
}

auto Graph::degree_sum() const -> std::size_t {
  std::size_t sum = 0;
  for (const auto & row : adjacency_)
    sum += row.count();
  return sum;
}

auto Graph::edges() const -> std::vector<Edge> {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < size(); ++u)
    for (Vertex v = adjacency_[u].next(u + 1); v < size(); v = adjacency_[u].next(v + 1))
      out.emplace_back(u, v);
  return out;
}

auto Graph::find_label(std::string_view label) const -> std::optional<Vertex> {
  for (Vertex v = 0; v < labels_.size(); ++v)
    if (labels_[v] == label)
      return v;
  return std::nullopt;
}

auto Graph::vertices_labeled(std::string_view label) const -> std::vector<Vertex> {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < labels_.size(); ++v)
    if (labels_[v] == label)
      out.push_back(v);
  return out;
}

auto Graph::induced_subgraph(const VertexSet & keep) const -> Graph {
  std::vector<Vertex> index(size(), std::numeric_limits<Vertex>::max());
  std::vector<Vertex> kept = keep.to_vector();
  for (Vertex i = 0; i < kept.size(); ++i)
    index[kept[i]] = i;

  Graph sub;
  sub.adjacency_.assign(kept.size(), VertexSet(kept.size()));
  for (Vertex i = 0; i < kept.size(); ++i) {
    VertexSet row = adjacency_[kept[i]] & keep;
    row.for_each([&](Vertex w) { sub.adjacency_[i].set(index[w]); });
    sub.edge_count_ += row.count();
  }
  sub.edge_count_ /= 2;
  if (has_labels())
    for (auto v : kept)
      sub.labels_.push_back(labels_[v]);
  return sub;
}

auto Graph::with_labels(std::vector<std::string> labels) const -> Graph {
  if (!labels.empty() && labels.size() != size())
    throw InvalidArgument("labels must cover exactly the vertex range");
  Graph g = *this;
  g.labels_ = std::move(labels);
  return g;
}

GraphBuilder::GraphBuilder(std::size_t n) : adj_(n), labels_(n) {}

GraphBuilder::GraphBuilder(const Graph & g) : adj_(g.size()), labels_(g.size()), labeled_(g.has_labels()) {
  for (auto [u, v] : g.edges()) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  if (g.has_labels())
    labels_ = g.labels();
}

auto GraphBuilder::add_vertex(std::string label) -> Vertex {
  if (!label.empty())
    labeled_ = true;
  adj_.emplace_back();
  labels_.push_back(std::move(label));
  return static_cast<Vertex>(adj_.size() - 1);
}

auto GraphBuilder::adjacent(Vertex u, Vertex v) const -> bool {
  return std::find(adj_[u].begin(), adj_[u].end(), v) != adj_[u].end();
}

auto GraphBuilder::add_edge(Vertex u, Vertex v) -> void {
  if (u >= size() || v >= size())
    throw InvalidArgument("edge (" + std::to_string(u) + "," + std::to_string(v) + ") has an endpoint outside 0.." +
                          std::to_string(size() == 0 ? 0 : size() - 1));
  if (u == v)
    throw InvalidArgument("edge (" + std::to_string(u) + "," + std::to_string(v) + ") is a self-loop");
  if (adjacent(u, v))
    return;
  adj_[u].push_back(v);
  adj_[v].push_back(u);
}

auto GraphBuilder::set_label(Vertex v, std::string label) -> void {
  labeled_ = true;
  labels_.at(v) = std::move(label);
}

auto GraphBuilder::build() && -> Graph {
  Graph g;
  const auto n = adj_.size();
  g.adjacency_.assign(n, VertexSet(n));
  std::size_t ends = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (auto v : adj_[u])
      g.adjacency_[u].set(v);
    ends += adj_[u].size();
  }
  g.edge_count_ = ends / 2;
  if (labeled_)
    g.labels_ = std::move(labels_);
  return g;
}

auto build_graph(std::size_t n, const std::vector<Edge> & edges) -> Graph {
  GraphBuilder b(n);
  for (auto [u, v] : edges)
    b.add_edge(u, v);
  return std::move(b).build();
}

auto closed_neighborhood(const Graph & g, Vertex v) -> VertexSet {
  if (v >= g.size())
    throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
  return g.closed_neighborhood(v);
}

auto girth(const Graph & g) -> Girth {
  const auto n = g.size();
  constexpr auto unseen = std::numeric_limits<std::size_t>::max();
  std::size_t best = unseen;
  std::vector<std::size_t> dist(n);
  std::vector<Vertex> parent(n);
  std::vector<Vertex> queue;
  queue.reserve(n);

  for (Vertex root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), unseen);
    dist[root] = 0;
    parent[root] = root;
    queue.clear();
    queue.push_back(root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex u = queue[head];
      // Any cycle closed from here is at least 2·dist[u] long.
      if (2 * dist[u] >= best)
        break;
      g.neighbors(u).for_each([&](Vertex w) {
        if (dist[w] == unseen) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (parent[u] != w) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      });
    }
  }
  return best == unseen ? Girth::infinite() : Girth::of(best);
}

auto is_bipartite(const Graph & g) -> std::optional<Bipartition> {
  const auto n = g.size();
  std::vector<int> side(n, -1);
  std::vector<Vertex> queue;
  for (Vertex start = 0; start < n; ++start) {
    if (side[start] != -1)
      continue;
    side[start] = 0;
    queue.assign(1, start);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex u = queue[head];
      bool odd_cycle = false;
      g.neighbors(u).for_each([&](Vertex w) {
        if (side[w] == -1) {
          side[w] = 1 - side[u];
          queue.push_back(w);
        } else if (side[w] == side[u]) {
          odd_cycle = true;
        }
      });
      if (odd_cycle)
        return std::nullopt;
    }
  }
  Bipartition parts{VertexSet(n), VertexSet(n)};
  for (Vertex v = 0; v < n; ++v)
    (side[v] == 0 ? parts.part_a : parts.part_b).set(v);
  return parts;
}

auto connected_components(const Graph & g) -> std::vector<VertexSet> {
  const auto n = g.size();
  std::vector<VertexSet> out;
  VertexSet seen(n);
  std::vector<Vertex> stack;
  for (Vertex start = 0; start < n; ++start) {
    if (seen.test(start))
      continue;
    VertexSet comp(n);
    seen.set(start);
    stack.assign(1, start);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      comp.set(u);
      g.neighbors(u).for_each([&](Vertex w) {
        if (!seen.test(w)) {
          seen.set(w);
          stack.push_back(w);
        }
      });
    }
    out.push_back(std::move(comp));
  }
  return out;
}

auto is_connected(const Graph & g) -> bool { return connected_components(g).size() <= 1; }

auto is_biconnected(const Graph & g) -> bool {
  const auto n = g.size();
  if (n < 3)
    throw InvalidArgument("is_biconnected requires at least 3 vertices, got " + std::to_string(n));
  if (!is_connected(g))
    return false;

  // Iterative Hopcroft-Tarjan articulation point search from vertex 0.
  constexpr auto unseen = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> order(n, unseen), low(n, 0);
  std::vector<Vertex> parent(n, 0);
  struct Frame {
    Vertex v;
    Vertex next;
  };
  std::vector<Frame> stack;
  std::size_t clock = 0;
  std::size_t root_children = 0;

  order[0] = low[0] = clock++;
  stack.push_back({0, 0});
  while (!stack.empty()) {
    auto & frame = stack.back();
    Vertex v = frame.v;
    Vertex w = g.neighbors(v).next(frame.next);
    if (w < n) {
      frame.next = w + 1;
      if (order[w] == unseen) {
        parent[w] = v;
        order[w] = low[w] = clock++;
        if (v == 0)
          ++root_children;
        stack.push_back({w, 0});
      } else if (w != parent[v]) {
        low[v] = std::min(low[v], order[w]);
      }
      continue;
    }
    stack.pop_back();
    if (v != 0) {
      Vertex p = parent[v];
      low[p] = std::min(low[p], low[v]);
      if (p != 0 && low[v] >= order[p])
        return false;
    }
  }
  return root_children <= 1;
}

auto planarity_necessary(const Graph & g) -> bool {
  const auto n = g.size();
  const auto m = g.edge_count();
  if (n < 3)
    return true;
  if (m > 3 * n - 6)
    return false;
  auto gamma = girth(g);
  if (gamma.is_infinite())
    return true;
  // m <= γ/(γ-2)·(n-2), cleared of the fraction.
  const auto gv = gamma.value();
  return m * (gv - 2) <= gv * (n - 2);
}

} // namespace oddsum
