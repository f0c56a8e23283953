#include "oddsum/families.hpp"

#include "oddsum/coloring.hpp"
#include "oddsum/errors.hpp"
#include "oddsum/odd_domination.hpp"

#include <algorithm>
#include <stdexcept>

namespace oddsum {

namespace {

auto require(bool ok, const std::string & message) -> void {
  if (!ok)
    throw InvalidArgument(message);
}

/// Adds a v,w-path of `length` edges; interior labels are prefix + index.
auto add_path(GraphBuilder & b, Vertex v, Vertex w, std::size_t length, const std::string & prefix) -> void {
  Vertex prev = v;
  for (std::size_t i = 1; i < length; ++i) {
    Vertex x = b.add_vertex(prefix + std::to_string(i));
    b.add_edge(prev, x);
    prev = x;
  }
  b.add_edge(prev, w);
}

/// Appends G_{a,b,k} to b, reusing `v` when given. Returns (v, w).
auto add_gadget(GraphBuilder & b, std::size_t a, std::size_t bb, std::size_t k, std::optional<Vertex> v,
                const std::string & prefix) -> std::pair<Vertex, Vertex> {
  Vertex vv = v ? *v : b.add_vertex(prefix + "v");
  Vertex ww = b.add_vertex(prefix + "w");
  std::size_t j = 0;
  for (std::size_t i = 0; i < a; ++i, ++j)
    add_path(b, vv, ww, 3 * k + 1, prefix + "p" + std::to_string(j) + ".");
  for (std::size_t i = 0; i < bb; ++i, ++j)
    add_path(b, vv, ww, 3 * k + 2, prefix + "p" + std::to_string(j) + ".");
  return {vv, ww};
}

auto join_cycle(GraphBuilder & b, const std::vector<Vertex> & ring) -> void {
  for (std::size_t i = 0; i < ring.size(); ++i)
    b.add_edge(ring[i], ring[(i + 1) % ring.size()]);
}

auto copy_prefix(std::size_t i) -> std::string { return "c" + std::to_string(i) + ":"; }

} // namespace

auto complete_graph(std::size_t n) -> Graph {
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      b.add_edge(u, v);
  return std::move(b).build();
}

auto cycle_graph(std::size_t n) -> Graph {
  require(n >= 3, "a cycle needs at least 3 vertices");
  GraphBuilder b(n);
  for (Vertex v = 0; v < n; ++v)
    b.add_edge(v, static_cast<Vertex>((v + 1) % n));
  return std::move(b).build();
}

auto path_graph(std::size_t n) -> Graph {
  GraphBuilder b(n);
  for (Vertex v = 0; v + 1 < n; ++v)
    b.add_edge(v, v + 1);
  return std::move(b).build();
}

auto star_graph(std::size_t leaves) -> Graph {
  GraphBuilder b(leaves + 1);
  b.set_label(0, "center");
  for (Vertex v = 1; v <= leaves; ++v)
    b.add_edge(0, v);
  return std::move(b).build();
}

auto complete_bipartite_graph(std::size_t m, std::size_t n) -> Graph {
  GraphBuilder b(m + n);
  for (Vertex u = 0; u < m; ++u)
    for (Vertex v = 0; v < n; ++v)
      b.add_edge(u, static_cast<Vertex>(m + v));
  return std::move(b).build();
}

auto petersen_graph() -> Graph {
  GraphBuilder b(10);
  for (Vertex i = 0; i < 5; ++i) {
    b.add_edge(i, (i + 1) % 5);
    b.add_edge(i, i + 5);
    b.add_edge(i + 5, (i + 2) % 5 + 5);
  }
  return std::move(b).build();
}

auto random_graph(std::size_t n, double p, std::mt19937_64 & rng) -> Graph {
  std::bernoulli_distribution coin(p);
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng))
        b.add_edge(u, v);
  return std::move(b).build();
}

auto build_G_abk(std::size_t a, std::size_t b, std::size_t k) -> Graph {
  require(a >= 1 && b >= 1 && k >= 1, "G_{a,b,k} needs a, b, k >= 1");
  GraphBuilder builder;
  add_gadget(builder, a, b, k, std::nullopt, "");
  return std::move(builder).build();
}

auto path_gadget_extension(unsigned length_mod3, bool v_in, bool w_in, std::size_t length) -> std::vector<std::size_t> {
  require(length_mod3 == 1 || length_mod3 == 2, "length_mod3 must be 1 or 2");
  require(length >= 4, "path length must be at least 4");
  require(length % 3 == length_mod3,
          "path length " + std::to_string(length) + " is not " + std::to_string(length_mod3) + " mod 3");

  // Fixing x_0 and x_1 determines the rest: oddness at interior vertex i
  // gives x_{i+1} = 1 + x_{i-1} + x_i.
  std::optional<std::vector<bool>> found;
  for (bool first : {false, true}) {
    std::vector<bool> x(length + 1);
    x[0] = v_in;
    x[1] = first;
    for (std::size_t i = 1; i < length; ++i)
      x[i + 1] = !(x[i - 1] ^ x[i]);
    if (x[length] != w_in)
      continue;
    if (found)
      throw std::logic_error("path extension is not unique");
    found = x;
  }
  if (!found)
    throw std::logic_error("path has no odd-dominating extension");

  std::vector<std::size_t> members;
  for (std::size_t i = 1; i < length; ++i)
    if ((*found)[i])
      members.push_back(i);
  return members;
}

auto build_J(std::size_t delta, std::size_t k) -> Graph {
  require(delta >= 4 && delta % 2 == 0, "J needs an even delta >= 4");
  require(k >= 1, "J needs k >= 1");
  // Δ = a1 + a2 + b1 + b2 with every part odd: (1, 1, 1, Δ-3).
  const std::size_t a1 = 1, a2 = 1, b1 = 1, b2 = delta - 3;
  const std::size_t copies = 4 * k + 1;

  GraphBuilder b;
  std::vector<Vertex> left, right;
  for (std::size_t c = 0; c < copies; ++c) {
    const auto prefix = copy_prefix(c);
    auto [v, w1] = add_gadget(b, a1, b1, k, std::nullopt, prefix + "g1.");
    b.set_label(v, prefix + "v");
    b.set_label(w1, prefix + "w1");
    auto [v2, w2] = add_gadget(b, a2, b2, k, v, prefix + "g2.");
    b.set_label(w2, prefix + "w2");
    // The right leaf hangs off the w of larger degree; ties go to the second gadget.
    const bool second_is_heavier = b.degree(w2) >= b.degree(w1);
    Vertex heavy = second_is_heavier ? w2 : w1;
    Vertex light = second_is_heavier ? w1 : w2;
    Vertex l = b.add_vertex(prefix + "left");
    Vertex r = b.add_vertex(prefix + "right");
    b.add_edge(light, l);
    b.add_edge(heavy, r);
    left.push_back(l);
    right.push_back(r);
  }
  join_cycle(b, left);
  join_cycle(b, right);
  return std::move(b).build();
}

auto build_J_odd(std::size_t delta, std::size_t k) -> Graph {
  require(delta >= 5 && delta % 2 == 1, "Jodd needs an odd delta >= 5");
  require(k >= 1, "Jodd needs k >= 1");
  const std::size_t a = 1, bb = delta - 2;
  const std::size_t copies = 4 * k + 1;

  GraphBuilder b;
  std::vector<Vertex> left, right;
  for (std::size_t c = 0; c < copies; ++c) {
    const auto prefix = copy_prefix(c);
    auto [v, w] = add_gadget(b, a, bb, k, std::nullopt, prefix);
    Vertex l = b.add_vertex(prefix + "left");
    Vertex r = b.add_vertex(prefix + "right");
    b.add_edge(v, l);
    b.add_edge(w, r);
    left.push_back(l);
    right.push_back(r);
  }
  join_cycle(b, left);
  join_cycle(b, right);
  return std::move(b).build();
}

auto add_parallel_paths(const Graph & g, Vertex v, Vertex w, std::size_t count, std::size_t length) -> Graph {
  require(v < g.size() && w < g.size(), "parallel path endpoints out of range");
  require(v != w, "parallel paths need distinct endpoints");
  require(count % 2 == 0, "parallel path count must be even");
  require(length % 3 != 0, "parallel path length must not be divisible by 3");
  GraphBuilder b(g);
  for (std::size_t j = 0; j < count; ++j)
    add_path(b, v, w, length, "pp" + std::to_string(j) + ".");
  return std::move(b).build();
}

auto subdivide_edges(const Graph & g, std::size_t times) -> Graph {
  GraphBuilder b(g.size());
  for (Vertex v = 0; v < g.size(); ++v)
    if (!g.label(v).empty())
      b.set_label(v, std::string(g.label(v)));
  for (auto [u, v] : g.edges()) {
    if (times == 0) {
      b.add_edge(u, v);
      continue;
    }
    const std::string prefix = g.has_labels() ? "s" + std::to_string(u) + "-" + std::to_string(v) + "." : "";
    Vertex prev = u;
    for (std::size_t i = 1; i <= times; ++i) {
      Vertex x = b.add_vertex(prefix.empty() ? std::string{} : prefix + std::to_string(i));
      b.add_edge(prev, x);
      prev = x;
    }
    b.add_edge(prev, v);
  }
  return std::move(b).build();
}

auto bipartite_family_scale(std::size_t g) -> std::size_t {
  std::size_t s = 0;
  while (5 * (6 * s + 4) < g)
    ++s;
  return s;
}

auto build_bipartite_family(std::size_t delta, std::size_t g) -> Graph {
  require(delta >= 4 && delta % 2 == 0, "bipartite family needs an even delta >= 4");
  require(g >= 1, "bipartite family needs g >= 1");
  Graph base = build_J(4, 1);

  Vertex r = *base.find_label("c0:v");
  for (Vertex v = 0; v < base.size(); ++v)
    if (base.degree(v) > base.degree(r))
      r = v;
  Vertex r_prime = static_cast<Vertex>(base.size());
  base.neighbors(r).for_each([&](Vertex x) {
    if (r_prime == base.size() && base.degree(x) == 2)
      r_prime = x;
  });
  if (r_prime == base.size())
    throw std::logic_error("base graph has no degree-2 neighbor of its center");

  Graph widened = add_parallel_paths(base, r, r_prime, delta - base.degree(r), 4);
  return subdivide_edges(widened, 6 * bipartite_family_scale(g) + 3);
}

auto bowtie() -> Graph {
  GraphBuilder b;
  Vertex c = b.add_vertex("center");
  Vertex x1 = b.add_vertex("x1"), x2 = b.add_vertex("x2");
  Vertex y1 = b.add_vertex("y1"), y2 = b.add_vertex("y2");
  for (auto [u, v] : {Edge{c, x1}, Edge{c, x2}, Edge{x1, x2}, Edge{c, y1}, Edge{c, y2}, Edge{y1, y2}})
    b.add_edge(u, v);
  return std::move(b).build();
}

auto extended_bowtie() -> Graph {
  GraphBuilder b(bowtie());
  Vertex l1 = b.add_vertex("leaf1");
  Vertex l2 = b.add_vertex("leaf2");
  b.add_edge(1, l1); // x1
  b.add_edge(3, l2); // y1
  return std::move(b).build();
}

auto theorem4_dominating_set(const Graph & g) -> VertexSet {
  VertexSet d(g.size());
  for (Vertex v = 0; v < g.size(); ++v) {
    auto l = g.label(v);
    bool excluded = l == "x1" || l == "x3" || (l.size() > 5 && l.substr(l.size() - 5, 4) == "leaf");
    if (!excluded)
      d.set(v);
  }
  return d;
}

auto build_theorem4_graph() -> Graph {
  GraphBuilder b;
  Vertex v1 = b.add_vertex("v1"), v2 = b.add_vertex("v2"), v3 = b.add_vertex("v3"), v4 = b.add_vertex("v4");
  Vertex w12 = b.add_vertex("w12"), w34 = b.add_vertex("w34");
  Vertex x1 = b.add_vertex("x1"), x3 = b.add_vertex("x3");
  for (auto [u, v] : {Edge{v1, v2}, Edge{v1, v3}, Edge{v1, v4}, Edge{v2, v3}, Edge{v2, v4}, Edge{v3, v4},
                      Edge{w12, v1}, Edge{w12, v2}, Edge{w34, v3}, Edge{w34, v4}, Edge{x1, v1}, Edge{x3, v3}})
    b.add_edge(u, v);

  // Four extended bowties; in B<i> leaf1 is l_i and leaf2 is z_i.
  const Graph piece = extended_bowtie();
  std::vector<Vertex> l(4), z(4);
  for (std::size_t i = 0; i < 4; ++i) {
    const auto prefix = "B" + std::to_string(i + 1) + ":";
    const auto offset = static_cast<Vertex>(b.size());
    for (Vertex v = 0; v < piece.size(); ++v)
      b.add_vertex(prefix + std::string(piece.label(v)));
    for (auto [u, v] : piece.edges())
      b.add_edge(offset + u, offset + v);
    l[i] = offset + *piece.find_label("leaf1");
    z[i] = offset + *piece.find_label("leaf2");
  }
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      b.add_edge(z[i], z[j]);
  b.add_edge(l[0], x1);
  b.add_edge(l[2], x3);
  b.add_edge(l[1], l[3]);
  Graph g = std::move(b).build();

  auto fail = [](const std::string & what) { throw std::logic_error("theorem 4 graph self-check failed: " + what); };
  if (g.size() != 36)
    fail("vertex count " + std::to_string(g.size()));
  if (g.max_degree() != 5)
    fail("maximum degree " + std::to_string(g.max_degree()));
  if (!is_biconnected(g))
    fail("not 2-connected");
  if (!planarity_necessary(g))
    fail("edge bound for planarity violated");
  auto system = solve_odd_domination(g);
  const auto expected = theorem4_dominating_set(g);
  if (system.nullity() != 0 || !(system.particular == expected))
    fail("odd-dominating set is not the expected unique one");
  if (chromatic_number_induced(g, expected) != 4 || chromatic_number_induced(g, expected.complement()) != 4)
    fail("sides of the odd-dominating set are not both 4-chromatic");
  return g;
}

auto attach_bowtie(const Graph & g, Vertex v) -> Graph {
  require(v < g.size(), "bowtie attachment vertex " + std::to_string(v) + " out of range");
  GraphBuilder b(g);
  const std::string prefix = "bt" + std::to_string(g.size()) + ":";
  const bool labeled = g.has_labels();
  auto fresh = [&](const char * role) { return b.add_vertex(labeled ? prefix + role : std::string{}); };
  Vertex x1 = fresh("x1"), x2 = fresh("x2"), y1 = fresh("y1"), y2 = fresh("y2");
  for (auto [p, q] : {Edge{v, x1}, Edge{v, x2}, Edge{x1, x2}, Edge{v, y1}, Edge{v, y2}, Edge{y1, y2}})
    b.add_edge(p, q);
  return std::move(b).build();
}

auto build_Gt(std::size_t t, std::size_t max_degree) -> Graph {
  Graph g = build_theorem4_graph();
  const auto core = theorem4_dominating_set(g).to_vector();
  for (std::size_t step = 0; step < t; ++step) {
    auto site = std::find_if(core.begin(), core.end(), [&](Vertex v) {
      return max_degree >= 4 && g.degree(v) <= max_degree - 4;
    });
    if (site == core.end())
      throw InvalidArgument("no attachment site keeps the maximum degree within " + std::to_string(max_degree));
    g = attach_bowtie(g, *site);
  }
  return g;
}

auto cartesian_product(const Graph & g, const Graph & h) -> Graph {
  const auto m = h.size();
  GraphBuilder b(g.size() * m);
  auto id = [&](Vertex u, Vertex a) { return static_cast<Vertex>(u * m + a); };
  for (Vertex u = 0; u < g.size(); ++u)
    for (auto [a, c] : h.edges())
      b.add_edge(id(u, a), id(u, c));
  for (auto [u, v] : g.edges())
    for (Vertex a = 0; a < m; ++a)
      b.add_edge(id(u, a), id(v, a));
  return std::move(b).build();
}

auto build_family(std::string_view name, const FamilyParams & p) -> Graph {
  auto need = [&](const std::optional<std::size_t> & value, const char * flag) {
    if (!value)
      throw InvalidArgument("family '" + std::string(name) + "' needs --" + flag);
    return *value;
  };
  if (name == "gabk")
    return build_G_abk(need(p.a, "a"), need(p.b, "b"), need(p.k, "k"));
  if (name == "J")
    return build_J(need(p.delta, "delta"), need(p.k, "k"));
  if (name == "Jodd")
    return build_J_odd(need(p.delta, "delta"), need(p.k, "k"));
  if (name == "bipartite")
    return build_bipartite_family(need(p.delta, "delta"), need(p.g, "g"));
  if (name == "thm4")
    return build_theorem4_graph();
  if (name == "Gt")
    return build_Gt(need(p.t, "t"), p.max_degree.value_or(std::numeric_limits<std::size_t>::max()));
  if (name == "bowtie")
    return bowtie();
  if (name == "extbowtie")
    return extended_bowtie();
  if (name == "product-k2kn")
    return cartesian_product(complete_graph(2), complete_graph(need(p.n, "n")));
  if (name == "complete")
    return complete_graph(need(p.n, "n"));
  if (name == "cycle")
    return cycle_graph(need(p.n, "n"));
  if (name == "path")
    return path_graph(need(p.n, "n"));
  if (name == "petersen")
    return petersen_graph();
  throw InvalidArgument("unknown family '" + std::string(name) + "'");
}

auto family_names() -> std::vector<std::string> {
  return {"gabk", "J", "Jodd", "bipartite", "thm4", "Gt", "bowtie", "extbowtie", "product-k2kn",
          "complete", "cycle", "path", "petersen"};
}

} // namespace oddsum
