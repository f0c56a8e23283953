#include "oddsum/coloring.hpp"
#include "oddsum/errors.hpp"
#include "oddsum/families.hpp"
#include "oddsum/odd_domination.hpp"
#include "oddsum/odd_sum.hpp"
#include "search_oracle.hpp"

#include <doctest.h>

#include <random>

using namespace oddsum;

TEST_CASE("G_abk") {
  auto g = build_G_abk(1, 1, 1);
  CHECK(g.size() == 9);
  CHECK(g.degree(*g.find_label("v")) == 2);
  auto h = build_G_abk(1, 3, 1);
  CHECK(h.size() == 2 + 3 + 3 * 4);
  CHECK(h.edge_count() == 4 + 3 * 5);
  CHECK_THROWS_AS(build_G_abk(0, 1, 1), InvalidArgument);
  CHECK_THROWS_AS(build_G_abk(1, 1, 0), InvalidArgument);
}

TEST_CASE("path gadget patterns") {
  using Row = std::vector<std::size_t>;
  CHECK(path_gadget_extension(1, false, false, 7) == Row{2, 5});
  CHECK(path_gadget_extension(2, false, false, 8) == Row{1, 4, 7});
  CHECK(path_gadget_extension(1, true, true, 4) == Row{1, 2, 3});
  CHECK(path_gadget_extension(1, true, false, 7) == Row{3, 6});
  CHECK(path_gadget_extension(2, true, false, 8) == Row{3, 6});
  CHECK(path_gadget_extension(1, false, true, 7) == Row{1, 4});
  CHECK_THROWS_AS(path_gadget_extension(1, false, false, 6), InvalidArgument);
}

TEST_CASE("J family") {
  auto j4 = build_J(4, 1);
  CHECK(j4.size() == 95);
  CHECK(girth(j4).value() == 5);
  CHECK(j4.max_degree() == 4);
  auto system = solve_odd_domination(j4);
  CHECK(system.nullity() == 0);
  for (Vertex v = 0; v < j4.size(); ++v) {
    auto role = std::string(j4.label(v));
    bool leaf = role.ends_with(":left") || role.ends_with(":right");
    CHECK(system.particular.test(v) == !leaf);
  }
  auto j6 = build_J(6, 1);
  CHECK(j6.max_degree() == 6);
  CHECK(girth(j6).value() == 5);
  CHECK_THROWS_AS(build_J(5, 1), InvalidArgument);
  CHECK_THROWS_AS(build_J(4, 0), InvalidArgument);
}

TEST_CASE("J odd variant") {
  auto g = build_J_odd(5, 1);
  CHECK(g.max_degree() == 5);
  CHECK(girth(g).value() == 5);
  CHECK(count_odd_dominating_sets(g).to_u64() == 1);
}

TEST_CASE("parallel paths") {
  auto k2 = complete_graph(2);
  auto g = add_parallel_paths(k2, 0, 1, 2, 4);
  CHECK(g.size() == 8);
  CHECK(g.degree(0) == 3);
  CHECK_THROWS_AS(add_parallel_paths(k2, 0, 1, 3, 4), InvalidArgument);
  CHECK_THROWS_AS(add_parallel_paths(k2, 0, 1, 2, 3), InvalidArgument);

  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    auto base = random_graph(6, 0.5, rng);
    auto ext = add_parallel_paths(base, 0, 1, 2, trial % 2 ? 4 : 5);
    CHECK(ext.degree(0) == base.degree(0) + 2);
    CHECK(brute_force_odd_dominating_sets(ext).size() == brute_force_odd_dominating_sets(base).size());
  }
}

TEST_CASE("subdivision") {
  auto c12 = subdivide_edges(cycle_graph(3), 3);
  CHECK(c12.size() == 12);
  CHECK(c12.edge_count() == 12);
  CHECK(c12.max_degree() == 2);
  CHECK(is_connected(c12));
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    auto g = random_graph(1 + trial % 8, 0.4, rng);
    auto s = subdivide_edges(g, 3);
    CHECK(testing::count_odd_dominating_by_search(s) == brute_force_odd_dominating_sets(g).size());
  }
}

TEST_CASE("search oracle agrees with brute force") {
  std::mt19937_64 rng(404);
  for (int trial = 0; trial < 100; ++trial) {
    auto g = random_graph(1 + trial % 14, 0.3, rng);
    CHECK(testing::count_odd_dominating_by_search(g) == brute_force_odd_dominating_sets(g).size());
  }
}

TEST_CASE("bipartite family") {
  CHECK(bipartite_family_scale(6) == 0);
  CHECK(bipartite_family_scale(20) == 0);
  CHECK(bipartite_family_scale(21) == 1);
  auto g = build_bipartite_family(4, 6);
  CHECK(is_bipartite(g));
  CHECK(girth(g).value() == 20);
  CHECK(g.max_degree() == 4);
  auto h = build_bipartite_family(6, 6);
  CHECK(h.max_degree() == 6);
  CHECK(is_bipartite(h));
  CHECK_THROWS_AS(build_bipartite_family(5, 6), InvalidArgument);
}

TEST_CASE("bowties") {
  auto b = bowtie();
  CHECK(b.size() == 5);
  CHECK(b.degree(*b.find_label("center")) == 4);
  auto e = extended_bowtie();
  CHECK(e.size() == 7);
  std::size_t leaves = 0;
  for (Vertex v = 0; v < e.size(); ++v)
    leaves += e.degree(v) == 1;
  CHECK(leaves == 2);
}

TEST_CASE("theorem 4 graph") {
  auto g = build_theorem4_graph();
  CHECK(g.size() == 36);
  CHECK(g.max_degree() == 5);
  auto d = theorem4_dominating_set(g);
  CHECK(d.count() == 26);
  CHECK(solve_odd_domination(g).particular == d);
}

TEST_CASE("bowtie attachment quadruples ods") {
  CHECK(brute_force_odd_dominating_sets(attach_bowtie(complete_graph(1), 0)).size() == 4);
  std::mt19937_64 rng(66);
  for (int trial = 0; trial < 100; ++trial) {
    auto g = random_graph(1 + trial % 8, 0.5, rng);
    Vertex v = static_cast<Vertex>(trial % g.size());
    auto h = attach_bowtie(g, v);
    CHECK(brute_force_odd_dominating_sets(h).size() == 4 * brute_force_odd_dominating_sets(g).size());
  }
}

TEST_CASE("G_t") {
  CHECK(build_Gt(0) == build_theorem4_graph());
  CHECK(count_odd_dominating_sets(build_Gt(2)).to_u64() == 16);
  CHECK(odd_sum_chromatic(build_Gt(1)).chios == 8);
}

TEST_CASE("cartesian product") {
  auto k2 = complete_graph(2);
  auto square = cartesian_product(k2, k2);
  CHECK(square.size() == 4);
  CHECK(square.edge_count() == 4);
  CHECK(square.max_degree() == 2);
  CHECK(girth(square).value() == 4);
  auto prism = cartesian_product(k2, complete_graph(3));
  CHECK(prism.size() == 6);
  CHECK(prism.edge_count() == 9);
}

TEST_CASE("named families") {
  FamilyParams p;
  p.delta = 4;
  p.k = 1;
  CHECK(build_family("J", p).size() == 95);
  CHECK(build_family("thm4", {}).size() == 36);
  CHECK_THROWS_AS(build_family("nope", {}), InvalidArgument);
}
