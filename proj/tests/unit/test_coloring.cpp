#include "oddsum/catalog.hpp"
#include "oddsum/coloring.hpp"
#include "oddsum/errors.hpp"
#include "oddsum/families.hpp"
#include "oddsum/odd_domination.hpp"

#include <doctest.h>

using namespace oddsum;

TEST_CASE("chromatic numbers of standard graphs") {
  CHECK(chromatic_number(Graph{}).k == 0);
  CHECK(chromatic_number(build_graph(3, {})).k == 1);
  CHECK(chromatic_number(complete_graph(3)).k == 3);
  CHECK(chromatic_number(complete_graph(4)).k == 4);
  CHECK(chromatic_number(cycle_graph(5)).k == 3);
  CHECK(chromatic_number(cycle_graph(6)).k == 2);
  CHECK(chromatic_number(petersen_graph()).k == 3);
  CHECK(chromatic_number(complete_bipartite_graph(3, 4)).k == 2);
}

TEST_CASE("witness is a proper coloring with exactly k colors") {
  for (const auto & g : random_graph_sample(80, 1, 30, 17)) {
    auto c = chromatic_number(g);
    CHECK(is_proper_coloring(g, c));
  }
}

TEST_CASE("exact search agrees with exhaustive enumeration") {
  for (const auto & g : connected_graphs_up_to(6))
    CHECK(chromatic_number(g).k == brute_force_chromatic(g));
  for (const auto & g : random_graph_sample(120, 7, 12, 4242))
    CHECK(chromatic_number(g).k == brute_force_chromatic(g));
}

TEST_CASE("induced chromatic numbers on the constructed families") {
  auto j = build_J(4, 1);
  auto d = solve_odd_domination(j).particular;
  CHECK(chromatic_number_induced(j, d) == 3);

  auto g = build_theorem4_graph();
  auto dg = theorem4_dominating_set(g);
  CHECK(chromatic_number_induced(g, dg) == 4);
  CHECK(chromatic_number_induced(g, dg.complement()) == 4);
  CHECK(chromatic_number_induced(g, VertexSet(g.size())) == 0);
}

TEST_CASE("greedy bounds bracket chi") {
  for (const auto & g : random_graph_sample(50, 5, 25, 77)) {
    auto k = chromatic_number(g).k;
    CHECK(greedy_clique_size(g) <= k);
    CHECK(greedy_coloring_size(g) >= k);
  }
}

namespace {

// Mycielski construction: triangle-free with chromatic number one higher.
auto mycielskian(const Graph & g) -> Graph {
  const auto n = static_cast<Vertex>(g.size());
  GraphBuilder b(2 * n + 1);
  for (auto [u, v] : g.edges()) {
    b.add_edge(u, v);
    b.add_edge(u, n + v);
    b.add_edge(v, n + u);
  }
  for (Vertex i = 0; i < n; ++i)
    b.add_edge(n + i, 2 * n);
  return std::move(b).build();
}

} // namespace

TEST_CASE("triangle-free graphs with large chromatic number") {
  auto grotzsch = mycielskian(cycle_graph(5));
  CHECK(grotzsch.size() == 11);
  CHECK(girth(grotzsch).value() == 4);
  CHECK(chromatic_number(grotzsch).k == 4);
  CHECK(brute_force_chromatic(grotzsch) == 4);
  CHECK(chromatic_number(mycielskian(grotzsch)).k == 5);
}

TEST_CASE("node budget is enforced") {
  CHECK_THROWS_AS(chromatic_number(mycielskian(mycielskian(cycle_graph(5))), 10), BudgetExceeded);
}
