#include "oddsum/errors.hpp"
#include "oddsum/families.hpp"
#include "oddsum/graph.hpp"
#include "oddsum/graph_io.hpp"

#include <doctest.h>

#include <random>

using namespace oddsum;

TEST_CASE("build_graph basics") {
  auto k1 = build_graph(1, {});
  CHECK(k1.size() == 1);
  CHECK(k1.edge_count() == 0);

  auto k4 = build_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  CHECK(k4.edge_count() == 6);
  CHECK(k4.max_degree() == 3);

  auto g111 = build_G_abk(1, 1, 1);
  CHECK(g111.size() == 9);
  CHECK(g111.edge_count() == 9);
}

TEST_CASE("build_graph rejects bad edges") {
  CHECK_THROWS_AS(build_graph(3, {{0, 3}}), InvalidArgument);
  CHECK_THROWS_AS(build_graph(3, {{1, 1}}), InvalidArgument);
}

TEST_CASE("duplicate edges collapse") {
  auto g = build_graph(2, {{0, 1}, {1, 0}, {0, 1}});
  CHECK(g.edge_count() == 1);
}

TEST_CASE("girth") {
  CHECK(girth(cycle_graph(5)).value() == 5);
  CHECK(girth(cycle_graph(4)).value() == 4);
  CHECK(girth(path_graph(6)).is_infinite());
  CHECK(girth(star_graph(4)).is_infinite());
  CHECK(girth(complete_graph(4)).value() == 3);
  CHECK(girth(petersen_graph()).value() == 5);
  CHECK(girth(build_J(4, 1)).value() == 5);
  CHECK(girth(Graph{}).is_infinite());
}

TEST_CASE("girth scales under subdivision") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    auto g = random_graph(7, 0.45, rng);
    auto base = girth(g);
    for (std::size_t t : {1, 3}) {
      auto s = girth(subdivide_edges(g, t));
      if (base.is_infinite())
        CHECK(s.is_infinite());
      else
        CHECK(s.value() == base.value() * (t + 1));
    }
  }
}

TEST_CASE("closed neighborhood") {
  CHECK(closed_neighborhood(build_graph(1, {}), 0) == VertexSet(1, {0}));
  CHECK(closed_neighborhood(cycle_graph(4), 0) == VertexSet(4, {3, 0, 1}));
  auto star = star_graph(3);
  auto c = *star.find_label("center");
  CHECK(closed_neighborhood(star, c).count() == 4);
  CHECK_THROWS_AS(closed_neighborhood(star, 4), InvalidArgument);
}

TEST_CASE("bipartiteness") {
  auto parts = is_bipartite(cycle_graph(4));
  REQUIRE(parts);
  auto a = parts->part_a.to_vector();
  auto b = parts->part_b.to_vector();
  CHECK(((a == std::vector<Vertex>{0, 2} && b == std::vector<Vertex>{1, 3}) ||
         (a == std::vector<Vertex>{1, 3} && b == std::vector<Vertex>{0, 2})));
  CHECK_FALSE(is_bipartite(cycle_graph(5)));
  CHECK(is_bipartite(build_bipartite_family(4, 6)));
}

TEST_CASE("biconnectivity") {
  CHECK(is_biconnected(cycle_graph(4)));
  CHECK_FALSE(is_biconnected(path_graph(3)));
  CHECK_FALSE(is_biconnected(build_graph(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}})));
  CHECK_FALSE(is_biconnected(build_graph(4, {{0, 1}, {1, 2}, {2, 0}})));
  CHECK(is_biconnected(build_theorem4_graph()));
  CHECK_THROWS_AS(is_biconnected(path_graph(2)), InvalidArgument);
}

TEST_CASE("planarity necessary condition") {
  CHECK_FALSE(planarity_necessary(complete_graph(5)));
  CHECK(planarity_necessary(complete_graph(4)));
  CHECK(planarity_necessary(build_J(4, 1)));
  CHECK_FALSE(planarity_necessary(complete_bipartite_graph(3, 3)));
}

TEST_CASE("degree sum is twice the edge count") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    auto g = random_graph(1 + trial % 12, 0.4, rng);
    CHECK(g.degree_sum() == 2 * g.edge_count());
  }
}

TEST_CASE("connected components") {
  auto g = build_graph(5, {{0, 1}, {2, 3}});
  CHECK_FALSE(is_connected(g));
  CHECK(connected_components(g).size() == 3);
  CHECK(is_connected(petersen_graph()));
}

TEST_CASE("induced subgraph keeps labels and adjacency") {
  auto g = build_theorem4_graph();
  auto d = theorem4_dominating_set(g);
  auto h = g.induced_subgraph(d);
  CHECK(h.size() == d.count());
  CHECK(h.has_labels());
}

TEST_CASE("graph6 round trip") {
  std::mt19937_64 rng(3);
  for (std::size_t n : {0, 1, 2, 5, 62, 63, 64, 70}) {
    auto g = random_graph(n, 0.3, rng);
    auto text = to_graph6(g);
    CHECK(from_graph6(text) == g);
    CHECK(from_graph6(">>graph6<<" + text) == g);
  }
  CHECK(to_graph6(complete_graph(4)) == "C~");
  CHECK(to_graph6(petersen_graph()).size() == 9);
  CHECK_THROWS_AS(from_graph6(""), InvalidArgument);
}

TEST_CASE("json round trip keeps labels") {
  auto g = build_J_odd(5, 1);
  auto back = graph_from_json(to_json(g));
  CHECK(back == g);
  CHECK(back.labels() == g.labels());
  CHECK(read_graph(to_json(g).dump()) == g);
  CHECK(read_graph(to_graph6(g) + "\n") == g);
}

TEST_CASE("dot output names roles") {
  auto dot = to_dot(build_theorem4_graph());
  CHECK(dot.find("graph") == 0);
  CHECK(dot.find("w12") != std::string::npos);
}
