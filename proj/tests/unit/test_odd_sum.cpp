#include "oddsum/catalog.hpp"
#include "oddsum/coloring.hpp"
#include "oddsum/errors.hpp"
#include "oddsum/families.hpp"
#include "oddsum/odd_domination.hpp"
#include "oddsum/odd_sum.hpp"

#include <doctest.h>

using namespace oddsum;

TEST_CASE("chios of small graphs") {
  CHECK(odd_sum_chromatic(Graph{}).chios == 0);
  auto k1 = odd_sum_chromatic(complete_graph(1));
  CHECK(k1.chios == 1);
  CHECK(k1.colors == std::vector<Color>{1});
  CHECK(odd_sum_chromatic(complete_graph(2)).chios == 2);
  CHECK(odd_sum_chromatic(cycle_graph(4)).chios == 2);
  CHECK(odd_sum_chromatic(path_graph(3)).chios == 2);
}

TEST_CASE("chios of the constructed families") {
  CHECK(odd_sum_chromatic(build_J(4, 1)).chios == 6);
  CHECK(odd_sum_chromatic(build_theorem4_graph()).chios == 8);
  CHECK(odd_sum_chromatic(cartesian_product(complete_graph(2), complete_graph(3))).chios == 6);
}

TEST_CASE("certificates are valid odd-sum colorings") {
  for (const auto & g : random_graph_sample(100, 1, 16, 31)) {
    auto cert = odd_sum_chromatic(g);
    CHECK(validate_odd_sum_coloring(g, cert.colors).valid());
    CHECK(range_size(cert.colors) == cert.chios);
    CHECK(is_odd_dominating(g, cert.dominating_set).odd_dominating);
  }
}

TEST_CASE("validator") {
  CHECK(validate_odd_sum_coloring(cycle_graph(4), {1, 3, 1, 3}).valid());
  auto bad = validate_odd_sum_coloring(complete_graph(2), {1, 3});
  CHECK(bad.improper_edges.empty());
  CHECK(bad.even_sums.size() == 2);
  CHECK(validate_odd_sum_coloring(complete_graph(2), {1, 2}).valid());
  auto clash = validate_odd_sum_coloring(complete_graph(2), {1, 1});
  CHECK(clash.improper_edges.size() == 1);
  CHECK_THROWS_AS(validate_odd_sum_coloring(complete_graph(2), {1}), InvalidArgument);
  CHECK_THROWS_AS(validate_odd_sum_coloring(complete_graph(2), {0, 1}), InvalidArgument);
}

TEST_CASE("coloring from partition") {
  auto c4 = coloring_from_partition(cycle_graph(4), VertexSet::full(4));
  CHECK(range_size(c4) == 2);
  for (auto c : c4)
    CHECK((c == 1 || c == 3));
  CHECK(coloring_from_partition(complete_graph(1), VertexSet(1, {0})) == std::vector<Color>{1});
  auto p3 = coloring_from_partition(path_graph(3), VertexSet(3, {1}));
  CHECK(p3 == std::vector<Color>{2, 1, 2});
  CHECK_THROWS_AS(coloring_from_partition(cycle_graph(4), VertexSet(4, {0})), InvalidArgument);
}

TEST_CASE("normalization") {
  CHECK(normalize_coloring(complete_graph(2), {5, 2}) == std::vector<Color>{1, 2});
  auto p3 = path_graph(3);
  CHECK(normalize_coloring(p3, {8, 3, 8}) == std::vector<Color>{2, 1, 2});
  CHECK(normalize_coloring(p3, {2, 1, 2}) == std::vector<Color>{2, 1, 2});
  CHECK(normalize_coloring(p3, {6, 7, 4}) == std::vector<Color>{4, 1, 2});
  // An even center leaves the center's closed sum even.
  CHECK_THROWS_AS(normalize_coloring(p3, {3, 8, 3}), InvalidArgument);
  CHECK_THROWS_AS(normalize_coloring(complete_graph(2), {1, 3}), InvalidArgument);
}

TEST_CASE("oracle") {
  CHECK(oracle_odd_sum_chromatic(complete_graph(2)).chios == 2);
  CHECK(oracle_odd_sum_chromatic(cycle_graph(4)).chios == 2);
  CHECK(oracle_odd_sum_chromatic(path_graph(3)).chios == 2);
  CHECK_THROWS_AS(oracle_odd_sum_chromatic(cycle_graph(9)), InvalidArgument);
}

TEST_CASE("partition minimum equals the definition on the catalog") {
  for (const auto & g : connected_graphs_up_to(6)) {
    auto fast = odd_sum_chromatic(g).chios;
    auto slow = oracle_odd_sum_chromatic(g);
    CHECK(fast == slow.chios);
    CHECK(validate_odd_sum_coloring(g, slow.colors).valid());
    CHECK(fast <= 2 * chromatic_number(g).k);
  }
}

TEST_CASE("bipartite graphs stay at or below four") {
  for (const auto & g : random_graph_sample(100, 2, 18, 555)) {
    if (!is_bipartite(g))
      continue;
    CHECK(odd_sum_chromatic(g).chios <= 4);
  }
  CHECK(odd_sum_chromatic(build_bipartite_family(4, 6)).chios == 4);
}

TEST_CASE("json certificate") {
  auto cert = odd_sum_chromatic(build_theorem4_graph());
  auto j = to_json(cert);
  CHECK(j["chios"] == 8);
  auto colors = coloring_from_json(j, 36);
  CHECK(colors == cert.colors);
  CHECK(coloring_from_json(nlohmann::json::array({1, 2}), 2) == std::vector<Color>{1, 2});
}
