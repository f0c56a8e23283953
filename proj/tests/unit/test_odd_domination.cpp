#include "oddsum/catalog.hpp"
#include "oddsum/errors.hpp"
#include "oddsum/families.hpp"
#include "oddsum/odd_domination.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace oddsum;

namespace {

auto sorted(std::vector<VertexSet> sets) -> std::vector<VertexSet> {
  std::sort(sets.begin(), sets.end());
  return sets;
}

} // namespace

TEST_CASE("small systems") {
  auto k1 = solve_odd_domination(complete_graph(1));
  CHECK(k1.nullity() == 0);
  CHECK(k1.particular == VertexSet(1, {0}));

  auto k2 = solve_odd_domination(complete_graph(2));
  CHECK(k2.nullity() == 1);
  CHECK(sorted(enumerate_odd_dominating_sets(k2, 16)) == sorted({VertexSet(2, {0}), VertexSet(2, {1})}));

  auto c4 = solve_odd_domination(cycle_graph(4));
  CHECK(c4.nullity() == 0);
  CHECK(c4.particular == VertexSet::full(4));
}

TEST_CASE("counts") {
  CHECK(count_odd_dominating_sets(build_theorem4_graph()).to_u64() == 1);
  CHECK(count_odd_dominating_sets(complete_graph(2)).to_u64() == 2);
  for (std::size_t t = 0; t <= 3; ++t)
    CHECK(count_odd_dominating_sets(build_Gt(t)).to_u64() == (std::uint64_t{1} << (2 * t)));
  CHECK(PowerOfTwo(70).to_string() == "1180591620717411303424");
  CHECK_FALSE(PowerOfTwo(64).fits_u64());
}

TEST_CASE("enumeration cap") {
  CHECK_THROWS_AS(enumerate_odd_dominating_sets(complete_graph(2), 1), SpaceTooLarge);
  CHECK(enumerate_odd_dominating_sets(complete_graph(2), 2).size() == 2);
  try {
    enumerate_odd_dominating_sets(complete_graph(2), 1);
  } catch (const SpaceTooLarge & e) {
    CHECK(e.nullity() == 1);
  }
}

TEST_CASE("membership check") {
  auto c4 = cycle_graph(4);
  CHECK(is_odd_dominating(c4, VertexSet::full(4)).odd_dominating);
  auto one = is_odd_dominating(c4, VertexSet(4, {0}));
  CHECK_FALSE(one.odd_dominating);
  CHECK(one.violators == std::vector<Vertex>{2});
}

TEST_CASE("the 8-vertex core H is odd-dominated by its six high-degree vertices") {
  auto g = build_theorem4_graph();
  VertexSet s(g.size());
  for (const char * name : {"v1", "v2", "v3", "v4", "w12", "w34"})
    s.set(*g.find_label(name));
  std::vector<Vertex> core;
  for (const char * name : {"v1", "v2", "v3", "v4", "w12", "w34", "x1", "x3"})
    core.push_back(*g.find_label(name));
  auto h = g.induced_subgraph(VertexSet::from_vector(g.size(), core));
  VertexSet hs(h.size());
  for (const char * name : {"v1", "v2", "v3", "v4", "w12", "w34"})
    hs.set(*h.find_label(name));
  CHECK(is_odd_dominating(h, hs).odd_dominating);

  auto forced = forced_excluded_vertices(h);
  CHECK(forced.test(*h.find_label("x1")));
  CHECK(forced.test(*h.find_label("x3")));
}

TEST_CASE("forced exclusion") {
  CHECK(forced_excluded_vertices(complete_graph(5)).empty());
  CHECK(forced_excluded_vertices(path_graph(3)) == VertexSet(3, {0, 2}));
  auto ext = extended_bowtie();
  auto forced = forced_excluded_vertices(ext);
  CHECK(forced.test(*ext.find_label("leaf1")));
  CHECK(forced.test(*ext.find_label("leaf2")));
}

TEST_CASE("forced-excluded vertices never appear in an odd-dominating set") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    auto g = random_graph(2 + trial % 9, 0.35, rng);
    auto forced = forced_excluded_vertices(g);
    for (const auto & d : brute_force_odd_dominating_sets(g))
      CHECK((d & forced).empty());
  }
}

TEST_CASE("GF(2) solver agrees with brute force on the small-graph corpus") {
  for (const auto & g : connected_graphs_up_to(6)) {
    auto fast = sorted(enumerate_odd_dominating_sets(g));
    CHECK(!fast.empty());
    CHECK(fast == sorted(brute_force_odd_dominating_sets(g)));
  }
  for (const auto & g : random_graph_sample(150, 1, 12, 99)) {
    auto system = solve_odd_domination(g);
    auto fast = sorted(enumerate_odd_dominating_sets(system, default_cap));
    CHECK(fast.size() == (std::size_t{1} << system.nullity()));
    CHECK(fast == sorted(brute_force_odd_dominating_sets(g)));
  }
}

TEST_CASE("every solution passes the membership check") {
  for (const auto & g : random_graph_sample(60, 10, 20, 1234))
    for (const auto & d : enumerate_odd_dominating_sets(g))
      CHECK(is_odd_dominating(g, d).odd_dominating);
}

TEST_CASE("wide graphs cross word boundaries") {
  std::mt19937_64 rng(8);
  for (std::size_t n : {63, 64, 65, 130}) {
    auto g = random_graph(n, 0.05, rng);
    auto system = solve_odd_domination(g);
    CHECK(is_odd_dominating(g, system.particular).odd_dominating);
    for (const auto & b : system.basis) {
      auto sum = system.particular ^ b;
      CHECK(is_odd_dominating(g, sum).odd_dominating);
    }
  }
}
