#pragma once

#include "oddsum/graph.hpp"

#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace oddsum {

// Small standard graphs.
auto complete_graph(std::size_t n) -> Graph;
auto cycle_graph(std::size_t n) -> Graph;
auto path_graph(std::size_t n) -> Graph;
auto star_graph(std::size_t leaves) -> Graph;
auto complete_bipartite_graph(std::size_t m, std::size_t n) -> Graph;
auto petersen_graph() -> Graph;
/// G(n, p) with the given engine.
auto random_graph(std::size_t n, double p, std::mt19937_64 & rng) -> Graph;

/// Two vertices v, w joined by `a` internally disjoint paths of length 3k+1
/// and `b` of length 3k+2. Vertex 0 is "v", vertex 1 is "w"; the short paths
/// come first, interior vertices in order from v, labeled "p<j>.<i>".
auto build_G_abk(std::size_t a, std::size_t b, std::size_t k) -> Graph;

/// Interior positions (1..length-1, counted from v) of the only set D on a
/// v,w-path of the given length with |D ∩ N[x]| odd at every interior x,
/// given whether v and w are in D.
auto path_gadget_extension(unsigned length_mod3, bool v_in, bool w_in, std::size_t length) -> std::vector<std::size_t>;

/// 4k+1 copies of H'_{Δ,k} with the left leaves and the right leaves each
/// joined into a cycle, both visiting the copies in index order.
///
/// H_{Δ,k} glues G_{1,1,k} and G_{1,Δ-3,k} at v. Labels are "c<i>:<role>"
/// with roles v, w1, w2, left, right, and "g<1|2>.p<j>.<i>" for path interiors.
auto build_J(std::size_t delta, std::size_t k) -> Graph;

/// Odd-Δ variant: copies of G_{1,Δ-2,k} with a right leaf at w and a left
/// leaf at v, leaves joined into two cycles. Roles are v, w, left, right.
auto build_J_odd(std::size_t delta, std::size_t k) -> Graph;

/// Appends `count` internally disjoint v,w-paths of `length` edges each.
/// Requires count even, length not divisible by 3 and v != w.
auto add_parallel_paths(const Graph & g, Vertex v, Vertex w, std::size_t count, std::size_t length) -> Graph;

/// Replaces every edge by a path with `times` new interior vertices. The
/// original vertices keep their indices; new ones follow, edge by edge.
auto subdivide_edges(const Graph & g, std::size_t times) -> Graph;

/// Smallest s >= 0 with 5·(6s+4) >= g.
auto bipartite_family_scale(std::size_t g) -> std::size_t;

/// Bipartite planar graph of maximum degree Δ and girth at least g built from
/// J_{4,1}: Δ-4 length-4 paths between a copy center and a degree-2 neighbor,
/// then every edge subdivided 6s+3 times.
auto build_bipartite_family(std::size_t delta, std::size_t g) -> Graph;

/// Two triangles sharing "center"; the others are "x1","x2","y1","y2".
auto bowtie() -> Graph;
/// A bowtie plus leaves "leaf1" on "x1" and "leaf2" on "y1".
auto extended_bowtie() -> Graph;

/// The 36-vertex planar graph of maximum degree 5 whose only odd-dominating
/// set spans a K4 on each side. Construction is self-checked; a mismatch
/// throws std::logic_error.
auto build_theorem4_graph() -> Graph;

/// The vertex set of the unique odd-dominating set of build_theorem4_graph().
auto theorem4_dominating_set(const Graph & g) -> VertexSet;

/// Identifies the center of a new bowtie with v.
auto attach_bowtie(const Graph & g, Vertex v) -> Graph;

/// build_theorem4_graph() with t bowties attached. Each goes on the lowest
/// vertex of the base graph's odd-dominating set whose degree stays within
/// max_degree afterwards.
auto build_Gt(std::size_t t, std::size_t max_degree = std::numeric_limits<std::size_t>::max()) -> Graph;

/// Row-major: (u, a) is vertex u·|V(h)| + a.
auto cartesian_product(const Graph & g, const Graph & h) -> Graph;

/// Parameters for the named constructors exposed on the command line.
struct FamilyParams {
  std::optional<std::size_t> a, b, k, delta, g, t, n;
  std::optional<std::size_t> max_degree;
};

/// gabk, J, Jodd, bipartite, thm4, Gt, bowtie, extbowtie, product-k2kn, plus
/// complete, cycle, path, petersen.
auto build_family(std::string_view name, const FamilyParams & params) -> Graph;
auto family_names() -> std::vector<std::string>;

} // namespace oddsum
