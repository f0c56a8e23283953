#include "oddsum/coloring.hpp"
#include "oddsum/errors.hpp"
#include "oddsum/families.hpp"
#include "oddsum/graph_io.hpp"
#include "oddsum/odd_domination.hpp"
#include "oddsum/odd_sum.hpp"
#include "oddsum/surfaces.hpp"
#include "oddsum/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace oddsum;

namespace {

auto as_list(const VertexSet & s) -> std::vector<Vertex> { return s.to_vector(); }

auto as_set(const Graph & g, const std::vector<Vertex> & vertices) -> VertexSet {
  VertexSet s(g.size());
  for (auto v : vertices) {
    if (v >= g.size())
      throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
    s.set(v);
  }
  return s;
}

auto params_from_kwargs(const py::kwargs & kw) -> FamilyParams {
  FamilyParams p;
  for (auto [key, value] : kw) {
    const auto name = key.cast<std::string>();
    const auto x = value.cast<std::size_t>();
    if (name == "a")
      p.a = x;
    else if (name == "b")
      p.b = x;
    else if (name == "k")
      p.k = x;
    else if (name == "delta")
      p.delta = x;
    else if (name == "g")
      p.g = x;
    else if (name == "t")
      p.t = x;
    else if (name == "n")
      p.n = x;
    else if (name == "max_degree")
      p.max_degree = x;
    else
      throw InvalidArgument("unknown family parameter '" + name + "'");
  }
  return p;
}

} // namespace

PYBIND11_MODULE(_oddsum, m) {
  m.doc() = "Odd-sum chromatic numbers and odd-dominating sets";

  py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
  py::register_exception<ResourceLimit>(m, "ResourceLimit", PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def(py::init([](std::size_t n, const std::vector<Edge> & edges) { return build_graph(n, edges); }),
           py::arg("n"), py::arg("edges") = std::vector<Edge>{})
      .def_property_readonly("n", &Graph::size)
      .def_property_readonly("m", &Graph::edge_count)
      .def("__len__", &Graph::size)
      .def("edges", &Graph::edges)
      .def("degree", &Graph::degree)
      .def("max_degree", &Graph::max_degree)
      .def("neighbors", [](const Graph & g, Vertex v) { return as_list(g.neighbors(v)); })
      .def("closed_neighborhood", [](const Graph & g, Vertex v) { return as_list(closed_neighborhood(g, v)); })
      .def("adjacent", &Graph::adjacent)
      .def("labels", &Graph::labels)
      .def("find_label", &Graph::find_label)
      .def("induced_subgraph", [](const Graph & g, const std::vector<Vertex> & keep) {
        return g.induced_subgraph(as_set(g, keep));
      })
      .def("to_graph6", &to_graph6)
      .def("to_json", [](const Graph & g) { return to_json(g).dump(); })
      .def("to_dot", [](const Graph & g) { return to_dot(g); })
      .def_static("from_graph6", &from_graph6)
      .def_static("parse", &read_graph)
      .def("__eq__", [](const Graph & a, const Graph & b) { return a == b; })
      .def("__repr__", [](const Graph & g) {
        return "<Graph n=" + std::to_string(g.size()) + " m=" + std::to_string(g.edge_count()) + ">";
      });

  m.def("girth", [](const Graph & g) -> std::optional<std::size_t> {
    auto gi = girth(g);
    if (gi.is_infinite())
      return std::nullopt;
    return gi.value();
  }, "Length of a shortest cycle, None for a forest");
  m.def("is_bipartite", [](const Graph & g) -> std::optional<std::pair<std::vector<Vertex>, std::vector<Vertex>>> {
    auto parts = is_bipartite(g);
    if (!parts)
      return std::nullopt;
    return std::pair{as_list(parts->part_a), as_list(parts->part_b)};
  });
  m.def("is_connected", &is_connected);
  m.def("is_biconnected", &is_biconnected);
  m.def("planarity_necessary", &planarity_necessary);

  m.def("family", [](const std::string & name, const py::kwargs & kw) {
    return build_family(name, params_from_kwargs(kw));
  }, py::arg("name"), "Build a named family, e.g. family('J', delta=4, k=1)");
  m.def("family_names", &family_names);
  m.def("attach_bowtie", &attach_bowtie);
  m.def("subdivide_edges", &subdivide_edges);
  m.def("cartesian_product", &cartesian_product);
  m.def("path_gadget_extension", &path_gadget_extension, py::arg("length_mod3"), py::arg("v_in"),
        py::arg("w_in"), py::arg("length"));

  m.def("ods_nullity", [](const Graph & g) { return solve_odd_domination(g).nullity(); });
  m.def("ods_count", [](const Graph & g) { return py::int_(py::str(count_odd_dominating_sets(g).to_string())); },
        "Number of odd-dominating sets, as an exact integer");
  m.def("odd_dominating_sets", [](const Graph & g, std::optional<std::uint64_t> cap) {
    std::vector<std::vector<Vertex>> out;
    for (const auto & d : enumerate_odd_dominating_sets(g, cap.value_or(default_enumeration_cap())))
      out.push_back(as_list(d));
    return out;
  }, py::arg("g"), py::arg("cap") = py::none());
  m.def("is_odd_dominating", [](const Graph & g, const std::vector<Vertex> & s) {
    return is_odd_dominating(g, as_set(g, s)).odd_dominating;
  });
  m.def("forced_excluded_vertices", [](const Graph & g) { return as_list(forced_excluded_vertices(g)); });
  m.def("brute_force_odd_dominating_sets", [](const Graph & g) {
    std::vector<std::vector<Vertex>> out;
    for (const auto & d : brute_force_odd_dominating_sets(g))
      out.push_back(as_list(d));
    return out;
  });

  m.def("chromatic_number", [](const Graph & g) { return chromatic_number(g).k; });
  m.def("chromatic_coloring", [](const Graph & g) { return chromatic_number(g).colors; });

  m.def("odd_sum_chromatic", [](const Graph & g, std::optional<std::uint64_t> cap) {
    auto cert = odd_sum_chromatic(g, cap.value_or(default_enumeration_cap()));
    py::dict out;
    out["chios"] = cert.chios;
    out["D"] = as_list(cert.dominating_set);
    out["colors"] = cert.colors;
    return out;
  }, py::arg("g"), py::arg("cap") = py::none(),
        "Exact chios with certificate: dict with keys chios, D and colors");
  m.def("chios", [](const Graph & g) { return odd_sum_chromatic(g).chios; });
  m.def("oracle_chios", [](const Graph & g) { return oracle_odd_sum_chromatic(g).chios; });
  m.def("is_odd_sum_coloring", [](const Graph & g, const std::vector<Color> & colors) {
    return validate_odd_sum_coloring(g, colors).valid();
  });
  m.def("normalize_coloring", &normalize_coloring);
  m.def("coloring_from_partition", [](const Graph & g, const std::vector<Vertex> & d) {
    return coloring_from_partition(g, as_set(g, d));
  });

  auto s = m.def_submodule("surfaces", "Heawood number and the surface lower bound");
  s.def("heawood_number", &surfaces::heawood_number);
  s.def("genus_complete", &surfaces::genus_complete);
  s.def("product_genus_bound", &surfaces::product_genus_bound);
  s.def("lower_bound", [](std::uint64_t genus) { return surfaces::chios_surface_lower_bound(genus).bound; });
  s.def("gap_table", [](std::uint64_t g_max) {
    std::vector<std::tuple<std::uint64_t, std::uint64_t, double, double>> rows;
    for (const auto & r : surfaces::gap_divergence_table(g_max))
      rows.emplace_back(r.genus, r.heawood, r.lower_bound, r.gap);
    return rows;
  });

  m.def("verify_ids", &verify_ids);
  m.def("verify", [](const std::string & id) {
    auto report = verify_theorem(id, VerifyParams{});
    return py::make_tuple(report.passed(), report.to_text());
  }, "Run one regression target with default parameters; returns (passed, report text)");
}
