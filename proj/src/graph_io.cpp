#include "oddsum/graph_io.hpp"

#include "oddsum/errors.hpp"

#include <cctype>
#include <sstream>

namespace oddsum {

namespace {

constexpr std::string_view graph6_header = ">>graph6<<";

auto append_size(std::string & out, std::size_t n) -> void {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else if (n <= 68719476735ULL) {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    throw InvalidArgument("graph too large for graph6");
  }
}

auto sextet(char c) -> unsigned {
  if (c < 63 || c > 126)
    throw InvalidArgument(std::string("graph6: invalid character '") + c + "'");
  return static_cast<unsigned>(c - 63);
}

auto trim(std::string_view s) -> std::string_view {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

auto dot_escape(std::string_view s) -> std::string {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\')
      out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

} // namespace

auto to_graph6(const Graph & g) -> std::string {
  const auto n = g.size();
  std::string out;
  append_size(out, n);
  unsigned acc = 0;
  int bits = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1U : 0U);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        bits = 0;
      }
    }
  if (bits > 0)
    out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
  return out;
}

auto from_graph6(std::string_view text) -> Graph {
  text = trim(text);
  if (text.substr(0, graph6_header.size()) == graph6_header)
    text.remove_prefix(graph6_header.size());
  if (text.empty())
    throw InvalidArgument("graph6: empty input");

  std::size_t pos = 0;
  std::size_t n = 0;
  auto take = [&](int count) {
    std::size_t value = 0;
    for (int i = 0; i < count; ++i) {
      if (pos >= text.size())
        throw InvalidArgument("graph6: truncated size field");
      value = (value << 6) | sextet(text[pos++]);
    }
    return value;
  };
  if (text[0] != 126) {
    n = take(1);
  } else if (text.size() > 1 && text[1] != 126) {
    pos = 1;
    n = take(3);
  } else {
    pos = 2;
    n = take(6);
  }

  const std::size_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t expected = (pairs + 5) / 6;
  if (text.size() - pos != expected)
    throw InvalidArgument("graph6: expected " + std::to_string(expected) + " data bytes for n=" + std::to_string(n) +
                          ", found " + std::to_string(text.size() - pos));

  GraphBuilder b(n);
  std::size_t bit = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i, ++bit) {
      unsigned chunk = sextet(text[pos + bit / 6]);
      if ((chunk >> (5 - bit % 6)) & 1U)
        b.add_edge(i, j);
    }
  return std::move(b).build();
}

auto to_json(const Graph & g) -> nlohmann::json {
  nlohmann::json j;
  j["n"] = g.size();
  auto edges = nlohmann::json::array();
  for (auto [u, v] : g.edges())
    edges.push_back({u, v});
  j["edges"] = std::move(edges);
  if (g.has_labels()) {
    auto labels = nlohmann::json::object();
    for (Vertex v = 0; v < g.size(); ++v)
      if (!g.label(v).empty())
        labels[std::to_string(v)] = std::string(g.label(v));
    j["labels"] = std::move(labels);
  }
  return j;
}

auto graph_from_json(const nlohmann::json & j) -> Graph {
  try {
    if (!j.is_object() || !j.contains("n"))
      throw InvalidArgument("graph JSON must be an object with an \"n\" field");
    const auto n = j.at("n").get<std::size_t>();
    GraphBuilder b(n);
    if (j.contains("edges"))
      for (const auto & e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
          throw InvalidArgument("graph JSON: each edge must be a pair [u,v]");
        b.add_edge(e[0].get<Vertex>(), e[1].get<Vertex>());
      }
    if (j.contains("labels"))
      for (const auto & [key, value] : j.at("labels").items()) {
        std::size_t v = std::stoul(key);
        if (v >= n)
          throw InvalidArgument("graph JSON: label for vertex " + key + " out of range");
        b.set_label(static_cast<Vertex>(v), value.get<std::string>());
      }
    return std::move(b).build();
  } catch (const nlohmann::json::exception & e) {
    throw InvalidArgument(std::string("graph JSON: ") + e.what());
  } catch (const std::logic_error & e) {
    if (dynamic_cast<const InvalidArgument *>(&e))
      throw;
    throw InvalidArgument(std::string("graph JSON: ") + e.what());
  }
}

auto to_dot(const Graph & g, std::string_view name) -> std::string {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (Vertex v = 0; v < g.size(); ++v) {
    os << "  " << v;
    if (!g.label(v).empty())
      os << " [label=\"" << dot_escape(g.label(v)) << "\"]";
    os << ";\n";
  }
  for (auto [u, v] : g.edges())
    os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

auto parse_graph_format(std::string_view name) -> GraphFormat {
  if (name == "graph6" || name == "g6")
    return GraphFormat::graph6;
  if (name == "json")
    return GraphFormat::json;
  if (name == "dot")
    return GraphFormat::dot;
  throw InvalidArgument("unknown graph format '" + std::string(name) + "' (expected graph6, json or dot)");
}

auto write_graph(const Graph & g, GraphFormat format) -> std::string {
  switch (format) {
  case GraphFormat::graph6:
    return to_graph6(g) + "\n";
  case GraphFormat::json:
    return to_json(g).dump() + "\n";
  case GraphFormat::dot:
    return to_dot(g);
  }
  return {};
}

auto read_graph(std::string_view text) -> Graph {
  auto body = trim(text);
  if (!body.empty() && body.front() == '{') {
    auto j = nlohmann::json::parse(body, nullptr, false);
    if (j.is_discarded())
      throw InvalidArgument("graph input looks like JSON but does not parse");
    return graph_from_json(j);
  }
  return from_graph6(body);
}

auto to_json(const VertexSet & s) -> nlohmann::json { return s.to_vector(); }

} // namespace oddsum
