#pragma once

#include "oddsum/graph.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace oddsum {

/// graph6 encoding without header or trailing newline.
auto to_graph6(const Graph & g) -> std::string;
/// Accepts an optional ">>graph6<<" header and surrounding whitespace.
auto from_graph6(std::string_view text) -> Graph;

/// {"n": int, "edges": [[u,v],...], "labels": {vertex: string}}; edges u<v
/// in lexicographic order, "labels" omitted for unlabeled graphs.
auto to_json(const Graph & g) -> nlohmann::json;
auto graph_from_json(const nlohmann::json & j) -> Graph;

/// Undirected DOT with vertex labels as node labels.
auto to_dot(const Graph & g, std::string_view name = "G") -> std::string;

enum class GraphFormat { graph6, json, dot };

auto parse_graph_format(std::string_view name) -> GraphFormat;
auto write_graph(const Graph & g, GraphFormat format) -> std::string;
/// Detects JSON by a leading '{', graph6 otherwise.
auto read_graph(std::string_view text) -> Graph;

auto to_json(const VertexSet & s) -> nlohmann::json;

} // namespace oddsum
