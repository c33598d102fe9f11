#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dcrit/graph.hpp"
#include "json.hpp"

namespace dcrit {

enum class GraphFormat { kEdgeList, kGraph6, kJson };

std::optional<GraphFormat> parse_format_name(std::string_view name);
std::string_view format_name(GraphFormat f);

// ".g6" -> graph6, ".el"/".txt" -> edge list, ".json" -> json.
std::optional<GraphFormat> format_from_extension(const std::filesystem::path& p);

// "n m" header line followed by m lines "u v".
std::string to_edge_list(const Graph& g);
Graph parse_edge_list(std::string_view text);

// Standard graph6: size header, then the upper triangle of the adjacency
// matrix column by column, six bits per byte offset by 63. No trailing
// newline on output; an optional ">>graph6<<" prefix is accepted on input.
std::string to_graph6(const Graph& g);
Graph parse_graph6(std::string_view line);

// {"n": .., "edges": [[u, v], ...]}
nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

std::string format_graph(const Graph& g, GraphFormat f);
Graph parse_graph(std::string_view text, GraphFormat f);

// Throws ParseError for unreadable or malformed files. When `format` is empty
// it is taken from the extension, falling back to edge list.
Graph read_graph_file(const std::filesystem::path& p,
                      std::optional<GraphFormat> format = std::nullopt);
void write_graph_file(const std::filesystem::path& p, const Graph& g, GraphFormat f);

// All non-empty lines of a graph6 stream, e.g. search witness files.
std::vector<Graph> parse_graph6_lines(std::string_view text);

std::string read_text_file(const std::filesystem::path& p);
void write_text_file(const std::filesystem::path& p, std::string_view text);

}  // namespace dcrit
