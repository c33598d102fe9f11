#include "dcrit/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "dcrit/error.hpp"

namespace dcrit {

std::optional<GraphFormat> parse_format_name(std::string_view name) {
  if (name == "edgelist" || name == "el") return GraphFormat::kEdgeList;
  if (name == "graph6" || name == "g6") return GraphFormat::kGraph6;
  if (name == "json") return GraphFormat::kJson;
  return std::nullopt;
}

std::string_view format_name(GraphFormat f) {
  switch (f) {
    case GraphFormat::kEdgeList:
      return "edgelist";
    case GraphFormat::kGraph6:
      return "graph6";
    case GraphFormat::kJson:
      return "json";
  }
  return "edgelist";
}

std::optional<GraphFormat> format_from_extension(const std::filesystem::path& p) {
  const std::string ext = p.extension().string();
  if (ext == ".g6") return GraphFormat::kGraph6;
  if (ext == ".el" || ext == ".txt") return GraphFormat::kEdgeList;
  if (ext == ".json") return GraphFormat::kJson;
  return std::nullopt;
}

std::string to_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (const EdgeRef& e : g.edges()) {
    out += std::to_string(e.u);
    out += ' ';
    out += std::to_string(e.v);
    out += '\n';
  }
  return out;
}

namespace {

class TokenReader {
 public:
  explicit TokenReader(std::string_view text) : text_(text) {}

  std::optional<std::uint64_t> next() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == text_.size()) return std::nullopt;
    std::uint64_t value = 0;
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} ||
        (ptr != end && !std::isspace(static_cast<unsigned char>(*ptr)))) {
      throw ParseError("edge list: expected a non-negative integer near offset " +
                       std::to_string(pos_));
    }
    pos_ += static_cast<std::size_t>(ptr - begin);
    return value;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

std::uint64_t require_token(TokenReader& r, const char* what) {
  const auto v = r.next();
  if (!v) throw ParseError(std::string("edge list: missing ") + what);
  return *v;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  TokenReader reader(text);
  const std::uint64_t n = require_token(reader, "vertex count");
  const std::uint64_t m = require_token(reader, "edge count");
  std::vector<EdgeRef> edges;
  edges.reserve(m);
  for (std::uint64_t i = 0; i < m; ++i) {
    const std::uint64_t u = require_token(reader, "edge endpoint");
    const std::uint64_t v = require_token(reader, "edge endpoint");
    if (u >= n || v >= n) {
      throw ParseError("edge list: endpoint out of range in edge " + std::to_string(i));
    }
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  if (reader.next()) throw ParseError("edge list: trailing data after " + std::to_string(m) + " edges");
  try {
    return build_graph(n, edges);
  } catch (const Error& e) {
    throw ParseError(std::string("edge list: ") + e.what());
  }
}

std::string to_graph6(const Graph& g) {
  const std::uint64_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    }
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    }
  }
  int filled = 0;
  unsigned acc = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1U : 0U);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

Graph parse_graph6(std::string_view line) {
  constexpr std::string_view kHeader = ">>graph6<<";
  if (line.starts_with(kHeader)) line.remove_prefix(kHeader.size());
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  if (line.empty()) throw ParseError("graph6: empty input");
  for (char c : line) {
    if (c < 63 || c > 126) throw ParseError("graph6: byte outside 63..126");
  }
  auto value = [](char c) { return static_cast<std::uint64_t>(c - 63); };

  std::uint64_t n = 0;
  std::size_t pos = 0;
  if (line[0] != 126) {
    n = value(line[0]);
    pos = 1;
  } else if (line.size() >= 2 && line[1] != 126) {
    if (line.size() < 4) throw ParseError("graph6: truncated size header");
    n = (value(line[1]) << 12) | (value(line[2]) << 6) | value(line[3]);
    pos = 4;
  } else {
    if (line.size() < 8) throw ParseError("graph6: truncated size header");
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | value(line[i]);
    pos = 8;
  }

  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t bytes = (bits + 5) / 6;
  if (line.size() - pos != bytes) {
    throw ParseError("graph6: expected " + std::to_string(bytes) + " data bytes for n=" +
                     std::to_string(n) + ", found " + std::to_string(line.size() - pos));
  }
  std::vector<EdgeRef> edges;
  std::uint64_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const std::uint64_t byte = value(line[pos + k / 6]);
      if ((byte >> (5 - k % 6)) & 1U) edges.push_back({i, j});
    }
  }
  return build_graph(n, edges);
}

nlohmann::json graph_to_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const EdgeRef& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"n", g.order()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const nlohmann::json& j) {
  try {
    const auto n = j.at("n").get<std::size_t>();
    std::vector<EdgeRef> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw ParseError("json graph: edges must be [u, v] pairs");
      const auto u = e[0].get<std::uint64_t>();
      const auto v = e[1].get<std::uint64_t>();
      if (u >= n || v >= n) throw ParseError("json graph: endpoint out of range");
      edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    }
    return build_graph(n, edges);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("json graph: ") + e.what());
  }
}

std::string format_graph(const Graph& g, GraphFormat f) {
  switch (f) {
    case GraphFormat::kEdgeList:
      return to_edge_list(g);
    case GraphFormat::kGraph6:
      return to_graph6(g) + "\n";
    case GraphFormat::kJson:
      return graph_to_json(g).dump(2) + "\n";
  }
  return {};
}

Graph parse_graph(std::string_view text, GraphFormat f) {
  switch (f) {
    case GraphFormat::kEdgeList:
      return parse_edge_list(text);
    case GraphFormat::kGraph6: {
      const auto graphs = parse_graph6_lines(text);
      if (graphs.empty()) throw ParseError("graph6: no graph in input");
      return graphs.front();
    }
    case GraphFormat::kJson:
      try {
        return graph_from_json(nlohmann::json::parse(text));
      } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("json graph: ") + e.what());
      }
  }
  throw ParseError("unknown graph format");
}

std::vector<Graph> parse_graph6_lines(std::string_view text) {
  std::vector<Graph> out;
  while (!text.empty()) {
    const std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
    if (!line.empty()) out.push_back(parse_graph6(line));
  }
  return out;
}

std::string read_text_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw ParseError("cannot open " + p.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::filesystem::path& p, std::string_view text) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw ParseError("cannot write " + p.string());
  out << text;
  if (!out) throw ParseError("write failed for " + p.string());
}

Graph read_graph_file(const std::filesystem::path& p, std::optional<GraphFormat> format) {
  const GraphFormat f = format.value_or(format_from_extension(p).value_or(GraphFormat::kEdgeList));
  return parse_graph(read_text_file(p), f);
}

void write_graph_file(const std::filesystem::path& p, const Graph& g, GraphFormat f) {
  write_text_file(p, format_graph(g, f));
}

}  // namespace dcrit
