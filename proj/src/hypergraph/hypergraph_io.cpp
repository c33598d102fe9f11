#include <charconv>
#include <cctype>
#include <filesystem>

#include "dcrit/error.hpp"
#include "dcrit/graph_io.hpp"
#include "dcrit/hypergraph.hpp"

namespace dcrit::hyper {

std::string to_text(const Hypergraph3& h) {
  std::string out = std::to_string(h.order()) + " " + std::to_string(h.size()) + "\n";
  for (const HyperEdge& e : h.edges()) {
    out += std::to_string(e.vertices[0]) + " " + std::to_string(e.vertices[1]) + " " +
           std::to_string(e.vertices[2]) + "\n";
  }
  return out;
}

Hypergraph3 parse_text(std::string_view text) {
  std::vector<std::uint64_t> values;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), v);
    if (ec != std::errc{}) throw ParseError("hypergraph: expected an integer near offset " + std::to_string(pos));
    pos = static_cast<std::size_t>(ptr - text.data());
    if (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) {
      throw ParseError("hypergraph: junk after integer near offset " + std::to_string(pos));
    }
    values.push_back(v);
  }
  if (values.size() < 2) throw ParseError("hypergraph: missing \"n m\" header");
  const std::uint64_t n = values[0];
  const std::uint64_t m = values[1];
  if (values.size() != 2 + 3 * m) throw ParseError("hypergraph: expected " + std::to_string(m) + " 3-edges");
  Hypergraph3 h(n);
  try {
    for (std::uint64_t i = 0; i < m; ++i) {
      h.add_edge(static_cast<Vertex>(values[2 + 3 * i]), static_cast<Vertex>(values[3 + 3 * i]),
                 static_cast<Vertex>(values[4 + 3 * i]));
    }
  } catch (const Error& e) {
    throw ParseError(std::string("hypergraph: ") + e.what());
  }
  return h;
}

namespace {

const char* part_label(Part p) {
  switch (p) {
    case Part::kV1:
      return "V1";
    case Part::kV2:
      return "V2";
    case Part::kV3:
      return "V3";
    case Part::kUnassigned:
      break;
  }
  return "unassigned";
}

Part part_from_label(const std::string& s) {
  if (s == "V1") return Part::kV1;
  if (s == "V2") return Part::kV2;
  if (s == "V3") return Part::kV3;
  if (s == "unassigned") return Part::kUnassigned;
  throw ParseError("hypergraph sidecar: unknown part label " + s);
}

bool has_annotations(const Hypergraph3& h) {
  if (h.has_parts()) return true;
  for (const HyperEdge& e : h.edges()) {
    if (e.handle || e.center) return true;
  }
  return false;
}

}  // namespace

nlohmann::json annotations_to_json(const Hypergraph3& h) {
  nlohmann::json handles = nlohmann::json::array();
  nlohmann::json centers = nlohmann::json::array();
  for (const HyperEdge& e : h.edges()) {
    handles.push_back(e.handle ? nlohmann::json(*e.handle) : nlohmann::json(nullptr));
    centers.push_back(e.center ? nlohmann::json(*e.center) : nlohmann::json(nullptr));
  }
  nlohmann::json parts = nlohmann::json::array();
  for (Part p : h.parts()) parts.push_back(part_label(p));
  return {{"handles", handles}, {"centers", centers}, {"parts", parts}};
}

void apply_annotations(Hypergraph3& h, const nlohmann::json& j) {
  try {
    const auto& handles = j.at("handles");
    const auto& centers = j.at("centers");
    if (handles.size() != h.size() || centers.size() != h.size()) {
      throw ParseError("hypergraph sidecar: annotation count differs from edge count");
    }
    Hypergraph3 out(h.order());
    for (std::size_t i = 0; i < h.size(); ++i) {
      HyperEdge e = h.edges()[i];
      if (!handles[i].is_null()) e.handle = handles[i].get<Vertex>();
      if (!centers[i].is_null()) e.center = centers[i].get<Vertex>();
      out.add_edge(e);
    }
    std::vector<Part> parts;
    for (const auto& p : j.value("parts", nlohmann::json::array())) parts.push_back(part_from_label(p.get<std::string>()));
    out.set_parts(std::move(parts));
    h = std::move(out);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("hypergraph sidecar: ") + e.what());
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(std::string("hypergraph sidecar: ") + e.what());
  }
}

void write_hypergraph(const std::filesystem::path& path, const Hypergraph3& h) {
  write_text_file(path, to_text(h));
  if (has_annotations(h)) {
    write_text_file(path.string() + ".json", annotations_to_json(h).dump(2) + "\n");
  }
}

Hypergraph3 read_hypergraph(const std::filesystem::path& path) {
  Hypergraph3 h = parse_text(read_text_file(path));
  const std::filesystem::path sidecar = path.string() + ".json";
  if (std::filesystem::exists(sidecar)) {
    try {
      apply_annotations(h, nlohmann::json::parse(read_text_file(sidecar)));
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("hypergraph sidecar: ") + e.what());
    }
  }
  return h;
}

}  // namespace dcrit::hyper
