#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "dcrit/criticality.hpp"
#include "dcrit/graph.hpp"
#include "json.hpp"

namespace dcrit::hyper {

// Vertex set of a 3-edge, sorted ascending.
using Triple = std::array<Vertex, 3>;

Triple make_triple(Vertex a, Vertex b, Vertex c);
std::size_t intersection_size(const Triple& a, const Triple& b);

enum class Part : std::uint8_t { kUnassigned = 0, kV1 = 1, kV2 = 2, kV3 = 3 };

struct HyperEdge {
  Triple vertices{};
  std::optional<Vertex> handle;
  std::optional<Vertex> center;
};

// 3-uniform hypergraph with optional handle/center annotations per edge and
// an optional 3-partition of the vertices.
class Hypergraph3 {
 public:
  explicit Hypergraph3(std::size_t n = 0) : n_(n) {}

  std::size_t order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_.size(); }
  const std::vector<HyperEdge>& edges() const noexcept { return edges_; }
  bool contains(const Triple& t) const { return index_.contains(t); }

  // Throws InvalidVertex for ids >= n, InvalidEdge for repeated vertices, a
  // duplicate 3-edge, or a handle/center outside the edge or equal.
  void add_edge(HyperEdge e);
  void add_edge(Vertex a, Vertex b, Vertex c) { add_edge(HyperEdge{make_triple(a, b, c), {}, {}}); }

  bool has_parts() const noexcept { return !parts_.empty(); }
  const std::vector<Part>& parts() const noexcept { return parts_; }
  Part part(Vertex v) const { return parts_.empty() ? Part::kUnassigned : parts_[v]; }
  void set_parts(std::vector<Part> parts);

 private:
  std::size_t n_;
  std::vector<HyperEdge> edges_;
  std::set<Triple> index_;
  std::vector<Part> parts_;
};

bool is_linear(const Hypergraph3& h);

// Unordered triples of edge indices (ascending) forming the pattern
// {1,2,3},{3,4,5},{5,6,1}. Throws NonLinearInput unless h is linear.
std::vector<std::array<std::size_t, 3>> find_triangles(const Hypergraph3& h);
bool is_triangle_free(const Hypergraph3& h);

struct LinearizeResult {
  Hypergraph3 out;
  std::vector<std::size_t> deletions_per_step;

  std::size_t max_deletions() const;
};

// Visits edges in lexicographic order; each edge still alive that meets some
// other live edge in two vertices keeps itself and deletes all such mates.
LinearizeResult linearize_with_stats(const Hypergraph3& h);
Hypergraph3 linearize(const Hypergraph3& h);

// Derandomized 3-partition by conditional expectations (vertices in id order,
// ties to the lowest part); keeps only edges meeting all three parts.
// Guarantees size() >= ceil(2/9 * h.size()).
Hypergraph3 extract_3partite(const Hypergraph3& h);

struct H1Result {
  Hypergraph3 h;
  std::size_t path_count = 0;         // |P_t^i|
  std::size_t alternate_triples = 0;  // paths encoded by {x, a_{i-1}, y}
  std::size_t dropped_paths = 0;      // both triples already present
};

// One 3-edge per path x a_1 ... a_{i-1} y of P_t^i: {x, a_1, y} with handle x
// and center a_1, or on collision {x, a_{i-1}, y} with handle y and center
// a_{i-1}; a path whose two triples both collide is dropped.
H1Result build_h1(const criticality::CriticalityAnalysis& a, const criticality::AnalysisConfig& cfg,
                  std::size_t i);
Hypergraph3 build_h1(const Graph& g, const criticality::AnalysisConfig& cfg, std::size_t i);

struct PipelineReport {
  std::size_t level = 0;
  std::size_t t = 0;
  std::size_t path_count = 0;
  std::size_t h1 = 0, h2 = 0, h3 = 0, h4 = 0;
  std::size_t alternate_triples = 0;
  std::size_t dropped_paths = 0;
  std::size_t max_step_deletions = 0;
  Part handle_part = Part::kV1;
  Part center_part = Part::kV2;

  bool h2_linear = true;
  bool h2_ratio_ok = true;  // 2t |H2| >= |H1|
  bool h3_ratio_ok = true;  // 9 |H3| >= 2 |H2|
  bool h4_ratio_ok = true;  // 6 |H4| >= |H3|
  bool h4_triangle_free = true;
  bool step_bound_ok = true;  // every linearize step deleted <= 2t-4 edges

  bool all_ok() const;
};

struct PipelineStages {
  Hypergraph3 h1, h2, h3, h4;
  PipelineReport report;
};

PipelineStages run_pipeline(const criticality::CriticalityAnalysis& a,
                            const criticality::AnalysisConfig& cfg, std::size_t i);
PipelineReport pipeline(const Graph& g, const criticality::AnalysisConfig& cfg, std::size_t i);

nlohmann::json to_json(const PipelineReport& r);

struct RszResult {
  std::size_t value = 0;
  Hypergraph3 witness;
};

// Exact maximum size of a linear triangle-free 3-uniform hypergraph on n
// vertices by pruned backtracking. Throws TooLarge for n > 7.
RszResult rsz_exhaustive(std::size_t n);

// Text form: "n m" then m lines of three vertex ids.
std::string to_text(const Hypergraph3& h);
Hypergraph3 parse_text(std::string_view text);

// Sidecar: {"handles": [..|null], "centers": [..|null], "parts": ["V1", ..]}
nlohmann::json annotations_to_json(const Hypergraph3& h);
void apply_annotations(Hypergraph3& h, const nlohmann::json& j);

// Writes `path` and, when h has any annotation, `path` + ".json".
void write_hypergraph(const std::filesystem::path& path, const Hypergraph3& h);
Hypergraph3 read_hypergraph(const std::filesystem::path& path);

}  // namespace dcrit::hyper
