#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dcrit/distance.hpp"
#include "dcrit/graph.hpp"

namespace dcrit::criticality {

struct AnalysisConfig {
  std::size_t k = 2;  // diameter parameter, >= 2
  std::size_t t = 2;  // multiplicity threshold, >= 2
  // Wider reading of the end-edge condition for t-edge paths: every graph
  // edge at either endpoint, not just the path's own end edges.
  bool strict_p_membership = false;
  unsigned threads = 1;
};

// ceil(sqrt(n)), the stand-in threshold used when the caller gives none.
std::size_t default_t(std::size_t n);

// Throws InvalidParams when k < 2 or t < 2.
void validate(const AnalysisConfig& cfg);

struct Verdict {
  enum class Kind { kYes, kWrongDiameter, kNonCriticalEdge };

  Kind kind = Kind::kYes;
  Distance diameter = 0;
  std::optional<EdgeRef> edge;  // set for kNonCriticalEdge

  bool yes() const noexcept { return kind == Kind::kYes; }
  // "yes", "wrong_diameter(3)", "wrong_diameter(inf)", "non_critical_edge(0-1)"
  std::string describe() const;
};

// diam(G) = k and diam(G - e) > k for every edge. The witness edge is the
// smallest non-critical one.
Verdict is_diameter_k_critical(const Graph& g, std::size_t k, unsigned threads = 1);

// Pairs {x, y} with d_G(x,y) <= i < d_{G-e}(x,y). Throws MissingEdge.
std::vector<VertexPair> associated_pairs(const Graph& g, EdgeRef e, std::size_t i);

struct LevelEntry {
  std::size_t level = 0;
  std::vector<EdgeRef> associated_edges;  // sorted
};

struct CriticalPairRecord {
  VertexPair pair;
  Distance distance = 0;
  // Chosen critical path: the lexicographically smallest shortest path from
  // pair.x to pair.y. It is the same at every level the pair is critical.
  std::vector<Vertex> path;
  std::vector<LevelEntry> levels;  // ascending, only levels where critical

  const LevelEntry* at_level(std::size_t i) const;
};

struct MultiplicityEntry {
  EdgeRef edge;
  std::size_t multiplicity = 0;
  // by_level[i - 2]: pairs whose chosen path is i-associated with edge.
  std::vector<std::vector<VertexPair>> by_level;
};

struct MultiplicityTable {
  std::size_t k = 2;
  std::vector<MultiplicityEntry> entries;  // aligned with Graph::edges()

  std::size_t total() const;
};

struct CriticalPath {
  VertexPair pair;
  std::size_t level = 0;
  std::vector<Vertex> path;
};

struct TEdgeReport {
  std::size_t k = 2;
  std::size_t t = 2;
  std::vector<std::vector<CriticalPath>> paths_by_level;  // index i - 2
  std::vector<EdgeRef> t_edges;                          // sorted, unique

  const std::vector<CriticalPath>& paths(std::size_t i) const { return paths_by_level.at(i - 2); }
  std::size_t path_count() const;
};

struct G0Result {
  Graph g0;
  std::vector<EdgeRef> removed_heavy;   // m(e) >= t
  std::vector<EdgeRef> removed_t_edge;  // t-edges; may overlap removed_heavy
};

// One association: edge_index is i-associated with pair for every level i in
// [lo, hi].
struct Association {
  VertexPair pair;
  std::size_t edge_index = 0;
  std::size_t lo = 0;
  std::size_t hi = 0;
};

// Association data of a graph for levels 2..k, computed once (one masked BFS
// sweep per edge) and shared by every derived table.
class CriticalityAnalysis {
 public:
  CriticalityAnalysis(Graph g, std::size_t k, unsigned threads = 1);

  const Graph& graph() const noexcept { return g_; }
  std::size_t k() const noexcept { return k_; }
  const DistanceMatrix& distances() const noexcept { return dist_; }

  // Sorted by (pair, edge).
  const std::vector<Association>& associations() const noexcept { return assoc_; }
  const std::vector<CriticalPairRecord>& critical_pairs() const noexcept { return pairs_; }
  const MultiplicityTable& multiplicity() const noexcept { return mult_; }
  std::size_t multiplicity_of(EdgeRef e) const;

  TEdgeReport t_edges(std::size_t t, bool strict_p_membership = false) const;
  G0Result g0(std::size_t t, bool strict_p_membership = false) const;

 private:
  Graph g_;
  std::size_t k_;
  DistanceMatrix dist_;
  std::vector<Association> assoc_;
  std::vector<CriticalPairRecord> pairs_;
  MultiplicityTable mult_;
};

std::vector<CriticalPairRecord> critical_pairs(const Graph& g, std::size_t k);
MultiplicityTable multiplicity_table(const Graph& g, std::size_t k);
TEdgeReport t_edge_report(const Graph& g, const AnalysisConfig& cfg);
G0Result compute_g0(const Graph& g, const AnalysisConfig& cfg);

// Pairs of distinct vertices with no common neighbor in f.
std::vector<VertexPair> disj(const Graph& f);
std::size_t disj_count(const Graph& f);

struct FurediCheck {
  std::size_t lhs = 0;  // e(F) + |Disj(F)|
  double bound = 0;     // n^2 / 2
  bool holds = true;
};
FurediCheck check_furedi(const Graph& f);

struct MultiplicityCountCheck {
  std::size_t heavy_edges = 0;  // m(e) >= t
  double bound = 0;             // k(k+1)/(2t) * C(n, 2)
  bool holds = true;
};
MultiplicityCountCheck check_multiplicity_count(const Graph& g, const AnalysisConfig& cfg);
MultiplicityCountCheck check_multiplicity_count(const CriticalityAnalysis& a, std::size_t t);

struct G0LemmaReport {
  Verdict verdict;
  bool applicable = false;  // conclusions are only claimed for critical graphs

  std::size_t g0_edges = 0;
  std::size_t critical_pair_count = 0;  // distinct vertex pairs
  std::size_t disj_g0 = 0;
  double l42_rhs = 0;    // (k-1)(e(G0) - n/2)
  double g0_bound = 0;   // n^2/(2k) + n/2

  // Empty when not applicable.
  std::optional<bool> no_shared_g0_path;        // no path carries two co-associated G0 edges
  std::optional<bool> enough_critical_pairs;    // count >= l42_rhs
  std::optional<bool> critical_pairs_in_disj;   // every critical pair in Disj(G0)
  std::optional<bool> g0_edge_bound;            // e(G0) <= g0_bound
  std::optional<bool> short_path_edges_matching;

  bool all_hold() const;
};
G0LemmaReport check_g0_lemmas(const Graph& g, const AnalysisConfig& cfg);
G0LemmaReport check_g0_lemmas(const CriticalityAnalysis& a, const AnalysisConfig& cfg,
                              const Verdict& verdict);

}  // namespace dcrit::criticality
