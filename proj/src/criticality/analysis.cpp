#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "dcrit/criticality.hpp"
#include "dcrit/error.hpp"
#include "dcrit/parallel.hpp"

namespace dcrit::criticality {
namespace {

std::string edge_text(EdgeRef e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

// Lexicographically smallest shortest path from x to y: from each vertex step
// to the smallest neighbor one hop closer to y.
std::vector<Vertex> chosen_path(const Graph& g, const DistanceMatrix& d, Vertex x, Vertex y) {
  std::vector<Vertex> path{x};
  Vertex cur = x;
  while (cur != y) {
    const Distance remaining = d.at(cur, y);
    for (Vertex w : g.neighbors(cur)) {
      if (d.at(w, y) + 1 == remaining) {
        cur = w;
        break;
      }
    }
    path.push_back(cur);
  }
  return path;
}

bool path_uses(const std::vector<Vertex>& path, EdgeRef e) {
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    if (EdgeRef::normalized(path[i], path[i + 1]) == e) return true;
  }
  return false;
}

}  // namespace

std::size_t default_t(std::size_t n) {
  std::size_t t = static_cast<std::size_t>(std::sqrt(static_cast<double>(n)));
  while (t * t < n) ++t;
  while (t > 0 && (t - 1) * (t - 1) >= n) --t;
  return std::max<std::size_t>(t, 2);
}

void validate(const AnalysisConfig& cfg) {
  if (cfg.k < 2) throw InvalidParams("k must be >= 2");
  if (cfg.t < 2) throw InvalidParams("t must be >= 2");
}

std::string Verdict::describe() const {
  switch (kind) {
    case Kind::kYes:
      return "yes";
    case Kind::kWrongDiameter:
      return "wrong_diameter(" + (diameter == kUnreachable ? std::string("inf") : std::to_string(diameter)) +
             ")";
    case Kind::kNonCriticalEdge:
      return "non_critical_edge(" + edge_text(edge.value_or(EdgeRef{})) + ")";
  }
  return "yes";
}

Verdict is_diameter_k_critical(const Graph& g, std::size_t k, unsigned threads) {
  Verdict v;
  v.diameter = diameter(g);
  if (v.diameter != k) {
    v.kind = Verdict::Kind::kWrongDiameter;
    return v;
  }
  const auto edges = g.edges();
  std::vector<char> critical(edges.size(), 0);
  parallel_for(edges.size(), threads, [&](std::size_t i) {
    critical[i] = diameter_exceeds_without_edge(g, edges[i], static_cast<Distance>(k)) ? 1 : 0;
  });
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (!critical[i]) {
      v.kind = Verdict::Kind::kNonCriticalEdge;
      v.edge = edges[i];
      return v;
    }
  }
  return v;
}

std::vector<VertexPair> associated_pairs(const Graph& g, EdgeRef e, std::size_t i) {
  if (!g.has_edge(e)) throw MissingEdge("edge " + edge_text(e) + " is not in the graph");
  if (i < 2) throw InvalidParams("association level must be >= 2");
  const DistanceMatrix d = all_pairs_distances(g);
  const DistanceMatrix de = all_pairs_distances(g, EdgeRef::normalized(e.u, e.v));
  std::vector<VertexPair> out;
  for (Vertex x = 0; x < g.order(); ++x) {
    for (Vertex y = x + 1; y < g.order(); ++y) {
      if (d.at(x, y) <= i && de.at(x, y) > i) out.push_back({x, y});
    }
  }
  return out;
}

const LevelEntry* CriticalPairRecord::at_level(std::size_t i) const {
  for (const LevelEntry& l : levels) {
    if (l.level == i) return &l;
  }
  return nullptr;
}

std::size_t MultiplicityTable::total() const {
  std::size_t sum = 0;
  for (const auto& e : entries) sum += e.multiplicity;
  return sum;
}

std::size_t TEdgeReport::path_count() const {
  std::size_t total = 0;
  for (const auto& level : paths_by_level) total += level.size();
  return total;
}

CriticalityAnalysis::CriticalityAnalysis(Graph g, std::size_t k, unsigned threads)
    : g_(std::move(g)), k_(k) {
  if (k_ < 2) throw InvalidParams("k must be >= 2");
  const std::size_t n = g_.order();
  dist_ = all_pairs_distances(g_);
  const auto edges = g_.edges();

  // Per-edge association lists, filled independently and concatenated in
  // edge order.
  std::vector<std::vector<Association>> per_edge(edges.size());
  parallel_for(edges.size(), threads, [&](std::size_t ei) {
    BfsEngine bfs(g_);
    std::vector<Distance> de(n);
    auto& out = per_edge[ei];
    for (Vertex x = 0; x < n; ++x) {
      // Only whether d_{G-e} exceeds k matters beyond depth k.
      bfs.run(x, de, edges[ei], static_cast<Distance>(k_));
      for (Vertex y = x + 1; y < n; ++y) {
        const Distance base = dist_.at(x, y);
        if (base > k_ || de[y] <= base) continue;
        const std::size_t lo = std::max<std::size_t>(2, base);
        const std::size_t hi = de[y] == kUnreachable ? k_ : std::min<std::size_t>(k_, de[y] - 1);
        if (lo <= hi) out.push_back({{x, y}, ei, lo, hi});
      }
    }
  });
  for (auto& list : per_edge) assoc_.insert(assoc_.end(), list.begin(), list.end());
  std::sort(assoc_.begin(), assoc_.end(), [](const Association& a, const Association& b) {
    return a.pair != b.pair ? a.pair < b.pair : a.edge_index < b.edge_index;
  });

  mult_.k = k_;
  mult_.entries.resize(edges.size());
  for (std::size_t ei = 0; ei < edges.size(); ++ei) {
    mult_.entries[ei].edge = edges[ei];
    mult_.entries[ei].by_level.assign(k_ - 1, {});
  }

  for (std::size_t begin = 0; begin < assoc_.size();) {
    std::size_t end = begin;
    while (end < assoc_.size() && assoc_[end].pair == assoc_[begin].pair) ++end;

    CriticalPairRecord rec;
    rec.pair = assoc_[begin].pair;
    rec.distance = dist_.at(rec.pair.x, rec.pair.y);
    rec.path = chosen_path(g_, dist_, rec.pair.x, rec.pair.y);
    for (std::size_t i = 2; i <= k_; ++i) {
      LevelEntry level{i, {}};
      for (std::size_t a = begin; a < end; ++a) {
        if (assoc_[a].lo <= i && i <= assoc_[a].hi) {
          const EdgeRef e = edges[assoc_[a].edge_index];
          // An associated edge lies on every shortest path of the pair.
          if (!path_uses(rec.path, e)) {
            throw std::logic_error("associated edge " + edge_text(e) + " missing from chosen path");
          }
          level.associated_edges.push_back(e);
          mult_.entries[assoc_[a].edge_index].by_level[i - 2].push_back(rec.pair);
        }
      }
      if (!level.associated_edges.empty()) rec.levels.push_back(std::move(level));
    }
    pairs_.push_back(std::move(rec));
    begin = end;
  }
  for (auto& entry : mult_.entries) {
    for (const auto& level : entry.by_level) entry.multiplicity += level.size();
  }
}

std::size_t CriticalityAnalysis::multiplicity_of(EdgeRef e) const {
  const auto idx = g_.edge_index(e);
  if (!idx) throw MissingEdge("edge " + edge_text(e) + " is not in the graph");
  return mult_.entries[*idx].multiplicity;
}

TEdgeReport CriticalityAnalysis::t_edges(std::size_t t, bool strict_p_membership) const {
  TEdgeReport report;
  report.k = k_;
  report.t = t;
  report.paths_by_level.assign(k_ - 1, {});

  auto light_and_associated = [&](const LevelEntry& level, EdgeRef e) {
    return std::binary_search(level.associated_edges.begin(), level.associated_edges.end(), e) &&
           multiplicity_of(e) < t;
  };

  for (const CriticalPairRecord& rec : pairs_) {
    const std::size_t i = rec.distance;
    if (i < 2 || i > k_) continue;
    const LevelEntry* level = rec.at_level(i);
    if (level == nullptr) continue;
    const EdgeRef first = EdgeRef::normalized(rec.path[0], rec.path[1]);
    const EdgeRef last = EdgeRef::normalized(rec.path[i - 1], rec.path[i]);
    bool ok = light_and_associated(*level, first) && light_and_associated(*level, last);
    if (ok && strict_p_membership) {
      for (Vertex end : {rec.pair.x, rec.pair.y}) {
        for (Vertex w : g_.neighbors(end)) {
          ok = ok && light_and_associated(*level, EdgeRef::normalized(end, w));
        }
      }
    }
    if (!ok) continue;
    report.paths_by_level[i - 2].push_back({rec.pair, i, rec.path});
    report.t_edges.push_back(first);
    report.t_edges.push_back(last);
  }
  std::sort(report.t_edges.begin(), report.t_edges.end());
  report.t_edges.erase(std::unique(report.t_edges.begin(), report.t_edges.end()),
                       report.t_edges.end());
  return report;
}

G0Result CriticalityAnalysis::g0(std::size_t t, bool strict_p_membership) const {
  const TEdgeReport te = t_edges(t, strict_p_membership);
  G0Result out;
  out.removed_t_edge = te.t_edges;
  std::vector<EdgeRef> kept;
  for (const MultiplicityEntry& entry : mult_.entries) {
    const bool heavy = entry.multiplicity >= t;
    const bool t_edge = std::binary_search(te.t_edges.begin(), te.t_edges.end(), entry.edge);
    if (heavy) out.removed_heavy.push_back(entry.edge);
    if (!heavy && !t_edge) kept.push_back(entry.edge);
  }
  out.g0 = build_graph(g_.order(), kept);
  return out;
}

std::vector<CriticalPairRecord> critical_pairs(const Graph& g, std::size_t k) {
  return CriticalityAnalysis(g, k).critical_pairs();
}

MultiplicityTable multiplicity_table(const Graph& g, std::size_t k) {
  return CriticalityAnalysis(g, k).multiplicity();
}

TEdgeReport t_edge_report(const Graph& g, const AnalysisConfig& cfg) {
  validate(cfg);
  return CriticalityAnalysis(g, cfg.k, cfg.threads).t_edges(cfg.t, cfg.strict_p_membership);
}

G0Result compute_g0(const Graph& g, const AnalysisConfig& cfg) {
  // t = 1 is allowed here: it simply removes every edge with m >= 1.
  if (cfg.k < 2) throw InvalidParams("k must be >= 2");
  if (cfg.t < 1) throw InvalidParams("t must be >= 1");
  return CriticalityAnalysis(g, cfg.k, cfg.threads).g0(cfg.t, cfg.strict_p_membership);
}

}  // namespace dcrit::criticality
