#include <algorithm>

#include "dcrit/criticality.hpp"
#include "dcrit/error.hpp"
#include "dcrit/simd/bitset_kernels.hpp"

namespace dcrit::criticality {

std::vector<VertexPair> disj(const Graph& f) {
  const auto& k = simd::active_kernels();
  const std::size_t words = f.row_words();
  std::vector<VertexPair> out;
  for (Vertex x = 0; x < f.order(); ++x) {
    const auto rx = f.row(x);
    for (Vertex y = x + 1; y < f.order(); ++y) {
      if (!k.intersects(rx.data(), f.row(y).data(), words)) out.push_back({x, y});
    }
  }
  return out;
}

std::size_t disj_count(const Graph& f) {
  const auto& k = simd::active_kernels();
  const std::size_t words = f.row_words();
  std::size_t count = 0;
  for (Vertex x = 0; x < f.order(); ++x) {
    const auto rx = f.row(x);
    for (Vertex y = x + 1; y < f.order(); ++y) {
      count += k.intersects(rx.data(), f.row(y).data(), words) ? 0 : 1;
    }
  }
  return count;
}

FurediCheck check_furedi(const Graph& f) {
  const std::size_t n = f.order();
  FurediCheck c;
  c.lhs = f.size() + disj_count(f);
  c.bound = static_cast<double>(n) * static_cast<double>(n) / 2.0;
  c.holds = 2 * c.lhs <= n * n;
  return c;
}

MultiplicityCountCheck check_multiplicity_count(const CriticalityAnalysis& a, std::size_t t) {
  if (t < 1) throw InvalidParams("t must be >= 1");
  const std::size_t n = a.graph().order();
  const std::size_t k = a.k();
  const std::size_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
  MultiplicityCountCheck c;
  for (const auto& entry : a.multiplicity().entries) c.heavy_edges += entry.multiplicity >= t ? 1 : 0;
  c.bound = static_cast<double>(k * (k + 1)) / (2.0 * static_cast<double>(t)) *
            static_cast<double>(pairs);
  // heavy <= k(k+1) C(n,2) / (2t), compared exactly in integers.
  c.holds = c.heavy_edges * 2 * t <= k * (k + 1) * pairs;
  return c;
}

MultiplicityCountCheck check_multiplicity_count(const Graph& g, const AnalysisConfig& cfg) {
  validate(cfg);
  return check_multiplicity_count(CriticalityAnalysis(g, cfg.k, cfg.threads), cfg.t);
}

bool G0LemmaReport::all_hold() const {
  for (const auto& flag : {no_shared_g0_path, enough_critical_pairs, critical_pairs_in_disj,
                           g0_edge_bound, short_path_edges_matching}) {
    if (flag.has_value() && !*flag) return false;
  }
  return true;
}

G0LemmaReport check_g0_lemmas(const CriticalityAnalysis& a, const AnalysisConfig& cfg,
                              const Verdict& verdict) {
  validate(cfg);
  const Graph& g = a.graph();
  const std::size_t n = g.order();
  const std::size_t k = a.k();

  G0LemmaReport r;
  r.verdict = verdict;
  r.applicable = verdict.yes();

  const G0Result g0 = a.g0(cfg.t, cfg.strict_p_membership);
  const Graph& f = g0.g0;
  r.g0_edges = f.size();
  r.critical_pair_count = a.critical_pairs().size();
  r.disj_g0 = disj_count(f);
  const double half_n = static_cast<double>(n) / 2.0;
  r.l42_rhs = static_cast<double>(k - 1) * (static_cast<double>(r.g0_edges) - half_n);
  r.g0_bound = static_cast<double>(n) * static_cast<double>(n) / (2.0 * static_cast<double>(k)) + half_n;
  if (!r.applicable) return r;

  bool shared = false;
  for (const auto& rec : a.critical_pairs()) {
    for (const auto& level : rec.levels) {
      std::size_t in_g0 = 0;
      for (const EdgeRef& e : level.associated_edges) in_g0 += f.has_edge(e) ? 1 : 0;
      shared = shared || in_g0 > 1;
    }
  }
  r.no_shared_g0_path = !shared;

  // (k-1)(e0 - n/2) <= count  <=>  2(k-1) e0 <= 2 count + (k-1) n
  r.enough_critical_pairs =
      2 * (k - 1) * r.g0_edges <= 2 * r.critical_pair_count + (k - 1) * n;

  bool in_disj = true;
  const auto& kern = simd::active_kernels();
  for (const auto& rec : a.critical_pairs()) {
    in_disj = in_disj && !kern.intersects(f.row(rec.pair.x).data(), f.row(rec.pair.y).data(),
                                          f.row_words());
  }
  r.critical_pairs_in_disj = in_disj;

  // e0 <= n^2/(2k) + n/2  <=>  2k e0 <= n^2 + k n
  r.g0_edge_bound = 2 * k * r.g0_edges <= n * n + k * n;

  // G0 edges whose k-associated pairs all sit at distance <= k-2.
  std::vector<Distance> longest(g.size(), 0);
  std::vector<char> k_associated(g.size(), 0);
  for (const Association& as : a.associations()) {
    if (as.hi < k) continue;
    k_associated[as.edge_index] = 1;
    longest[as.edge_index] = std::max(longest[as.edge_index], a.distances().at(as.pair.x, as.pair.y));
  }
  std::vector<char> covered(n, 0);
  bool matching = true;
  const auto edges = g.edges();
  for (std::size_t ei = 0; ei < edges.size(); ++ei) {
    if (!k_associated[ei] || longest[ei] + 2 > k || !f.has_edge(edges[ei])) continue;
    matching = matching && !covered[edges[ei].u] && !covered[edges[ei].v];
    covered[edges[ei].u] = covered[edges[ei].v] = 1;
  }
  r.short_path_edges_matching = matching;
  return r;
}

G0LemmaReport check_g0_lemmas(const Graph& g, const AnalysisConfig& cfg) {
  validate(cfg);
  const Verdict verdict = is_diameter_k_critical(g, cfg.k, cfg.threads);
  return check_g0_lemmas(CriticalityAnalysis(g, cfg.k, cfg.threads), cfg, verdict);
}

}  // namespace dcrit::criticality
