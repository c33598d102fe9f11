#include <array>

#include "dcrit/error.hpp"
#include "dcrit/hypergraph.hpp"

namespace dcrit::hyper {

using criticality::AnalysisConfig;
using criticality::CriticalityAnalysis;

namespace {

void require_level(const AnalysisConfig& cfg, std::size_t i) {
  criticality::validate(cfg);
  if (i < 2 || i > cfg.k) throw InvalidParams("level i must lie in 2..k");
}

const char* part_name(Part p) {
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

}  // namespace

H1Result build_h1(const CriticalityAnalysis& a, const AnalysisConfig& cfg, std::size_t i) {
  require_level(cfg, i);
  if (a.k() != cfg.k) throw InvalidParams("analysis was built for a different k");
  const auto report = a.t_edges(cfg.t, cfg.strict_p_membership);

  H1Result out;
  out.h = Hypergraph3(a.graph().order());
  for (const auto& path : report.paths(i)) {
    ++out.path_count;
    const auto& p = path.path;
    const Vertex x = p.front();
    const Vertex y = p.back();
    const Vertex a1 = p[1];
    const Vertex last_inner = p[p.size() - 2];
    const Triple first = make_triple(x, a1, y);
    if (!out.h.contains(first)) {
      out.h.add_edge(HyperEdge{first, x, a1});
      continue;
    }
    const Triple alternate = make_triple(x, last_inner, y);
    if (!out.h.contains(alternate)) {
      out.h.add_edge(HyperEdge{alternate, y, last_inner});
      ++out.alternate_triples;
      continue;
    }
    ++out.dropped_paths;
  }
  return out;
}

Hypergraph3 build_h1(const Graph& g, const AnalysisConfig& cfg, std::size_t i) {
  require_level(cfg, i);
  return build_h1(CriticalityAnalysis(g, cfg.k, cfg.threads), cfg, i).h;
}

bool PipelineReport::all_ok() const {
  return h2_linear && h2_ratio_ok && h3_ratio_ok && h4_ratio_ok && h4_triangle_free;
}

PipelineStages run_pipeline(const CriticalityAnalysis& a, const AnalysisConfig& cfg, std::size_t i) {
  PipelineStages s;
  H1Result h1 = build_h1(a, cfg, i);
  s.h1 = std::move(h1.h);

  const LinearizeResult lin = linearize_with_stats(s.h1);
  s.h2 = lin.out;
  s.h3 = extract_3partite(s.h2);

  // Largest (handle part, center part) class; ties go to the first listed.
  static constexpr std::array<std::pair<Part, Part>, 6> kClasses{{
      {Part::kV1, Part::kV2},
      {Part::kV1, Part::kV3},
      {Part::kV2, Part::kV1},
      {Part::kV2, Part::kV3},
      {Part::kV3, Part::kV1},
      {Part::kV3, Part::kV2},
  }};
  std::array<std::size_t, 6> counts{};
  auto class_of = [&](const HyperEdge& e) -> int {
    if (!e.handle || !e.center) return -1;
    const std::pair<Part, Part> key{s.h3.part(*e.handle), s.h3.part(*e.center)};
    for (std::size_t c = 0; c < kClasses.size(); ++c) {
      if (kClasses[c] == key) return static_cast<int>(c);
    }
    return -1;
  };
  for (const HyperEdge& e : s.h3.edges()) {
    const int c = class_of(e);
    if (c >= 0) ++counts[static_cast<std::size_t>(c)];
  }
  std::size_t chosen = 0;
  for (std::size_t c = 1; c < counts.size(); ++c) {
    if (counts[c] > counts[chosen]) chosen = c;
  }
  s.h4 = Hypergraph3(s.h3.order());
  for (const HyperEdge& e : s.h3.edges()) {
    if (class_of(e) == static_cast<int>(chosen)) s.h4.add_edge(e);
  }
  s.h4.set_parts(s.h3.parts());

  PipelineReport& r = s.report;
  r.level = i;
  r.t = cfg.t;
  r.path_count = h1.path_count;
  r.alternate_triples = h1.alternate_triples;
  r.dropped_paths = h1.dropped_paths;
  r.h1 = s.h1.size();
  r.h2 = s.h2.size();
  r.h3 = s.h3.size();
  r.h4 = s.h4.size();
  r.handle_part = kClasses[chosen].first;
  r.center_part = kClasses[chosen].second;
  r.max_step_deletions = lin.max_deletions();
  r.step_bound_ok = r.max_step_deletions + 4 <= 2 * cfg.t;
  r.h2_linear = is_linear(s.h2);
  r.h2_ratio_ok = 2 * cfg.t * r.h2 >= r.h1;
  r.h3_ratio_ok = 9 * r.h3 >= 2 * r.h2;
  r.h4_ratio_ok = 6 * r.h4 >= r.h3;
  r.h4_triangle_free = r.h2_linear && is_triangle_free(s.h4);
  return s;
}

PipelineReport pipeline(const Graph& g, const AnalysisConfig& cfg, std::size_t i) {
  require_level(cfg, i);
  return run_pipeline(CriticalityAnalysis(g, cfg.k, cfg.threads), cfg, i).report;
}

nlohmann::json to_json(const PipelineReport& r) {
  return {
      {"level", r.level},
      {"t", r.t},
      {"path_count", r.path_count},
      {"sizes", {r.h1, r.h2, r.h3, r.h4}},
      {"alternate_triples", r.alternate_triples},
      {"dropped_paths", r.dropped_paths},
      {"max_step_deletions", r.max_step_deletions},
      {"orientation", {{"handle", part_name(r.handle_part)}, {"center", part_name(r.center_part)}}},
      {"h2_linear", r.h2_linear},
      {"h2_ratio_ok", r.h2_ratio_ok},
      {"h3_ratio_ok", r.h3_ratio_ok},
      {"h4_ratio_ok", r.h4_ratio_ok},
      {"h4_triangle_free", r.h4_triangle_free},
      {"step_bound_ok", r.step_bound_ok},
  };
}

}  // namespace dcrit::hyper
