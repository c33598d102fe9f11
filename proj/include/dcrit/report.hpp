#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dcrit/criticality.hpp"
#include "json.hpp"

namespace dcrit {

// Machine-readable summary of one graph under one (k, t) configuration.
struct AnalysisReport {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t k = 0;
  std::size_t t = 0;
  Distance diameter = 0;
  bool is_critical = false;
  std::optional<std::string> witness;  // verdict text when not critical
  std::size_t critical_pair_count = 0;
  std::vector<std::pair<std::size_t, std::size_t>> multiplicity_histogram;  // (m(e), #edges)
  std::size_t heavy_edge_count = 0;
  std::size_t t_edge_count = 0;
  std::size_t g0_edge_count = 0;

  struct LemmaChecks {
    bool l31 = true;
    std::optional<bool> l41;
    std::optional<bool> l42;
    std::optional<bool> l43;
    std::optional<bool> e_g0_bound;
  } lemma_checks;

  std::uint64_t degree_square_sum = 0;
  std::optional<double> degree_square_ratio;  // sum d^2 / (n e(G)); empty when e(G) = 0

  // False if an applicable check failed.
  bool all_checks_hold() const;
};

AnalysisReport build_report(const Graph& g, const criticality::AnalysisConfig& cfg);

// Keys are emitted in sorted order; unreachable diameter and not-applicable
// checks are null.
nlohmann::json to_json(const AnalysisReport& r);

// Empty when `j` has every report field with the right JSON type.
std::vector<std::string> report_schema_violations(const nlohmann::json& j);

}  // namespace dcrit
