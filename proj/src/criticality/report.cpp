#include "dcrit/report.hpp"

#include <map>

namespace dcrit {

bool AnalysisReport::all_checks_hold() const {
  if (!lemma_checks.l31) return false;
  for (const auto& flag : {lemma_checks.l41, lemma_checks.l42, lemma_checks.l43, lemma_checks.e_g0_bound}) {
    if (flag.has_value() && !*flag) return false;
  }
  return true;
}

AnalysisReport build_report(const Graph& g, const criticality::AnalysisConfig& cfg) {
  using namespace criticality;
  validate(cfg);
  const CriticalityAnalysis analysis(g, cfg.k, cfg.threads);
  const Verdict verdict = is_diameter_k_critical(g, cfg.k, cfg.threads);

  AnalysisReport r;
  r.n = g.order();
  r.m = g.size();
  r.k = cfg.k;
  r.t = cfg.t;
  r.diameter = verdict.diameter;
  r.is_critical = verdict.yes();
  if (!verdict.yes()) r.witness = verdict.describe();
  r.critical_pair_count = analysis.critical_pairs().size();

  std::map<std::size_t, std::size_t> hist;
  for (const auto& entry : analysis.multiplicity().entries) ++hist[entry.multiplicity];
  r.multiplicity_histogram.assign(hist.begin(), hist.end());

  const MultiplicityCountCheck l31 = check_multiplicity_count(analysis, cfg.t);
  r.heavy_edge_count = l31.heavy_edges;
  r.t_edge_count = analysis.t_edges(cfg.t, cfg.strict_p_membership).t_edges.size();

  const G0LemmaReport lemmas = check_g0_lemmas(analysis, cfg, verdict);
  r.g0_edge_count = lemmas.g0_edges;
  r.lemma_checks.l31 = l31.holds;
  r.lemma_checks.l41 = lemmas.no_shared_g0_path;
  r.lemma_checks.l42 = lemmas.enough_critical_pairs;
  r.lemma_checks.l43 = lemmas.critical_pairs_in_disj;
  r.lemma_checks.e_g0_bound = lemmas.g0_edge_bound;

  r.degree_square_sum = degree_square_sum(g);
  if (r.m > 0) {
    r.degree_square_ratio =
        static_cast<double>(r.degree_square_sum) / (static_cast<double>(r.n) * static_cast<double>(r.m));
  }
  return r;
}

namespace {

nlohmann::json optional_json(const std::optional<bool>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

}  // namespace

nlohmann::json to_json(const AnalysisReport& r) {
  nlohmann::json hist = nlohmann::json::array();
  for (const auto& [mult, count] : r.multiplicity_histogram) {
    hist.push_back({{"multiplicity", mult}, {"edges", count}});
  }
  nlohmann::json j;
  j["n"] = r.n;
  j["m"] = r.m;
  j["k"] = r.k;
  j["t"] = r.t;
  j["diameter"] = r.diameter == kUnreachable ? nlohmann::json(nullptr) : nlohmann::json(r.diameter);
  j["is_critical"] = r.is_critical;
  j["witness"] = r.witness ? nlohmann::json(*r.witness) : nlohmann::json(nullptr);
  j["critical_pair_count"] = r.critical_pair_count;
  j["multiplicity_histogram"] = std::move(hist);
  j["heavy_edge_count"] = r.heavy_edge_count;
  j["t_edge_count"] = r.t_edge_count;
  j["g0_edge_count"] = r.g0_edge_count;
  j["lemma_checks"] = {
      {"l31", r.lemma_checks.l31},
      {"l41", optional_json(r.lemma_checks.l41)},
      {"l42", optional_json(r.lemma_checks.l42)},
      {"l43", optional_json(r.lemma_checks.l43)},
      {"e_g0_bound", optional_json(r.lemma_checks.e_g0_bound)},
  };
  j["degree_square_sum"] = r.degree_square_sum;
  j["degree_square_ratio"] =
      r.degree_square_ratio ? nlohmann::json(*r.degree_square_ratio) : nlohmann::json(nullptr);
  return j;
}

std::vector<std::string> report_schema_violations(const nlohmann::json& j) {
  std::vector<std::string> problems;
  if (!j.is_object()) return {"report is not a JSON object"};
  auto require = [&](const char* key, auto&& type_ok, const char* type_name) {
    if (!j.contains(key)) {
      problems.push_back(std::string("missing field ") + key);
    } else if (!type_ok(j.at(key))) {
      problems.push_back(std::string(key) + " is not " + type_name);
    }
  };
  auto is_count = [](const nlohmann::json& v) { return v.is_number_unsigned() || (v.is_number_integer() && v.get<long long>() >= 0); };
  auto count_or_null = [&](const nlohmann::json& v) { return v.is_null() || is_count(v); };
  auto is_bool = [](const nlohmann::json& v) { return v.is_boolean(); };
  auto string_or_null = [](const nlohmann::json& v) { return v.is_null() || v.is_string(); };
  auto number_or_null = [](const nlohmann::json& v) { return v.is_null() || v.is_number(); };

  for (const char* key : {"n", "m", "k", "t", "critical_pair_count", "heavy_edge_count", "t_edge_count",
                          "g0_edge_count", "degree_square_sum"}) {
    require(key, is_count, "a non-negative integer");
  }
  require("diameter", count_or_null, "an integer or null");
  require("is_critical", is_bool, "a boolean");
  require("witness", string_or_null, "a string or null");
  require("degree_square_ratio", number_or_null, "a number or null");
  require(
      "multiplicity_histogram",
      [&](const nlohmann::json& v) {
        if (!v.is_array()) return false;
        for (const auto& item : v) {
          if (!item.is_object() || !item.contains("multiplicity") || !item.contains("edges") ||
              !is_count(item["multiplicity"]) || !is_count(item["edges"])) {
            return false;
          }
        }
        return true;
      },
      "an array of {multiplicity, edges}");
  require(
      "lemma_checks",
      [](const nlohmann::json& v) {
        if (!v.is_object() || !v.contains("l31") || !v["l31"].is_boolean()) return false;
        for (const char* key : {"l41", "l42", "l43", "e_g0_bound"}) {
          if (!v.contains(key) || !(v[key].is_null() || v[key].is_boolean())) return false;
        }
        return true;
      },
      "an object of lemma flags");
  return problems;
}

}  // namespace dcrit
