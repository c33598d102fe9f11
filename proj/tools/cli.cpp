#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <iomanip>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "dcrit/criticality.hpp"
#include "dcrit/error.hpp"
#include "dcrit/families.hpp"
#include "dcrit/graph_io.hpp"
#include "dcrit/hypergraph.hpp"
#include "dcrit/report.hpp"
#include "dcrit/search.hpp"

namespace dcrit::cli {
namespace {

namespace fs = std::filesystem;
using criticality::AnalysisConfig;

struct Options {
  std::string family;
  std::optional<std::size_t> n;
  std::optional<std::size_t> k;
  std::optional<std::size_t> t;
  std::optional<std::size_t> i;
  std::optional<std::size_t> a0, a1, a2;
  std::string matching;
  std::uint64_t seed = 1;
  std::string format;
  std::string output;
  std::string json;
  std::string input;
  unsigned threads = 1;
  bool strict = false;
  bool exhaustive = false;
};

// Raised for conditions that map to exit status 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::optional<GraphFormat> requested_format(const Options& o) {
  if (o.format.empty()) return std::nullopt;
  auto f = parse_format_name(o.format);
  if (!f) throw UsageError("unknown --format '" + o.format + "' (expected edgelist, graph6 or json)");
  return f;
}

Graph load_input(const Options& o) {
  if (o.input.empty()) throw UsageError("missing input graph file");
  return read_graph_file(o.input, requested_format(o));
}

std::size_t require(const std::optional<std::size_t>& v, const char* flag) {
  if (!v) throw UsageError(std::string("missing required flag ") + flag);
  return *v;
}

AnalysisConfig config_for(const Options& o, const Graph& g, std::size_t k) {
  AnalysisConfig cfg;
  cfg.k = k;
  cfg.t = o.t.value_or(criticality::default_t(g.order()));
  cfg.strict_p_membership = o.strict;
  cfg.threads = std::max(1U, o.threads);
  criticality::validate(cfg);
  return cfg;
}

void write_json(const std::string& path, const nlohmann::json& j) {
  write_text_file(path, j.dump(2) + "\n");
}

std::string distance_text(Distance d) { return d == kUnreachable ? "inf" : std::to_string(d); }

Graph generate(const Options& o) {
  using namespace families;
  const std::string& fam = o.family;
  if (fam == "cycle") return gen_elementary(Elementary::kCycle, require(o.n, "--n"));
  if (fam == "path") return gen_elementary(Elementary::kPath, require(o.n, "--n"));
  if (fam == "complete") return gen_elementary(Elementary::kComplete, require(o.n, "--n"));
  if (fam == "bipartite") {
    if (o.a0 || o.a2) return gen_complete_bipartite(require(o.a0, "--a0"), require(o.a2, "--a2"));
    const std::size_t n = require(o.n, "--n");
    return gen_complete_bipartite(n / 2, n - n / 2);
  }
  if (fam == "gk") {
    const std::size_t k = require(o.k, "--k");
    if (!o.a1 && o.n) return gen_gk(gk_params_for_order(k, *o.n));
    return gen_gk(GkParams{k, o.a0.value_or(1), require(o.a1, "--a1"), o.a2.value_or(1)});
  }
  if (fam == "g30") return gen_g30(require(o.n, "--n"));
  if (fam == "g3m") {
    const std::size_t n = require(o.n, "--n");
    if (o.matching == "random") {
      std::mt19937_64 rng(o.seed);
      return gen_g3m(n, random_matching(n / 2, rng));
    }
    return gen_g3m(n, parse_matching(o.matching));
  }
  throw UsageError("unknown --family '" + fam + "'");
}

int cmd_gen(const Options& o, std::ostream& out) {
  const Graph g = generate(o);
  GraphFormat f = GraphFormat::kEdgeList;
  if (auto req = requested_format(o)) {
    f = *req;
  } else if (!o.output.empty()) {
    f = format_from_extension(o.output).value_or(GraphFormat::kEdgeList);
  }
  if (o.output.empty()) {
    out << format_graph(g, f);
  } else {
    write_graph_file(o.output, g, f);
    out << "wrote " << o.family << " n=" << g.order() << " m=" << g.size() << " to " << o.output << "\n";
  }
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const Graph g = load_input(o);
  const std::size_t k = require(o.k, "-k");
  const auto verdict = criticality::is_diameter_k_critical(g, k, std::max(1U, o.threads));
  if (verdict.yes()) {
    out << "diameter-" << k << "-critical: yes\n";
  } else {
    out << "diameter-" << k << "-critical: no, " << verdict.describe() << "\n";
  }
  if (!o.json.empty()) write_json(o.json, to_json(build_report(g, config_for(o, g, std::max<std::size_t>(k, 2)))));
  return verdict.yes() ? kExitOk : kExitPropertyFailed;
}

void print_report(const AnalysisReport& r, std::ostream& out) {
  auto flag = [](const std::optional<bool>& v) {
    return v ? (*v ? "true" : "false") : "n/a";
  };
  out << "n=" << r.n << " m=" << r.m << " k=" << r.k << " t=" << r.t << " diameter=" << distance_text(r.diameter)
      << "\n";
  out << "diameter-" << r.k << "-critical: " << (r.is_critical ? "yes" : "no, " + r.witness.value_or("")) << "\n";
  out << "critical pairs: " << r.critical_pair_count << "\n";
  out << "multiplicity histogram:";
  for (const auto& [mult, count] : r.multiplicity_histogram) out << " " << mult << ":" << count;
  out << "\n";
  out << "heavy edges: " << r.heavy_edge_count << "  t-edges: " << r.t_edge_count
      << "  G0 edges: " << r.g0_edge_count << "\n";
  out << "l31=" << (r.lemma_checks.l31 ? "true" : "false") << " l41=" << flag(r.lemma_checks.l41)
      << " l42=" << flag(r.lemma_checks.l42) << " l43=" << flag(r.lemma_checks.l43)
      << " e_g0_bound=" << flag(r.lemma_checks.e_g0_bound) << "\n";
  out << "degree square sum: " << r.degree_square_sum;
  if (r.degree_square_ratio) out << " (ratio " << *r.degree_square_ratio << ")";
  out << "\n";
}

int cmd_analyze(const Options& o, std::ostream& out) {
  const Graph g = load_input(o);
  const AnalysisReport r = build_report(g, config_for(o, g, require(o.k, "-k")));
  print_report(r, out);
  if (!o.json.empty()) write_json(o.json, to_json(r));
  return r.all_checks_hold() ? kExitOk : kExitPropertyFailed;
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

int cmd_hyper(const Options& o, std::ostream& out) {
  const Graph g = load_input(o);
  const AnalysisConfig cfg = config_for(o, g, require(o.k, "-k"));
  if (!o.output.empty() && !o.i) throw UsageError("-o needs --i to pick the level whose H4 is written");
  const criticality::CriticalityAnalysis analysis(g, cfg.k, cfg.threads);

  std::vector<std::size_t> levels;
  if (o.i) {
    levels.push_back(*o.i);
  } else {
    for (std::size_t i = 2; i <= cfg.k; ++i) levels.push_back(i);
  }
  bool ok = true;
  nlohmann::json pipelines = nlohmann::json::array();
  for (std::size_t i : levels) {
    const hyper::PipelineStages s = hyper::run_pipeline(analysis, cfg, i);
    const auto& r = s.report;
    out << "i=" << i << " paths=" << r.path_count << " |H1|=" << r.h1 << " |H2|=" << r.h2 << " |H3|=" << r.h3
        << " |H4|=" << r.h4 << " h2_linear=" << yes_no(r.h2_linear) << " h2_ratio_ok=" << yes_no(r.h2_ratio_ok)
        << " h3_ratio_ok=" << yes_no(r.h3_ratio_ok) << " h4_ratio_ok=" << yes_no(r.h4_ratio_ok)
        << " h4_triangle_free=" << yes_no(r.h4_triangle_free) << " collisions=" << r.alternate_triples + r.dropped_paths
        << "\n";
    ok = ok && r.all_ok();
    pipelines.push_back(hyper::to_json(r));
    if (!o.output.empty()) hyper::write_hypergraph(o.output, s.h4);
  }
  if (!o.json.empty()) {
    nlohmann::json j = to_json(build_report(g, cfg));
    j["pipeline"] = std::move(pipelines);
    write_json(o.json, j);
  }
  return ok ? kExitOk : kExitPropertyFailed;
}

int cmd_search(const Options& o, std::ostream& out, std::ostream& err) {
  const std::size_t n = require(o.n, "--n");
  const std::size_t k = require(o.k, "-k");
  search::SearchOptions opts;
  opts.exhaustive = o.exhaustive;
  opts.threads = std::max(1U, o.threads);
  if (o.exhaustive) {
    opts.progress = [&err, last = -1](std::uint64_t done, std::uint64_t total) mutable {
      const int pct = static_cast<int>(100 * done / total);
      if (pct / 10 != last / 10) {
        err << "search: " << pct << "% (" << done << "/" << total << " labeled graphs)\n";
        last = pct;
      }
    };
  }
  const search::SearchResult r = search::extremal_search(n, k, opts);
  out << "n=" << n << " k=" << k << " critical classes=" << r.critical_count << " max_edges="
      << (r.max_edges ? std::to_string(*r.max_edges) : std::string("none")) << " extremal classes="
      << r.extremal.size() << "\n";
  for (const Graph& g : r.extremal) out << "  " << to_graph6(g) << "\n";
  if (!o.output.empty()) {
    std::string lines;
    for (const Graph& g : r.extremal) lines += to_graph6(g) + "\n";
    write_text_file(o.output, lines);
  }
  if (!o.json.empty()) write_json(o.json, search::to_json(r));
  return kExitOk;
}

int cmd_conjecture(const Options& o, std::ostream& out) {
  const Graph g = load_input(o);
  const auto deg = search::degree_square_check(g);
  const auto fur = criticality::check_furedi(g);
  out << std::setprecision(6);
  out << "degree square: " << deg.lhs << " vs n*e(G) = " << deg.rhs << ", ratio " << deg.ratio
      << (deg.holds ? " (holds)" : " (exceeds)") << "\n";
  out << "furedi: e(F)+|Disj(F)| = " << fur.lhs << " vs n^2/2 = " << fur.bound << ", ratio "
      << (fur.bound > 0 ? static_cast<double>(fur.lhs) / fur.bound : 0.0) << (fur.holds ? " (holds)" : " (VIOLATED)")
      << "\n";
  bool ok = fur.holds;
  if (o.k) {
    const auto verdict = criticality::is_diameter_k_critical(g, *o.k, std::max(1U, o.threads));
    const bool claimed = verdict.yes() && *o.k >= 3;
    out << "diameter-" << *o.k << "-critical: " << (verdict.yes() ? "yes" : "no, " + verdict.describe())
        << "; degree-square bound " << (claimed ? "claimed" : "not claimed") << "\n";
    if (claimed) ok = ok && deg.holds;
    if (!o.json.empty()) write_json(o.json, to_json(build_report(g, config_for(o, g, std::max<std::size_t>(*o.k, 2)))));
  } else if (!o.json.empty()) {
    throw UsageError("--json for conjecture needs -k");
  }
  return ok ? kExitOk : kExitPropertyFailed;
}

void add_input(CLI::App* sub, Options& o) {
  sub->add_option("input", o.input, "Input graph file (.g6 graph6, .el/.txt edge list, .json)")->required();
  sub->add_option("--format", o.format, "Input format override: edgelist | graph6 | json");
}

void add_threads(CLI::App* sub, Options& o) {
  sub->add_option("--threads", o.threads, "Worker thread cap")->check(CLI::PositiveNumber);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Diameter-critical graph families, criticality analysis and extremal checks", "dcrit"};
  app.require_subcommand(1);
  Options o;

  auto* gen = app.add_subcommand("gen", "Generate a graph family instance");
  gen->add_option("--family", o.family, "gk | g30 | g3m | bipartite | cycle | path | complete")
      ->required()
      ->check(CLI::IsMember({"gk", "g30", "g3m", "bipartite", "cycle", "path", "complete"}));
  gen->add_option("--n", o.n, "Vertex count");
  gen->add_option("-k,--k", o.k, "Target diameter for gk");
  gen->add_option("--a0", o.a0, "gk: left hub count; bipartite: first part size");
  gen->add_option("--a1", o.a1, "gk: number of internal paths");
  gen->add_option("--a2", o.a2, "gk: right hub count; bipartite: second part size");
  gen->add_option("--matching", o.matching, "g3m matching 'u-v,u-v,...' on clique ids, or 'random'");
  gen->add_option("--seed", o.seed, "Seed for --matching random");
  gen->add_option("--format", o.format, "Output format: edgelist | graph6 | json");
  gen->add_option("-o", o.output, "Output file (stdout when omitted)");

  auto* verify = app.add_subcommand("verify", "Check diameter-k-criticality");
  verify->add_option("-k,--k", o.k, "Diameter k")->required();
  add_input(verify, o);
  verify->add_option("--json", o.json, "Write the analysis report JSON here");
  add_threads(verify, o);

  auto* analyze = app.add_subcommand("analyze", "Critical pairs, multiplicities, G0 and lemma checks");
  analyze->add_option("-k,--k", o.k, "Diameter parameter k >= 2")->required();
  analyze->add_option("-t,--t", o.t, "Multiplicity threshold t >= 2 (default ceil(sqrt(n)))");
  add_input(analyze, o);
  analyze->add_option("--json", o.json, "Write the analysis report JSON here");
  analyze->add_flag("--strict-p-membership", o.strict, "Require every edge at a path endpoint to qualify");
  add_threads(analyze, o);

  auto* hyper_cmd = app.add_subcommand("hyper", "Run the 3-uniform hypergraph reduction H1..H4");
  hyper_cmd->add_option("-k,--k", o.k, "Diameter parameter k >= 2")->required();
  hyper_cmd->add_option("-t,--t", o.t, "Multiplicity threshold t >= 2 (default ceil(sqrt(n)))");
  hyper_cmd->add_option("--i", o.i, "Single level i in 2..k (default: every level)");
  add_input(hyper_cmd, o);
  hyper_cmd->add_option("-o", o.output, "Write H4 of level --i as text (+ .json sidecar)");
  hyper_cmd->add_option("--json", o.json, "Write the analysis report JSON (with pipeline sizes) here");
  hyper_cmd->add_flag("--strict-p-membership", o.strict, "Require every edge at a path endpoint to qualify");
  add_threads(hyper_cmd, o);

  auto* search_cmd = app.add_subcommand("search", "Exhaustive extremal search over small graphs");
  search_cmd->add_option("--n", o.n, "Vertex count (<= 6, or 7 with --exhaustive)")->required();
  search_cmd->add_option("-k,--k", o.k, "Diameter k")->required();
  search_cmd->add_flag("--exhaustive", o.exhaustive, "Allow the n = 7 sweep (2^21 labeled graphs)");
  search_cmd->add_option("-o", o.output, "Write extremal graphs as graph6 lines");
  search_cmd->add_option("--json", o.json, "Write the search result JSON here");
  add_threads(search_cmd, o);

  auto* conj = app.add_subcommand("conjecture", "Degree-square and Furedi-inequality checks");
  add_input(conj, o);
  conj->add_option("-k,--k", o.k, "Gate the degree-square claim on diameter-k-criticality");
  conj->add_option("-t,--t", o.t, "Threshold for the JSON report (default ceil(sqrt(n)))");
  conj->add_option("--json", o.json, "Write the analysis report JSON here (needs -k)");
  add_threads(conj, o);

  std::vector<std::string> argv_storage{"dcrit"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (gen->parsed()) return cmd_gen(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (analyze->parsed()) return cmd_analyze(o, out);
    if (hyper_cmd->parsed()) return cmd_hyper(o, out);
    if (search_cmd->parsed()) return cmd_search(o, out, err);
    if (conj->parsed()) return cmd_conjecture(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace dcrit::cli
