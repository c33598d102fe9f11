#include <algorithm>
#include <atomic>
#include <bit>
#include <mutex>
#include <set>
#include <string>

#include "dcrit/criticality.hpp"
#include "dcrit/error.hpp"
#include "dcrit/graph_io.hpp"
#include "dcrit/parallel.hpp"
#include "dcrit/search.hpp"

namespace dcrit::search {
namespace {

struct ShardResult {
  std::set<std::uint64_t> classes;
  std::uint64_t labeled = 0;
};

}  // namespace

SearchResult extremal_search(std::size_t n, std::size_t k, const SearchOptions& options) {
  if (n > kMaxSweepOrder) {
    throw TooLarge("exhaustive search refuses n > " + std::to_string(kMaxSweepOrder));
  }
  if (n > kDefaultSweepOrder && !options.exhaustive) {
    throw TooLarge("n = " + std::to_string(n) + " needs the exhaustive opt-in");
  }
  if (k < 1) throw InvalidParams("k must be >= 1");

  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t total = std::uint64_t{1} << bits;
  const std::uint64_t shard_size = std::max<std::uint64_t>(1, std::min<std::uint64_t>(total, 1U << 14));
  const std::uint64_t shards = (total + shard_size - 1) / shard_size;

  std::vector<ShardResult> results(shards);
  std::atomic<std::uint64_t> done{0};
  std::mutex progress_mutex;
  parallel_for(shards, options.threads, [&](std::size_t s) {
    const std::uint64_t begin = s * shard_size;
    const std::uint64_t end = std::min(total, begin + shard_size);
    ShardResult& out = results[s];
    for (std::uint64_t code = begin; code < end; ++code) {
      // Connected graphs need at least n-1 edges.
      if (n > 1 && static_cast<std::size_t>(std::popcount(code)) + 1 < n) continue;
      const Graph g = graph_from_code(n, code);
      if (!criticality::is_diameter_k_critical(g, k).yes()) continue;
      ++out.labeled;
      out.classes.insert(canonical_form(g).code);
    }
    const std::uint64_t finished = done += end - begin;
    if (options.progress) {
      std::lock_guard lock(progress_mutex);
      options.progress(finished, total);
    }
  });

  std::set<std::uint64_t> classes;
  SearchResult r;
  r.n = n;
  r.k = k;
  for (const ShardResult& shard : results) {
    classes.insert(shard.classes.begin(), shard.classes.end());
    r.labeled_critical_count += shard.labeled;
  }
  r.critical_count = classes.size();
  std::vector<Graph> critical;
  critical.reserve(classes.size());
  for (std::uint64_t code : classes) critical.push_back(graph_from_code(n, code));
  for (const Graph& g : critical) {
    if (!r.max_edges || g.size() > *r.max_edges) r.max_edges = g.size();
  }
  for (const Graph& g : critical) {
    if (r.max_edges && g.size() == *r.max_edges) r.extremal.push_back(g);
  }
  return r;
}

nlohmann::json to_json(const SearchResult& r) {
  nlohmann::json g6 = nlohmann::json::array();
  for (const Graph& g : r.extremal) g6.push_back(to_graph6(g));
  return {
      {"n", r.n},
      {"k", r.k},
      {"max_edges", r.max_edges ? nlohmann::json(*r.max_edges) : nlohmann::json(nullptr)},
      {"extremal_graph6", g6},
      {"critical_count", r.critical_count},
  };
}

DegreeSquareCheck degree_square_check(const Graph& g) {
  DegreeSquareCheck c;
  c.lhs = degree_square_sum(g);
  c.rhs = static_cast<std::uint64_t>(g.order()) * g.size();
  c.ratio = c.rhs == 0 ? 0.0 : static_cast<double>(c.lhs) / static_cast<double>(c.rhs);
  c.holds = c.lhs <= c.rhs;
  return c;
}

}  // namespace dcrit::search
