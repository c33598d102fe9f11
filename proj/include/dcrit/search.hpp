#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "dcrit/graph.hpp"
#include "json.hpp"

namespace dcrit::search {

// Class enumeration bound; the labeled sweep in extremal_search stops at 7.
inline constexpr std::size_t kMaxEnumerationOrder = 8;
inline constexpr std::size_t kMaxSweepOrder = 7;
// Sweeps up to this order run without the exhaustive opt-in.
inline constexpr std::size_t kDefaultSweepOrder = 6;

// Adjacency code: the C(n,2) upper-triangle bits in graph6 order (column j,
// then row i < j), first bit most significant. Lexicographic order on bit
// strings equals numeric order on codes.
std::uint64_t adjacency_code(const Graph& g);
Graph graph_from_code(std::size_t n, std::uint64_t code);

struct CanonicalForm {
  std::uint64_t code = 0;          // minimum adjacency code over all relabelings
  std::uint64_t automorphisms = 1; // relabelings attaining the minimum
};

// Branch-and-bound minimization over vertex permutations. Requires n <= 11
// so the code fits in 64 bits.
CanonicalForm canonical_form(const Graph& g);
Graph canonical_graph(const Graph& g);

// One canonical representative per isomorphism class, ascending by code,
// grown by vertex extension from the classes on n-1 vertices. Throws
// TooLarge for n > 8.
std::vector<Graph> enumerate_graphs(std::size_t n);

struct SearchOptions {
  bool exhaustive = false;  // required for n = 7
  unsigned threads = 1;
  // Called after each finished shard with (codes done, total codes).
  std::function<void(std::uint64_t, std::uint64_t)> progress;
};

struct SearchResult {
  std::size_t n = 0;
  std::size_t k = 0;
  std::optional<std::size_t> max_edges;  // empty when no critical graph exists
  std::vector<Graph> extremal;           // canonical, ascending by code
  std::size_t critical_count = 0;        // isomorphism classes
  std::uint64_t labeled_critical_count = 0;
};

// Sweeps every labeled graph on n vertices, keeps the diameter-k-critical
// ones and merges their canonical forms. n = 7 needs options.exhaustive;
// n >= 8 throws TooLarge.
SearchResult extremal_search(std::size_t n, std::size_t k, const SearchOptions& options = {});

// {n, k, max_edges, extremal_graph6: [...], critical_count}
nlohmann::json to_json(const SearchResult& r);

struct DegreeSquareCheck {
  std::uint64_t lhs = 0;  // sum of squared degrees
  std::uint64_t rhs = 0;  // n * e(G)
  double ratio = 0;       // lhs / rhs, 0 when rhs = 0
  bool holds = true;      // lhs <= rhs
};

// Only claimed for diameter-k-critical graphs with k >= 3; callers decide
// whether a failure matters.
DegreeSquareCheck degree_square_check(const Graph& g);

}  // namespace dcrit::search
