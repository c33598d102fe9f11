#include <algorithm>
#include <set>
#include <string>

#include "dcrit/error.hpp"
#include "dcrit/search.hpp"

namespace dcrit::search {

std::uint64_t adjacency_code(const Graph& g) {
  const std::size_t n = g.order();
  if (n > 11) throw TooLarge("adjacency codes hold at most 11 vertices");
  std::uint64_t code = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) code = (code << 1) | (g.adjacent(i, j) ? 1U : 0U);
  }
  return code;
}

Graph graph_from_code(std::size_t n, std::uint64_t code) {
  if (n > 11) throw TooLarge("adjacency codes hold at most 11 vertices");
  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  std::vector<EdgeRef> edges;
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      if ((code >> (bits - 1 - k)) & 1U) edges.push_back({i, j});
    }
  }
  return build_graph(n, edges);
}

namespace {

// Places vertices position by position. The column of position p holds the
// bits (0,p)..(p-1,p), so the code prefix is fixed once positions 0..p are,
// and any branch whose prefix exceeds the best code so far is cut.
class Canonicalizer {
 public:
  explicit Canonicalizer(const Graph& g)
      : g_(g), n_(g.order()), perm_(n_), used_(n_, 0), cur_(n_, 0), best_(n_, 0) {}

  CanonicalForm run() {
    if (n_ > 0) dfs(0);
    CanonicalForm out;
    out.automorphisms = n_ == 0 ? 1 : count_;
    for (std::size_t p = 1; p < n_; ++p) out.code = (out.code << p) | best_[p];
    return out;
  }

 private:
  // -1, 0, 1 comparing cur_[0..len) with best_[0..len).
  int compare_prefix(std::size_t len) const {
    for (std::size_t p = 0; p < len; ++p) {
      if (cur_[p] != best_[p]) return cur_[p] < best_[p] ? -1 : 1;
    }
    return 0;
  }

  void dfs(std::size_t p) {
    if (p == n_) {
      const int c = have_best_ ? compare_prefix(n_) : -1;
      if (c < 0) {
        best_ = cur_;
        have_best_ = true;
        count_ = 1;
      } else if (c == 0) {
        ++count_;
      }
      return;
    }
    for (Vertex v = 0; v < n_; ++v) {
      if (used_[v]) continue;
      std::uint64_t col = 0;
      for (std::size_t i = 0; i < p; ++i) col = (col << 1) | (g_.adjacent(perm_[i], v) ? 1U : 0U);
      cur_[p] = col;
      if (have_best_ && compare_prefix(p + 1) > 0) continue;
      perm_[p] = v;
      used_[v] = 1;
      dfs(p + 1);
      used_[v] = 0;
    }
  }

  const Graph& g_;
  std::size_t n_;
  std::vector<Vertex> perm_;
  std::vector<char> used_;
  std::vector<std::uint64_t> cur_;
  std::vector<std::uint64_t> best_;
  bool have_best_ = false;
  std::uint64_t count_ = 0;
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  if (g.order() > 11) throw TooLarge("canonical form supports at most 11 vertices");
  return Canonicalizer(g).run();
}

Graph canonical_graph(const Graph& g) { return graph_from_code(g.order(), canonical_form(g).code); }

std::vector<Graph> enumerate_graphs(std::size_t n) {
  if (n > kMaxEnumerationOrder) {
    throw TooLarge("class enumeration supports n <= " + std::to_string(kMaxEnumerationOrder));
  }
  std::vector<std::uint64_t> codes{0};  // the single graph on zero vertices
  for (std::size_t order = 1; order <= n; ++order) {
    std::set<std::uint64_t> next;
    const auto new_vertex = static_cast<Vertex>(order - 1);
    for (std::uint64_t code : codes) {
      const Graph base = graph_from_code(order - 1, code);
      std::vector<EdgeRef> edges(base.edges().begin(), base.edges().end());
      const std::size_t base_edges = edges.size();
      for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << (order - 1)); ++subset) {
        edges.resize(base_edges);
        for (Vertex u = 0; u < new_vertex; ++u) {
          if ((subset >> u) & 1U) edges.push_back({u, new_vertex});
        }
        next.insert(canonical_form(build_graph(order, edges)).code);
      }
    }
    codes.assign(next.begin(), next.end());
  }
  std::vector<Graph> out;
  out.reserve(codes.size());
  for (std::uint64_t code : codes) out.push_back(graph_from_code(n, code));
  return out;
}

}  // namespace dcrit::search
