#include "dcrit/graph.hpp"

#include <algorithm>
#include <string>

#include "dcrit/error.hpp"

namespace dcrit {

std::optional<std::size_t> Graph::edge_index(EdgeRef e) const {
  const EdgeRef key = EdgeRef::normalized(e.u, e.v);
  const auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

Graph build_graph(std::size_t n, std::span<const EdgeRef> edges) {
  Graph g;
  g.n_ = n;
  g.words_ = (n + 63) / 64;
  g.edges_.reserve(edges.size());
  for (const EdgeRef& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw InvalidVertex("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                          " has an endpoint outside 0.." + std::to_string(n) + "-1");
    }
    if (e.u == e.v) throw InvalidEdge("self-loop at vertex " + std::to_string(e.u));
    g.edges_.push_back(EdgeRef::normalized(e.u, e.v));
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());

  g.adj_.assign(n, {});
  g.bits_.assign(n * g.words_, 0);
  for (const EdgeRef& e : g.edges_) {
    g.adj_[e.u].push_back(e.v);
    g.adj_[e.v].push_back(e.u);
    g.bits_[e.u * g.words_ + (e.v >> 6)] |= simd::Word{1} << (e.v & 63);
    g.bits_[e.v * g.words_ + (e.u >> 6)] |= simd::Word{1} << (e.u & 63);
  }
  // Edges are sorted by (u, v), so each u's forward neighbors arrive in order
  // but backward ones interleave; sort once.
  for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());
  return g;
}

Graph build_graph(std::size_t n, std::initializer_list<EdgeRef> edges) {
  return build_graph(n, std::span<const EdgeRef>(edges.begin(), edges.size()));
}

Graph edge_subgraph(const Graph& g, std::span<const EdgeRef> kept) {
  for (const EdgeRef& e : kept) {
    if (!g.has_edge(e)) {
      throw MissingEdge("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                        " is not in the graph");
    }
  }
  return build_graph(g.order(), kept);
}

}  // namespace dcrit
