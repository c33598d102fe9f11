#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "dcrit/simd/bitset_kernels.hpp"

namespace dcrit {

using Vertex = std::uint32_t;
using Distance = std::uint32_t;

// Distance between vertices in different components. Compares greater than
// every finite distance, so "d > i" tests need no special casing.
inline constexpr Distance kUnreachable = std::numeric_limits<Distance>::max();

// An undirected edge. Graph-owned edges always satisfy u < v; input lists
// may carry either orientation and are normalized on construction.
struct EdgeRef {
  Vertex u = 0;
  Vertex v = 0;

  static constexpr EdgeRef normalized(Vertex a, Vertex b) noexcept {
    return a < b ? EdgeRef{a, b} : EdgeRef{b, a};
  }
  constexpr bool touches(Vertex w) const noexcept { return u == w || v == w; }

  friend constexpr auto operator<=>(const EdgeRef&, const EdgeRef&) = default;
};

// Unordered vertex pair {x, y} with x < y.
struct VertexPair {
  Vertex x = 0;
  Vertex y = 0;

  static constexpr VertexPair normalized(Vertex a, Vertex b) noexcept {
    return a < b ? VertexPair{a, b} : VertexPair{b, a};
  }

  friend constexpr auto operator<=>(const VertexPair&, const VertexPair&) = default;
};

// Immutable simple undirected graph on vertices 0..n-1.
//
// Adjacency is held twice: sorted neighbor lists for iteration and packed
// bitset rows for the word-parallel BFS and neighborhood kernels.
class Graph {
 public:
  Graph() = default;

  std::size_t order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_.size(); }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }
  bool adjacent(Vertex a, Vertex b) const noexcept {
    return (bits_[a * words_ + (b >> 6)] >> (b & 63)) & 1U;
  }

  // Sorted ascending, each with u < v.
  std::span<const EdgeRef> edges() const noexcept { return edges_; }
  std::optional<std::size_t> edge_index(EdgeRef e) const;
  bool has_edge(EdgeRef e) const { return edge_index(e).has_value(); }

  std::size_t row_words() const noexcept { return words_; }
  std::span<const simd::Word> row(Vertex v) const {
    return {bits_.data() + static_cast<std::size_t>(v) * words_, words_};
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  friend Graph build_graph(std::size_t n, std::span<const EdgeRef> edges);

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<EdgeRef> edges_;
  std::vector<simd::Word> bits_;
};

// Duplicate edges collapse. Throws InvalidVertex for an endpoint >= n and
// InvalidEdge for a self-loop.
Graph build_graph(std::size_t n, std::span<const EdgeRef> edges);
Graph build_graph(std::size_t n, std::initializer_list<EdgeRef> edges);

// Subgraph on the same vertex set keeping only the listed edges of g.
Graph edge_subgraph(const Graph& g, std::span<const EdgeRef> kept);

}  // namespace dcrit
