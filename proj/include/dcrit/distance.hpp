#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dcrit/graph.hpp"

namespace dcrit {

struct DistanceRow {
  Vertex source = 0;
  std::vector<Distance> dist;
};

// Dense n x n hop-distance table.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t n) : n_(n), data_(n * n, kUnreachable) {}

  std::size_t order() const noexcept { return n_; }
  Distance at(Vertex x, Vertex y) const { return data_[x * n_ + y]; }
  std::span<Distance> row(Vertex x) { return {data_.data() + x * n_, n_}; }
  std::span<const Distance> row(Vertex x) const { return {data_.data() + x * n_, n_}; }

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Distance> data_;
};

// Level-synchronous BFS over bitset rows with worker-local scratch. An
// optional edge is masked out of the traversal instead of copying the graph.
class BfsEngine {
 public:
  explicit BfsEngine(const Graph& g);

  // Writes hop distances from `source` into `dist` (size n). Vertices farther
  // than `depth_limit` or in other components are left at kUnreachable.
  // Returns the number of vertices reached, source included.
  std::size_t run(Vertex source, std::span<Distance> dist, std::optional<EdgeRef> removed = {},
                  Distance depth_limit = kUnreachable);

  // Same traversal without recording distances.
  std::size_t reach_within(Vertex source, Distance depth_limit,
                           std::optional<EdgeRef> removed = {});

 private:
  template <typename OnLevel>
  std::size_t traverse(Vertex source, std::optional<EdgeRef> removed, Distance depth_limit,
                       OnLevel&& on_level);

  const Graph* g_;
  const simd::KernelTable* k_;
  std::vector<simd::Word> visited_;
  std::vector<simd::Word> frontier_;
  std::vector<simd::Word> next_;
  std::vector<simd::Word> masked_row_;
};

DistanceRow bfs_distances(const Graph& g, Vertex source);

DistanceMatrix all_pairs_distances(const Graph& g, std::optional<EdgeRef> removed = {});

// kUnreachable iff g is disconnected; 0 for a single vertex.
Distance diameter(const Graph& g);

// Diameter of g - e. Throws MissingEdge if e is not an edge of g.
Distance diameter_without_edge(const Graph& g, EdgeRef e);

// diam(g - e) > threshold, short-circuiting on the first source whose
// threshold-ball misses a vertex.
bool diameter_exceeds_without_edge(const Graph& g, EdgeRef e, Distance threshold);

std::uint64_t degree_square_sum(const Graph& g);

}  // namespace dcrit
