#include "dcrit/distance.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "dcrit/error.hpp"

namespace dcrit {
namespace {

template <typename F>
void for_each_bit(std::span<const simd::Word> bits, F&& f) {
  for (std::size_t w = 0; w < bits.size(); ++w) {
    simd::Word word = bits[w];
    while (word != 0) {
      const auto bit = static_cast<Vertex>(std::countr_zero(word));
      f(static_cast<Vertex>(w * 64) + bit);
      word &= word - 1;
    }
  }
}

void require_vertex(const Graph& g, Vertex v) {
  if (v >= g.order()) {
    throw InvalidVertex("vertex " + std::to_string(v) + " out of range for n=" +
                        std::to_string(g.order()));
  }
}

void require_edge(const Graph& g, EdgeRef e) {
  if (!g.has_edge(e)) {
    throw MissingEdge("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                      " is not in the graph");
  }
}

}  // namespace

BfsEngine::BfsEngine(const Graph& g)
    : g_(&g),
      k_(&simd::active_kernels()),
      visited_(g.row_words()),
      frontier_(g.row_words()),
      next_(g.row_words()),
      masked_row_(g.row_words()) {}

template <typename OnLevel>
std::size_t BfsEngine::traverse(Vertex source, std::optional<EdgeRef> removed,
                                Distance depth_limit, OnLevel&& on_level) {
  const std::size_t words = g_->row_words();
  std::fill(visited_.begin(), visited_.end(), 0);
  std::fill(frontier_.begin(), frontier_.end(), 0);
  visited_[source >> 6] |= simd::Word{1} << (source & 63);
  frontier_[source >> 6] |= simd::Word{1} << (source & 63);

  std::size_t reached = 1;
  Distance level = 0;
  while (level < depth_limit) {
    std::fill(next_.begin(), next_.end(), 0);
    for_each_bit(std::span<const simd::Word>(frontier_), [&](Vertex v) {
      const auto row = g_->row(v);
      if (removed && removed->touches(v)) {
        const Vertex other = removed->u == v ? removed->v : removed->u;
        std::copy(row.begin(), row.end(), masked_row_.begin());
        masked_row_[other >> 6] &= ~(simd::Word{1} << (other & 63));
        k_->or_into(next_.data(), masked_row_.data(), words);
      } else {
        k_->or_into(next_.data(), row.data(), words);
      }
    });
    if (!k_->andnot_any(next_.data(), visited_.data(), words)) break;
    ++level;
    reached += k_->popcount(next_.data(), words);
    on_level(std::span<const simd::Word>(next_), level);
    k_->or_into(visited_.data(), next_.data(), words);
    frontier_.swap(next_);
  }
  return reached;
}

std::size_t BfsEngine::run(Vertex source, std::span<Distance> dist,
                           std::optional<EdgeRef> removed, Distance depth_limit) {
  std::fill(dist.begin(), dist.end(), kUnreachable);
  dist[source] = 0;
  return traverse(source, removed, depth_limit,
                  [&](std::span<const simd::Word> layer, Distance level) {
                    for_each_bit(layer, [&](Vertex w) { dist[w] = level; });
                  });
}

std::size_t BfsEngine::reach_within(Vertex source, Distance depth_limit,
                                    std::optional<EdgeRef> removed) {
  return traverse(source, removed, depth_limit, [](std::span<const simd::Word>, Distance) {});
}

DistanceRow bfs_distances(const Graph& g, Vertex source) {
  require_vertex(g, source);
  DistanceRow out{source, std::vector<Distance>(g.order())};
  BfsEngine(g).run(source, out.dist);
  return out;
}

DistanceMatrix all_pairs_distances(const Graph& g, std::optional<EdgeRef> removed) {
  if (removed) require_edge(g, *removed);
  DistanceMatrix d(g.order());
  BfsEngine bfs(g);
  for (Vertex s = 0; s < g.order(); ++s) bfs.run(s, d.row(s), removed);
  return d;
}

namespace {

Distance diameter_impl(const Graph& g, std::optional<EdgeRef> removed) {
  const std::size_t n = g.order();
  if (n <= 1) return 0;
  BfsEngine bfs(g);
  std::vector<Distance> dist(n);
  Distance best = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (bfs.run(s, dist, removed) < n) return kUnreachable;
    best = std::max(best, *std::max_element(dist.begin(), dist.end()));
  }
  return best;
}

}  // namespace

Distance diameter(const Graph& g) { return diameter_impl(g, std::nullopt); }

Distance diameter_without_edge(const Graph& g, EdgeRef e) {
  require_edge(g, e);
  return diameter_impl(g, EdgeRef::normalized(e.u, e.v));
}

bool diameter_exceeds_without_edge(const Graph& g, EdgeRef e, Distance threshold) {
  require_edge(g, e);
  const EdgeRef masked = EdgeRef::normalized(e.u, e.v);
  const std::size_t n = g.order();
  BfsEngine bfs(g);
  // Endpoints of the removed edge are the likeliest sources to lose reach.
  if (bfs.reach_within(masked.u, threshold, masked) < n) return true;
  if (bfs.reach_within(masked.v, threshold, masked) < n) return true;
  for (Vertex s = 0; s < n; ++s) {
    if (s == masked.u || s == masked.v) continue;
    if (bfs.reach_within(s, threshold, masked) < n) return true;
  }
  return false;
}

std::uint64_t degree_square_sum(const Graph& g) {
  std::uint64_t total = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    const std::uint64_t d = g.degree(v);
    total += d * d;
  }
  return total;
}

}  // namespace dcrit
