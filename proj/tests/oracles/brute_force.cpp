#include "brute_force.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <set>

namespace dcrit::oracle {

BoolMatrix adjacency_matrix(std::size_t n, const std::vector<EdgeRef>& edges, std::optional<EdgeRef> removed) {
  BoolMatrix a(n, std::vector<bool>(n, false));
  for (const EdgeRef& e : edges) {
    if (removed && EdgeRef::normalized(e.u, e.v) == EdgeRef::normalized(removed->u, removed->v)) continue;
    a[e.u][e.v] = a[e.v][e.u] = true;
  }
  return a;
}

Matrix floyd_warshall(std::size_t n, const std::vector<EdgeRef>& edges, std::optional<EdgeRef> removed) {
  const auto a = adjacency_matrix(n, edges, removed);
  Matrix d(n, std::vector<Distance>(n, kUnreachable));
  for (std::size_t i = 0; i < n; ++i) {
    d[i][i] = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (a[i][j]) d[i][j] = 1;
    }
  }
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (d[i][m] != kUnreachable && d[m][j] != kUnreachable && d[i][m] + d[m][j] < d[i][j]) {
          d[i][j] = d[i][m] + d[m][j];
        }
      }
    }
  }
  return d;
}

Matrix matrix_power_distances(std::size_t n, const std::vector<EdgeRef>& edges) {
  auto step = adjacency_matrix(n, edges);
  for (std::size_t i = 0; i < n; ++i) step[i][i] = true;
  Matrix d(n, std::vector<Distance>(n, kUnreachable));
  BoolMatrix power(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) power[i][i] = true;
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (power[i][j] && d[i][j] == kUnreachable) d[i][j] = static_cast<Distance>(p);
      }
    }
    BoolMatrix next(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        bool v = false;
        for (std::size_t m = 0; m < n && !v; ++m) v = power[i][m] && step[m][j];
        next[i][j] = v;
      }
    }
    power = std::move(next);
  }
  return d;
}

Distance brute_diameter(const Matrix& d) {
  Distance best = 0;
  for (const auto& row : d) {
    for (Distance x : row) best = std::max(best, x);
  }
  return best;
}

bool brute_is_critical(std::size_t n, const std::vector<EdgeRef>& edges, std::size_t k) {
  if (brute_diameter(floyd_warshall(n, edges)) != k) return false;
  for (const EdgeRef& e : edges) {
    if (brute_diameter(floyd_warshall(n, edges, e)) <= k) return false;
  }
  return true;
}

std::vector<VertexPair> brute_associated_pairs(std::size_t n, const std::vector<EdgeRef>& edges, EdgeRef e,
                                               std::size_t i) {
  const Matrix d = floyd_warshall(n, edges);
  const Matrix de = floyd_warshall(n, edges, e);
  std::vector<VertexPair> out;
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y) {
      if (d[x][y] <= i && de[x][y] > i) out.push_back({x, y});
    }
  }
  return out;
}

std::vector<std::vector<Vertex>> all_shortest_paths(std::size_t n, const std::vector<EdgeRef>& edges, Vertex x,
                                                    Vertex y) {
  const auto a = adjacency_matrix(n, edges);
  std::vector<std::vector<Vertex>> paths;
  std::vector<Vertex> cur{x};
  std::vector<bool> on(n, false);
  on[x] = true;
  auto dfs = [&](auto&& self, Vertex v) -> void {
    if (v == y) {
      paths.push_back(cur);
      return;
    }
    for (Vertex w = 0; w < n; ++w) {
      if (!a[v][w] || on[w]) continue;
      on[w] = true;
      cur.push_back(w);
      self(self, w);
      cur.pop_back();
      on[w] = false;
    }
  };
  dfs(dfs, x);
  if (paths.empty()) return {};
  std::size_t shortest = paths.front().size();
  for (const auto& p : paths) shortest = std::min(shortest, p.size());
  std::vector<std::vector<Vertex>> out;
  for (auto& p : paths) {
    if (p.size() == shortest) out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<BrutePair> brute_critical_pairs(std::size_t n, const std::vector<EdgeRef>& edges, std::size_t k) {
  std::vector<EdgeRef> sorted = edges;
  for (auto& e : sorted) e = EdgeRef::normalized(e.u, e.v);
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  const Matrix d = floyd_warshall(n, sorted);
  std::vector<Matrix> deleted;
  for (const EdgeRef& e : sorted) deleted.push_back(floyd_warshall(n, sorted, e));

  std::vector<BrutePair> out;
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y) {
      BrutePair p;
      p.pair = {x, y};
      p.distance = d[x][y];
      for (std::size_t i = 2; i <= k; ++i) {
        for (std::size_t ei = 0; ei < sorted.size(); ++ei) {
          if (d[x][y] <= i && deleted[ei][x][y] > i) p.levels[i].push_back(sorted[ei]);
        }
      }
      if (p.levels.empty()) continue;
      p.path = all_shortest_paths(n, sorted, x, y).front();
      out.push_back(std::move(p));
    }
  }
  return out;
}

std::map<EdgeRef, std::size_t> brute_multiplicity(std::size_t n, const std::vector<EdgeRef>& edges, std::size_t k) {
  std::map<EdgeRef, std::size_t> m;
  for (const EdgeRef& e : edges) m[EdgeRef::normalized(e.u, e.v)] = 0;
  for (const BrutePair& p : brute_critical_pairs(n, edges, k)) {
    for (const auto& [level, assoc] : p.levels) {
      for (const EdgeRef& e : assoc) ++m[e];
    }
  }
  return m;
}

BruteCanonical brute_canonical(std::size_t n, const std::vector<EdgeRef>& edges) {
  const auto a = adjacency_matrix(n, edges);
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  BruteCanonical best{~std::uint64_t{0}, 0};
  do {
    std::uint64_t code = 0;
    for (std::size_t j = 1; j < n; ++j) {
      for (std::size_t i = 0; i < j; ++i) code = (code << 1) | (a[perm[i]][perm[j]] ? 1U : 0U);
    }
    if (code < best.code) {
      best = {code, 1};
    } else if (code == best.code) {
      ++best.automorphisms;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

namespace {

using Tri = std::array<Vertex, 3>;

std::size_t meet(const Tri& a, const Tri& b) {
  std::size_t c = 0;
  for (Vertex u : a) {
    for (Vertex v : b) c += u == v ? 1 : 0;
  }
  return c;
}

bool brute_triangle(const Tri& a, const Tri& b, const Tri& c) {
  if (meet(a, b) != 1 || meet(b, c) != 1 || meet(a, c) != 1) return false;
  std::set<Vertex> all(a.begin(), a.end());
  all.insert(b.begin(), b.end());
  all.insert(c.begin(), c.end());
  return all.size() == 6;
}

}  // namespace

std::size_t naive_rsz(std::size_t n) {
  std::vector<Tri> triples;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      for (Vertex c = b + 1; c < n; ++c) triples.push_back({a, b, c});
    }
  }
  std::size_t best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << triples.size()); ++mask) {
    std::vector<Tri> chosen;
    for (std::size_t i = 0; i < triples.size(); ++i) {
      if ((mask >> i) & 1U) chosen.push_back(triples[i]);
    }
    if (chosen.size() <= best) continue;
    bool ok = true;
    for (std::size_t i = 0; i < chosen.size() && ok; ++i) {
      for (std::size_t j = i + 1; j < chosen.size() && ok; ++j) ok = meet(chosen[i], chosen[j]) <= 1;
    }
    for (std::size_t i = 0; i < chosen.size() && ok; ++i) {
      for (std::size_t j = i + 1; j < chosen.size() && ok; ++j) {
        for (std::size_t l = j + 1; l < chosen.size() && ok; ++l) ok = !brute_triangle(chosen[i], chosen[j], chosen[l]);
      }
    }
    if (ok) best = chosen.size();
  }
  return best;
}

std::size_t brute_disj_count(std::size_t n, const std::vector<EdgeRef>& edges) {
  const auto a = adjacency_matrix(n, edges);
  std::size_t count = 0;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      bool common = false;
      for (std::size_t z = 0; z < n; ++z) common = common || (a[x][z] && a[y][z]);
      count += common ? 0 : 1;
    }
  }
  return count;
}

std::vector<EdgeRef> edge_list(const Graph& g) { return {g.edges().begin(), g.edges().end()}; }

std::vector<EdgeRef> random_edges(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<EdgeRef> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.push_back({u, v});
    }
  }
  return edges;
}

}  // namespace dcrit::oracle
