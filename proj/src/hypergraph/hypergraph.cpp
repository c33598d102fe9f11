#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <utility>

#include "dcrit/error.hpp"
#include "dcrit/hypergraph.hpp"

namespace dcrit::hyper {

Triple make_triple(Vertex a, Vertex b, Vertex c) {
  Triple t{a, b, c};
  std::sort(t.begin(), t.end());
  return t;
}

std::size_t intersection_size(const Triple& a, const Triple& b) {
  std::size_t count = 0;
  for (Vertex u : a) count += std::find(b.begin(), b.end(), u) != b.end() ? 1 : 0;
  return count;
}

void Hypergraph3::add_edge(HyperEdge e) {
  std::sort(e.vertices.begin(), e.vertices.end());
  const Triple& t = e.vertices;
  for (Vertex v : t) {
    if (v >= n_) throw InvalidVertex("3-edge vertex " + std::to_string(v) + " out of range");
  }
  if (t[0] == t[1] || t[1] == t[2]) throw InvalidEdge("3-edge with a repeated vertex");
  auto in_edge = [&](Vertex v) { return std::find(t.begin(), t.end(), v) != t.end(); };
  if (e.handle && !in_edge(*e.handle)) throw InvalidEdge("handle outside its 3-edge");
  if (e.center && !in_edge(*e.center)) throw InvalidEdge("center outside its 3-edge");
  if (e.handle && e.center && *e.handle == *e.center) throw InvalidEdge("handle equals center");
  if (!index_.insert(t).second) {
    throw InvalidEdge("duplicate 3-edge {" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
                      std::to_string(t[2]) + "}");
  }
  edges_.push_back(std::move(e));
}

void Hypergraph3::set_parts(std::vector<Part> parts) {
  if (!parts.empty() && parts.size() != n_) throw InvalidParams("partition size differs from n");
  parts_ = std::move(parts);
}

namespace {

using PairKey = std::pair<Vertex, Vertex>;

std::array<PairKey, 3> pairs_of(const Triple& t) {
  return {PairKey{t[0], t[1]}, PairKey{t[0], t[2]}, PairKey{t[1], t[2]}};
}

Hypergraph3 subhypergraph(const Hypergraph3& h, const std::vector<char>& keep) {
  Hypergraph3 out(h.order());
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (keep[i]) out.add_edge(h.edges()[i]);
  }
  out.set_parts(h.parts());
  return out;
}

}  // namespace

bool is_linear(const Hypergraph3& h) {
  std::set<PairKey> seen;
  for (const HyperEdge& e : h.edges()) {
    for (const PairKey& p : pairs_of(e.vertices)) {
      if (!seen.insert(p).second) return false;
    }
  }
  return true;
}

std::vector<std::array<std::size_t, 3>> find_triangles(const Hypergraph3& h) {
  if (!is_linear(h)) throw NonLinearInput("triangle search needs a linear hypergraph");
  std::vector<std::vector<std::size_t>> incident(h.order());
  for (std::size_t i = 0; i < h.size(); ++i) {
    for (Vertex v : h.edges()[i].vertices) incident[v].push_back(i);
  }
  std::vector<std::array<std::size_t, 3>> out;
  const auto& edges = h.edges();
  // In a linear hypergraph two edges meet in at most one vertex, so walking
  // e1 -u- e2 -w- e3 with e1 < e2 < e3 and closing e3 -z- e1 at a third vertex
  // finds each triangle exactly once.
  for (std::size_t e1 = 0; e1 < edges.size(); ++e1) {
    for (Vertex u : edges[e1].vertices) {
      for (std::size_t e2 : incident[u]) {
        if (e2 <= e1) continue;
        for (Vertex w : edges[e2].vertices) {
          if (w == u) continue;
          for (std::size_t e3 : incident[w]) {
            if (e3 <= e2) continue;
            const Triple& a = edges[e1].vertices;
            const Triple& c = edges[e3].vertices;
            if (intersection_size(a, c) != 1) continue;
            Vertex z = 0;
            for (Vertex v : a) {
              if (std::find(c.begin(), c.end(), v) != c.end()) z = v;
            }
            if (z == u || z == w) continue;
            out.push_back({e1, e2, e3});
          }
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_triangle_free(const Hypergraph3& h) { return find_triangles(h).empty(); }

std::size_t LinearizeResult::max_deletions() const {
  return deletions_per_step.empty() ? 0 : *std::max_element(deletions_per_step.begin(), deletions_per_step.end());
}

LinearizeResult linearize_with_stats(const Hypergraph3& h) {
  const auto& edges = h.edges();
  std::map<PairKey, std::vector<std::size_t>> by_pair;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (const PairKey& p : pairs_of(edges[i].vertices)) by_pair[p].push_back(i);
  }
  std::vector<std::size_t> order(edges.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return edges[a].vertices < edges[b].vertices; });

  // Deleting edges never creates a new 2-intersection, so an edge that is
  // conflict-free when visited stays so; one ordered pass reaches the
  // fixed point of "pick the smallest conflicted edge".
  std::vector<char> alive(edges.size(), 1);
  LinearizeResult result;
  for (std::size_t idx : order) {
    if (!alive[idx]) continue;
    std::size_t deleted = 0;
    for (const PairKey& p : pairs_of(edges[idx].vertices)) {
      for (std::size_t mate : by_pair[p]) {
        if (mate != idx && alive[mate]) {
          alive[mate] = 0;
          ++deleted;
        }
      }
    }
    if (deleted > 0) result.deletions_per_step.push_back(deleted);
  }
  result.out = subhypergraph(h, alive);
  return result;
}

Hypergraph3 linearize(const Hypergraph3& h) { return linearize_with_stats(h).out; }

Hypergraph3 extract_3partite(const Hypergraph3& h) {
  const std::size_t n = h.order();
  std::vector<std::vector<std::size_t>> incident(n);
  for (std::size_t i = 0; i < h.size(); ++i) {
    for (Vertex v : h.edges()[i].vertices) incident[v].push_back(i);
  }
  std::vector<Part> parts(n, Part::kUnassigned);

  // 27 x Pr[edge ends up rainbow | current assignment], remaining vertices
  // uniform over the three parts.
  auto score = [&](const Triple& t) -> int {
    int seen_mask = 0;
    int unassigned = 0;
    for (Vertex v : t) {
      if (parts[v] == Part::kUnassigned) {
        ++unassigned;
        continue;
      }
      const int bit = 1 << static_cast<int>(parts[v]);
      if (seen_mask & bit) return 0;
      seen_mask |= bit;
    }
    switch (unassigned) {
      case 0:
        return 27;
      case 1:
        return 9;
      default:
        return 6;  // 2/9 with two or three vertices still free
    }
  };

  for (Vertex v = 0; v < n; ++v) {
    Part best = Part::kV1;
    int best_score = -1;
    for (Part p : {Part::kV1, Part::kV2, Part::kV3}) {
      parts[v] = p;
      int total = 0;
      for (std::size_t e : incident[v]) total += score(h.edges()[e].vertices);
      if (total > best_score) {
        best_score = total;
        best = p;
      }
    }
    parts[v] = best;
  }

  std::vector<char> keep(h.size(), 0);
  for (std::size_t i = 0; i < h.size(); ++i) keep[i] = score(h.edges()[i].vertices) == 27 ? 1 : 0;
  Hypergraph3 out(n);
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (keep[i]) out.add_edge(h.edges()[i]);
  }
  out.set_parts(std::move(parts));
  return out;
}

}  // namespace dcrit::hyper
