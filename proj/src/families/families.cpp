#include "dcrit/families.hpp"

#include <charconv>
#include <string>

#include "dcrit/error.hpp"

namespace dcrit::families {

Graph gen_elementary(Elementary family, std::size_t n) {
  std::vector<EdgeRef> edges;
  switch (family) {
    case Elementary::kCycle:
      if (n < 3) throw InvalidParams("cycle needs n >= 3");
      for (Vertex v = 0; v < n; ++v) edges.push_back(EdgeRef::normalized(v, (v + 1) % n));
      break;
    case Elementary::kPath:
      if (n < 1) throw InvalidParams("path needs n >= 1");
      for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
      break;
    case Elementary::kComplete:
      if (n < 1) throw InvalidParams("complete graph needs n >= 1");
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
      }
      break;
  }
  return build_graph(n, edges);
}

Graph gen_complete_bipartite(std::size_t a, std::size_t b) {
  if (a < 1 || b < 1) throw InvalidParams("complete bipartite needs a >= 1 and b >= 1");
  std::vector<EdgeRef> edges;
  edges.reserve(a * b);
  for (Vertex u = 0; u < a; ++u) {
    for (Vertex v = 0; v < b; ++v) edges.push_back({u, static_cast<Vertex>(a + v)});
  }
  return build_graph(a + b, edges);
}

Graph gen_gk(const GkParams& p) {
  if (p.k < 3) throw InvalidParams("G_k needs k >= 3");
  if (p.a0 < 1 || p.a1 < 1 || p.a2 < 1) throw InvalidParams("G_k needs a0, a1, a2 >= 1");
  const std::size_t path_len = p.k - 1;
  const std::size_t first_path = p.a0;
  const std::size_t first_right = p.a0 + p.a1 * path_len;
  const std::size_t n = first_right + p.a2;

  std::vector<EdgeRef> edges;
  for (std::size_t path = 0; path < p.a1; ++path) {
    const auto start = static_cast<Vertex>(first_path + path * path_len);
    const auto last = static_cast<Vertex>(start + path_len - 1);
    for (Vertex v = start; v < last; ++v) edges.push_back({v, v + 1});
    for (Vertex h = 0; h < p.a0; ++h) edges.push_back({h, start});
    for (std::size_t h = 0; h < p.a2; ++h) edges.push_back({last, static_cast<Vertex>(first_right + h)});
  }
  return build_graph(n, edges);
}

Graph gen_g30(std::size_t n) { return gen_g3m(n, Matching{}); }

Graph gen_g3m(std::size_t n, const Matching& m) {
  if (n < 6 || n % 2 != 0) throw InvalidParams("G_{3,M} needs even n >= 6");
  const auto half = static_cast<Vertex>(n / 2);

  std::vector<bool> covered(half, false);
  std::vector<std::vector<bool>> removed(half, std::vector<bool>(half, false));
  for (const EdgeRef& raw : m.pairs) {
    const EdgeRef e = EdgeRef::normalized(raw.u, raw.v);
    if (e.v >= half) {
      throw InvalidParams("matching pair " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                          " leaves the clique side 0.." + std::to_string(half - 1));
    }
    if (e.u == e.v) throw InvalidParams("matching pair joins a vertex to itself");
    if (covered[e.u] || covered[e.v]) throw InvalidParams("matching covers a vertex twice");
    covered[e.u] = covered[e.v] = true;
    removed[e.u][e.v] = true;
  }

  std::vector<EdgeRef> edges;
  for (Vertex u = 0; u < half; ++u) {
    for (Vertex v = u + 1; v < half; ++v) {
      if (removed[u][v]) {
        edges.push_back({u + half, v + half});
      } else {
        edges.push_back({u, v});
      }
    }
    edges.push_back({u, u + half});
  }
  return build_graph(n, edges);
}

std::size_t a1_star(std::size_t k, std::size_t n) {
  if (k < 3) throw InvalidParams("a1_star needs k >= 3");
  const std::size_t num = n + k - 2;
  const std::size_t den = 2 * (k - 1);
  std::size_t q = num / den;
  if (2 * (num % den) > den) ++q;
  return q < 1 ? 1 : q;
}

GkParams gk_params_for_order(std::size_t k, std::size_t n) {
  const std::size_t a1 = a1_star(k, n);
  const std::size_t used = 1 + a1 * (k - 1);
  if (n <= used) {
    throw InvalidParams("n=" + std::to_string(n) + " too small for G_k with k=" + std::to_string(k));
  }
  return GkParams{k, 1, a1, n - used};
}

Matching random_matching(std::size_t half, std::mt19937_64& rng) {
  // Number of matchings of K_h: T(h) = T(h-1) + (h-1) T(h-2). Doubles keep
  // the ratios exact enough for sampling far past any practical h.
  std::vector<double> count(half + 1, 1.0);
  for (std::size_t h = 2; h <= half; ++h) {
    count[h] = count[h - 1] + static_cast<double>(h - 1) * count[h - 2];
  }

  std::vector<Vertex> free_vertices(half);
  for (Vertex v = 0; v < half; ++v) free_vertices[v] = v;

  Matching out;
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  while (free_vertices.size() >= 2) {
    const std::size_t h = free_vertices.size();
    const Vertex first = free_vertices.front();
    free_vertices.erase(free_vertices.begin());
    // The lowest free vertex stays single with probability T(h-1)/T(h);
    // otherwise it is paired with one of the other h-1 uniformly.
    if (unit(rng) * count[h] < count[h - 1]) continue;
    std::uniform_int_distribution<std::size_t> pick(0, h - 2);
    const std::size_t idx = pick(rng);
    out.pairs.push_back({first, free_vertices[idx]});
    free_vertices.erase(free_vertices.begin() + static_cast<std::ptrdiff_t>(idx));
  }
  return out;
}

Matching parse_matching(std::string_view spec) {
  Matching out;
  std::vector<Vertex> seen;
  auto parse_id = [&](std::string_view tok) {
    Vertex v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) {
      throw ParseError("matching: bad vertex id '" + std::string(tok) + "'");
    }
    return v;
  };
  while (!spec.empty()) {
    const std::size_t comma = spec.find(',');
    const std::string_view item = spec.substr(0, comma);
    spec = comma == std::string_view::npos ? std::string_view{} : spec.substr(comma + 1);
    const std::size_t dash = item.find('-');
    if (dash == std::string_view::npos) {
      throw ParseError("matching: expected u-v, got '" + std::string(item) + "'");
    }
    const Vertex u = parse_id(item.substr(0, dash));
    const Vertex v = parse_id(item.substr(dash + 1));
    for (Vertex w : {u, v}) {
      for (Vertex s : seen) {
        if (s == w) throw ParseError("matching: vertex " + std::to_string(w) + " repeated");
      }
      seen.push_back(w);
    }
    out.pairs.push_back({u, v});
  }
  return out;
}

}  // namespace dcrit::families
