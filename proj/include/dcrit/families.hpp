#pragma once

#include <cstddef>
#include <random>
#include <string_view>
#include <vector>

#include "dcrit/graph.hpp"

namespace dcrit::families {

enum class Elementary { kCycle, kPath, kComplete };

// Parameters of the hub-and-paths family G_k: a0 left hub vertices, a1
// internally disjoint paths on k-1 vertices, a2 right hub vertices.
struct GkParams {
  std::size_t k = 3;
  std::size_t a0 = 1;
  std::size_t a1 = 1;
  std::size_t a2 = 1;
};

// A matching on the clique side 0..n/2-1 of G_{3,0}.
struct Matching {
  std::vector<EdgeRef> pairs;
};

Graph gen_elementary(Elementary family, std::size_t n);

// Parts {0..a-1} and {a..a+b-1}.
Graph gen_complete_bipartite(std::size_t a, std::size_t b);

// Layout: hubs 0..a0-1, then path p (0-based) on a0 + p(k-1) + j for
// j = 0..k-2, then right hubs. Every left hub meets the first vertex of every
// path and every right hub meets the last one.
Graph gen_gk(const GkParams& p);

// Clique on 0..n/2-1, independent set n/2..n-1, matching edges {i, i+n/2}.
Graph gen_g30(std::size_t n);

// G_{3,0} with each clique edge uv of M replaced by (u+n/2)(v+n/2).
Graph gen_g3m(std::size_t n, const Matching& m);

// Rounded value of (n+k-2) / (2(k-1)), ties down, at least 1: the
// paths-count choice that gives G_k its extremal edge count.
std::size_t a1_star(std::size_t k, std::size_t n);

// a0 = 1, a1 = a1_star(k, n), a2 = n - 1 - a1(k-1). Throws InvalidParams if
// that leaves no right hub.
GkParams gk_params_for_order(std::size_t k, std::size_t n);

// Uniformly random matching (including the empty one) of K_half.
Matching random_matching(std::size_t half, std::mt19937_64& rng);

// "u-v,u-v,..." over clique-side vertex ids; empty string is the empty
// matching. Throws ParseError on bad syntax or a repeated vertex.
Matching parse_matching(std::string_view spec);

}  // namespace dcrit::families
