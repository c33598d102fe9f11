#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "brute_force.hpp"
#include "dcrit/criticality.hpp"
#include "dcrit/distance.hpp"
#include "dcrit/error.hpp"
#include "dcrit/families.hpp"

namespace {

using namespace dcrit;
using namespace dcrit::families;

bool critical(const Graph& g, std::size_t k) {
  return oracle::brute_is_critical(g.order(), oracle::edge_list(g), k);
}

TEST(Elementary, Examples) {
  EXPECT_EQ(gen_elementary(Elementary::kCycle, 5).size(), 5U);
  EXPECT_EQ(gen_elementary(Elementary::kPath, 4).size(), 3U);
  EXPECT_EQ(gen_elementary(Elementary::kComplete, 4).size(), 6U);
  EXPECT_EQ(gen_elementary(Elementary::kPath, 1).size(), 0U);
  EXPECT_THROW(gen_elementary(Elementary::kCycle, 2), InvalidParams);
  EXPECT_THROW(gen_elementary(Elementary::kPath, 0), InvalidParams);
}

TEST(CompleteBipartite, Examples) {
  Graph k23 = gen_complete_bipartite(2, 3);
  EXPECT_EQ(k23.size(), 6U);
  EXPECT_EQ(k23.size(), 25U / 4);
  Graph k33 = gen_complete_bipartite(3, 3);
  EXPECT_EQ(k33.size(), 9U);
  EXPECT_TRUE(critical(k33, 2));
  EXPECT_EQ(gen_complete_bipartite(1, 1).size(), 1U);
  EXPECT_THROW(gen_complete_bipartite(0, 3), InvalidParams);
}

TEST(CompleteBipartite, BalancedIsDiameterTwoCritical) {
  for (std::size_t n = 4; n <= 11; ++n) {
    Graph g = gen_complete_bipartite(n / 2, n - n / 2);
    EXPECT_EQ(g.size(), n * n / 4);
    EXPECT_TRUE(critical(g, 2)) << n;
  }
}

TEST(Gk, Examples) {
  Graph a = gen_gk({3, 1, 2, 3});
  EXPECT_EQ(a.order(), 8U);
  EXPECT_EQ(a.size(), 10U);
  EXPECT_EQ(a.size(), (64U + 16U) / 8U);
  EXPECT_TRUE(critical(a, 3));

  Graph b = gen_gk({4, 1, 2, 2});
  EXPECT_EQ(b.order(), 9U);
  EXPECT_EQ(b.size(), 10U);
  EXPECT_TRUE(critical(b, 4));

  Graph c = gen_gk({3, 1, 1, 1});
  EXPECT_EQ(c, gen_elementary(Elementary::kPath, 4));
  EXPECT_EQ(diameter(c), 3U);
}

TEST(Gk, RejectsBadParams) {
  EXPECT_THROW(gen_gk({2, 1, 1, 1}), InvalidParams);
  EXPECT_THROW(gen_gk({3, 0, 1, 1}), InvalidParams);
  EXPECT_THROW(gen_gk({3, 1, 0, 1}), InvalidParams);
  EXPECT_THROW(gen_gk({3, 1, 1, 0}), InvalidParams);
}

TEST(Gk, SizeDiameterAndHubDistances) {
  for (std::size_t k = 3; k <= 7; ++k) {
    for (std::size_t a0 = 1; a0 <= 3; ++a0) {
      for (std::size_t a1 = 1; a1 <= 4; ++a1) {
        for (std::size_t a2 = 1; a2 <= 3; ++a2) {
          Graph g = gen_gk({k, a0, a1, a2});
          ASSERT_EQ(g.order(), a0 + a1 * (k - 1) + a2);
          ASSERT_EQ(g.size(), a1 * (k - 2) + a1 * (a0 + a2));
          ASSERT_EQ(diameter(g), k);
          auto d = all_pairs_distances(g);
          const Vertex first_right = static_cast<Vertex>(a0 + a1 * (k - 1));
          for (Vertex l = 0; l < a0; ++l) {
            for (Vertex r = first_right; r < g.order(); ++r) ASSERT_EQ(d.at(l, r), k);
          }
        }
      }
    }
  }
}

TEST(G30, Examples) {
  EXPECT_EQ(gen_g30(6).size(), 6U);
  EXPECT_EQ(gen_g30(6).size(), (36U + 12U) / 8U);
  Graph g8 = gen_g30(8);
  EXPECT_EQ(g8.size(), 10U);
  EXPECT_TRUE(critical(g8, 3));
  EXPECT_EQ(gen_g30(10).size(), 10U + 5U);
  EXPECT_THROW(gen_g30(7), InvalidParams);
  EXPECT_THROW(gen_g30(4), InvalidParams);
}

TEST(G3m, Examples) {
  Graph a = gen_g3m(8, Matching{{{0, 1}}});
  EXPECT_EQ(a.size(), 10U);
  EXPECT_TRUE(critical(a, 3));
  EXPECT_FALSE(a.has_edge({0, 1}));
  EXPECT_TRUE(a.has_edge({4, 5}));

  EXPECT_EQ(gen_g3m(6, Matching{}), gen_g30(6));

  Graph c = gen_g3m(12, Matching{{{0, 1}, {2, 3}, {4, 5}}});
  EXPECT_EQ(c.size(), 21U);
  EXPECT_TRUE(critical(c, 3));
}

TEST(G3m, RejectsBadMatchings) {
  EXPECT_THROW(gen_g3m(8, Matching{{{0, 1}, {1, 2}}}), InvalidParams);
  EXPECT_THROW(gen_g3m(8, Matching{{{0, 4}}}), InvalidParams);
  EXPECT_THROW(gen_g3m(8, Matching{{{2, 2}}}), InvalidParams);
  EXPECT_THROW(gen_g3m(9, Matching{}), InvalidParams);
}

// Distances follow the case analysis of the construction: clique pairs at 1
// or 2, cross pairs at 1 or 2, independent-side pairs at 3 unless their
// preimages are matched.
TEST(G3m, EdgeCountAndDistanceCases) {
  std::mt19937_64 rng(3);
  for (std::size_t n = 6; n <= 20; n += 2) {
    const std::size_t half = n / 2;
    for (int rep = 0; rep < 8; ++rep) {
      Matching m = random_matching(half, rng);
      Graph g = gen_g3m(n, m);
      ASSERT_EQ(g.size(), gen_g30(n).size());
      ASSERT_EQ(8 * g.size(), n * n + 2 * n);
      std::set<EdgeRef> matched;
      for (const EdgeRef& e : m.pairs) matched.insert(EdgeRef::normalized(e.u, e.v));
      auto d = all_pairs_distances(g);
      for (Vertex x = 0; x < n; ++x) {
        for (Vertex y = x + 1; y < n; ++y) {
          const Distance dxy = d.at(x, y);
          if (y < half) {
            ASSERT_TRUE(dxy == 1 || dxy == 2);
            ASSERT_EQ(dxy == 2, matched.contains({x, y}));
          } else if (x >= half) {
            const bool in_m = matched.contains({static_cast<Vertex>(x - half), static_cast<Vertex>(y - half)});
            ASSERT_EQ(dxy, in_m ? 1U : 3U);
          } else {
            ASSERT_TRUE(dxy == 1 || dxy == 2);
          }
        }
      }
    }
  }
}

TEST(A1Star, RoundsTiesDown) {
  // (n+k-2) / (2(k-1)) for k = 3 is (n+1)/4.
  EXPECT_EQ(a1_star(3, 8), 2U);   // 2.25
  EXPECT_EQ(a1_star(3, 6), 2U);   // 1.75
  EXPECT_EQ(a1_star(3, 4), 1U);   // 1.25
  EXPECT_EQ(a1_star(3, 5), 1U);   // 1.5, tie
  EXPECT_EQ(a1_star(3, 9), 2U);   // 2.5, tie
  EXPECT_EQ(a1_star(3, 10), 3U);  // 2.75
  EXPECT_EQ(a1_star(3, 1), 1U);
  EXPECT_EQ(a1_star(4, 4), 1U);
}

TEST(A1Star, ParamsForOrderHitTheOrder) {
  for (std::size_t k = 3; k <= 6; ++k) {
    for (std::size_t n = k + 1; n <= 40; ++n) {
      GkParams p;
      try {
        p = gk_params_for_order(k, n);
      } catch (const InvalidParams&) {
        continue;
      }
      EXPECT_EQ(p.a0, 1U);
      EXPECT_EQ(gen_gk(p).order(), n);
    }
  }
}

TEST(RandomMatching, IsAlwaysAMatchingInRange) {
  std::mt19937_64 rng(9);
  for (std::size_t half = 0; half <= 12; ++half) {
    for (int rep = 0; rep < 50; ++rep) {
      Matching m = random_matching(half, rng);
      std::set<Vertex> seen;
      for (const EdgeRef& e : m.pairs) {
        ASSERT_LT(e.u, half);
        ASSERT_LT(e.v, half);
        ASSERT_TRUE(seen.insert(e.u).second);
        ASSERT_TRUE(seen.insert(e.v).second);
      }
    }
  }
}

// K_4 has 10 matchings (1 empty, 6 single edges, 3 perfect). With 30000
// draws each expected count is 3000; 4 standard deviations is about 210.
TEST(RandomMatching, UniformOverAllMatchingsOfK4) {
  std::mt19937_64 rng(1234);
  std::map<std::set<EdgeRef>, int> counts;
  const int draws = 30000;
  for (int i = 0; i < draws; ++i) {
    Matching m = random_matching(4, rng);
    std::set<EdgeRef> key;
    for (const EdgeRef& e : m.pairs) key.insert(EdgeRef::normalized(e.u, e.v));
    ++counts[key];
  }
  ASSERT_EQ(counts.size(), 10U);
  for (const auto& [key, c] : counts) EXPECT_NEAR(c, draws / 10, 210);
}

TEST(ParseMatching, Grammar) {
  EXPECT_TRUE(parse_matching("").pairs.empty());
  auto m = parse_matching("0-1,2-3");
  ASSERT_EQ(m.pairs.size(), 2U);
  EXPECT_EQ(m.pairs[1], (EdgeRef{2, 3}));
  EXPECT_THROW(parse_matching("0-1,1-2"), ParseError);
  EXPECT_THROW(parse_matching("0-0"), ParseError);
  EXPECT_THROW(parse_matching("0-"), ParseError);
  EXPECT_THROW(parse_matching("a-b"), ParseError);
  EXPECT_THROW(parse_matching("0-1,,2-3"), ParseError);
}

}  // namespace
