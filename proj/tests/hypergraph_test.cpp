#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <random>
#include <set>

#include "brute_force.hpp"
#include "dcrit/error.hpp"
#include "dcrit/families.hpp"
#include "dcrit/hypergraph.hpp"

namespace {

using namespace dcrit;
using namespace dcrit::hyper;
using criticality::AnalysisConfig;

Hypergraph3 make(std::size_t n, std::initializer_list<Triple> triples) {
  Hypergraph3 h(n);
  for (const Triple& t : triples) h.add_edge(t[0], t[1], t[2]);
  return h;
}

std::set<Triple> triples_of(const Hypergraph3& h) {
  std::set<Triple> out;
  for (const HyperEdge& e : h.edges()) out.insert(e.vertices);
  return out;
}

Hypergraph3 random_hypergraph(std::size_t n, std::size_t m, std::mt19937_64& rng) {
  Hypergraph3 h(n);
  std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
  for (std::size_t tries = 0; h.size() < m && tries < 20 * m; ++tries) {
    const Vertex a = pick(rng), b = pick(rng), c = pick(rng);
    if (a == b || b == c || a == c) continue;
    const Triple t = make_triple(a, b, c);
    if (!h.contains(t)) h.add_edge(a, b, c);
  }
  return h;
}

// Triangles straight from the definition, over all edge triples.
std::size_t brute_triangles(const Hypergraph3& h) {
  const auto& e = h.edges();
  std::size_t count = 0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (std::size_t j = i + 1; j < e.size(); ++j) {
      for (std::size_t k = j + 1; k < e.size(); ++k) {
        if (intersection_size(e[i].vertices, e[j].vertices) != 1) continue;
        if (intersection_size(e[j].vertices, e[k].vertices) != 1) continue;
        if (intersection_size(e[i].vertices, e[k].vertices) != 1) continue;
        std::set<Vertex> all;
        for (const auto* t : {&e[i].vertices, &e[j].vertices, &e[k].vertices}) all.insert(t->begin(), t->end());
        if (all.size() == 6) ++count;
      }
    }
  }
  return count;
}

bool rainbow(const Hypergraph3& h, const Triple& t) {
  std::set<Part> parts{h.part(t[0]), h.part(t[1]), h.part(t[2])};
  return parts.size() == 3 && !parts.contains(Part::kUnassigned);
}

AnalysisConfig cfg(std::size_t k, std::size_t t) {
  AnalysisConfig c;
  c.k = k;
  c.t = t;
  return c;
}

TEST(Hypergraph3, AddEdgeValidation) {
  Hypergraph3 h(5);
  h.add_edge(2, 0, 1);
  EXPECT_EQ(h.edges()[0].vertices, (Triple{0, 1, 2}));
  EXPECT_THROW(h.add_edge(0, 1, 2), InvalidEdge);
  EXPECT_THROW(h.add_edge(0, 0, 3), InvalidEdge);
  EXPECT_THROW(h.add_edge(0, 1, 5), InvalidVertex);
  EXPECT_THROW(h.add_edge(HyperEdge{{0, 3, 4}, 1, std::nullopt}), InvalidEdge);
  EXPECT_THROW(h.add_edge(HyperEdge{{0, 3, 4}, 3, 3}), InvalidEdge);
  h.add_edge(HyperEdge{{0, 3, 4}, 3, 0});
  EXPECT_EQ(h.size(), 2U);
}

TEST(IsLinear, Examples) {
  EXPECT_TRUE(is_linear(make(6, {{1, 2, 3}, {1, 4, 5}})));
  EXPECT_FALSE(is_linear(make(6, {{1, 2, 3}, {1, 2, 4}})));
  EXPECT_TRUE(is_linear(Hypergraph3(3)));
}

TEST(FindTriangles, Examples) {
  auto tri = find_triangles(make(7, {{1, 2, 3}, {3, 4, 5}, {5, 6, 1}}));
  ASSERT_EQ(tri.size(), 1U);
  EXPECT_EQ(tri[0], (std::array<std::size_t, 3>{0, 1, 2}));
  EXPECT_TRUE(find_triangles(make(8, {{1, 2, 3}, {1, 4, 5}, {1, 6, 7}})).empty());
  EXPECT_TRUE(find_triangles(make(7, {{1, 2, 3}, {4, 5, 6}})).empty());
  EXPECT_THROW(find_triangles(make(5, {{1, 2, 3}, {1, 2, 4}})), NonLinearInput);
}

TEST(FindTriangles, MatchesDefinitionOnRandomLinearHypergraphs) {
  std::mt19937_64 rng(4);
  for (int rep = 0; rep < 300; ++rep) {
    const std::size_t n = 6 + rng() % 10;
    Hypergraph3 h = linearize(random_hypergraph(n, 3 + rng() % 25, rng));
    ASSERT_EQ(find_triangles(h).size(), brute_triangles(h));
    ASSERT_EQ(is_triangle_free(h), brute_triangles(h) == 0);
  }
}

TEST(Linearize, Examples) {
  Hypergraph3 fan = make(6, {{1, 2, 3}, {1, 2, 4}, {1, 2, 5}});
  EXPECT_EQ(triples_of(linearize(fan)), (std::set<Triple>{{1, 2, 3}}));
  auto stats = linearize_with_stats(fan);
  EXPECT_EQ(stats.max_deletions(), 2U);

  Hypergraph3 lin = make(8, {{1, 2, 3}, {3, 4, 5}, {5, 6, 7}});
  EXPECT_EQ(triples_of(linearize(lin)), triples_of(lin));
  EXPECT_EQ(linearize(Hypergraph3(4)).size(), 0U);
}

TEST(Linearize, OutputIsLinearSubsetOnRandomInputs) {
  std::mt19937_64 rng(6);
  for (int rep = 0; rep < 400; ++rep) {
    const std::size_t n = 4 + rng() % 12;
    Hypergraph3 h = random_hypergraph(n, 1 + rng() % 40, rng);
    Hypergraph3 out = linearize(h);
    ASSERT_TRUE(is_linear(out));
    auto in = triples_of(h);
    for (const Triple& t : triples_of(out)) ASSERT_TRUE(in.contains(t));
    // Every removed edge met some kept edge in two vertices.
    for (const Triple& t : in) {
      if (out.contains(t)) continue;
      bool covered = false;
      for (const HyperEdge& e : out.edges()) covered = covered || intersection_size(e.vertices, t) == 2;
      ASSERT_TRUE(covered);
    }
  }
}

TEST(Extract3Partite, Examples) {
  Hypergraph3 one = extract_3partite(make(4, {{1, 2, 3}}));
  EXPECT_EQ(one.size(), 1U);
  EXPECT_EQ(extract_3partite(Hypergraph3(5)).size(), 0U);

  Hypergraph3 nine(27);
  for (Vertex b = 0; b < 27; b += 3) nine.add_edge(b, b + 1, b + 2);
  Hypergraph3 out = extract_3partite(nine);
  EXPECT_GE(out.size(), 2U);
  // In id order each edge's first vertex sees a tie (lowest part), the second
  // avoids it and the third takes the remaining part, so nothing is lost.
  EXPECT_EQ(out.size(), 9U);
}

TEST(Extract3Partite, GuaranteeOnRandomInputs) {
  std::mt19937_64 rng(10);
  for (int rep = 0; rep < 400; ++rep) {
    const std::size_t n = 3 + rng() % 15;
    Hypergraph3 h = random_hypergraph(n, rng() % 60, rng);
    Hypergraph3 out = extract_3partite(h);
    ASSERT_GE(9 * out.size(), 2 * h.size());
    ASSERT_TRUE(out.has_parts());
    auto in = triples_of(h);
    std::size_t rainbow_in = 0;
    for (const HyperEdge& e : h.edges()) rainbow_in += rainbow(out, e.vertices) ? 1 : 0;
    ASSERT_EQ(out.size(), rainbow_in);
    for (const HyperEdge& e : out.edges()) {
      ASSERT_TRUE(in.contains(e.vertices));
      ASSERT_TRUE(rainbow(out, e.vertices));
    }
  }
}

TEST(BuildH1, CycleOnFive) {
  Graph c5 = families::gen_elementary(families::Elementary::kCycle, 5);
  criticality::CriticalityAnalysis a(c5, 2);
  H1Result r = build_h1(a, cfg(2, 4), 2);
  EXPECT_EQ(r.h.size(), 5U);
  EXPECT_EQ(r.path_count, 5U);
  EXPECT_EQ(r.dropped_paths, 0U);
  bool found = false;
  for (const HyperEdge& e : r.h.edges()) {
    if (e.vertices == Triple{0, 1, 4}) {
      found = true;
      EXPECT_EQ(e.handle, 1U);
      EXPECT_EQ(e.center, 0U);
    }
    ASSERT_TRUE(e.handle.has_value());
    ASSERT_TRUE(e.center.has_value());
  }
  EXPECT_TRUE(found);
}

TEST(BuildH1, EmptyCases) {
  EXPECT_EQ(build_h1(families::gen_complete_bipartite(2, 3), cfg(2, 2), 2).size(), 0U);
  EXPECT_EQ(build_h1(families::gen_elementary(families::Elementary::kCycle, 6), cfg(3, 7), 3).size(), 0U);
}

TEST(BuildH1, OneTriplePerKeptPath) {
  std::mt19937_64 rng(12);
  for (int rep = 0; rep < 60; ++rep) {
    const std::size_t n = 6 + rng() % 8;
    Graph g = build_graph(n, oracle::random_edges(n, 0.3, rng()));
    const std::size_t k = 2 + rng() % 3;
    criticality::CriticalityAnalysis a(g, k);
    for (std::size_t i = 2; i <= k; ++i) {
      H1Result r = build_h1(a, cfg(k, 4), i);
      ASSERT_EQ(r.h.size() + r.dropped_paths, r.path_count);
      // A triple holds exactly one pair at distance i, so it names its path.
      ASSERT_EQ(r.alternate_triples, 0U);
      ASSERT_EQ(r.dropped_paths, 0U);
      for (const HyperEdge& e : r.h.edges()) {
        ASSERT_TRUE(g.adjacent(*e.handle, *e.center));
      }
    }
  }
}

TEST(Pipeline, CycleOnFive) {
  PipelineReport r = pipeline(families::gen_elementary(families::Elementary::kCycle, 5), cfg(2, 4), 2);
  EXPECT_EQ(r.h1, 5U);
  // Lexicographic pass: {0,1,2} removes {0,1,4} and {1,2,3}; {0,3,4} removes
  // {2,3,4}.
  EXPECT_EQ(r.h2, 2U);
  EXPECT_TRUE(r.h2_linear);
  EXPECT_TRUE(r.h4_triangle_free);
  EXPECT_TRUE(r.all_ok());
  EXPECT_GE(r.h2, r.h3);
  EXPECT_GE(r.h3, r.h4);
}

TEST(Pipeline, G30OnTen) {
  PipelineReport r = pipeline(families::gen_g30(10), cfg(3, 3), 3);
  EXPECT_TRUE(r.h2_ratio_ok);
  EXPECT_TRUE(r.h3_ratio_ok);
  EXPECT_TRUE(r.h4_ratio_ok);
  EXPECT_TRUE(r.h4_triangle_free);
}

TEST(Pipeline, EmptyPathSet) {
  PipelineReport r = pipeline(families::gen_complete_bipartite(2, 3), cfg(2, 2), 2);
  EXPECT_EQ(r.h1 + r.h2 + r.h3 + r.h4, 0U);
  EXPECT_TRUE(r.all_ok());
}

TEST(Pipeline, StagesShrinkAndFlagsHoldOnRandomGraphs) {
  std::mt19937_64 rng(15);
  for (int rep = 0; rep < 80; ++rep) {
    const std::size_t n = 6 + rng() % 10;
    Graph g = build_graph(n, oracle::random_edges(n, 0.15 + 0.3 * (rng() % 10) / 10.0, rng()));
    const std::size_t k = 2 + rng() % 3;
    criticality::CriticalityAnalysis a(g, k);
    for (std::size_t t : {2U, 3U, 6U}) {
      for (std::size_t i = 2; i <= k; ++i) {
        PipelineStages s = run_pipeline(a, cfg(k, t), i);
        const PipelineReport& r = s.report;
        ASSERT_EQ(r.h1, s.h1.size());
        ASSERT_EQ(r.h4, s.h4.size());
        ASSERT_GE(r.h1, r.h2);
        ASSERT_GE(r.h2, r.h3);
        ASSERT_GE(r.h3, r.h4);
        ASSERT_TRUE(is_linear(s.h2));
        ASSERT_EQ(brute_triangles(s.h4), 0U);
        ASSERT_TRUE(r.all_ok()) << to_json(r).dump();
        ASSERT_EQ(r.dropped_paths, 0U);
        for (const HyperEdge& e : s.h4.edges()) {
          ASSERT_EQ(s.h4.part(*e.handle), r.handle_part);
          ASSERT_EQ(s.h4.part(*e.center), r.center_part);
        }
      }
    }
  }
}

TEST(Rsz, SmallValues) {
  EXPECT_EQ(rsz_exhaustive(3).value, 1U);
  EXPECT_EQ(rsz_exhaustive(4).value, 1U);
  EXPECT_EQ(rsz_exhaustive(5).value, 2U);
  EXPECT_EQ(rsz_exhaustive(6).value, 2U);
  EXPECT_EQ(rsz_exhaustive(0).value, 0U);
  EXPECT_EQ(rsz_exhaustive(2).value, 0U);
  EXPECT_THROW(rsz_exhaustive(8), TooLarge);
}

TEST(Rsz, MatchesNaiveSubsetSearch) {
  for (std::size_t n = 0; n <= 6; ++n) EXPECT_EQ(rsz_exhaustive(n).value, oracle::naive_rsz(n)) << n;
}

TEST(Rsz, MonotoneWithValidWitnesses) {
  std::size_t prev = 0;
  for (std::size_t n = 0; n <= 7; ++n) {
    RszResult r = rsz_exhaustive(n);
    EXPECT_GE(r.value, prev);
    prev = r.value;
    EXPECT_EQ(r.witness.size(), r.value);
    EXPECT_TRUE(is_linear(r.witness));
    EXPECT_EQ(brute_triangles(r.witness), 0U);
  }
}

TEST(HypergraphIo, TextRoundTrip) {
  Hypergraph3 h = make(6, {{0, 1, 2}, {2, 3, 4}});
  EXPECT_EQ(to_text(h), "6 2\n0 1 2\n2 3 4\n");
  EXPECT_EQ(triples_of(parse_text(to_text(h))), triples_of(h));
  EXPECT_THROW(parse_text("6 2\n0 1 2\n"), ParseError);
  EXPECT_THROW(parse_text("3 1\n0 1 1\n"), ParseError);
  EXPECT_THROW(parse_text(""), ParseError);
}

TEST(HypergraphIo, SidecarCarriesAnnotations) {
  Graph c5 = families::gen_elementary(families::Elementary::kCycle, 5);
  criticality::CriticalityAnalysis a(c5, 2);
  PipelineStages s = run_pipeline(a, cfg(2, 4), 2);
  const auto dir = std::filesystem::temp_directory_path() / "dcrit_hyper_io_test";
  std::filesystem::create_directories(dir);
  write_hypergraph(dir / "h4.txt", s.h4);
  ASSERT_TRUE(std::filesystem::exists(dir / "h4.txt.json"));
  Hypergraph3 back = read_hypergraph(dir / "h4.txt");
  ASSERT_EQ(back.size(), s.h4.size());
  for (std::size_t e = 0; e < back.size(); ++e) {
    EXPECT_EQ(back.edges()[e].handle, s.h4.edges()[e].handle);
    EXPECT_EQ(back.edges()[e].center, s.h4.edges()[e].center);
  }
  EXPECT_EQ(back.parts(), s.h4.parts());

  write_hypergraph(dir / "plain.txt", make(4, {{0, 1, 2}}));
  EXPECT_FALSE(std::filesystem::exists(dir / "plain.txt.json"));
  std::filesystem::remove_all(dir);
}

}  // namespace
