#include "contractdom/structure.hpp"

#include <gtest/gtest.h>

#include <random>

#include "contractdom/generators.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

namespace contractdom {
namespace {

Graph P(int n) { return named(Family::path, n); }
Graph C(int n) { return named(Family::cycle, n); }
Graph K(int n) { return named(Family::complete, n); }

TEST(PatternSpecTest, Names) {
  EXPECT_EQ(PatternSpec::p3_plus_p2(0).name(), "P3");
  EXPECT_EQ(PatternSpec::p3_plus_p2(1).name(), "P3+P2");
  EXPECT_EQ(PatternSpec::p3_plus_p2(2).name(), "P3+2P2");
  EXPECT_EQ(PatternSpec::p3_plus_p2(2).vertex_count(), 7);
  EXPECT_EQ(PatternSpec::linear_forest({1, 4, 2}).name(), "P4+P2+P1");
  EXPECT_THROW(PatternSpec::p3_plus_p2(-1), PreconditionError);
  EXPECT_THROW(PatternSpec::linear_forest({}), PreconditionError);
}

TEST(FindInducedTest, NamedExamples) {
  EXPECT_EQ(find_induced(C(6), PatternSpec::p3_plus_p2(0)), (VertexSet{0, 1, 2}));
  EXPECT_FALSE(find_induced(C(6), PatternSpec::p3_plus_p2(1)));
  EXPECT_FALSE(oracle::contains_p3_plus_p2s(oracle::matrix(C(6)), 1));

  // P7: the path 0-1-2 and the edge 4-5 (vertex 3 separates them).
  auto p7 = find_induced(P(7), PatternSpec::p3_plus_p2(1));
  ASSERT_TRUE(p7);
  EXPECT_EQ(*p7, (VertexSet{0, 1, 2, 4, 5}));
  EXPECT_TRUE(oracle::induces_p3_plus_p2s(oracle::matrix(P(7)), p7->to_vector(), 1));
}

TEST(FindInducedTest, IsFreeExamples) {
  for (int n = 1; n <= 8; ++n) EXPECT_TRUE(is_free(K(n), PatternSpec::p3_plus_p2(0)));
  EXPECT_TRUE(is_free(C(6), PatternSpec::p3_plus_p2(1)));
  EXPECT_FALSE(is_free(P(7), PatternSpec::p3_plus_p2(1)));
  EXPECT_TRUE(is_free(P(7), PatternSpec::p3_plus_p2(2)));
  EXPECT_FALSE(is_free(P(11), PatternSpec::p3_plus_p2(2)));
}

TEST(FindInducedTest, GeneralLinearForests) {
  EXPECT_TRUE(find_induced(P(4), PatternSpec::linear_forest({4})));
  EXPECT_FALSE(find_induced(C(4), PatternSpec::linear_forest({4})));
  EXPECT_TRUE(find_induced(C(6), PatternSpec::linear_forest({5})));
  EXPECT_FALSE(find_induced(C(6), PatternSpec::linear_forest({6})));
  EXPECT_TRUE(find_induced(P(6), PatternSpec::linear_forest({1, 1, 1})));
  EXPECT_FALSE(find_induced(P(4), PatternSpec::linear_forest({1, 1, 1})));
  auto hit = find_induced(P(9), PatternSpec::linear_forest({4, 4}));
  ASSERT_TRUE(hit);
  EXPECT_TRUE(induces(P(9), *hit, PatternSpec::linear_forest({4, 4})));
}

TEST(FindInducedTest, AgreesWithBlindSubsetScan) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 600; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 8);
    Graph g = oracle::random_connected(n, 0.1 + 0.1 * (trial % 6), rng);
    auto a = oracle::matrix(g);
    for (int j = 0; j <= 2; ++j) {
      auto hit = find_induced(g, PatternSpec::p3_plus_p2(j));
      ASSERT_EQ(hit.has_value(), oracle::contains_p3_plus_p2s(a, j)) << format_edge_list(g) << " j=" << j;
      if (hit) EXPECT_TRUE(oracle::induces_p3_plus_p2s(a, hit->to_vector(), j));
    }
  }
}

TEST(FindInducedTest, ReturnsLexicographicallyFirstRootTriple) {
  // The P3 component is the first induced P3 in sorted-triple order that
  // extends to a full copy.
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = oracle::random_connected(4 + static_cast<int>(rng() % 5), 0.3, rng);
    auto a = oracle::matrix(g);
    auto hit = find_induced(g, PatternSpec::p3_plus_p2(0));
    std::optional<VertexSet> first;
    const int n = g.order();
    for (int x = 0; x < n && !first; ++x)
      for (int y = x + 1; y < n && !first; ++y)
        for (int z = y + 1; z < n && !first; ++z)
          if (a[x][y] + a[x][z] + a[y][z] == 2) first = VertexSet{x, y, z};
    EXPECT_EQ(hit, first);
  }
}

TEST(PartitionTest, NamedExamples) {
  Graph star = named(Family::star, 4);
  Partition s = partition_abc(star, VertexSet{1, 0, 2});
  EXPECT_EQ(s.b, (VertexSet{3}));
  EXPECT_TRUE(s.c.empty());

  Partition c6 = partition_abc(C(6), VertexSet{0, 1, 2});
  EXPECT_EQ(c6.b, (VertexSet{3, 5}));
  EXPECT_EQ(c6.c, (VertexSet{4}));

  Partition p3 = partition_abc(P(3), P(3).vertices());
  EXPECT_TRUE(p3.b.empty());
  EXPECT_TRUE(p3.c.empty());
}

TEST(PartitionTest, DistanceThreeIsAStructuralViolation) {
  EXPECT_THROW(partition_abc(P(7), VertexSet{0, 1, 2}), StructuralViolation);
  EXPECT_THROW(analyse(P(7), 1), StructuralViolation);
}

TEST(CliqueNeighbourhoodTest, NamedExamples) {
  EXPECT_TRUE(clique_neighbourhood_set(C(6), VertexSet{4}).empty());
  EXPECT_EQ(clique_neighbourhood_set(P(5), VertexSet{4}), (VertexSet{4}));
  EXPECT_TRUE(clique_neighbourhood_set(C(6), {}).empty());
}

TEST(RegularVerticesTest, SmallDiameterHasNone) {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = oracle::random_connected(3 + static_cast<int>(rng() % 8), 0.5, rng);
    auto d = distances(g);
    int diameter = 0;
    for (Vertex x = 0; x < g.order(); ++x)
      for (Vertex y = 0; y < g.order(); ++y) diameter = std::max(diameter, d.at(x, y));
    if (diameter > 3) continue;
    for (int k = 1; k <= 3; ++k) EXPECT_TRUE(regular_vertices(d, g.vertices(), k).empty());
  }
  EXPECT_TRUE(analyse(C(6), 1).regular.empty());
  EXPECT_TRUE(analyse(C(6), 1).clique_c.empty());
}

TEST(RegularVerticesTest, SpiderFixture) {
  const Graph g = fixtures::spider();
  auto ctx = analyse(g, 1);
  EXPECT_EQ(ctx.a, (VertexSet{0, 1, 2}));
  EXPECT_EQ(ctx.b, (VertexSet{3, 5}));
  EXPECT_EQ(ctx.c, (VertexSet{4, 6}));
  EXPECT_EQ(ctx.clique_c, (VertexSet{4, 6}));
  EXPECT_EQ(ctx.regular, (VertexSet{4, 6}));
  EXPECT_EQ(ctx.f_k, 20);
}

TEST(RegularVerticesTest, PathWithSpacedPool) {
  auto d = distances(P(13));
  // 0, 4, 8, 12 are pairwise >= 4 apart; 1 is too close to 0 and 4.
  VertexSet pool{0, 1, 4, 8, 12};
  EXPECT_EQ(regular_vertices(d, pool, 3), (VertexSet{0, 4, 8, 12}));
  EXPECT_EQ(regular_vertices(d, pool, 2), (VertexSet{0, 1, 4, 8, 12}));
  EXPECT_TRUE(regular_vertices(d, pool, 4).empty());
}

TEST(RegularVerticesTest, MembershipNeedsAFullTuple) {
  auto d = distances(P(16));
  // 0 and 3 are too close, yet each completes a 4-tuple with 7, 11, 15.
  VertexSet pool{0, 3, 7, 11, 15};
  EXPECT_EQ(regular_vertices(d, pool, 3), pool);
  // Far pairs: 0-5, 0-9, 2-9, 5-9. Only {0, 5, 9} is a triangle.
  EXPECT_EQ(regular_vertices(d, VertexSet{0, 2, 5, 9}, 2), (VertexSet{0, 5, 9}));
  EXPECT_EQ(regular_vertices(d, VertexSet{0, 2, 5, 9}, 1), (VertexSet{0, 2, 5, 9}));
}

TEST(RegularVerticesTest, FirstGeneratedFixture) {
  InstanceStream stream(fixtures::first_regular_spec());
  std::optional<Instance> found;
  while (auto inst = stream.next()) {
    if (!find_induced(inst->graph, PatternSpec::p3_plus_p2(0))) continue;
    if (!analyse(inst->graph, 1).regular.empty()) {
      found = inst;
      break;
    }
  }
  ASSERT_TRUE(found);
  EXPECT_EQ(found->index, 1);
  EXPECT_EQ(found->graph, fixtures::first_regular());
  auto ctx = analyse(found->graph, 1);
  EXPECT_EQ(ctx.a, (VertexSet{0, 1, 6}));
  EXPECT_EQ(ctx.regular, (VertexSet{2, 5}));
  auto d = distances(found->graph);
  EXPECT_GE(d.at(2, 5), 4);
}

TEST(FBoundTest, FormulaValues) {
  EXPECT_EQ(f_bound(1, 3), 20);
  EXPECT_EQ(f_bound(2, 5), 46);
  // 2(7 + 16) + 5·7 + 3 - 4
  EXPECT_EQ(f_bound(3, 7), 80);
}

TEST(StructureInvariants, PartitionAndStableCOnFreeGraphs) {
  int checked = 0;
  for (int k = 1; k <= 2; ++k) {
    GeneratorSpec spec;
    spec.kind = GeneratorKind::random_free;
    spec.n = 11;
    spec.n_min = 5;
    spec.p = 0.3;
    spec.p_max = 0.9;
    spec.k = k;
    spec.seed = 1000 + k;
    spec.count = 150;
    InstanceStream stream(spec);
    while (auto inst = stream.next()) {
      const Graph& g = inst->graph;
      if (!find_induced(g, PatternSpec::p3_plus_p2(k - 1))) continue;
      auto ctx = analyse(g, k);
      EXPECT_EQ(ctx.a.size(), 3 + 2 * (k - 1));
      EXPECT_TRUE(induces(g, ctx.a, PatternSpec::p3_plus_p2(k - 1)));
      EXPECT_EQ(ctx.a | ctx.b | ctx.c, g.vertices());
      EXPECT_FALSE(ctx.a.intersects(ctx.b) || ctx.a.intersects(ctx.c) || ctx.b.intersects(ctx.c));
      EXPECT_TRUE(is_stable(g, ctx.c));
      EXPECT_TRUE(ctx.regular.is_subset_of(ctx.clique_c));
      EXPECT_TRUE(ctx.clique_c.is_subset_of(ctx.c));
      ++checked;
    }
  }
  EXPECT_GT(checked, 200);
}

}  // namespace
}  // namespace contractdom
