#include "contractdom/graph.hpp"

#include <gtest/gtest.h>

#include <random>

#include "contractdom/generators.hpp"
#include "oracles.hpp"

namespace contractdom {
namespace {

Graph P(int n) { return named(Family::path, n); }
Graph C(int n) { return named(Family::cycle, n); }
Graph K(int n) { return named(Family::complete, n); }

TEST(VertexSetTest, BasicOperations) {
  VertexSet s{0, 2, 5};
  EXPECT_EQ(s.size(), 3);
  EXPECT_TRUE(s.contains(2));
  EXPECT_FALSE(s.contains(1));
  EXPECT_EQ(s.front(), 0);
  EXPECT_EQ(s.to_vector(), (std::vector<Vertex>{0, 2, 5}));
  EXPECT_EQ(s.to_string(), "{0, 2, 5}");
  EXPECT_EQ((s - VertexSet{0}).front(), 2);
  EXPECT_EQ(VertexSet::range(64).size(), 64);
}

TEST(VertexSetTest, LexOrderMatchesSortedLists) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    VertexSet a(rng() & 0xFFF);
    VertexSet b(rng() & 0xFFF);
    EXPECT_EQ(lex_less(a, b), a.to_vector() < b.to_vector()) << a.to_string() << " " << b.to_string();
  }
}

TEST(GraphTest, FromEdgeListBuildsSmallFamilies) {
  Graph p3 = Graph::from_edge_list(3, {{0, 1}, {1, 2}});
  EXPECT_EQ(p3, P(3));
  EXPECT_EQ(p3.edge_count(), 2);

  Graph c4 = Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  EXPECT_EQ(c4, C(4));
  for (Vertex v = 0; v < 4; ++v) EXPECT_EQ(c4.degree(v), 2);

  Graph k1 = Graph::from_edge_list(1, {});
  EXPECT_EQ(k1.order(), 1);
  EXPECT_TRUE(is_connected(k1));
}

TEST(GraphTest, FromEdgeListDeduplicates) {
  Graph g = Graph::from_edge_list(3, {{0, 1}, {1, 0}, {0, 1}, {1, 2}});
  EXPECT_EQ(g.edge_count(), 2);
  EXPECT_EQ(g, P(3));
}

TEST(GraphTest, FromEdgeListRejectsBadInput) {
  EXPECT_THROW(Graph::from_edge_list(3, {{0, 3}}), PreconditionError);
  EXPECT_THROW(Graph::from_edge_list(3, {{-1, 2}}), PreconditionError);
  EXPECT_THROW(Graph::from_edge_list(3, {{1, 1}}), PreconditionError);
  EXPECT_THROW(Graph::from_edge_list(0, {}), PreconditionError);
  EXPECT_THROW(Graph::from_edge_list(65, {}), PreconditionError);
}

TEST(ContractTest, NamedExamples) {
  EXPECT_EQ(contract_edge(K(3), Edge(0, 1)).graph, K(2));
  EXPECT_EQ(contract_edge(K(3), Edge(1, 2)).graph, K(2));
  EXPECT_EQ(contract_edge(P(4), Edge(1, 2)).graph, P(3));
  EXPECT_EQ(contract_edge(C(4), Edge(0, 1)).graph, K(3));
  EXPECT_EQ(contract_edge(C(4), Edge(3, 0)).graph, K(3));
}

TEST(ContractTest, RenameMapKeepsSmallerEndAndCompacts) {
  Contraction c = contract_edge(P(5), Edge(2, 3));
  // Edge (2,3): 3 merges into 2, 4 moves down to 3.
  EXPECT_EQ(c.rename, (std::vector<Vertex>{0, 1, 2, 2, 3}));
  EXPECT_EQ(c.graph, P(4));
}

TEST(ContractTest, RejectsNonEdges) {
  EXPECT_THROW(contract_edge(P(4), Edge(0, 2)), PreconditionError);
  EXPECT_THROW(contract_edge(P(4), Edge(0, 9)), PreconditionError);
}

TEST(ContractTest, MatchesDefinitionOnRandomGraphs) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 2 + static_cast<int>(rng() % 9);
    Graph g = oracle::random_connected(n, 0.3, rng);
    auto a = oracle::matrix(g);
    for (Edge e : g.edges()) {
      Contraction c = contract_edge(g, e);
      EXPECT_EQ(c.graph.order(), n - 1);
      EXPECT_TRUE(is_connected(c.graph));
      EXPECT_EQ(oracle::matrix(c.graph), oracle::contract(a, e.u, e.v));
    }
  }
}

TEST(DistanceTest, NamedExamples) {
  EXPECT_EQ(distances(P(4)).at(0, 3), 3);
  EXPECT_EQ(distances(C(6)).at(0, 3), 3);
  auto d = distances(K(5));
  for (Vertex x = 0; x < 5; ++x)
    for (Vertex y = 0; y < 5; ++y) EXPECT_EQ(d.at(x, y), x == y ? 0 : 1);
}

TEST(DistanceTest, UnreachablePairsAreMarked) {
  Graph g = Graph::from_edge_list(4, {{0, 1}, {2, 3}});
  auto d = distances(g);
  EXPECT_EQ(d.at(0, 2), DistanceMatrix::kUnreachable);
  EXPECT_TRUE(d.at_least(0, 2, 100));
}

TEST(DistanceTest, MetricPropertiesAndBfsAgreement) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + static_cast<int>(rng() % 12);
    Graph g = oracle::random_connected(n, 0.15, rng);
    auto d = distances(g);
    auto a = oracle::matrix(g);
    for (Vertex x = 0; x < n; ++x) {
      EXPECT_EQ(d.at(x, x), 0);
      for (Vertex y = 0; y < n; ++y) {
        EXPECT_EQ(d.at(x, y), d.at(y, x));
        EXPECT_EQ(d.at(x, y), oracle::distance(a, x, y));
        for (Vertex z = 0; z < n; ++z) EXPECT_LE(d.at(x, z), d.at(x, y) + d.at(y, z));
      }
    }
  }
}

TEST(PredicateTest, CliqueAndStable) {
  EXPECT_TRUE(is_clique(K(4), VertexSet::range(4)));
  EXPECT_FALSE(is_clique(C(4), VertexSet::range(4)));
  EXPECT_TRUE(is_stable(C(4), VertexSet{0, 2}));
  EXPECT_FALSE(is_stable(C(4), VertexSet{0, 1}));
  EXPECT_TRUE(is_clique(C(4), {}));
  EXPECT_TRUE(is_stable(C(4), {}));
  EXPECT_TRUE(is_clique(C(4), VertexSet{2}));
  EXPECT_TRUE(is_stable(C(4), VertexSet{2}));
}

TEST(PredicateTest, Connectivity) {
  EXPECT_TRUE(is_connected(P(4)));
  EXPECT_FALSE(is_connected(Graph::from_edge_list(2, {})));
  EXPECT_TRUE(is_connected(K(1)));
}

TEST(PredicateTest, Domination) {
  Graph star = named(Family::star, 5);
  EXPECT_TRUE(is_dominating(star, VertexSet{0}));
  EXPECT_FALSE(is_dominating(P(4), VertexSet{0}));
  EXPECT_TRUE(is_dominating(C(6), C(6).vertices()));
}

TEST(PredicateTest, DominationMatchesDoubleLoopOnRandomPairs) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 1000; ++trial) {
    int n = 1 + static_cast<int>(rng() % 14);
    Graph g = oracle::random_connected(n, 0.2, rng);
    VertexSet d(rng() & VertexSet::range(n).bits());
    EXPECT_EQ(is_dominating(g, d), oracle::dominates(oracle::matrix(g), d.bits()));
  }
}

TEST(EdgeListTest, ParsesCommentsAndBlankLines) {
  Graph g = parse_edge_list("# a path\n\n4 3\n0 1\n  # middle\n1 2\n\n2 3\n");
  EXPECT_EQ(g, P(4));
}

TEST(EdgeListTest, RoundTripsThroughText) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = oracle::random_connected(1 + static_cast<int>(rng() % 20), 0.2, rng);
    EXPECT_EQ(parse_edge_list(format_edge_list(g)), g);
  }
}

TEST(EdgeListTest, RejectsMalformedText) {
  EXPECT_THROW(parse_edge_list(""), ParseError);
  EXPECT_THROW(parse_edge_list("3\n"), ParseError);
  EXPECT_THROW(parse_edge_list("3 2\n0 1\n"), ParseError);
  EXPECT_THROW(parse_edge_list("3 1\n0 3\n"), ParseError);
  EXPECT_THROW(parse_edge_list("3 1\n1 1\n"), ParseError);
  EXPECT_THROW(parse_edge_list("3 1\n0 x\n"), ParseError);
  EXPECT_THROW(parse_edge_list("3 1\n0 1\n1 2\n"), ParseError);
  EXPECT_THROW(parse_edge_list("0 0\n"), ParseError);
}

}  // namespace
}  // namespace contractdom
