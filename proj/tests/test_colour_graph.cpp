#include <gtest/gtest.h>

#include "bellstir/colour_graph.hpp"
#include "bellstir/errors.hpp"
#include "support.hpp"

using namespace bellstir;

namespace {

// Edge set of the colour graph from the restriction oracle.
std::set<std::pair<std::string, std::string>> oracle_edges(const Graph& g, int lo, int hi) {
  const auto all = oracle::partitions(g, lo, hi);
  std::vector<std::string> list(all.begin(), all.end());
  std::set<std::pair<std::string, std::string>> out;
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (std::size_t j = i + 1; j < list.size(); ++j) {
      if (oracle::adjacent(list[i], list[j], g.order())) out.insert({list[i], list[j]});
    }
  }
  return out;
}

std::set<std::pair<std::string, std::string>> edges_of(const ColourGraph& cg) {
  std::set<std::pair<std::string, std::string>> out;
  for (const auto& [u, v] : cg.skeleton.edges()) {
    std::string a = cg.partition(u).to_string();
    std::string b = cg.partition(v).to_string();
    if (b < a) std::swap(a, b);
    out.insert({a, b});
  }
  return out;
}

}  // namespace

TEST(ColourGraph, EdgesMatchRestrictionOracle) {
  for (int n = 2; n <= 5; ++n) {
    for (const Graph& g : nonisomorphic_graphs(n)) {
      for (int k = 2; k <= n; ++k) {
        const ColourGraph b = build(g, k, ColourGraphKind::kBell);
        EXPECT_EQ(edges_of(b), oracle_edges(g, 1, k));
        const ColourGraph s = build(g, k, ColourGraphKind::kStirling);
        EXPECT_EQ(edges_of(s), oracle_edges(g, k, k));
      }
    }
  }
}

TEST(ColourGraph, EdgeStrategiesAgree) {
  for (const Graph& g : {path(6), star(5), cycle(6), g_t(3)}) {
    for (int k = 2; k <= 4; ++k) {
      for (ColourGraphKind kind : {ColourGraphKind::kBell, ColourGraphKind::kStirling, ColourGraphKind::kColour}) {
        const ColourGraph a = build(g, k, kind, EdgeStrategy::kAllPairs);
        const ColourGraph b = build(g, k, kind, EdgeStrategy::kBuckets);
        EXPECT_EQ(a.skeleton, b.skeleton);
      }
    }
  }
}

TEST(ColourGraph, StirlingIsInducedSubgraphOfBell) {
  const Graph g = path(5);
  const ColourGraph b = build(g, 3, ColourGraphKind::kBell);
  const ColourGraph s = build(g, 3, ColourGraphKind::kStirling);
  for (const auto& [u, v] : s.skeleton.edges()) {
    EXPECT_TRUE(b.skeleton.has_edge(b.vertex_of(s.partition(u)), b.vertex_of(s.partition(v))));
  }
  for (int i = 0; i < b.size(); ++i) {
    if (b.partition(i).cell_count() == 3) EXPECT_GE(s.vertex_of(b.partition(i)), 0);
  }
}

TEST(ColourGraph, KColourGraphAdjacency) {
  const ColourGraph c = build(path(3), 3, ColourGraphKind::kColour);
  EXPECT_EQ(c.size(), 12);
  for (const auto& [u, v] : c.skeleton.edges()) {
    int diff = 0;
    for (int i = 0; i < 3; ++i) diff += c.colouring(u)[i] != c.colouring(v)[i];
    EXPECT_EQ(diff, 1);
  }
}

TEST(ColourGraph, VerifyIsomorphismCatchesBadMaps) {
  const Graph p = path(3);
  EXPECT_TRUE(verify_isomorphism(p, p, {0, 1, 2}).ok);
  EXPECT_TRUE(verify_isomorphism(p, p, {2, 1, 0}).ok);
  EXPECT_FALSE(verify_isomorphism(p, p, {1, 0, 2}).ok);
  EXPECT_FALSE(verify_isomorphism(p, p, {0, 0, 2}).ok);
  EXPECT_FALSE(verify_isomorphism(p, complete(3), {0, 1, 2}).ok);
}

TEST(ColourGraph, TopStirlingIsLineGraphOfComplement) {
  for (int n = 2; n <= 6; ++n) {
    for (const Graph& g : nonisomorphic_graphs(n)) {
      if (is_complete(g)) {
        EXPECT_THROW(stirling_top_bijection(g), PreconditionError);
        continue;
      }
      const TopStirlingMap m = stirling_top_bijection(g);
      EXPECT_TRUE(m.certificate.ok) << m.certificate.detail;
      EXPECT_EQ(m.stirling.size(), static_cast<int>(complement(g).edge_count()));
      // components away from isolated vertices of the complement
      const Graph co = complement(g);
      int isolated = 0;
      for (Vertex v = 0; v < n; ++v) isolated += co.degree(v) == 0;
      EXPECT_EQ(oracle::connected_components(m.stirling.skeleton) + isolated, oracle::connected_components(co));
    }
  }
}

TEST(ColourGraph, UniqueColouringBijection) {
  const UniqueColouringMap a = unique_colouring_bijection(complete(2), edgeless(1), 2);
  EXPECT_TRUE(a.certificate.ok) << a.certificate.detail;
  EXPECT_EQ(a.colourings.size(), 2);
  const UniqueColouringMap b = unique_colouring_bijection(complete(3), path(3), 3);
  EXPECT_TRUE(b.certificate.ok) << b.certificate.detail;
  EXPECT_EQ(b.bell.size(), 12);
  EXPECT_THROW(unique_colouring_bijection(edgeless(2), edgeless(1), 2), PreconditionError);
  EXPECT_THROW(unique_colouring_bijection(complete(2), edgeless(1), 3), PreconditionError);
}

TEST(ColourGraph, JoinProductBijection) {
  for (int a = 1; a <= 3; ++a) {
    for (int b = 1; b <= 3; ++b) {
      for (const Graph& g : nonisomorphic_graphs(a)) {
        for (const Graph& h : nonisomorphic_graphs(b)) {
          const JoinProductMap m = join_product_bijection(g, h);
          EXPECT_TRUE(m.certificate.ok) << m.certificate.detail;
          EXPECT_EQ(m.joined.size(), m.left.size() * m.right.size());
        }
      }
    }
  }
}

TEST(ColourGraph, ConnectedAboveColouringNumber) {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : nonisomorphic_graphs(n)) {
      const ColourGraph b = build(g, colouring_number(g) + 1, ColourGraphKind::kBell);
      EXPECT_EQ(oracle::connected_components(b.skeleton), 1);
    }
  }
}

TEST(ColourGraph, LnnHasIsolatedPairsPartition) {
  for (int n = 3; n <= 4; ++n) {
    std::vector<std::vector<Vertex>> cells;
    for (int i = 0; i < n; ++i) cells.push_back({i, n + i});
    const ColourGraph b = build(l_nn(n), n, ColourGraphKind::kBell);
    const int v = b.vertex_of(Partition::from_cells(cells));
    ASSERT_GE(v, 0);
    EXPECT_EQ(b.skeleton.degree(v), 0);
    EXPECT_EQ(b.vertex_of(Partition::parse("0|1")), -1);
  }
}

TEST(ColourGraph, DescribeUsesCellNotation) {
  const ColourGraph b = build(path(3), 2, ColourGraphKind::kBell);
  ASSERT_EQ(b.size(), 1);
  EXPECT_EQ(b.describe(0), "0,2|1");
}
