#include <gtest/gtest.h>

#include "bellstir/errors.hpp"
#include "bellstir/partition.hpp"
#include "support.hpp"

using namespace bellstir;

TEST(Partition, CanonicalOrder) {
  const Partition p = Partition::from_cells({{3, 1}, {2}, {0}});
  EXPECT_EQ(p.to_string(), "0|1,3|2");
  EXPECT_EQ(p.cell_count(), 3);
  EXPECT_EQ(p.cell_of(3), 1);
  EXPECT_TRUE(p.is_singleton(2));
  EXPECT_EQ(p, Partition::parse("2|0|3,1"));
  EXPECT_THROW(Partition::from_cells({{0, 1}, {1}}), PreconditionError);
  EXPECT_THROW(Partition::from_cells({{0}, {}}), PreconditionError);
  EXPECT_THROW(Partition::parse("0||1"), PreconditionError);
  EXPECT_THROW(Partition::parse("0,a"), PreconditionError);
}

TEST(Partition, FromColours) {
  const std::vector<int> colour{2, 1, 2, 3};
  EXPECT_EQ(Partition::from_colours(colour).to_string(), "0,2|1|3");
}

TEST(Partition, EditOperations) {
  const Partition p = Partition::parse("0,2|1|3");
  EXPECT_EQ(p.restricted(1).to_string(), "0,2|3");
  EXPECT_EQ(p.restricted(2).to_string(), "0|1|3");
  EXPECT_EQ(p.with_vertex_moved(2, 1).to_string(), "0|1,2|3");
  EXPECT_EQ(p.with_vertex_moved(0, -1).to_string(), "0|1|2|3");
  EXPECT_EQ(p.restricted(3).with_singleton(3), p);
  const Partition q = Partition::parse("4|5,6");
  EXPECT_EQ(p.merged_with(q).to_string(), "0,2|1|3|4|5,6");
  const std::vector<Vertex> map{3, 2, 1, 0};
  EXPECT_EQ(p.relabeled(map).to_string(), "0|1,3|2");
}

TEST(Partition, IndependenceIn) {
  EXPECT_TRUE(Partition::parse("0,2|1,3").is_independent_in(path(4)));
  EXPECT_FALSE(Partition::parse("0,1|2,3").is_independent_in(path(4)));
}

TEST(Partition, AdjacencyAgreesWithRestrictionOracle) {
  for (const Graph& g : {edgeless(4), path(4), star(3), cycle(4)}) {
    const auto all = oracle::partitions(g, 1, g.order());
    std::vector<std::string> list(all.begin(), all.end());
    for (const auto& a : list) {
      for (const auto& b : list) {
        if (a == b) continue;
        const Partition p = Partition::parse(a);
        const Partition q = Partition::parse(b);
        const bool expected = oracle::adjacent(a, b, g.order());
        EXPECT_EQ(adjacent(p, q), expected) << a << " " << b;
        EXPECT_EQ(adjacent_by_restriction(p, q), expected);
        const Vertex w = adjacency_witness(p, q);
        EXPECT_EQ(w >= 0, expected);
        if (w >= 0) EXPECT_EQ(p.restricted(w), q.restricted(w));
      }
    }
  }
  EXPECT_THROW(adjacent(Partition::parse("0|1"), Partition::parse("0|1")), PreconditionError);
  EXPECT_THROW(adjacent(Partition::parse("0|1"), Partition::parse("0|1|2")), PreconditionError);
}

TEST(Partition, EnumerationMatchesBruteForce) {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : nonisomorphic_graphs(n)) {
      for (int k = 1; k <= n; ++k) {
        const auto bell = enumerate(g, k, FamilyMode::kAtMost);
        const auto expected = oracle::partitions(g, 1, k);
        std::set<std::string> got;
        for (const Partition& p : bell.members) got.insert(p.to_string());
        ASSERT_EQ(got, expected) << n << " " << k;
        EXPECT_EQ(got.size(), bell.members.size());
        EXPECT_TRUE(std::is_sorted(bell.members.begin(), bell.members.end()));
        const auto stirling = enumerate(g, k, FamilyMode::kExactly);
        EXPECT_EQ(stirling.members.size(), oracle::partitions(g, k, k).size());
        EXPECT_EQ(stirling_number_of(g, k), stirling.members.size());
        EXPECT_EQ(bell_number_of(g, k), bell.members.size());
      }
    }
  }
}

TEST(Partition, BellAndStirlingNumbersOfEdgeless) {
  const std::uint64_t bell[] = {1, 1, 2, 5, 15, 52, 203, 877};
  for (int n = 1; n <= 7; ++n) EXPECT_EQ(bell_number_of(edgeless(n), n), bell[n]) << n;
  EXPECT_EQ(stirling_number_of(edgeless(6), 3), 90u);
  EXPECT_EQ(stirling_number_of(complete(4), 4), 1u);
  EXPECT_EQ(stirling_number_of(complete(4), 3), 0u);
}

TEST(Partition, LabeledColourings) {
  const auto fam = enumerate(path(3), 3, FamilyMode::kLabeled);
  // 3 * 2 * 2 proper colourings of P_3 with 3 colours
  EXPECT_EQ(fam.colourings.size(), 12u);
  for (const Colouring& c : fam.colourings) {
    EXPECT_NE(c[0], c[1]);
    EXPECT_NE(c[1], c[2]);
    for (int x : c) EXPECT_TRUE(x >= 1 && x <= 3);
  }
  EXPECT_TRUE(std::is_sorted(fam.colourings.begin(), fam.colourings.end()));
}

TEST(Partition, EnumerationCap) {
  EXPECT_THROW(enumerate(edgeless(8), 8, FamilyMode::kAtMost, 100), CapExceeded);
}

TEST(Partition, ChromaticNumber) {
  EXPECT_EQ(chromatic_number(edgeless(4)), 1);
  EXPECT_EQ(chromatic_number(path(5)), 2);
  EXPECT_EQ(chromatic_number(cycle(5)), 3);
  EXPECT_EQ(chromatic_number(complete(5)), 5);
  EXPECT_EQ(chromatic_number(g_t(3)), 3);
}

TEST(Partition, ForEachStopsEarly) {
  int seen = 0;
  for_each_partition(edgeless(5), 1, 5, [&](const Partition&) { return ++seen < 7; });
  EXPECT_EQ(seen, 7);
}
