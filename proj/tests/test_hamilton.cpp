#include <gtest/gtest.h>

#include <cstdlib>

#include "bellstir/errors.hpp"
#include "bellstir/hamilton.hpp"
#include "support.hpp"

using namespace bellstir;

namespace {

Graph petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

}  // namespace

TEST(Oracle, CycleSearchAgreesWithPermutations) {
  for (int n = 3; n <= 6; ++n) {
    for (const Graph& g : nonisomorphic_graphs(n)) {
      const SearchResult r = find_hamilton_cycle(g);
      ASSERT_NE(r.status, SearchStatus::kInconclusive);
      EXPECT_EQ(r.found(), oracle::hamiltonian(g)) << n;
      if (r.found()) EXPECT_TRUE(validate_cycle(g, r.sequence).ok);
    }
  }
}

TEST(Oracle, PathSearchAgreesWithPermutations) {
  for (int n = 2; n <= 6; ++n) {
    for (const Graph& g : nonisomorphic_graphs(n)) {
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
          const SearchResult r = find_hamilton_path(g, u, v);
          EXPECT_EQ(r.found(), oracle::has_path(g, u, v));
          if (r.found()) EXPECT_TRUE(validate_path(g, r.sequence, u, v).ok);
        }
      }
    }
  }
}

TEST(Oracle, Petersen) {
  const SearchResult r = find_hamilton_cycle(petersen());
  EXPECT_EQ(r.status, SearchStatus::kAbsent);
  EXPECT_TRUE(find_hamilton_path(petersen(), 0, 2).found());
}

TEST(Oracle, ForcedEdge) {
  SearchOptions opts;
  opts.forced_edge = Edge{0, 1};
  const SearchResult r = find_hamilton_cycle(cycle(6), opts);
  ASSERT_TRUE(r.found());
  opts.forced_edge = Edge{0, 3};
  EXPECT_THROW(find_hamilton_cycle(cycle(6), opts), PreconditionError);
}

TEST(Oracle, StructuralShortcuts) {
  EXPECT_EQ(find_hamilton_cycle(star(4)).status, SearchStatus::kAbsent);
  const SearchResult b = find_hamilton_cycle(join(edgeless(2), edgeless(3)));
  EXPECT_EQ(b.status, SearchStatus::kAbsent);
  EXPECT_FALSE(b.reason.empty());
  EXPECT_EQ(find_hamilton_path(path(4), 0, 2).status, SearchStatus::kAbsent);
}

TEST(Oracle, BudgetIsInconclusiveNotAbsent) {
  SearchOptions opts;
  opts.budget = 3;
  const SearchResult r = find_hamilton_cycle(petersen(), opts);
  EXPECT_EQ(r.status, SearchStatus::kInconclusive);
}

TEST(Oracle, BudgetFromEnvironment) {
  ::setenv("BELLSTIR_BUDGET", "1234", 1);
  EXPECT_EQ(default_search_budget(), 1234u);
  ::setenv("BELLSTIR_BUDGET", "junk", 1);
  EXPECT_EQ(default_search_budget(), kDefaultSearchBudget);
  ::unsetenv("BELLSTIR_BUDGET");
  EXPECT_EQ(default_search_budget(), kDefaultSearchBudget);
}

TEST(Validation, Witnesses) {
  const Graph c = cycle(5);
  const std::vector<Vertex> good{0, 1, 2, 3, 4};
  EXPECT_TRUE(validate_cycle(c, good).ok);
  const std::vector<Vertex> repeat{0, 1, 2, 3, 3};
  EXPECT_NE(validate_cycle(c, repeat).witness.find("repeated"), std::string::npos);
  const std::vector<Vertex> missing{0, 1, 2, 3};
  EXPECT_NE(validate_cycle(c, missing).witness.find("missing"), std::string::npos);
  const std::vector<Vertex> jump{0, 2, 1, 3, 4};
  EXPECT_NE(validate_cycle(c, jump).witness.find("non-edge"), std::string::npos);
  const Graph p = path(4);
  const std::vector<Vertex> open{0, 1, 2, 3};
  EXPECT_FALSE(validate_cycle(p, open).ok);
  EXPECT_TRUE(validate_path(p, open, 0, 3).ok);
  EXPECT_FALSE(validate_path(p, open, 3, 0).ok);
}

TEST(Bipartition, PartsAndOddCycles) {
  const auto parts = bipartition(path(5));
  ASSERT_TRUE(parts);
  EXPECT_EQ(parts->first, (std::vector<Vertex>{0, 2, 4}));
  EXPECT_FALSE(bipartition(cycle(5)));
}

TEST(ParityGap, ClosedForm) {
  for (int t = 1; t <= 12; ++t) {
    for (int l = 0; l <= t; ++l) {
      const std::int64_t sign = l % 2 == 0 ? 1 : -1;
      EXPECT_EQ(parity_gap(t, l), sign * binomial(t - 1, l)) << t << " " << l;
    }
  }
  EXPECT_THROW(parity_gap(3, 4), PreconditionError);
  EXPECT_EQ(binomial(10, 3), 120);
  EXPECT_EQ(binomial(4, 5), 0);
}
