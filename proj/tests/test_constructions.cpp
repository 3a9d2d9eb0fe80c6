#include <gtest/gtest.h>

#include "bellstir/constructions.hpp"
#include "bellstir/errors.hpp"
#include "support.hpp"

using namespace bellstir;

namespace {

// Independent certificate check: members from the brute-force oracle,
// adjacency by restriction.
void expect_hamiltonian_listing(const DecoratedCycle& c, int lo, int hi) {
  const auto members = oracle::partitions(c.base, lo, hi);
  ASSERT_EQ(c.sequence.size(), members.size());
  std::set<std::string> seen;
  for (const Partition& p : c.sequence) {
    const std::string s = p.to_string();
    EXPECT_TRUE(members.count(s)) << s;
    EXPECT_TRUE(seen.insert(s).second) << "repeated " << s;
  }
  const std::size_t m = c.sequence.size();
  const std::size_t steps = c.kind == CycleKind::kCycle ? m : m - 1;
  for (std::size_t i = 0; i < steps; ++i) {
    const std::string a = c.sequence[i].to_string();
    const std::string b = c.sequence[(i + 1) % m].to_string();
    EXPECT_TRUE(oracle::adjacent(a, b, c.base.order())) << a << " / " << b;
  }
}

}  // namespace

TEST(Hypercube, GrayCycle) {
  for (int m = 2; m <= 6; ++m) {
    const auto code = gray_cycle(m);
    ASSERT_EQ(code.size(), std::size_t{1} << m);
    EXPECT_EQ(code.front().value(), 0u);
    for (std::size_t i = 0; i < code.size(); ++i) {
      EXPECT_EQ(code[i].hamming_distance(code[(i + 1) % code.size()]), 1);
    }
  }
  EXPECT_THROW(gray_cycle(1), PreconditionError);
}

TEST(Hypercube, PathsBetweenAllOppositeParityPairs) {
  for (int m = 1; m <= 4; ++m) {
    const Graph q = hypercube(m);
    for (std::uint32_t a = 0; a < (1U << m); ++a) {
      for (std::uint32_t b = 0; b < (1U << m); ++b) {
        const BinarySeq x(a, m), y(b, m);
        if (x.odd() == y.odd()) {
          EXPECT_THROW(hypercube_path(x, y), PreconditionError);
          continue;
        }
        std::vector<Vertex> p;
        for (const BinarySeq& w : hypercube_path(x, y)) p.push_back(static_cast<Vertex>(w.value()));
        EXPECT_TRUE(validate_path(q, p, a, b).ok);
      }
    }
  }
}

TEST(Rook, HamiltonPathsBetweenAllPairs) {
  for (int r = 2; r <= 4; ++r) {
    for (int s = 2; s <= 4; ++s) {
      if (r == 2 && s == 2) {
        EXPECT_THROW(rook_hamilton_path(2, 2, 0, 1), PreconditionError);
        continue;
      }
      const Graph g = cartesian_product(complete(r), complete(s));
      for (Vertex u = 0; u < r * s; ++u) {
        for (Vertex v = 0; v < r * s; ++v) {
          if (u == v) continue;
          EXPECT_TRUE(validate_path(g, rook_hamilton_path(r, s, u, v), u, v).ok) << r << "x" << s << " " << u << "->" << v;
        }
      }
    }
  }
}

TEST(Rook, PlusPathsFromTheClone) {
  for (int r = 1; r <= 4; ++r) {
    for (int s = 1; s <= 4; ++s) {
      const RookPlus rp = rook_plus(r, s);
      for (Vertex t = 0; t < r * s; ++t) {
        EXPECT_TRUE(validate_path(rp.graph, rook_plus_path(r, s, t), rp.clone, t).ok) << r << "x" << s << " " << t;
      }
      EXPECT_THROW(rook_plus_path(r, s, r * s), PreconditionError);
    }
  }
}

TEST(Stars, OddStarsHaveStirlingCycles) {
  for (int n : {3, 5, 7}) {
    const DecoratedCycle c = star_s3_cycle(n);
    EXPECT_EQ(c.size(), (std::size_t{1} << (n - 1)) - 1);
    expect_hamiltonian_listing(c, 3, 3);
  }
  EXPECT_THROW(star_s3_cycle(4), PreconditionError);
}

TEST(Stars, BellThreeCyclesAvoidForbiddenLeaf) {
  for (int n = 3; n <= 6; ++n) {
    for (Vertex f = 0; f <= n; ++f) {
      const DecoratedCycle c = star_b3_cycle(n, f);
      expect_hamiltonian_listing(c, 1, 3);
      EXPECT_NE(c.anchors.at("a"), f);
      EXPECT_NE(c.anchors.at("b"), f);
      const Tree t(star(n));
      const auto first = endpoint_labels(t, c.sequence[1]);
      EXPECT_NE(std::find(first.begin(), first.end(), c.anchors.at("a")), first.end());
    }
  }
}

TEST(TreesThree, EndpointLabelsOfPathFour) {
  const Tree t(path(4));
  // two-colouring {0,2}, {1,3}; moving 1 or 3 out gives 0,2|1|3
  EXPECT_EQ(endpoint_labels(t, Partition::parse("0,2|1|3")), (std::vector<Vertex>{1, 3}));
  EXPECT_TRUE(endpoint_labels(t, Partition::parse("0,3|1|2")).empty());
}

TEST(TreesThree, EndpointContractOnAllSmallTrees) {
  for (int n = 4; n <= 8; ++n) {
    for (const Graph& g : nonisomorphic_trees(n)) {
      const Tree t(g);
      for (Vertex x = 0; x < n; ++x) {
        const EndpointPath r = s3_path_with_endpoints(t, x);
        EXPECT_NE(r.a, r.b);
        EXPECT_NE(r.a, x);
        EXPECT_NE(r.b, x);
        const auto first = endpoint_labels(t, r.path.sequence.front());
        const auto last = endpoint_labels(t, r.path.sequence.back());
        EXPECT_NE(std::find(first.begin(), first.end(), r.a), first.end());
        EXPECT_NE(std::find(last.begin(), last.end(), r.b), last.end());
        if (n <= 6) expect_hamiltonian_listing(r.path, 3, 3);
      }
    }
  }
}

TEST(TreesThree, BellCycleAndStirlingPath) {
  for (int n = 4; n <= 7; ++n) {
    for (const Graph& g : nonisomorphic_trees(n)) {
      const DecoratedCycle b = b3_tree_cycle(Tree(g));
      expect_hamiltonian_listing(b, 1, 3);
      EXPECT_EQ(b.sequence.front().cell_count(), 2);
      expect_hamiltonian_listing(s3_tree_ham_path(Tree(g)), 3, 3);
    }
  }
  EXPECT_EQ(s3_tree_ham_path(Tree(path(3))).size(), 1u);
  EXPECT_THROW(b3_tree_cycle(Tree(path(3))), PreconditionError);
}

TEST(TreesMany, FourColourCycles) {
  for (int n = 5; n <= 7; ++n) {
    for (const Graph& g : nonisomorphic_trees(n)) {
      const DecoratedCycle c = s4_tree_cycle(Tree(g));
      expect_hamiltonian_listing(c, 4, 4);
      ASSERT_TRUE(c.leaf);
      ASSERT_EQ(c.leaf_singleton.size(), c.size());
      for (std::size_t i = 0; i < c.size(); ++i) {
        EXPECT_EQ(c.leaf_singleton[i], c.sequence[i].is_singleton(*c.leaf));
      }
    }
  }
  EXPECT_THROW(s4_tree_cycle(Tree(path(4))), PreconditionError);
}

TEST(TreesMany, LeafChoiceIsHonoured) {
  const Tree t(path(6));
  for (Vertex leaf : t.leaves()) {
    const DecoratedCycle c = sk_tree_cycle(t, 4, leaf);
    EXPECT_EQ(*c.leaf, leaf);
    expect_hamiltonian_listing(c, 4, 4);
  }
  EXPECT_THROW(sk_tree_cycle(t, 4, 2), PreconditionError);
}

TEST(TreesMany, KColourCycles) {
  for (int n = 6; n <= 7; ++n) {
    for (const Graph& g : nonisomorphic_trees(n)) {
      for (int k = 5; k <= n - 1; ++k) {
        const DecoratedCycle c = sk_tree_cycle(Tree(g), k);
        expect_hamiltonian_listing(c, k, k);
      }
    }
  }
  EXPECT_THROW(sk_tree_cycle(Tree(path(5)), 5), PreconditionError);
  EXPECT_THROW(sk_tree_cycle(Tree(path(5)), 3), PreconditionError);
}

TEST(BaseCase, TopStirlingCycles) {
  for (int n = 5; n <= 8; ++n) {
    for (const Graph& g : nonisomorphic_trees(n)) {
      const DecoratedCycle c = stirling_base_cycle(g);
      expect_hamiltonian_listing(c, n - 1, n - 1);
    }
  }
  const DecoratedCycle c = stirling_base_cycle(cycle(6));
  expect_hamiltonian_listing(c, 5, 5);
}

TEST(BaseCase, HubKeepsItsEdgesTogether) {
  const Graph g = star(5);
  const DecoratedCycle c = stirling_base_cycle(g, 1);
  // the pairs containing the hub leaf come in one run
  std::vector<bool> with_hub;
  for (const Partition& p : c.sequence) with_hub.push_back(!p.is_singleton(1));
  int changes = 0;
  for (std::size_t i = 0; i < with_hub.size(); ++i) changes += with_hub[i] != with_hub[(i + 1) % with_hub.size()];
  EXPECT_EQ(changes, 2);
}

TEST(CGraph, CycleThroughEdge) {
  // three triangles in a ring; every consecutive pair keeps two disjoint
  // edges once vertex 0 is set aside, the middle pair three
  Graph h(9);
  for (int b = 0; b < 3; ++b) {
    h.add_edge(3 * b, 3 * b + 1);
    h.add_edge(3 * b + 1, 3 * b + 2);
    h.add_edge(3 * b, 3 * b + 2);
  }
  for (int b = 0; b < 3; ++b) {
    const int c = (b + 1) % 3;
    h.add_edge(3 * b + 1, 3 * c);
    h.add_edge(3 * b + 2, 3 * c + 1);
  }
  h.add_edge(3, 8);
  h.add_edge(6, 2);
  const CGraphDecomposition d{{{0, 1, 2}, {3, 4, 5}, {6, 7, 8}}};
  const auto cyc = c_graph_cycle_through_edge(h, d, {0, 1});
  EXPECT_TRUE(validate_cycle(h, cyc).ok);
  bool uses = false;
  for (std::size_t i = 0; i < cyc.size(); ++i) {
    const Vertex a = cyc[i], b = cyc[(i + 1) % cyc.size()];
    uses = uses || (std::min(a, b) == 0 && std::max(a, b) == 1);
  }
  EXPECT_TRUE(uses);
  const CGraphDecomposition small{{{0, 1}, {2, 3, 4, 5}, {6, 7, 8}}};
  EXPECT_THROW(c_graph_cycle_through_edge(h, small, {0, 1}), PreconditionError);
  // blocks 2 and 0 left with the single edge 6-2 away from vertex 0
  Graph thin(9);
  for (const auto& [a, b] : h.edges()) {
    if (!(a == 1 && b == 8)) thin.add_edge(a, b);
  }
  EXPECT_THROW(c_graph_cycle_through_edge(thin, d, {0, 1}), ConstructionFailure);
}

TEST(Bell, SampleGraphs) {
  for (const Graph& g : {edgeless(4), path(5), cycle(5), star(4), g_t(2), g_t(3), l_nn(3)}) {
    const DecoratedCycle c = bell_n_cycle(g);
    expect_hamiltonian_listing(c, 1, g.order());
  }
  EXPECT_THROW(bell_n_cycle(complete(4)), PreconditionError);
  EXPECT_THROW(bell_n_cycle(complete_minus_edge(4)), PreconditionError);
}

TEST(Bell, EveryGraphOnFiveVertices) {
  for (const Graph& g : nonisomorphic_graphs(5)) {
    if (is_complete(g) || g.edge_count() == 9) continue;
    expect_hamiltonian_listing(bell_n_cycle(g), 1, 5);
  }
}

TEST(Decorated, ValidateRejectsTamperedSequences) {
  DecoratedCycle c = star_s3_cycle(5);
  EXPECT_TRUE(validate(c).ok);
  std::swap(c.sequence[2], c.sequence[7]);
  EXPECT_FALSE(validate(c).ok);
  c = star_s3_cycle(5);
  c.sequence.pop_back();
  EXPECT_FALSE(validate(c).ok);
  c = star_s3_cycle(5);
  c.sequence[0] = Partition::parse("0,1|2|3|4|5");
  EXPECT_NE(validate(c).witness.find("not a vertex"), std::string::npos);
}
