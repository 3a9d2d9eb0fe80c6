#include <gtest/gtest.h>

#include <set>

#include "bellstir/errors.hpp"
#include "bellstir/graph.hpp"
#include "bellstir/tree.hpp"
#include "support.hpp"

using namespace bellstir;

TEST(Graph, AddEdgeRejectsLoopsAndRange) {
  Graph g(3);
  EXPECT_THROW(g.add_edge(1, 1), PreconditionError);
  EXPECT_THROW(g.add_edge(0, 3), PreconditionError);
  g.add_edge(0, 1);
  g.add_edge(1, 0);
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_TRUE(g.has_edge(1, 0));
}

TEST(Graph, NamedFamilies) {
  EXPECT_EQ(complete(5).edge_count(), 10u);
  EXPECT_EQ(complete_minus_edge(5).edge_count(), 9u);
  EXPECT_FALSE(complete_minus_edge(5).has_edge(0, 1));
  EXPECT_EQ(star(4).degree(0), 4);
  EXPECT_EQ(path(5).edge_count(), 4u);
  EXPECT_EQ(cycle(6).edge_count(), 6u);
  const Graph l = l_nn(3);
  EXPECT_EQ(l.edge_count(), 6u);
  EXPECT_FALSE(l.has_edge(0, 3));
  EXPECT_TRUE(l.has_edge(0, 4));
  const Graph gt = g_t(3);
  EXPECT_EQ(gt.edge_count(), 15u - 3u);
  EXPECT_FALSE(gt.has_edge(2, 3));
}

TEST(Graph, ComplementJoinUnion) {
  const Graph p = path(4);
  const Graph c = complement(p);
  for (int u = 0; u < 4; ++u) {
    for (int v = u + 1; v < 4; ++v) EXPECT_NE(p.has_edge(u, v), c.has_edge(u, v));
  }
  const Graph j = join(path(2), edgeless(2));
  EXPECT_EQ(j.edge_count(), 1u + 4u);
  const Graph d = disjoint_union(complete(2), complete(3));
  EXPECT_EQ(d.edge_count(), 4u);
  EXPECT_TRUE(d.has_edge(2, 4));
  EXPECT_FALSE(is_connected(d));
}

TEST(Graph, ProductAndRookPlus) {
  const Graph k = cartesian_product(complete(3), complete(2));
  EXPECT_EQ(k.order(), 6);
  EXPECT_TRUE(k.has_edge(0 * 2 + 0, 0 * 2 + 1));
  EXPECT_TRUE(k.has_edge(0 * 2 + 1, 2 * 2 + 1));
  EXPECT_FALSE(k.has_edge(0, 3));
  const RookPlus rp = rook_plus(3, 2);
  EXPECT_EQ(rp.clone, 6);
  EXPECT_TRUE(rp.graph.has_edge(rp.clone, 0));
  for (Vertex w : k.neighbours(0)) EXPECT_TRUE(rp.graph.has_edge(rp.clone, w));
  EXPECT_EQ(rp.graph.degree(rp.clone), 1 + k.degree(0));
}

TEST(Graph, Hypercube) {
  const Graph q = hypercube(4);
  EXPECT_EQ(q.order(), 16);
  EXPECT_EQ(q.edge_count(), 32u);
  EXPECT_TRUE(q.has_edge(0b0101, 0b0100));
  EXPECT_FALSE(q.has_edge(0b0101, 0b0110));
  EXPECT_THROW(hypercube(kMaxHypercubeDimension + 1), CapExceeded);
}

TEST(Graph, LineGraph) {
  const LineGraph l = line_graph(star(4));
  EXPECT_EQ(l.graph.order(), 4);
  EXPECT_EQ(l.graph.edge_count(), 6u);
  const LineGraph p = line_graph(path(5));
  EXPECT_EQ(p.graph.edge_count(), 3u);
  for (const auto& [a, b] : p.graph.edges()) {
    const auto [u1, v1] = p.edge_index[a];
    const auto [u2, v2] = p.edge_index[b];
    EXPECT_TRUE(u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2);
  }
}

// Degeneracy + 1 from the definition: the least c with an order where every
// vertex has fewer than c earlier neighbours, over all orders.
int colouring_number_brute(const Graph& g) {
  std::vector<int> perm(static_cast<std::size_t>(g.order()));
  std::iota(perm.begin(), perm.end(), 0);
  int best = g.order() + 1;
  do {
    int worst = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
      int earlier = 0;
      for (std::size_t j = 0; j < i; ++j) earlier += g.has_edge(perm[i], perm[j]);
      worst = std::max(worst, earlier);
    }
    best = std::min(best, worst + 1);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

TEST(Graph, ColouringNumberMatchesDefinition) {
  for (int n = 1; n <= 5; ++n) {
    for (const Graph& g : nonisomorphic_graphs(n)) {
      EXPECT_EQ(colouring_number(g), colouring_number_brute(g)) << n;
    }
  }
  EXPECT_EQ(colouring_number(complete(5)), 5);
  EXPECT_EQ(colouring_number(path(6)), 2);
}

TEST(Graph, NonisomorphicGraphsAgainstBruteForce) {
  for (int n = 1; n <= 5; ++n) {
    std::vector<Graph> classes;
    for (const Graph& g : oracle::all_graphs(n)) {
      bool seen = false;
      for (const Graph& h : classes) {
        if (oracle::isomorphic(g, h)) {
          seen = true;
          break;
        }
      }
      if (!seen) classes.push_back(g);
    }
    const auto lib = nonisomorphic_graphs(n);
    ASSERT_EQ(lib.size(), classes.size()) << n;
    for (std::size_t i = 0; i < lib.size(); ++i) {
      for (std::size_t j = i + 1; j < lib.size(); ++j) EXPECT_FALSE(oracle::isomorphic(lib[i], lib[j]));
    }
  }
  EXPECT_EQ(nonisomorphic_graphs(6).size(), 156u);
}

TEST(Graph, CanonicalFormAgreesWithPermutationSearch) {
  const auto graphs = oracle::all_graphs(4);
  for (std::size_t i = 0; i < graphs.size(); i += 3) {
    for (std::size_t j = i; j < graphs.size(); j += 5) {
      EXPECT_EQ(are_isomorphic(graphs[i], graphs[j]), oracle::isomorphic(graphs[i], graphs[j]));
    }
  }
  EXPECT_THROW(canonical_form(Graph(kMaxCanonicalVertices + 1)), CapExceeded);
}

TEST(Trees, PrueferEnumerationCounts) {
  for (int n = 2; n <= 6; ++n) {
    const auto trees = all_trees(n);
    std::size_t expected = 1;
    for (int i = 0; i < n - 2; ++i) expected *= n;
    EXPECT_EQ(trees.size(), expected) << n;
    std::set<std::vector<Edge>> distinct;
    for (const Graph& t : trees) {
      EXPECT_TRUE(is_tree(t));
      distinct.insert(t.edges());
    }
    EXPECT_EQ(distinct.size(), trees.size());
  }
}

TEST(Trees, NonisomorphicTreesAgainstDedup) {
  for (int n = 1; n <= 8; ++n) {
    const auto grown = nonisomorphic_trees(n);
    const auto dedup = all_trees(n, true);
    EXPECT_EQ(grown.size(), dedup.size()) << n;
    std::set<std::string> forms;
    for (const Graph& t : grown) forms.insert(tree_canonical_form(t));
    EXPECT_EQ(forms.size(), grown.size());
    for (const Graph& t : dedup) EXPECT_TRUE(forms.count(tree_canonical_form(t)));
  }
  EXPECT_EQ(nonisomorphic_trees(9).size(), 47u);
}

TEST(Trees, TreeCanonicalFormIsIsomorphismInvariant) {
  const auto trees = all_trees(6);
  for (std::size_t i = 0; i < trees.size(); i += 37) {
    for (std::size_t j = 0; j < trees.size(); j += 53) {
      EXPECT_EQ(tree_canonical_form(trees[i]) == tree_canonical_form(trees[j]),
                oracle::isomorphic(trees[i], trees[j]));
    }
  }
}

TEST(Trees, TwoColouringAndLeaves) {
  const Tree t(path(5));
  EXPECT_EQ(t.part_a(), (std::vector<Vertex>{0, 2, 4}));
  EXPECT_EQ(t.part_b(), (std::vector<Vertex>{1, 3}));
  EXPECT_EQ(t.leaves(), (std::vector<Vertex>{0, 4}));
  EXPECT_FALSE(t.is_star());
  EXPECT_TRUE(Tree(star(4)).is_star());
  EXPECT_THROW(Tree(cycle(4)), PreconditionError);
  EXPECT_THROW(Tree(edgeless(3)), PreconditionError);
}
