#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace bellstir {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

// Vertex subsets of graphs with at most 64 vertices. Partitions, colourings
// and the constructive recursions all work on graphs of this size.
using VertexMask = std::uint64_t;
inline constexpr int kMaxMaskVertices = 64;

inline constexpr VertexMask bit(Vertex v) { return VertexMask{1} << v; }

// Simple undirected graph on vertices 0..n-1. Neighbour lists are kept sorted.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  static Graph from_edges(int n, std::span<const Edge> edges);

  int order() const { return static_cast<int>(adjacency_.size()); }
  std::size_t edge_count() const { return edge_count_; }

  // Adds uv. Loops and out-of-range ids throw PreconditionError; an edge that
  // is already present is left as is.
  void add_edge(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const;

  const std::vector<Vertex>& neighbours(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
  int max_degree() const;
  int min_degree() const;

  // All edges (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  // Only valid for order() <= 64.
  VertexMask neighbour_mask(Vertex v) const;
  VertexMask all_vertices_mask() const;

  bool has_labels() const { return !labels_.empty(); }
  void set_labels(std::vector<std::string> labels);
  std::string label(Vertex v) const;
  const std::vector<std::string>& labels() const { return labels_; }

  // Structural equality; labels are display-only and ignored.
  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adjacency_ == b.adjacency_;
  }

 private:
  void check_vertex(Vertex v) const;

  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
  std::vector<std::string> labels_;
};

// ---- derived constructions ----

Graph complement(const Graph& g);

// Disjoint union plus every edge between the two vertex sets. g keeps ids
// 0..|g|-1, h is shifted by |g|.
Graph join(const Graph& g, const Graph& h);

// Disjoint union; h is shifted by |g|.
Graph disjoint_union(const Graph& g, const Graph& h);

// Vertex (a, b) gets id a * |h| + b.
Graph cartesian_product(const Graph& g, const Graph& h);

// Subgraph induced by `vertices` (sorted ascending); vertex vertices[i] becomes i.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

struct RookPlus {
  Graph graph;
  Vertex clone;  // the added twin
  Vertex base;   // the rook vertex (0, 0) it duplicates
};

// K_r box K_s plus a true twin of vertex (0, 0).
RookPlus rook_plus(int r, int s);

inline constexpr int kMaxHypercubeDimension = 20;

// Q_m with vertex ids equal to the integer value of the binary sequence.
Graph hypercube(int m);

struct LineGraph {
  Graph graph;
  std::vector<Edge> edge_index;  // vertex i of the line graph is edge_index[i]
};

LineGraph line_graph(const Graph& g);

// Degeneracy + 1 via repeated removal of a minimum-degree vertex.
int colouring_number(const Graph& g);

bool is_connected(const Graph& g);

// ---- named families ----

Graph complete(int n);
Graph complete_minus_edge(int n);  // K_n without the edge {0, 1}
Graph edgeless(int n);             // complement of K_n
Graph star(int leaves);            // K_{1,leaves}; centre is vertex 0
Graph path(int n);                 // P_n: 0-1-...-(n-1)
Graph cycle(int n);
// K_{n,n} minus the perfect matching {i, n+i}.
Graph l_nn(int n);
// K_{2t} minus the perfect matching {2i, 2i+1}.
Graph g_t(int t);

// Decodes a Pruefer sequence over 0..n-1 of length n-2 (n = seq.size() + 2).
Graph tree_from_pruefer(std::span<const int> seq);

// Every labeled tree on n vertices via Pruefer enumeration (n^(n-2) of them),
// or one representative per isomorphism class when `dedup` is set.
std::vector<Graph> all_trees(int n, bool dedup = false);

// One tree per isomorphism class, grown by leaf addition. Faster than
// all_trees(n, true) for n >= 8.
std::vector<Graph> nonisomorphic_trees(int n);

// One graph per isomorphism class on n vertices (n <= 7).
std::vector<Graph> nonisomorphic_graphs(int n);

// ---- isomorphism (small graphs only) ----

inline constexpr int kMaxCanonicalVertices = 8;

// Exhaustive canonical labeling restricted to degree-respecting permutations.
// Throws CapExceeded above kMaxCanonicalVertices.
std::string canonical_form(const Graph& g);

bool are_isomorphic(const Graph& g, const Graph& h);

// Centre-rooted AHU encoding; equal strings iff the trees are isomorphic.
std::string tree_canonical_form(const Graph& tree);

bool is_tree(const Graph& g);
bool is_complete(const Graph& g);

}  // namespace bellstir
