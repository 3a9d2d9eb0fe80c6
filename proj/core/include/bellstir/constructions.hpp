#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bellstir/binary_seq.hpp"
#include "bellstir/colour_graph.hpp"
#include "bellstir/graph.hpp"
#include "bellstir/hamilton.hpp"
#include "bellstir/partition.hpp"
#include "bellstir/tree.hpp"

namespace bellstir {

enum class CycleKind { kCycle, kPath };

std::string to_string(CycleKind kind);

// A Hamilton cycle or path of B_k(base) / S_k(base), listed as partitions.
// Tree constructions also record the leaf they split off and, per position,
// whether that leaf is a singleton cell there.
struct DecoratedCycle {
  Graph base;
  int k = 0;
  ColourGraphKind family = ColourGraphKind::kStirling;
  CycleKind kind = CycleKind::kCycle;
  std::vector<Partition> sequence;

  std::optional<Vertex> leaf;
  std::vector<bool> leaf_singleton;
  std::map<std::string, int> anchors;  // named positions or vertices, per construction
  std::vector<std::string> diagnostics;

  std::size_t size() const { return sequence.size(); }
  // Positions of the sequence in cg; throws PreconditionError when an entry
  // is not a member.
  std::vector<int> order_in(const ColourGraph& cg) const;
};

// The shared certificate check: maps the sequence into cg and runs
// validate_cycle / validate_path on its skeleton.
Validation validate(const DecoratedCycle& c, const ColourGraph& cg);
// Same, building the colour graph first.
Validation validate(const DecoratedCycle& c);

// ---- hypercubes ----

// Reflected binary code on m >= 2 bits, starting at all zeros.
std::vector<BinarySeq> gray_cycle(int m);

// Hamilton path of Q_m from x to y; x and y must have opposite weight parity.
std::vector<BinarySeq> hypercube_path(const BinarySeq& x, const BinarySeq& y);

// ---- rook graphs ----

// Hamilton path of K_r box K_s (ids i * s + j) from u to v, for r, s >= 2
// and not r = s = 2.
std::vector<Vertex> rook_hamilton_path(int r, int s, Vertex u, Vertex v);

// Hamilton path of rook_plus(r, s) from the clone to target.
std::vector<Vertex> rook_plus_path(int r, int s, Vertex target);

// ---- stars ----

// S_3(K_{1,n}) for odd n >= 3, on star(n) (centre 0, leaves 1..n).
DecoratedCycle star_s3_cycle(int n);

// B_3(K_{1,n}) on star(n), starting at the 2-colouring. The anchors "a" and
// "b" hold the singleton leaves of the two neighbours of the 2-colouring;
// neither equals `forbidden`.
DecoratedCycle star_b3_cycle(int n, Vertex forbidden);

// ---- trees, three colours ----

// Vertices y with p == {A - y, B - y, {y}} where {A, B} is the 2-colouring
// of t.
std::vector<Vertex> endpoint_labels(const Tree& t, const Partition& p);

struct EndpointPath {
  Vertex a = -1;
  Vertex b = -1;
  DecoratedCycle path;  // S_3 path, first entry labelled a, last labelled b
};

// Hamilton path of S_3(t) whose ends are {A-a, B-a, {a}} and {A-b, B-b, {b}}
// with a != b and both different from x. Needs |t| >= 4.
EndpointPath s3_path_with_endpoints(const Tree& t, Vertex x);

// Hamilton cycle of B_3(t) starting at the 2-colouring. Needs |t| >= 4.
DecoratedCycle b3_tree_cycle(const Tree& t);

// Hamilton path of S_3(t); a single vertex for |t| = 3.
DecoratedCycle s3_tree_ham_path(const Tree& t);

// ---- trees, four or more colours ----

// Hamilton cycle of S_4(t), |t| >= 5. The leaf split off at the top level is
// `leaf` when given; leaf_singleton marks the colourings where it is alone.
DecoratedCycle s4_tree_cycle(const Tree& t, std::optional<Vertex> leaf = std::nullopt);

// Blocks F_0..F_{N-1} of a graph whose consecutive blocks (cyclically) are
// joined by at least two disjoint edges, and some pair by at least three.
struct CGraphDecomposition {
  std::vector<std::vector<Vertex>> blocks;
  int size() const { return static_cast<int>(blocks.size()); }
};

// Hamilton cycle of host through the edge xy, which lies inside one block.
// Throws ConstructionFailure naming the block or pair that breaks the
// decomposition conditions.
std::vector<Vertex> c_graph_cycle_through_edge(const Graph& host, const CGraphDecomposition& decomp,
                                               Edge xy);

// Hamilton cycle of S_k(t) for k >= 4 and |t| >= k + 1. `leaf` fixes the
// leaf split off at the top level; by default the end of a longest path.
DecoratedCycle sk_tree_cycle(const Tree& t, int k, std::optional<Vertex> leaf = std::nullopt);

// Hamilton cycle of S_{n-1}(g) from a dominating cycle of complement(g).
// Edges of the complement at `hub` are kept consecutive when hub lies on
// the dominating cycle.
DecoratedCycle stirling_base_cycle(const Graph& g, std::optional<Vertex> hub = std::nullopt);

// ---- Bell colour graphs ----

// Hamilton cycle of B_n(g) for g on n >= 2 vertices other than K_n, K_n - e.
DecoratedCycle bell_n_cycle(const Graph& g);

}  // namespace bellstir
