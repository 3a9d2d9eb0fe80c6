#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "bellstir/graph.hpp"
#include "bellstir/partition.hpp"

namespace bellstir {

enum class ColourGraphKind { kBell, kStirling, kColour };

std::string to_string(ColourGraphKind kind);

enum class EdgeStrategy {
  kAuto,      // all pairs up to kAllPairsLimit members, buckets above
  kAllPairs,
  kBuckets,   // group members by their restriction to V - x, for every x
};

inline constexpr std::size_t kAllPairsLimit = 10'000;

// B_k(G), S_k(G) or C_k(G) materialized. Vertex i of `skeleton` is
// family.members[i] (or family.colourings[i] for kColour).
struct ColourGraph {
  Graph base;
  int k = 0;
  ColourGraphKind kind = ColourGraphKind::kBell;
  PartitionFamily family;
  Graph skeleton;
  std::unordered_map<Partition, int, PartitionHash> index;

  int size() const { return skeleton.order(); }
  const Partition& partition(int i) const { return family.members[i]; }
  const Colouring& colouring(int i) const { return family.colourings[i]; }
  // -1 when p is not a member.
  int vertex_of(const Partition& p) const;
  int vertex_of(const Colouring& c) const;
  // Member i as text: cells for partitions, colour list for colourings.
  std::string describe(int i) const;
};

ColourGraph build(const Graph& g, int k, ColourGraphKind kind,
                  EdgeStrategy strategy = EdgeStrategy::kAuto,
                  std::size_t cap = kDefaultEnumerationCap);

// Outcome of checking that a vertex map is a graph isomorphism. On failure
// `detail` names the offending vertex or pair.
struct Certificate {
  bool ok = false;
  std::string detail;
};

// Checks that map (domain vertex -> codomain vertex) is a bijection that
// preserves adjacency and non-adjacency.
Certificate verify_isomorphism(const Graph& domain, const Graph& codomain,
                               const std::vector<int>& map);

// S_{n-1}(g) against the line graph of complement(g): each (n-1)-cell
// partition goes to the one pair of vertices sharing a cell.
struct TopStirlingMap {
  ColourGraph stirling;
  LineGraph line;
  std::vector<int> to_line;    // stirling vertex -> line graph vertex
  std::vector<int> from_line;  // inverse
  Certificate certificate;
};

// Throws PreconditionError when g is complete or has fewer than 2 vertices.
TopStirlingMap stirling_top_bijection(const Graph& g);

// B_k(h + g) against C_k(g) for a uniquely k-colourable h. The union keeps
// h on ids 0..|h|-1 and shifts g by |h|. Colour i (1-based) of a colouring
// of g is joined with the i-th cell of the unique colouring of h.
struct UniqueColouringMap {
  Partition unique_colouring;  // of h
  ColourGraph colourings;      // C_k(g)
  ColourGraph bell;            // B_k(h + g)
  std::vector<int> to_bell;    // colouring vertex -> bell vertex
  Certificate certificate;
};

// Throws PreconditionError unless h has exactly one partition into at most k
// independent sets and that partition has k cells.
UniqueColouringMap unique_colouring_bijection(const Graph& h, const Graph& g, int k);

// B_k(g v h) against B_k(g) box B_k(h) with k = |g| + |h|. The pair (P1, P2)
// has product id i * |B_k(h)| + j and maps to P1 together with P2 shifted
// by |g|.
struct JoinProductMap {
  int k = 0;
  ColourGraph left;    // B_k(g)
  ColourGraph right;   // B_k(h)
  ColourGraph joined;  // B_k(g v h)
  Graph product;
  std::vector<int> to_joined;  // product vertex -> joined vertex
  Certificate certificate;
};

JoinProductMap join_product_bijection(const Graph& g, const Graph& h);

}  // namespace bellstir
