#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bellstir/graph.hpp"

namespace bellstir {

// A partition of a vertex set into nonempty cells, kept in canonical order:
// cells ascending by their minimum element. Cells are stored as bit masks, so
// partitions are limited to vertex ids below 64.
class Partition {
 public:
  Partition() = default;

  // Cells may come in any order. Throws PreconditionError on empty or
  // overlapping cells.
  static Partition from_masks(std::vector<VertexMask> cells);
  static Partition from_cells(const std::vector<std::vector<Vertex>>& cells);
  // colour[v] is the colour of vertex v; vertices 0..colour.size()-1.
  static Partition from_colours(std::span<const int> colour);

  int cell_count() const { return static_cast<int>(cells_.size()); }
  bool empty() const { return cells_.empty(); }
  VertexMask ground() const;
  bool contains(Vertex v) const { return (ground() & bit(v)) != 0; }

  const std::vector<VertexMask>& cell_masks() const { return cells_; }
  std::vector<std::vector<Vertex>> cells() const;

  // Index of the cell holding v, or -1.
  int cell_of(Vertex v) const;
  VertexMask cell_mask_of(Vertex v) const;
  bool is_singleton(Vertex v) const;

  bool is_independent_in(const Graph& g) const;

  // Removes x, dropping its cell if it empties.
  Partition restricted(Vertex x) const;
  // Adds v (not yet present) to the cell with index `cell`, or as a new
  // singleton when cell == cell_count().
  Partition with_vertex_in_cell(Vertex v, int cell) const;
  Partition with_singleton(Vertex v) const { return with_vertex_in_cell(v, cell_count()); }
  // Moves v (present) into the cell holding `host`, or into a new singleton
  // when host < 0.
  Partition with_vertex_moved(Vertex v, Vertex host) const;
  // Union of two partitions over disjoint ground sets.
  Partition merged_with(const Partition& other) const;
  // Renames vertex v to map[v].
  Partition relabeled(std::span<const Vertex> map) const;

  // "0|1,3|2": cells joined by '|', members by ','.
  std::string to_string() const;
  // Same layout using graph labels.
  std::string to_string(const Graph& g) const;
  // Inverse of to_string(); throws PreconditionError on malformed text.
  static Partition parse(std::string_view text);

  friend bool operator==(const Partition&, const Partition&) = default;
  // Lexicographic on the cell sequence, each cell compared as a sorted list.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);

  std::size_t hash() const;

 private:
  explicit Partition(std::vector<VertexMask> canonical) : cells_(std::move(canonical)) {}
  void canonicalize();

  std::vector<VertexMask> cells_;
};

struct PartitionHash {
  std::size_t operator()(const Partition& p) const { return p.hash(); }
};

Partition restrict(const Partition& p, Vertex x);

// True iff some vertex x makes the restrictions of p and q to V - x equal.
// Scans only the vertices whose cells differ. Throws PreconditionError when
// the ground sets differ or p == q.
bool adjacent(const Partition& p, const Partition& q);

// Same predicate, by trying every restriction. Kept as an independent route
// for cross-checking adjacent().
bool adjacent_by_restriction(const Partition& p, const Partition& q);

// Vertex whose move turns p into q; -1 when p and q are not adjacent. When
// several vertices witness the adjacency the least one is returned.
Vertex adjacency_witness(const Partition& p, const Partition& q);

enum class FamilyMode {
  kAtMost,   // Bell: at most k cells
  kExactly,  // Stirling: exactly k cells
  kLabeled,  // proper colour functions V -> {1..k}
};

std::string to_string(FamilyMode mode);

using Colouring = std::vector<int>;

inline constexpr std::size_t kDefaultEnumerationCap = 10'000'000;

struct PartitionFamily {
  Graph graph;
  int k = 0;
  FamilyMode mode = FamilyMode::kAtMost;
  std::vector<Partition> members;     // kAtMost / kExactly, sorted
  std::vector<Colouring> colourings;  // kLabeled, lexicographic

  std::size_t size() const {
    return mode == FamilyMode::kLabeled ? colourings.size() : members.size();
  }
};

// Restricted-growth enumeration pruned by independence. Throws CapExceeded
// once more than `cap` members would be produced.
PartitionFamily enumerate(const Graph& g, int k, FamilyMode mode,
                          std::size_t cap = kDefaultEnumerationCap);

// Visits partitions of g into independent cells with a cell count in
// [min_cells, max_cells], in restricted-growth order, without storing them.
// The visitor returns false to stop early.
void for_each_partition(const Graph& g, int min_cells, int max_cells,
                        const std::function<bool(const Partition&)>& visit);

std::uint64_t bell_number_of(const Graph& g, int k, std::size_t cap = kDefaultEnumerationCap);
std::uint64_t stirling_number_of(const Graph& g, int k, std::size_t cap = kDefaultEnumerationCap);
int chromatic_number(const Graph& g);

}  // namespace bellstir
