#pragma once

// Helpers shared by the construction sources. The recursions work on vertex
// subsets ("alive" masks) of the caller's graph, so partitions never need
// relabelling between levels.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bellstir/constructions.hpp"

namespace bellstir::detail {

std::vector<Vertex> members(VertexMask m);
Vertex lowest(VertexMask m);
int popcount(VertexMask m);

int degree_in(const Graph& g, Vertex v, VertexMask alive);
std::vector<Vertex> leaves_in(const Graph& g, VertexMask alive);
// The unique alive neighbour of a leaf.
Vertex neighbour_in(const Graph& g, Vertex leaf, VertexMask alive);
// {A, B} with A holding the least alive vertex.
std::pair<VertexMask, VertexMask> two_colouring(const Graph& g, VertexMask alive);
bool is_star_in(const Graph& g, VertexMask alive);
bool is_complete_in(const Graph& g, VertexMask alive);
// End of a longest path, least id among candidates.
Vertex longest_path_end(const Graph& g, VertexMask alive);

// Subgraph on `alive` with compact ids; to_original[i] is the original id of i.
Graph induced(const Graph& g, VertexMask alive, std::vector<Vertex>& to_original);

std::uint64_t count_family(const Graph& g, VertexMask alive, int min_cells, int max_cells);

// Throws ConstructionFailure unless seq lists every partition of `alive`
// into min..max independent cells exactly once, consecutive entries adjacent
// (and the ends too when closed).
void check_partition_sequence(const Graph& g, VertexMask alive, int min_cells, int max_cells,
                              const std::vector<Partition>& seq, bool closed,
                              const std::string& what);

std::string describe(const Partition& p);
std::string describe(VertexMask alive);

// B_3 of a star on `alive` from its 2-colouring; leaf `forbidden` (if it is
// one) is the reference leaf, so it never labels the two ends.
std::vector<Partition> star_b3_in(const Graph& g, VertexMask alive, Vertex forbidden, Vertex* a,
                                  Vertex* b);

// B_3(alive) cycle starting at the 2-colouring; *a and *b receive the labels
// of cycle[1] and cycle.back(), both different from `forbidden` (which may
// be -1).
std::vector<Partition> b3_cycle_in(const Graph& g, VertexMask alive, Vertex forbidden, Vertex* a,
                                   Vertex* b);

std::vector<Vertex> endpoint_labels_in(const Graph& g, VertexMask alive, const Partition& p);

// S_{|alive|-1}(alive) from a dominating cycle of the complement.
std::vector<Partition> base_cycle_in(const Graph& g, VertexMask alive, std::optional<Vertex> hub);

// B_{|alive|}(alive) cycle; alive must induce neither a complete graph nor a
// complete graph minus an edge.
std::vector<Partition> bell_cycle_in(const Graph& g, VertexMask alive);

struct LeafCycle {
  std::vector<Partition> seq;
  Vertex leaf = -1;
  std::vector<std::string> diagnostics;
};

LeafCycle s4_cycle_in(const Graph& g, VertexMask alive, Vertex leaf);
LeafCycle sk_cycle_in(const Graph& g, VertexMask alive, int k, Vertex leaf);

// Fills leaf_singleton and runs the shared validator.
DecoratedCycle finish(const Graph& g, int k, ColourGraphKind family, CycleKind kind,
                      std::vector<Partition> seq, std::optional<Vertex> leaf,
                      const std::string& what);

}  // namespace bellstir::detail
