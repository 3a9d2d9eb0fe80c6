#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bellstir/graph.hpp"

namespace bellstir {

enum class SearchStatus {
  kFound,
  kAbsent,        // search space exhausted, or a structural obstruction applies
  kInconclusive,  // budget ran out
};

std::string to_string(SearchStatus status);

inline constexpr std::uint64_t kDefaultSearchBudget = 100'000'000;

// kDefaultSearchBudget unless BELLSTIR_BUDGET holds a positive integer.
std::uint64_t default_search_budget();

struct SearchOptions {
  std::uint64_t budget = default_search_budget();
  // Cycle searches only: the cycle must use this edge.
  std::optional<Edge> forced_edge;
};

struct SearchResult {
  SearchStatus status = SearchStatus::kAbsent;
  std::vector<Vertex> sequence;  // cycles are listed once, without repeating the start
  std::uint64_t expansions = 0;
  std::string reason;            // why kAbsent was reported without search, if it was

  bool found() const { return status == SearchStatus::kFound; }
};

// Backtracking with Warnsdorff ordering (fewest remaining neighbours, then
// least id), forced-neighbour and low-degree pruning, connectivity pruning
// and a bipartite part-size check up front.
SearchResult find_hamilton_cycle(const Graph& g, const SearchOptions& options = {});
SearchResult find_hamilton_path(const Graph& g, Vertex u, Vertex v,
                                const SearchOptions& options = {});

// Parts of the 2-colouring found by BFS (the part holding the least vertex of
// each component is first), or nullopt when g has an odd cycle.
std::optional<std::pair<std::vector<Vertex>, std::vector<Vertex>>> bipartition(const Graph& g);

// Result of the shared certificate check. `witness` names the first problem.
struct Validation {
  bool ok = false;
  std::string witness;
};

// Every vertex exactly once, consecutive entries adjacent, and the last entry
// adjacent to the first.
Validation validate_cycle(const Graph& g, std::span<const Vertex> cycle);

// Every vertex exactly once and consecutive entries adjacent; when given, the
// ends must be u and v.
Validation validate_path(const Graph& g, std::span<const Vertex> path,
                         std::optional<Vertex> u = std::nullopt,
                         std::optional<Vertex> v = std::nullopt);

// sum_{i=0}^{l} (-1)^i C(t, i).
std::int64_t parity_gap(int t, int l);

std::int64_t binomial(int n, int k);

}  // namespace bellstir
