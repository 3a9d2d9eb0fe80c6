#include <algorithm>
#include <bit>
#include <deque>
#include <unordered_set>

#include "bellstir/errors.hpp"
#include "construction_detail.hpp"

namespace bellstir {

std::string to_string(CycleKind kind) { return kind == CycleKind::kCycle ? "cycle" : "path"; }

std::vector<int> DecoratedCycle::order_in(const ColourGraph& cg) const {
  std::vector<int> out;
  out.reserve(sequence.size());
  for (const Partition& p : sequence) {
    const int i = cg.vertex_of(p);
    if (i < 0) throw PreconditionError("partition " + p.to_string() + " is not in the colour graph");
    out.push_back(i);
  }
  return out;
}

Validation validate(const DecoratedCycle& c, const ColourGraph& cg) {
  std::vector<int> order;
  order.reserve(c.sequence.size());
  for (std::size_t i = 0; i < c.sequence.size(); ++i) {
    const int v = cg.vertex_of(c.sequence[i]);
    if (v < 0) {
      return {false, "entry " + std::to_string(i) + " (" + c.sequence[i].to_string() +
                         ") is not a vertex of the colour graph"};
    }
    order.push_back(v);
  }
  if (c.kind == CycleKind::kPath) return validate_path(cg.skeleton, order);
  return validate_cycle(cg.skeleton, order);
}

Validation validate(const DecoratedCycle& c) {
  return validate(c, build(c.base, c.k, c.family, EdgeStrategy::kBuckets));
}

namespace detail {

std::vector<Vertex> members(VertexMask m) {
  std::vector<Vertex> out;
  for (; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

Vertex lowest(VertexMask m) { return std::countr_zero(m); }

int popcount(VertexMask m) { return std::popcount(m); }

int degree_in(const Graph& g, Vertex v, VertexMask alive) {
  return std::popcount(g.neighbour_mask(v) & alive);
}

std::vector<Vertex> leaves_in(const Graph& g, VertexMask alive) {
  std::vector<Vertex> out;
  for (Vertex v : members(alive)) {
    if (degree_in(g, v, alive) == 1) out.push_back(v);
  }
  return out;
}

Vertex neighbour_in(const Graph& g, Vertex leaf, VertexMask alive) {
  const VertexMask m = g.neighbour_mask(leaf) & alive;
  if (m == 0) throw PreconditionError("vertex " + std::to_string(leaf) + " has no alive neighbour");
  return lowest(m);
}

std::pair<VertexMask, VertexMask> two_colouring(const Graph& g, VertexMask alive) {
  VertexMask a = 0;
  VertexMask b = 0;
  VertexMask seen = 0;
  for (Vertex root : members(alive)) {
    if (seen & bit(root)) continue;
    std::deque<std::pair<Vertex, int>> queue{{root, 0}};
    seen |= bit(root);
    while (!queue.empty()) {
      const auto [v, side] = queue.front();
      queue.pop_front();
      (side == 0 ? a : b) |= bit(v);
      for (Vertex w : members(g.neighbour_mask(v) & alive & ~seen)) {
        seen |= bit(w);
        queue.emplace_back(w, 1 - side);
      }
    }
  }
  return {a, b};
}

bool is_star_in(const Graph& g, VertexMask alive) {
  const int n = std::popcount(alive);
  if (n < 3) return false;
  for (Vertex v : members(alive)) {
    if (degree_in(g, v, alive) == n - 1) return true;
  }
  return false;
}

bool is_complete_in(const Graph& g, VertexMask alive) {
  for (Vertex v : members(alive)) {
    if ((g.neighbour_mask(v) & alive) != (alive & ~bit(v))) return false;
  }
  return true;
}

namespace {

std::vector<int> distances_from(const Graph& g, VertexMask alive, Vertex root) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
  std::deque<Vertex> queue{root};
  dist[root] = 0;
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : members(g.neighbour_mask(v) & alive)) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

}  // namespace

Vertex longest_path_end(const Graph& g, VertexMask alive) {
  // In a tree, the end of a longest path is any vertex of maximum eccentricity.
  Vertex best = -1;
  int best_ecc = -1;
  for (Vertex v : members(alive)) {
    const auto dist = distances_from(g, alive, v);
    int ecc = 0;
    for (Vertex w : members(alive)) ecc = std::max(ecc, dist[w]);
    if (ecc > best_ecc) {
      best_ecc = ecc;
      best = v;
    }
  }
  return best;
}

Graph induced(const Graph& g, VertexMask alive, std::vector<Vertex>& to_original) {
  to_original = members(alive);
  return induced_subgraph(g, to_original);
}

std::uint64_t count_family(const Graph& g, VertexMask alive, int min_cells, int max_cells) {
  std::vector<Vertex> map;
  const Graph sub = induced(g, alive, map);
  std::uint64_t count = 0;
  for_each_partition(sub, min_cells, max_cells, [&](const Partition&) {
    ++count;
    return true;
  });
  return count;
}

std::string describe(const Partition& p) { return "{" + p.to_string() + "}"; }

std::string describe(VertexMask alive) {
  std::string out = "{";
  bool first = true;
  for (Vertex v : members(alive)) {
    if (!first) out += ',';
    first = false;
    out += std::to_string(v);
  }
  return out + "}";
}

void check_partition_sequence(const Graph& g, VertexMask alive, int min_cells, int max_cells,
                              const std::vector<Partition>& seq, bool closed,
                              const std::string& what) {
  auto fail = [&](const std::string& why) {
    throw ConstructionFailure(what + " on vertex set " + describe(alive) + ": " + why);
  };
  std::unordered_set<Partition, PartitionHash> seen;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const Partition& p = seq[i];
    if (p.ground() != alive) fail("entry " + std::to_string(i) + " " + describe(p) + " has the wrong ground set");
    if (p.cell_count() < min_cells || p.cell_count() > max_cells) {
      fail("entry " + std::to_string(i) + " " + describe(p) + " has the wrong number of cells");
    }
    if (!p.is_independent_in(g)) fail("entry " + std::to_string(i) + " " + describe(p) + " is not proper");
    if (!seen.insert(p).second) fail("entry " + std::to_string(i) + " " + describe(p) + " repeated");
    if (i > 0 && adjacency_witness(seq[i - 1], p) < 0) {
      fail("non-adjacent consecutive entries " + describe(seq[i - 1]) + " and " + describe(p) +
           " at position " + std::to_string(i - 1));
    }
  }
  if (closed && seq.size() >= 3 && adjacency_witness(seq.back(), seq.front()) < 0) {
    fail("closing pair " + describe(seq.back()) + " and " + describe(seq.front()) + " not adjacent");
  }
  if (closed && seq.size() < 3) fail("a cycle needs at least 3 entries");
  const std::uint64_t expected = count_family(g, alive, min_cells, max_cells);
  if (seq.size() != expected) {
    fail("covers " + std::to_string(seq.size()) + " of " + std::to_string(expected) + " colourings");
  }
}

DecoratedCycle finish(const Graph& g, int k, ColourGraphKind family, CycleKind kind,
                      std::vector<Partition> seq, std::optional<Vertex> leaf,
                      const std::string& what) {
  DecoratedCycle out;
  out.base = g;
  out.k = k;
  out.family = family;
  out.kind = kind;
  out.sequence = std::move(seq);
  out.leaf = leaf;
  if (leaf) {
    for (const Partition& p : out.sequence) out.leaf_singleton.push_back(p.is_singleton(*leaf));
  }
  const Validation v = validate(out);
  if (!v.ok) throw ConstructionFailure(what + " produced an invalid certificate: " + v.witness);
  return out;
}

}  // namespace detail
}  // namespace bellstir
