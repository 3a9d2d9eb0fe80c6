#include <algorithm>
#include <bit>

#include "bellstir/errors.hpp"
#include "construction_detail.hpp"

namespace bellstir {
namespace detail {

namespace {

// Extensions of a colouring c of G - x - y. Node i * s + j puts x in option
// i and y in option j, option 0 being a new cell; node r * s is c(xy) and
// node 0 is c(x|y).
struct Block {
  int r = 1, s = 1;
  std::vector<Partition> nodes;

  Vertex clone() const { return r * s; }
  Vertex find(const Partition& p) const {
    const auto it = std::find(nodes.begin(), nodes.end(), p);
    return it == nodes.end() ? -1 : static_cast<Vertex>(it - nodes.begin());
  }
};

Block make_block(const Graph& g, const Partition& c, Vertex x, Vertex y) {
  const auto& cells = c.cell_masks();
  std::vector<int> xo, yo;
  for (int i = 0; i < static_cast<int>(cells.size()); ++i) {
    if (!(cells[i] & g.neighbour_mask(x))) xo.push_back(i);
    if (!(cells[i] & g.neighbour_mask(y))) yo.push_back(i);
  }
  Block b;
  b.r = 1 + static_cast<int>(xo.size());
  b.s = 1 + static_cast<int>(yo.size());
  for (int i = 0; i < b.r; ++i) {
    for (int j = 0; j < b.s; ++j) {
      std::vector<VertexMask> m = cells;
      if (i == 0) m.push_back(bit(x)); else m[xo[i - 1]] |= bit(x);
      if (j == 0) m.push_back(bit(y)); else m[yo[j - 1]] |= bit(y);
      b.nodes.push_back(Partition::from_masks(m));
    }
  }
  std::vector<VertexMask> m = cells;
  m.push_back(bit(x) | bit(y));
  b.nodes.push_back(Partition::from_masks(m));
  return b;
}

// Hamilton path of the block from c(xy) to node `target`.
std::vector<Partition> from_clone(const Block& b, Vertex target) {
  std::vector<Partition> out;
  for (Vertex v : rook_plus_path(b.r, b.s, target)) out.push_back(b.nodes[v]);
  return out;
}

// Hamilton path of the block from c(x|y) to `target`: the clone path with
// the twins c(xy), c(x|y) swapped.
std::vector<Partition> from_base(const Block& b, Vertex target) {
  std::vector<Partition> out;
  for (Vertex v : rook_plus_path(b.r, b.s, target)) {
    if (v == b.clone()) v = 0;
    else if (v == 0) v = b.clone();
    out.push_back(b.nodes[v]);
  }
  return out;
}

void append(std::vector<Partition>& seq, std::vector<Partition> part, bool reversed) {
  if (reversed) std::reverse(part.begin(), part.end());
  seq.insert(seq.end(), part.begin(), part.end());
}

Partition singletons(VertexMask m) {
  std::vector<VertexMask> cells;
  for (Vertex v : members(m)) cells.push_back(bit(v));
  return Partition::from_masks(cells);
}

int edges_in(const Graph& g, VertexMask alive) {
  int twice = 0;
  for (Vertex v : members(alive)) twice += degree_in(g, v, alive);
  return twice / 2;
}

bool almost_complete(const Graph& g, VertexMask alive) {
  const int n = popcount(alive);
  return edges_in(g, alive) == n * (n - 1) / 2 - 1;
}

// Odd inner cycle, not both of full degree: reroute through w1 w2.
std::vector<Partition> odd_reroute(const Graph& g, VertexMask rest, const std::vector<Partition>& inner,
                                   Vertex x, Vertex y) {
  const std::vector<Partition> rotated = [&] {
    const Partition c1 = singletons(rest);
    const auto it = std::find(inner.begin(), inner.end(), c1);
    if (it == inner.end()) throw ConstructionFailure("all-singletons colouring missing from the inner cycle");
    std::vector<Partition> r(it, inner.end());
    r.insert(r.end(), inner.begin(), it);
    return r;
  }();
  const int m = static_cast<int>(rotated.size());
  for (int dir = 0; dir < 2; ++dir) {
    std::vector<Partition> cyc = rotated;
    if (dir == 1) std::reverse(cyc.begin() + 1, cyc.end());
    std::vector<Block> blocks;
    for (const Partition& c : cyc) blocks.push_back(make_block(g, c, x, y));
    VertexMask pair = 0;
    for (VertexMask cell : cyc[1].cell_masks()) {
      if (std::popcount(cell) == 2) pair = cell;
    }
    const Vertex z1 = lowest(pair);
    const Vertex z2 = lowest(pair & ~bit(z1));
    // (mover, host vertex in c1, host vertex in c2), in the fixed case order
    struct Option {
      Vertex mover;
      Vertex host1;
      Vertex host2;
    };
    std::vector<Option> options;
    for (Vertex mover : {x, y}) {
      for (Vertex v : members(rest & ~pair)) {
        if (!g.has_edge(mover, v)) {
          options.push_back({mover, v, v});
          break;
        }
      }
    }
    for (Vertex mover : {x, y}) {
      if (!g.has_edge(mover, z1) && !g.has_edge(mover, z2)) options.push_back({mover, z1, z1});
    }
    for (const Option& o : options) {
      const Vertex other = o.mover == x ? y : x;
      const Partition w1 = cyc[0].with_vertex_in_cell(o.mover, cyc[0].cell_of(o.host1)).with_singleton(other);
      const Partition w2 = cyc[1].with_vertex_in_cell(o.mover, cyc[1].cell_of(o.host2)).with_singleton(other);
      const Vertex i1 = blocks[0].find(w1);
      const Vertex i2 = blocks[1].find(w2);
      if (i1 < 0 || i2 < 0 || adjacency_witness(w1, w2) < 0) continue;
      std::vector<Partition> seq;
      append(seq, from_clone(blocks[0], i1), false);
      append(seq, from_base(blocks[1], i2), true);
      for (int i = 2; i < m; ++i) {
        // 1-based index i + 1: odd reversed, even forward
        append(seq, from_clone(blocks[i], 0), (i + 1) % 2 == 1);
      }
      return seq;
    }
  }
  return {};
}

std::vector<Partition> bell_for_pair(const Graph& g, VertexMask alive, Vertex x, Vertex y) {
  const VertexMask rest = alive & ~bit(x) & ~bit(y);
  std::vector<Partition> seq;
  if (is_complete_in(g, rest)) {
    const Block b = make_block(g, singletons(rest), x, y);
    return from_clone(b, 0);
  }
  if (almost_complete(g, rest)) {
    VertexMask pair = 0;
    for (Vertex v : members(rest)) {
      const VertexMask missing = rest & ~g.neighbour_mask(v) & ~bit(v);
      if (missing) pair = bit(v) | missing;
    }
    std::vector<VertexMask> cells{pair};
    for (Vertex v : members(rest & ~pair)) cells.push_back(bit(v));
    const Block b1 = make_block(g, Partition::from_masks(cells), x, y);
    const Block b2 = make_block(g, singletons(rest), x, y);
    append(seq, from_clone(b1, 0), false);
    append(seq, from_clone(b2, 0), true);
    return seq;
  }
  const std::vector<Partition> inner = bell_cycle_in(g, rest);
  const int m = static_cast<int>(inner.size());
  if (m % 2 == 0) {
    for (int i = 0; i < m; ++i) append(seq, from_clone(make_block(g, inner[i], x, y), 0), i % 2 == 1);
    return seq;
  }
  const int full = popcount(alive) - 2;
  if (degree_in(g, x, alive) == full && degree_in(g, y, alive) == full) {
    std::vector<Block> blocks;
    for (const Partition& c : inner) blocks.push_back(make_block(g, c, x, y));
    for (const Block& b : blocks) seq.push_back(b.nodes[b.clone()]);
    for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) seq.push_back(it->nodes[0]);
    return seq;
  }
  return odd_reroute(g, rest, inner, x, y);
}

}  // namespace

std::vector<Partition> bell_cycle_in(const Graph& g, VertexMask alive) {
  const int n = popcount(alive);
  if (n < 2 || is_complete_in(g, alive) || almost_complete(g, alive)) {
    throw PreconditionError("B_n cycle needs a graph that is neither complete nor complete minus an edge, got " +
                            describe(alive));
  }
  std::string last_error = "no pair of non-adjacent vertices admits a reroute";
  for (Vertex x : members(alive)) {
    for (Vertex y : members(alive & ~g.neighbour_mask(x))) {
      if (y <= x) continue;
      try {
        std::vector<Partition> seq = bell_for_pair(g, alive, x, y);
        if (seq.empty()) continue;
        check_partition_sequence(g, alive, 1, n, seq, true, "B_n cycle");
        return seq;
      } catch (const ConstructionFailure& e) {
        last_error = e.what();
      }
    }
  }
  throw ConstructionFailure("B_n cycle on " + describe(alive) + ": " + last_error);
}

}  // namespace detail

DecoratedCycle bell_n_cycle(const Graph& g) {
  const int n = g.order();
  if (n > kMaxMaskVertices) throw CapExceeded("bell_n_cycle: graph too large");
  if (n < 2 || is_complete(g) || g.edge_count() + 1 == static_cast<std::size_t>(n) * (n - 1) / 2) {
    throw PreconditionError("bell_n_cycle: B_n of K_n or K_n - e has at most 2 vertices and no Hamilton cycle");
  }
  auto seq = detail::bell_cycle_in(g, g.all_vertices_mask());
  return detail::finish(g, n, ColourGraphKind::kBell, CycleKind::kCycle, std::move(seq), std::nullopt,
                        "bell_n_cycle");
}

}  // namespace bellstir
