#include <algorithm>
#include <array>
#include <optional>
#include <string_view>

#include "bellstir/errors.hpp"
#include "construction_detail.hpp"

namespace bellstir {
namespace detail {

std::vector<Vertex> endpoint_labels_in(const Graph& g, VertexMask alive, const Partition& p) {
  std::vector<Vertex> out;
  if (p.cell_count() != 3) return out;
  const auto [a, b] = two_colouring(g, alive);
  for (Vertex y : members(alive)) {
    const VertexMask ay = a & ~bit(y);
    const VertexMask by = b & ~bit(y);
    if (ay == 0 || by == 0) continue;
    if (Partition::from_masks({ay, by, bit(y)}) == p) out.push_back(y);
  }
  return out;
}

namespace {

Partition two_colouring_partition(const Graph& g, VertexMask alive) {
  const auto [a, b] = two_colouring(g, alive);
  return Partition::from_masks({a, b});
}

// Labels a of the first entry and b of the last with a != b, both != x.
bool pick_labels(const Graph& g, VertexMask alive, const Partition& first, const Partition& last,
                 Vertex x, Vertex* a, Vertex* b) {
  for (Vertex p : endpoint_labels_in(g, alive, first)) {
    if (p == x) continue;
    for (Vertex q : endpoint_labels_in(g, alive, last)) {
      if (q != x && q != p) {
        *a = p;
        *b = q;
        return true;
      }
    }
  }
  return false;
}

// ---- stored paths for the small trees ----

struct StoredTree {
  std::string_view letters;
  std::vector<std::vector<std::string_view>> paths;
};

const StoredTree& stored_p4() {
  static const StoredTree t{"abcd", {{"a|c|bd", "ad|b|c", "ac|b|d"}}};
  return t;
}

const StoredTree& stored_p5() {
  // 1 ad|c|be  2 ad|b|ce  3 ace|b|d  4 ac|be|d  5 a|bd|ce  6 ae|bd|c  7 ac|bd|e
  static const StoredTree t{"abcde",
                            {{"ace|b|d", "ad|b|ce", "ad|c|be", "ac|be|d", "ac|bd|e", "ae|bd|c", "a|bd|ce"},
                             {"ac|bd|e", "ae|bd|c", "a|bd|ce", "ad|b|ce", "ad|c|be", "ac|be|d", "ace|b|d"}}};
  return t;
}

const StoredTree& stored_spider() {
  // a, b hang off c; c-d-e.
  // 1 ab|ce|d  2 a|bd|ce  3 abd|c|e  4 ad|b|ce  5 ad|be|c  6 ae|bd|c  7 abe|c|d
  static const StoredTree t{"abcde",
                            {{"ab|ce|d", "abe|c|d", "ad|be|c", "ad|b|ce", "a|bd|ce", "ae|bd|c", "abd|c|e"},
                             {"a|bd|ce", "ab|ce|d", "abe|c|d", "ae|bd|c", "abd|c|e", "ad|be|c", "ad|b|ce"}}};
  return t;
}

Partition from_letters(std::string_view text, std::string_view letters, const std::vector<Vertex>& map) {
  std::vector<VertexMask> cells{0};
  for (char ch : text) {
    if (ch == '|') {
      cells.push_back(0);
    } else {
      cells.back() |= bit(map[letters.find(ch)]);
    }
  }
  return Partition::from_masks(cells);
}

// Vertices of a path on `alive`, from end `start`.
std::vector<Vertex> walk_path(const Graph& g, VertexMask alive, Vertex start) {
  std::vector<Vertex> out{start};
  VertexMask seen = bit(start);
  while (true) {
    const VertexMask next = g.neighbour_mask(out.back()) & alive & ~seen;
    if (next == 0) break;
    out.push_back(lowest(next));
    seen |= next;
  }
  return out;
}

// Letter maps a, b, c, ... -> vertex for each orientation of the small tree.
std::vector<std::vector<Vertex>> orientations(const Graph& g, VertexMask alive, const StoredTree** stored) {
  const int n = popcount(alive);
  std::vector<std::vector<Vertex>> out;
  int max_degree = 0;
  Vertex hub = -1;
  for (Vertex v : members(alive)) {
    if (degree_in(g, v, alive) > max_degree) {
      max_degree = degree_in(g, v, alive);
      hub = v;
    }
  }
  if (max_degree == 2) {
    *stored = n == 4 ? &stored_p4() : &stored_p5();
    const auto ends = leaves_in(g, alive);
    out.push_back(walk_path(g, alive, ends[0]));
    out.push_back(walk_path(g, alive, ends[1]));
    return out;
  }
  *stored = &stored_spider();
  Vertex d = -1;
  std::vector<Vertex> twigs;
  for (Vertex v : members(g.neighbour_mask(hub) & alive)) {
    if (degree_in(g, v, alive) == 2) {
      d = v;
    } else {
      twigs.push_back(v);
    }
  }
  const Vertex e = lowest(g.neighbour_mask(d) & alive & ~bit(hub));
  out.push_back({twigs[0], twigs[1], hub, d, e});
  out.push_back({twigs[1], twigs[0], hub, d, e});
  return out;
}

std::vector<Partition> small_tree_cycle(const Graph& g, VertexMask alive, Vertex forbidden, Vertex* a,
                                        Vertex* b) {
  const StoredTree* stored = nullptr;
  const auto maps = orientations(g, alive, &stored);
  for (const auto& map : maps) {
    for (const auto& path : stored->paths) {
      for (int dir = 0; dir < 2; ++dir) {
        std::vector<Partition> seq;
        for (std::string_view text : path) seq.push_back(from_letters(text, stored->letters, map));
        if (dir == 1) std::reverse(seq.begin(), seq.end());
        if (pick_labels(g, alive, seq.front(), seq.back(), forbidden, a, b)) {
          seq.insert(seq.begin(), two_colouring_partition(g, alive));
          return seq;
        }
      }
    }
  }
  throw ConstructionFailure("no stored path of the tree on " + describe(alive) +
                            " has end labels avoiding vertex " + std::to_string(forbidden));
}

// ---- the general step ----

// Extensions of the colourings of a B_3 cycle of T - l1 - l2, four per
// colouring, listed around their 4-cycle. Block 0 is the 2-colouring's,
// starting at the 2-colouring of T.
struct Blocks {
  std::vector<std::array<Partition, 4>> ext;
};

Blocks lift(const std::vector<Partition>& cyc, Vertex l1, Vertex p1, Vertex l2, Vertex p2) {
  Blocks out;
  out.ext.reserve(cyc.size());
  for (std::size_t i = 0; i < cyc.size(); ++i) {
    const auto& cells = cyc[i].cell_masks();
    std::vector<int> o1, o2;
    for (int c = 0; c < static_cast<int>(cells.size()); ++c) {
      if (!(cells[c] & bit(p1))) o1.push_back(c);
      if (!(cells[c] & bit(p2))) o2.push_back(c);
    }
    auto put = [&](int c1, int c2) {
      std::vector<VertexMask> m = cells;
      if (c1 >= 0) m[c1] |= bit(l1); else m.push_back(bit(l1));
      if (c2 >= 0) m[c2] |= bit(l2); else m.push_back(bit(l2));
      return Partition::from_masks(m);
    };
    if (i == 0) {
      std::vector<VertexMask> both = cells;
      both.push_back(bit(l1) | bit(l2));
      out.ext.push_back({put(o1[0], o2[0]), put(-1, o2[0]), Partition::from_masks(both), put(o1[0], -1)});
    } else {
      out.ext.push_back({put(o1[0], o2[0]), put(o1[1], o2[0]), put(o1[1], o2[1]), put(o1[0], o2[1])});
    }
  }
  return out;
}

bool adjacent_nodes(const Blocks& b, int u, int v) {
  return adjacency_witness(b.ext[u / 4][u % 4], b.ext[v / 4][v % 4]) >= 0;
}

// Cutting edge (e, e+1) of block t's 4-cycle and routing through block t+1
// from fu (next to e) round to fv (next to e+1). Block t+1 then misses the
// edge between fu and fv.
struct Move {
  int edge;
  int fu;
  int fv;
  int missing() const { return fv == (fu + 1) % 4 ? fu : fv; }
};

std::vector<Move> moves(const Blocks& b, int t, int missing) {
  std::vector<Move> out;
  for (int e = 0; e < 4; ++e) {
    if (e == missing) continue;
    if (t == 0 && e != 0 && e != 3) continue;  // first cut sits at the 2-colouring of T
    const int u = t * 4 + e;
    const int v = t * 4 + (e + 1) % 4;
    for (int fu = 0; fu < 4; ++fu) {
      if (!adjacent_nodes(b, u, (t + 1) * 4 + fu)) continue;
      for (int fv : {(fu + 1) % 4, (fu + 3) % 4}) {
        if (adjacent_nodes(b, v, (t + 1) * 4 + fv)) out.push_back({e, fu, fv});
      }
    }
  }
  return out;
}

// A cycle over the nodes block * 4 + position.
struct Ring {
  std::vector<int> next, prev;
};

void apply(Ring& ring, int t, const Move& mv) {
  int p = t * 4 + mv.edge;
  int q = t * 4 + (mv.edge + 1) % 4;
  int fp = mv.fu;
  int fq = mv.fv;
  if (ring.next[p] != q) {
    std::swap(p, q);
    std::swap(fp, fq);
  }
  const int dir = fq == (fp + 1) % 4 ? 3 : 1;  // the long way round
  int cur = p;
  for (int k = 0, at = fp; k < 4; ++k, at = (at + dir) % 4) {
    const int node = (t + 1) * 4 + at;
    ring.next[cur] = node;
    ring.prev[node] = cur;
    cur = node;
  }
  ring.next[cur] = q;
  ring.prev[q] = cur;
}

// Moves for blocks 1.. given the first one, found by a sweep over the
// missing edge of each block; empty when no sequence exists.
std::optional<std::vector<Move>> complete_moves(const Blocks& b, const Move& first) {
  const int m = static_cast<int>(b.ext.size());
  std::vector<Move> chosen{first};
  if (m <= 2) return chosen;
  // back[t][state] = (previous state, move) reaching `state` in block t
  std::vector<std::array<std::pair<int, Move>, 4>> back(m);
  std::vector<std::array<bool, 4>> reach(m, {false, false, false, false});
  reach[1][first.missing()] = true;
  for (int t = 1; t + 1 < m; ++t) {
    for (int st = 0; st < 4; ++st) {
      if (!reach[t][st]) continue;
      for (const Move& mv : moves(b, t, st)) {
        const int ns = mv.missing();
        if (!reach[t + 1][ns]) {
          reach[t + 1][ns] = true;
          back[t + 1][ns] = {st, mv};
        }
      }
    }
  }
  int st = -1;
  for (int s = 0; s < 4 && st < 0; ++s) {
    if (reach[m - 1][s]) st = s;
  }
  if (st < 0) return std::nullopt;
  std::vector<Move> rest(m - 2, first);
  for (int t = m - 1; t >= 2; --t) {
    rest[t - 2] = back[t][st].second;
    st = back[t][st].first;
  }
  chosen.insert(chosen.end(), rest.begin(), rest.end());
  return chosen;
}

std::vector<Partition> general_cycle(const Graph& g, VertexMask alive, Vertex x, Vertex* a, Vertex* b) {
  const auto leaves = leaves_in(g, alive);
  Vertex l1 = -1, l2 = -1, z = -1;
  if (std::find(leaves.begin(), leaves.end(), x) != leaves.end()) {
    l1 = x;
    z = neighbour_in(g, x, alive);
    for (Vertex l : leaves) {
      if (neighbour_in(g, l, alive) != z) {
        l2 = l;
        break;
      }
    }
  } else {
    z = x;
    for (std::size_t i = 0; i < leaves.size() && l1 < 0; ++i) {
      for (std::size_t j = i + 1; j < leaves.size(); ++j) {
        if (neighbour_in(g, leaves[i], alive) != neighbour_in(g, leaves[j], alive)) {
          l1 = leaves[i];
          l2 = leaves[j];
          break;
        }
      }
    }
  }
  if (l1 < 0 || l2 < 0) throw ConstructionFailure("no two leaves with distinct neighbours in " + describe(alive));
  const Vertex p1 = neighbour_in(g, l1, alive);
  const Vertex p2 = neighbour_in(g, l2, alive);
  const VertexMask sub = alive & ~bit(l1) & ~bit(l2);
  Vertex sa = -1, sb = -1;
  std::vector<Partition> inner = b3_cycle_in(g, sub, z, &sa, &sb);

  for (int orient = 0; orient < 2; ++orient) {
    if (orient == 1) std::reverse(inner.begin() + 1, inner.end());
    const Blocks blocks = lift(inner, l1, p1, l2, p2);
    const int m = static_cast<int>(inner.size());
    for (const Move& first : moves(blocks, 0, -1)) {
      const auto plan = complete_moves(blocks, first);
      if (!plan) continue;
      Ring ring;
      ring.next.assign(4 * m, -1);
      ring.prev.assign(4 * m, -1);
      for (int i = 0; i < 4; ++i) {
        ring.next[i] = (i + 1) % 4;
        ring.prev[(i + 1) % 4] = i;
      }
      for (int t = 0; t + 1 < m; ++t) apply(ring, t, (*plan)[t]);
      std::vector<Partition> seq;
      seq.reserve(4 * m);
      int node = 0;
      do {
        seq.push_back(blocks.ext[node / 4][node % 4]);
        node = ring.next[node];
      } while (node != 0);
      if (pick_labels(g, alive, seq[1], seq.back(), x, a, b)) return seq;
    }
  }
  throw ConstructionFailure("B_3 splice failed on tree " + describe(alive) + " with x = " +
                            std::to_string(x) + ", removed leaves " + std::to_string(l1) + ", " +
                            std::to_string(l2));
}

}  // namespace

std::vector<Partition> b3_cycle_in(const Graph& g, VertexMask alive, Vertex forbidden, Vertex* a, Vertex* b) {
  const int n = popcount(alive);
  if (n < 4) throw PreconditionError("B_3 tree cycle needs at least 4 vertices");
  std::vector<Partition> seq;
  if (is_star_in(g, alive)) {
    seq = star_b3_in(g, alive, forbidden, a, b);
  } else if (n <= 5) {
    seq = small_tree_cycle(g, alive, forbidden, a, b);
  } else {
    seq = general_cycle(g, alive, forbidden, a, b);
  }
  check_partition_sequence(g, alive, 1, 3, seq, true, "B_3 tree cycle");
  return seq;
}

}  // namespace detail

std::vector<Vertex> endpoint_labels(const Tree& t, const Partition& p) {
  return detail::endpoint_labels_in(t.graph(), t.graph().all_vertices_mask(), p);
}

namespace {

void check_tree_size(const Tree& t, int minimum, const char* what) {
  if (t.order() < minimum) {
    throw PreconditionError(std::string(what) + " needs a tree on at least " + std::to_string(minimum) +
                            " vertices");
  }
  if (t.order() > kMaxMaskVertices) throw CapExceeded(std::string(what) + ": tree too large");
}

}  // namespace

EndpointPath s3_path_with_endpoints(const Tree& t, Vertex x) {
  check_tree_size(t, 4, "s3_path_with_endpoints");
  if (x < 0 || x >= t.order()) throw PreconditionError("s3_path_with_endpoints: x out of range");
  EndpointPath out;
  auto seq = detail::b3_cycle_in(t.graph(), t.graph().all_vertices_mask(), x, &out.a, &out.b);
  seq.erase(seq.begin());
  out.path = detail::finish(t.graph(), 3, ColourGraphKind::kStirling, CycleKind::kPath, std::move(seq),
                            std::nullopt, "s3_path_with_endpoints");
  out.path.anchors["a"] = out.a;
  out.path.anchors["b"] = out.b;
  return out;
}

DecoratedCycle b3_tree_cycle(const Tree& t) {
  check_tree_size(t, 4, "b3_tree_cycle");
  Vertex a = -1, b = -1;
  auto seq = detail::b3_cycle_in(t.graph(), t.graph().all_vertices_mask(), -1, &a, &b);
  DecoratedCycle out = detail::finish(t.graph(), 3, ColourGraphKind::kBell, CycleKind::kCycle,
                                      std::move(seq), std::nullopt, "b3_tree_cycle");
  out.anchors["a"] = a;
  out.anchors["b"] = b;
  return out;
}

DecoratedCycle s3_tree_ham_path(const Tree& t) {
  check_tree_size(t, 3, "s3_tree_ham_path");
  std::vector<Partition> seq;
  if (t.order() == 3) {
    seq.push_back(Partition::from_cells({{0}, {1}, {2}}));
  } else {
    Vertex a = -1, b = -1;
    seq = detail::b3_cycle_in(t.graph(), t.graph().all_vertices_mask(), -1, &a, &b);
    seq.erase(seq.begin());
  }
  return detail::finish(t.graph(), 3, ColourGraphKind::kStirling, CycleKind::kPath, std::move(seq),
                        std::nullopt, "s3_tree_ham_path");
}

}  // namespace bellstir
