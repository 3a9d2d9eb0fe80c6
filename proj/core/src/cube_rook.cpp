#include <algorithm>
#include <initializer_list>

#include "bellstir/errors.hpp"
#include "construction_detail.hpp"

namespace bellstir {

std::vector<BinarySeq> gray_cycle(int m) {
  if (m < 2) throw PreconditionError("gray_cycle needs m >= 2, got " + std::to_string(m));
  if (m > BinarySeq::kMaxLength) throw CapExceeded("gray_cycle: m too large");
  std::vector<BinarySeq> out;
  const std::uint32_t count = std::uint32_t{1} << m;
  out.reserve(count);
  for (std::uint32_t i = 0; i < count; ++i) out.emplace_back(i ^ (i >> 1), m);
  return out;
}

namespace {

// Path from x to y through the subcube spanned by `free` (coordinate list),
// all other coordinates fixed.
void cube_path(const BinarySeq& x, const BinarySeq& y, std::vector<int> free,
               std::vector<BinarySeq>& out) {
  if (free.size() == 1) {
    out.push_back(x);
    out.push_back(y);
    return;
  }
  auto split = std::find_if(free.begin(), free.end(), [&](int c) { return x.at(c) != y.at(c); });
  const int c = *split;
  free.erase(split);
  // z: neighbour of x inside x's half. Its parity is y's, so z + e_c != y.
  const BinarySeq z = x.flipped(free.front());
  cube_path(x, z, free, out);
  cube_path(z.flipped(c), y, free, out);
}

}  // namespace

std::vector<BinarySeq> hypercube_path(const BinarySeq& x, const BinarySeq& y) {
  if (x.length() != y.length()) throw PreconditionError("hypercube_path: lengths differ");
  if (x.length() < 1) throw PreconditionError("hypercube_path: empty sequences");
  if (x.odd() == y.odd()) {
    throw PreconditionError("hypercube_path: " + x.to_string() + " and " + y.to_string() +
                            " have the same parity, no Hamilton path joins them");
  }
  std::vector<int> free(static_cast<std::size_t>(x.length()));
  for (int i = 0; i < x.length(); ++i) free[i] = i;
  std::vector<BinarySeq> out;
  out.reserve(std::size_t{1} << x.length());
  cube_path(x, y, free, out);
  return out;
}

namespace {

// Row `row` of K_r box K_s from column `entry` to column `exit`.
void walk_row(int s, int row, int entry, int exit, std::vector<Vertex>& out) {
  out.push_back(row * s + entry);
  for (int c = 0; c < s; ++c) {
    if (c != entry && c != exit) out.push_back(row * s + c);
  }
  if (exit != entry) out.push_back(row * s + exit);
}

int first_column_avoiding(int s, std::initializer_list<int> banned) {
  for (int c = 0; c < s; ++c) {
    if (std::find(banned.begin(), banned.end(), c) == banned.end()) return c;
  }
  return -1;
}

// Assumes s >= 3 and r >= 2.
std::vector<Vertex> rook_route(int r, int s, Vertex u, Vertex v) {
  const int ru = u / s, cu = u % s, rv = v / s, cv = v % s;
  std::vector<int> rows;
  for (int i = 0; i < r; ++i) {
    if (i != ru && i != rv) rows.push_back(i);
  }
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(r * s));
  if (ru != rv) {
    int entry = cu;
    rows.insert(rows.begin(), ru);
    for (std::size_t k = 0; k < rows.size(); ++k) {
      const bool last = k + 1 == rows.size();
      const int exit = last ? first_column_avoiding(s, {entry, cv}) : first_column_avoiding(s, {entry});
      walk_row(s, rows[k], entry, exit, out);
      entry = exit;
    }
    walk_row(s, rv, entry, cv, out);
    return out;
  }
  // Same row: drop down from u, sweep the other rows, come back up in a
  // column away from both u and v, then finish the row at v.
  out.push_back(u);
  const int back = first_column_avoiding(s, {cu, cv});
  int entry = cu;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    int exit = back;
    if (k + 2 == rows.size()) {
      exit = first_column_avoiding(s, {entry, back});
    } else if (k + 1 < rows.size()) {
      exit = first_column_avoiding(s, {entry});
    }
    walk_row(s, rows[k], entry, exit, out);
    entry = exit;
  }
  out.push_back(ru * s + entry);
  for (int c = 0; c < s; ++c) {
    if (c != cu && c != cv && c != entry) out.push_back(ru * s + c);
  }
  out.push_back(v);
  return out;
}

}  // namespace

std::vector<Vertex> rook_hamilton_path(int r, int s, Vertex u, Vertex v) {
  if (r < 2 || s < 2 || (r == 2 && s == 2)) {
    throw PreconditionError("rook_hamilton_path needs r, s >= 2 and not r = s = 2");
  }
  if (u < 0 || v < 0 || u >= r * s || v >= r * s || u == v) {
    throw PreconditionError("rook_hamilton_path: bad endpoints");
  }
  if (s >= 3) return rook_route(r, s, u, v);
  // s == 2: route in the transpose, where rows have r >= 3 columns.
  auto transpose = [&](Vertex w, int rows, int cols) { return (w % cols) * rows + w / cols; };
  std::vector<Vertex> t = rook_route(s, r, transpose(u, r, s), transpose(v, r, s));
  for (Vertex& w : t) w = transpose(w, s, r);
  return t;
}

std::vector<Vertex> rook_plus_path(int r, int s, Vertex target) {
  if (r < 1 || s < 1) throw PreconditionError("rook_plus_path needs r, s >= 1");
  const Vertex clone = r * s;
  if (target < 0 || target >= clone) {
    throw PreconditionError("rook_plus_path: target " + std::to_string(target) + " out of range");
  }
  std::vector<Vertex> out{clone};
  if (r == 1 || s == 1) {
    for (Vertex w = 0; w < clone; ++w) {
      if (w != target) out.push_back(w);
    }
    out.push_back(target);
  } else if (r == 2 && s == 2) {
    static constexpr int kTable[4][4] = {{1, 3, 2, 0}, {0, 2, 3, 1}, {0, 1, 3, 2}, {1, 0, 2, 3}};
    out.insert(out.end(), std::begin(kTable[target]), std::end(kTable[target]));
  } else {
    const Vertex start = target == 0 ? 1 : 0;
    const auto rest = rook_hamilton_path(r, s, start, target);
    out.insert(out.end(), rest.begin(), rest.end());
  }
  return out;
}

// ---- stars ----

namespace {

// Leaves of star(n) in encoding order: reference first, then positions.
Partition star_partition(const std::vector<Vertex>& leaves, const BinarySeq& bits) {
  VertexMask zero = bit(leaves[0]);
  VertexMask one = 0;
  for (int i = 0; i < bits.length(); ++i) (bits.at(i) ? one : zero) |= bit(leaves[i + 1]);
  std::vector<VertexMask> cells{bit(0), zero};
  if (one != 0) cells.push_back(one);
  return Partition::from_masks(cells);
}

}  // namespace

DecoratedCycle star_s3_cycle(int n) {
  if (n < 3 || n % 2 == 0) {
    throw PreconditionError("star_s3_cycle needs odd n >= 3; S_3(K_{1," + std::to_string(n) +
                            "}) is bipartite with an odd number of vertices");
  }
  const int m = n - 1;
  std::vector<Vertex> leaves;
  for (Vertex v = 1; v <= n; ++v) leaves.push_back(v);
  std::vector<BinarySeq> seq;
  if (n == 3) {
    seq = {BinarySeq(0b01, 2), BinarySeq(0b11, 2), BinarySeq(0b10, 2)};
  } else {
    const std::uint32_t low = (std::uint32_t{1} << (m - 2)) - 1;
    auto prefixed = [&](std::uint32_t prefix, std::uint32_t tail) {
      return BinarySeq((prefix << (m - 2)) | tail, m);
    };
    // 00-block: the reflected code minus its zero, from 00|0..01 to 00|10..0.
    for (std::uint32_t i = 1; i <= low; ++i) seq.push_back(prefixed(0b00, i ^ (i >> 1)));
    // 1x-block: Hamilton path of Q_{m-1} from 1|01..1 to 0|0..01 (last m-1 coordinates).
    const BinarySeq from((std::uint32_t{1} << (m - 2)) | (low >> 1), m - 1);
    const BinarySeq to(1, m - 1);
    std::vector<BinarySeq> ones;
    for (const BinarySeq& t : hypercube_path(from, to)) ones.push_back(BinarySeq((1U << (m - 1)) | t.value(), m));
    // 01-block spliced between two consecutive 11-vertices.
    std::size_t at = ones.size();
    for (std::size_t i = 0; i + 1 < ones.size(); ++i) {
      if (ones[i].at(1) && ones[i + 1].at(1)) {
        at = i;
        break;
      }
    }
    if (at == ones.size()) throw ConstructionFailure("star_s3_cycle: no consecutive 11-pair");
    // path of the 01-block on the last m-2 coordinates
    const BinarySeq p(ones[at].value() & low, m - 2);
    const BinarySeq q(ones[at + 1].value() & low, m - 2);
    std::vector<BinarySeq> mid;
    for (const BinarySeq& t : hypercube_path(p, q)) mid.push_back(prefixed(0b01, t.value()));
    for (std::size_t i = 0; i < ones.size(); ++i) {
      seq.push_back(ones[i]);
      if (i == at) seq.insert(seq.end(), mid.begin(), mid.end());
    }
  }
  std::vector<Partition> parts;
  parts.reserve(seq.size());
  for (const BinarySeq& b : seq) parts.push_back(star_partition(leaves, b));
  return detail::finish(star(n), 3, ColourGraphKind::kStirling, CycleKind::kCycle, std::move(parts),
                        std::nullopt, "star_s3_cycle(" + std::to_string(n) + ")");
}

namespace detail {

// B_3 of a star on `alive`, starting at the 2-colouring.
std::vector<Partition> star_b3_in(const Graph& g, VertexMask alive, Vertex forbidden, Vertex* a,
                                  Vertex* b) {
  Vertex centre = -1;
  for (Vertex v : members(alive)) {
    if (centre < 0 || degree_in(g, v, alive) > degree_in(g, centre, alive)) centre = v;
  }
  std::vector<Vertex> leaves = members(alive & ~bit(centre));
  if (leaves.size() < 3) throw PreconditionError("star B_3 cycle needs at least 3 leaves");
  const auto ref = std::find(leaves.begin(), leaves.end(), forbidden);
  if (ref != leaves.end()) std::rotate(leaves.begin(), ref, ref + 1);
  const int m = static_cast<int>(leaves.size()) - 1;
  std::vector<Partition> out;
  for (const BinarySeq& bits : gray_cycle(m)) {
    VertexMask zero = bit(leaves[0]);
    VertexMask one = 0;
    for (int i = 0; i < m; ++i) (bits.at(i) ? one : zero) |= bit(leaves[i + 1]);
    std::vector<VertexMask> cells{bit(centre), zero};
    if (one != 0) cells.push_back(one);
    out.push_back(Partition::from_masks(cells));
  }
  // cycle[1] = 0..01, last = 10..0
  *a = leaves[m];
  *b = leaves[1];
  return out;
}

}  // namespace detail

DecoratedCycle star_b3_cycle(int n, Vertex forbidden) {
  if (n < 3) throw PreconditionError("star_b3_cycle needs n >= 3");
  if (forbidden < 0 || forbidden > n) throw PreconditionError("star_b3_cycle: forbidden vertex out of range");
  const Graph g = star(n);
  Vertex a = -1, b = -1;
  auto seq = detail::star_b3_in(g, g.all_vertices_mask(), forbidden, &a, &b);
  DecoratedCycle out = detail::finish(g, 3, ColourGraphKind::kBell, CycleKind::kCycle, std::move(seq),
                                      std::nullopt, "star_b3_cycle(" + std::to_string(n) + ")");
  out.anchors["a"] = a;
  out.anchors["b"] = b;
  return out;
}

}  // namespace bellstir
