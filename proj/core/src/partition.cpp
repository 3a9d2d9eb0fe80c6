#include "bellstir/partition.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "bellstir/errors.hpp"

namespace bellstir {

namespace {

inline Vertex lowest(VertexMask m) { return std::countr_zero(m); }

// Lexicographic comparison of the sorted member lists of two cells.
std::strong_ordering compare_cells(VertexMask a, VertexMask b) {
  while (a != 0 && b != 0) {
    const Vertex x = lowest(a);
    const Vertex y = lowest(b);
    if (x != y) return x <=> y;
    a &= a - 1;
    b &= b - 1;
  }
  if (a == 0 && b == 0) return std::strong_ordering::equal;
  return a == 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

void check_mask_vertex(Vertex v) {
  if (v < 0 || v >= kMaxMaskVertices) {
    throw PreconditionError("partition vertex ids must lie in 0..63");
  }
}

}  // namespace

void Partition::canonicalize() {
  std::sort(cells_.begin(), cells_.end(),
            [](VertexMask a, VertexMask b) { return lowest(a) < lowest(b); });
}

Partition Partition::from_masks(std::vector<VertexMask> cells) {
  VertexMask seen = 0;
  for (VertexMask c : cells) {
    if (c == 0) throw PreconditionError("partition cells must be nonempty");
    if (seen & c) throw PreconditionError("partition cells must be disjoint");
    seen |= c;
  }
  Partition p(std::move(cells));
  p.canonicalize();
  return p;
}

Partition Partition::from_cells(const std::vector<std::vector<Vertex>>& cells) {
  std::vector<VertexMask> masks;
  masks.reserve(cells.size());
  for (const auto& cell : cells) {
    VertexMask m = 0;
    for (Vertex v : cell) {
      check_mask_vertex(v);
      if (m & bit(v)) throw PreconditionError("vertex repeated inside a cell");
      m |= bit(v);
    }
    masks.push_back(m);
  }
  return from_masks(std::move(masks));
}

Partition Partition::from_colours(std::span<const int> colour) {
  std::vector<std::pair<int, VertexMask>> by_colour;
  for (std::size_t v = 0; v < colour.size(); ++v) {
    check_mask_vertex(static_cast<Vertex>(v));
    auto it = std::find_if(by_colour.begin(), by_colour.end(),
                           [&](const auto& e) { return e.first == colour[v]; });
    if (it == by_colour.end()) {
      by_colour.emplace_back(colour[v], bit(static_cast<Vertex>(v)));
    } else {
      it->second |= bit(static_cast<Vertex>(v));
    }
  }
  std::vector<VertexMask> masks;
  for (const auto& [c, m] : by_colour) masks.push_back(m);
  return from_masks(std::move(masks));
}

VertexMask Partition::ground() const {
  VertexMask g = 0;
  for (VertexMask c : cells_) g |= c;
  return g;
}

std::vector<std::vector<Vertex>> Partition::cells() const {
  std::vector<std::vector<Vertex>> out;
  out.reserve(cells_.size());
  for (VertexMask c : cells_) {
    std::vector<Vertex> cell;
    for (VertexMask m = c; m != 0; m &= m - 1) cell.push_back(lowest(m));
    out.push_back(std::move(cell));
  }
  return out;
}

int Partition::cell_of(Vertex v) const {
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    if (cells_[i] & bit(v)) return static_cast<int>(i);
  }
  return -1;
}

VertexMask Partition::cell_mask_of(Vertex v) const {
  const int i = cell_of(v);
  return i < 0 ? 0 : cells_[i];
}

bool Partition::is_singleton(Vertex v) const { return cell_mask_of(v) == bit(v); }

bool Partition::is_independent_in(const Graph& g) const {
  for (VertexMask c : cells_) {
    for (VertexMask m = c; m != 0; m &= m - 1) {
      const Vertex v = lowest(m);
      if (v >= g.order()) return false;
      if (g.neighbour_mask(v) & c) return false;
    }
  }
  return true;
}

Partition Partition::restricted(Vertex x) const {
  const int i = cell_of(x);
  if (i < 0) throw PreconditionError("restrict: vertex " + std::to_string(x) + " not in ground set");
  std::vector<VertexMask> out = cells_;
  out[i] &= ~bit(x);
  if (out[i] == 0) {
    out.erase(out.begin() + i);
  }
  Partition p(std::move(out));
  p.canonicalize();
  return p;
}

Partition Partition::with_vertex_in_cell(Vertex v, int cell) const {
  check_mask_vertex(v);
  if (contains(v)) throw PreconditionError("vertex " + std::to_string(v) + " already present");
  if (cell < 0 || cell > cell_count()) throw PreconditionError("cell index out of range");
  std::vector<VertexMask> out = cells_;
  if (cell == cell_count()) {
    out.push_back(bit(v));
  } else {
    out[cell] |= bit(v);
  }
  Partition p(std::move(out));
  p.canonicalize();
  return p;
}

Partition Partition::with_vertex_moved(Vertex v, Vertex host) const {
  Partition base = restricted(v);
  if (host < 0) return base.with_singleton(v);
  const int cell = base.cell_of(host);
  if (cell < 0) throw PreconditionError("host vertex not in partition");
  return base.with_vertex_in_cell(v, cell);
}

Partition Partition::merged_with(const Partition& other) const {
  if (ground() & other.ground()) throw PreconditionError("merged partitions must be disjoint");
  std::vector<VertexMask> out = cells_;
  out.insert(out.end(), other.cells_.begin(), other.cells_.end());
  Partition p(std::move(out));
  p.canonicalize();
  return p;
}

Partition Partition::relabeled(std::span<const Vertex> map) const {
  std::vector<VertexMask> out;
  out.reserve(cells_.size());
  for (VertexMask c : cells_) {
    VertexMask m = 0;
    for (VertexMask r = c; r != 0; r &= r - 1) {
      const Vertex v = map[lowest(r)];
      check_mask_vertex(v);
      m |= bit(v);
    }
    out.push_back(m);
  }
  return from_masks(std::move(out));
}

std::string Partition::to_string() const {
  std::string out;
  bool first_cell = true;
  for (const auto& cell : cells()) {
    if (!first_cell) out += '|';
    first_cell = false;
    for (std::size_t i = 0; i < cell.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(cell[i]);
    }
  }
  return out;
}

std::string Partition::to_string(const Graph& g) const {
  std::string out;
  bool first_cell = true;
  for (const auto& cell : cells()) {
    if (!first_cell) out += '|';
    first_cell = false;
    for (std::size_t i = 0; i < cell.size(); ++i) {
      if (i) out += ',';
      out += g.label(cell[i]);
    }
  }
  return out;
}

Partition Partition::parse(std::string_view text) {
  std::vector<std::vector<Vertex>> cells;
  if (text.empty()) return Partition();
  std::vector<Vertex> current;
  std::string number;
  auto flush_number = [&] {
    if (number.empty()) throw PreconditionError("malformed partition text");
    current.push_back(std::stoi(number));
    number.clear();
  };
  for (char c : text) {
    if (c >= '0' && c <= '9') {
      number += c;
    } else if (c == ',') {
      flush_number();
    } else if (c == '|') {
      flush_number();
      cells.push_back(std::move(current));
      current.clear();
    } else {
      throw PreconditionError(std::string("unexpected character '") + c + "' in partition text");
    }
  }
  flush_number();
  cells.push_back(std::move(current));
  return from_cells(cells);
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
  const std::size_t common = std::min(a.cells_.size(), b.cells_.size());
  for (std::size_t i = 0; i < common; ++i) {
    const auto c = compare_cells(a.cells_[i], b.cells_[i]);
    if (c != std::strong_ordering::equal) return c;
  }
  return a.cells_.size() <=> b.cells_.size();
}

std::size_t Partition::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (VertexMask c : cells_) {
    h ^= std::hash<VertexMask>{}(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

Partition restrict(const Partition& p, Vertex x) { return p.restricted(x); }

namespace {

// cell[v] = mask of the cell holding v.
void cell_table(const Partition& p, VertexMask (&table)[kMaxMaskVertices]) {
  for (VertexMask c : p.cell_masks()) {
    for (VertexMask m = c; m != 0; m &= m - 1) table[lowest(m)] = c;
  }
}

void check_comparable(const Partition& p, const Partition& q) {
  if (p.ground() != q.ground()) throw PreconditionError("adjacent: partitions over different ground sets");
  if (p == q) throw PreconditionError("adjacent: a partition is not adjacent to itself");
}

}  // namespace

Vertex adjacency_witness(const Partition& p, const Partition& q) {
  if (p.ground() != q.ground() || p == q) return -1;
  VertexMask tp[kMaxMaskVertices];
  VertexMask tq[kMaxMaskVertices];
  cell_table(p, tp);
  cell_table(q, tq);
  const VertexMask ground = p.ground();
  VertexMask differing = 0;
  for (VertexMask m = ground; m != 0; m &= m - 1) {
    const Vertex v = lowest(m);
    if (tp[v] != tq[v]) differing |= bit(v);
  }
  // Any witness x must itself change cells, so only differing vertices are tried.
  for (VertexMask cand = differing; cand != 0; cand &= cand - 1) {
    const Vertex x = lowest(cand);
    const VertexMask keep = ~bit(x);
    bool ok = true;
    for (VertexMask m = differing & keep; m != 0; m &= m - 1) {
      const Vertex v = lowest(m);
      if ((tp[v] & keep) != (tq[v] & keep)) {
        ok = false;
        break;
      }
    }
    if (ok) return x;
  }
  return -1;
}

bool adjacent(const Partition& p, const Partition& q) {
  check_comparable(p, q);
  return adjacency_witness(p, q) >= 0;
}

bool adjacent_by_restriction(const Partition& p, const Partition& q) {
  check_comparable(p, q);
  for (VertexMask m = p.ground(); m != 0; m &= m - 1) {
    const Vertex x = lowest(m);
    if (p.restricted(x) == q.restricted(x)) return true;
  }
  return false;
}

std::string to_string(FamilyMode mode) {
  switch (mode) {
    case FamilyMode::kAtMost:
      return "at-most";
    case FamilyMode::kExactly:
      return "exactly";
    case FamilyMode::kLabeled:
      return "labeled";
  }
  return "?";
}

namespace {

struct PartitionWalker {
  const Graph& g;
  int min_cells;
  int max_cells;
  const std::function<bool(const Partition&)>& visit;
  std::vector<VertexMask> nbr;
  std::vector<VertexMask> cells;
  bool stopped = false;

  void run(Vertex v) {
    if (stopped) return;
    const int n = g.order();
    const int have = static_cast<int>(cells.size());
    // Each remaining vertex can open at most one new cell.
    if (have + (n - v) < min_cells) return;
    if (v == n) {
      if (have >= min_cells && have <= max_cells) {
        if (!visit(Partition::from_masks(cells))) stopped = true;
      }
      return;
    }
    for (int i = 0; i < have && !stopped; ++i) {
      if ((cells[i] & nbr[v]) == 0) {
        cells[i] |= bit(v);
        run(v + 1);
        cells[i] &= ~bit(v);
      }
    }
    if (have < max_cells && !stopped) {
      cells.push_back(bit(v));
      run(v + 1);
      cells.pop_back();
    }
  }
};

}  // namespace

void for_each_partition(const Graph& g, int min_cells, int max_cells,
                        const std::function<bool(const Partition&)>& visit) {
  if (g.order() > kMaxMaskVertices) throw CapExceeded("partition enumeration supports at most 64 vertices");
  PartitionWalker walker{g, min_cells, max_cells, visit, {}, {}, false};
  for (Vertex v = 0; v < g.order(); ++v) walker.nbr.push_back(g.neighbour_mask(v));
  if (g.order() == 0) {
    if (min_cells <= 0 && max_cells >= 0) visit(Partition());
    return;
  }
  walker.run(0);
}

namespace {

void check_k(int k) {
  if (k < 1) throw PreconditionError("colour bound k must be at least 1");
}

std::string cap_message(std::size_t cap) {
  return "enumeration exceeds the cap of " + std::to_string(cap) + " members";
}

}  // namespace

PartitionFamily enumerate(const Graph& g, int k, FamilyMode mode, std::size_t cap) {
  check_k(k);
  PartitionFamily family{g, k, mode, {}, {}};
  if (mode == FamilyMode::kLabeled) {
    const int n = g.order();
    Colouring colour(static_cast<std::size_t>(n), 0);
    std::function<void(Vertex)> rec = [&](Vertex v) {
      if (v == n) {
        if (family.colourings.size() >= cap) throw CapExceeded(cap_message(cap));
        family.colourings.push_back(colour);
        return;
      }
      for (int c = 1; c <= k; ++c) {
        bool ok = true;
        for (Vertex w : g.neighbours(v)) {
          if (w < v && colour[w] == c) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        colour[v] = c;
        rec(v + 1);
      }
    };
    rec(0);
    return family;
  }
  const int min_cells = mode == FamilyMode::kExactly ? k : 0;
  if (mode == FamilyMode::kExactly && g.order() == 0) return family;
  for_each_partition(g, min_cells, k, [&](const Partition& p) {
    if (family.members.size() >= cap) throw CapExceeded(cap_message(cap));
    family.members.push_back(p);
    return true;
  });
  std::sort(family.members.begin(), family.members.end());
  return family;
}

namespace {

std::uint64_t count_partitions(const Graph& g, int min_cells, int max_cells, std::size_t cap) {
  std::uint64_t count = 0;
  for_each_partition(g, min_cells, max_cells, [&](const Partition&) {
    if (++count > cap) throw CapExceeded(cap_message(cap));
    return true;
  });
  return count;
}

}  // namespace

std::uint64_t bell_number_of(const Graph& g, int k, std::size_t cap) {
  check_k(k);
  return count_partitions(g, 0, k, cap);
}

std::uint64_t stirling_number_of(const Graph& g, int k, std::size_t cap) {
  check_k(k);
  if (g.order() == 0) return 0;
  return count_partitions(g, k, k, cap);
}

int chromatic_number(const Graph& g) {
  if (g.order() == 0) return 0;
  for (int k = 1; k <= g.order(); ++k) {
    bool found = false;
    for_each_partition(g, k, k, [&](const Partition&) {
      found = true;
      return false;
    });
    if (found) return k;
  }
  return g.order();
}

}  // namespace bellstir
