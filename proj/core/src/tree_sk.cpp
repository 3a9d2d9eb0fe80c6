#include <algorithm>
#include <bit>
#include <functional>
#include <set>

#include "bellstir/errors.hpp"
#include "construction_detail.hpp"

namespace bellstir {
namespace detail {

namespace {

Partition merged_pair(VertexMask alive, Vertex u, Vertex v) {
  std::vector<VertexMask> cells{bit(u) | bit(v)};
  for (Vertex w : members(alive & ~bit(u) & ~bit(v))) cells.push_back(bit(w));
  return Partition::from_masks(cells);
}

Partition with_cell(const Partition& p, VertexMask cell) {
  std::vector<VertexMask> cells = p.cell_masks();
  cells.push_back(cell);
  return Partition::from_masks(cells);
}

// p with l added to every cell that avoids `nbr`, in cell order.
std::vector<Partition> extensions(const Partition& p, Vertex l, Vertex nbr) {
  std::vector<Partition> out;
  const auto& cells = p.cell_masks();
  for (std::size_t c = 0; c < cells.size(); ++c) {
    if (cells[c] & bit(nbr)) continue;
    std::vector<VertexMask> m = cells;
    m[c] |= bit(l);
    out.push_back(Partition::from_masks(m));
  }
  return out;
}

template <typename T>
std::vector<T> rotated_to(const std::vector<T>& cyc, const T& first) {
  const auto it = std::find(cyc.begin(), cyc.end(), first);
  if (it == cyc.end()) return {};
  std::vector<T> out(it, cyc.end());
  out.insert(out.end(), cyc.begin(), it);
  return out;
}

}  // namespace

// ---- S_{n-1} via a dominating circuit of the complement ----

std::vector<Partition> base_cycle_in(const Graph& g, VertexMask alive, std::optional<Vertex> hub) {
  const auto verts = members(alive);
  std::vector<Edge> edges;  // of the complement, inside alive
  for (std::size_t i = 0; i < verts.size(); ++i) {
    for (std::size_t j = i + 1; j < verts.size(); ++j) {
      if (!g.has_edge(verts[i], verts[j])) edges.emplace_back(verts[i], verts[j]);
    }
  }
  if (edges.empty()) {
    throw PreconditionError("the graph on " + describe(alive) + " is complete; its complement has no edges");
  }
  std::vector<Edge> order;
  VertexMask common = bit(edges[0].first) | bit(edges[0].second);
  for (const Edge& e : edges) common &= bit(e.first) | bit(e.second);
  if (common != 0) {
    // all complement edges share a vertex: the line graph is complete
    order = edges;
  } else {
    VertexMask touched = 0;
    for (const Edge& e : edges) touched |= bit(e.first) | bit(e.second);
    const auto cand = members(touched);
    const int t = static_cast<int>(cand.size());
    std::vector<Vertex> circuit;
    for (int size = t; size >= 3 && circuit.empty(); --size) {
      // subsets of `size` candidates, those holding the hub first
      std::vector<std::vector<Vertex>> subsets;
      std::vector<int> pick(size);
      for (int i = 0; i < size; ++i) pick[i] = i;
      while (true) {
        std::vector<Vertex> s;
        VertexMask m = 0;
        for (int i : pick) {
          s.push_back(cand[i]);
          m |= bit(cand[i]);
        }
        bool covers = true;
        for (const Edge& e : edges) covers = covers && ((m & (bit(e.first) | bit(e.second))) != 0);
        if (covers) subsets.push_back(s);
        int i = size - 1;
        while (i >= 0 && pick[i] == t - size + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
      }
      if (hub) {
        std::stable_partition(subsets.begin(), subsets.end(), [&](const std::vector<Vertex>& s) {
          return std::find(s.begin(), s.end(), *hub) != s.end();
        });
      }
      for (const auto& s : subsets) {
        const Graph sub = induced_subgraph(complement(g), s);
        const SearchResult r = find_hamilton_cycle(sub);
        if (r.status == SearchStatus::kInconclusive) {
          throw ConstructionFailure("dominating circuit search ran out of budget on " + describe(alive));
        }
        if (r.found()) {
          for (Vertex v : r.sequence) circuit.push_back(s[v]);
          break;
        }
      }
    }
    if (circuit.empty()) throw ConstructionFailure("no dominating cycle in the complement of " + describe(alive));
    const int m = static_cast<int>(circuit.size());
    VertexMask on_circuit = 0;
    for (Vertex v : circuit) on_circuit |= bit(v);
    std::set<Edge> circuit_edges;
    for (int i = 0; i < m; ++i) {
      const Vertex u = circuit[i], v = circuit[(i + 1) % m];
      circuit_edges.emplace(std::min(u, v), std::max(u, v));
    }
    std::vector<std::vector<Edge>> pendant(static_cast<std::size_t>(g.order()));
    const bool hub_on = hub && (on_circuit & bit(*hub));
    for (const Edge& e : edges) {
      if (circuit_edges.count(e)) continue;
      Vertex at;
      if (hub_on && (e.first == *hub || e.second == *hub)) {
        at = *hub;
      } else {
        at = (on_circuit & bit(e.first)) ? e.first : e.second;
      }
      pendant[at].push_back(e);
    }
    for (int i = 0; i < m; ++i) {
      const Vertex u = circuit[i], v = circuit[(i + 1) % m];
      order.emplace_back(std::min(u, v), std::max(u, v));
      for (const Edge& e : pendant[v]) order.push_back(e);
    }
  }
  std::vector<Partition> out;
  out.reserve(order.size());
  for (const Edge& e : order) out.push_back(merged_pair(alive, e.first, e.second));
  check_partition_sequence(g, alive, popcount(alive) - 1, popcount(alive) - 1, out, true,
                           "S_{n-1} base cycle");
  return out;
}

// ---- S_4 ----

LeafCycle s4_cycle_in(const Graph& g, VertexMask alive, Vertex leaf) {
  const int n = popcount(alive);
  if (n < 5) throw PreconditionError("S_4 tree cycle needs at least 5 vertices");
  if (degree_in(g, leaf, alive) != 1) throw PreconditionError(std::to_string(leaf) + " is not a leaf");
  LeafCycle out;
  out.leaf = leaf;
  if (n == 5) {
    out.seq = base_cycle_in(g, alive, leaf);
    return out;
  }
  const Vertex l = leaf;
  const Vertex p = neighbour_in(g, l, alive);
  const VertexMask sub = alive & ~bit(l);

  Vertex a = -1, b = -1;
  std::vector<Partition> path = b3_cycle_in(g, sub, p, &a, &b);
  path.erase(path.begin());  // S_3 path from label a to label b
  std::vector<Partition> star_part;
  for (auto it = path.rbegin(); it != path.rend(); ++it) star_part.push_back(with_cell(*it, bit(l)));

  const auto [pa, pb] = two_colouring(g, sub);
  const VertexMask ab = bit(a) | bit(b);
  if ((pa & ~ab) == 0 || (pb & ~ab) == 0) {
    throw ConstructionFailure("S_4 step on " + describe(alive) + ": a side of the 2-colouring is {a, b}");
  }
  const Partition v1 = Partition::from_masks({pa & ~ab, pb & ~ab, bit(a), bit(b)});
  const VertexMask other_side = (pa & bit(p)) ? (pb & ~ab) : (pa & ~ab);
  Partition s1;
  std::vector<Partition> js;
  for (const Partition& e : extensions(v1, l, p)) {
    if (e.cell_mask_of(l) == (other_side | bit(l))) {
      s1 = e;
    } else {
      js.push_back(e);
    }
  }
  // X meets the first entry of star_part, Y the last.
  Partition X, Y;
  if (adjacency_witness(js[0], star_part.front()) >= 0 && adjacency_witness(js[1], star_part.back()) >= 0) {
    X = js[0];
    Y = js[1];
  } else if (adjacency_witness(js[1], star_part.front()) >= 0 && adjacency_witness(js[0], star_part.back()) >= 0) {
    X = js[1];
    Y = js[0];
  } else {
    throw ConstructionFailure("S_4 step on " + describe(alive) + ": the ends of the {l}-path miss " +
                              describe(v1) + "'s extensions");
  }

  LeafCycle inner = s4_cycle_in(g, sub, longest_path_end(g, sub));
  out.diagnostics = inner.diagnostics;
  for (int orient = 0; orient < 2; ++orient) {
    std::vector<Partition> cyc = rotated_to(inner.seq, v1);
    if (cyc.empty()) throw ConstructionFailure("S_4 step: " + describe(v1) + " missing from the inner cycle");
    if (orient == 1) std::reverse(cyc.begin() + 1, cyc.end());
    const int blocks = static_cast<int>(cyc.size());
    std::vector<std::vector<Partition>> tri(blocks);
    for (int i = 1; i < blocks; ++i) tri[i] = extensions(cyc[i], l, p);

    // choice[i] in 0..5 encodes (t, s) for block i
    std::vector<int> choice(blocks, -1);
    std::vector<Partition> exit_of(blocks);
    exit_of[0] = s1;
    int i = 1;
    while (i >= 1 && i < blocks) {
      bool advanced = false;
      while (++choice[i] < 6) {
        const int t = choice[i] / 2;
        const int s = (t + 1 + choice[i] % 2) % 3;
        if (adjacency_witness(exit_of[i - 1], tri[i][t]) < 0) continue;
        const Partition& e = tri[i][s];
        bool onward = false;
        if (i + 1 < blocks) {
          for (const Partition& f : tri[i + 1]) onward = onward || adjacency_witness(e, f) >= 0;
        } else {
          onward = adjacency_witness(e, X) >= 0 || adjacency_witness(e, Y) >= 0;
        }
        if (!onward) continue;
        exit_of[i] = e;
        advanced = true;
        break;
      }
      if (advanced) {
        ++i;
      } else {
        choice[i] = -1;
        --i;
      }
    }
    if (i < blocks) continue;

    std::vector<Partition>& seq = out.seq;
    seq.clear();
    seq.push_back(s1);
    for (int j = 1; j < blocks; ++j) {
      const int t = choice[j] / 2;
      const int s = (t + 1 + choice[j] % 2) % 3;
      seq.push_back(tri[j][t]);
      seq.push_back(tri[j][3 - t - s]);
      seq.push_back(tri[j][s]);
    }
    if (adjacency_witness(seq.back(), X) >= 0) {
      seq.push_back(X);
      seq.insert(seq.end(), star_part.begin(), star_part.end());
      seq.push_back(Y);
    } else {
      seq.push_back(Y);
      seq.insert(seq.end(), star_part.rbegin(), star_part.rend());
      seq.push_back(X);
    }
    check_partition_sequence(g, alive, 4, 4, seq, true, "S_4 tree cycle");
    return out;
  }
  throw ConstructionFailure("S_4 step on " + describe(alive) + " with leaf " + std::to_string(l) +
                            ": no choice of exits through the triangles closes up");
}

}  // namespace detail

// ---- C-graphs ----

namespace {

// Maximum matching between left and right (Kuhn), over edges of host not
// touching `avoid`. Pairs are (left vertex, right vertex).
std::vector<Edge> max_matching(const Graph& host, const std::vector<Vertex>& left,
                               const std::vector<Vertex>& right, Vertex avoid) {
  std::vector<int> in_right(static_cast<std::size_t>(host.order()), -1);
  for (std::size_t j = 0; j < right.size(); ++j) in_right[right[j]] = static_cast<int>(j);
  std::vector<int> match_right(right.size(), -1);
  std::vector<char> seen;
  std::function<bool(int)> grow = [&](int i) {
    if (left[i] == avoid) return false;
    for (Vertex w : host.neighbours(left[i])) {
      const int j = in_right[w];
      if (j < 0 || w == avoid || seen[j]) continue;
      seen[j] = 1;
      if (match_right[j] < 0 || grow(match_right[j])) {
        match_right[j] = i;
        return true;
      }
    }
    return false;
  };
  for (std::size_t i = 0; i < left.size(); ++i) {
    seen.assign(right.size(), 0);
    grow(static_cast<int>(i));
  }
  std::vector<Edge> out;
  for (std::size_t j = 0; j < right.size(); ++j) {
    if (match_right[j] >= 0) out.emplace_back(left[match_right[j]], right[j]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool block_is_clique(const Graph& host, const std::vector<Vertex>& block) {
  for (std::size_t i = 0; i < block.size(); ++i) {
    for (std::size_t j = i + 1; j < block.size(); ++j) {
      if (!host.has_edge(block[i], block[j])) return false;
    }
  }
  return true;
}

// Hamilton path of the block from u to v; x then y consecutive when x >= 0.
std::vector<Vertex> block_path(const Graph& host, const std::vector<Vertex>& block, int index, Vertex u,
                               Vertex v, Vertex x, Vertex y) {
  if (block_is_clique(host, block)) {
    std::vector<Vertex> rest;
    for (Vertex w : block) {
      if (w != u && w != v && w != x && w != y) rest.push_back(w);
    }
    std::vector<Vertex> out{u};
    if (x >= 0) {
      if (y == u) {
        out.push_back(x);
        out.insert(out.end(), rest.begin(), rest.end());
      } else if (y == v) {
        out.insert(out.end(), rest.begin(), rest.end());
        out.push_back(x);
      } else {
        out.push_back(x);
        out.push_back(y);
        out.insert(out.end(), rest.begin(), rest.end());
      }
    } else {
      out.insert(out.end(), rest.begin(), rest.end());
    }
    out.push_back(v);
    return out;
  }
  Graph sub = induced_subgraph(host, block);
  auto local = [&](Vertex w) {
    return static_cast<Vertex>(std::find(block.begin(), block.end(), w) - block.begin());
  };
  Vertex extra = -1;
  if (x >= 0) {
    // subdivide xy so every Hamilton path has to use it
    Graph h(sub.order() + 1);
    for (const Edge& e : sub.edges()) {
      const bool is_xy = (e.first == local(x) && e.second == local(y)) || (e.first == local(y) && e.second == local(x));
      if (!is_xy) h.add_edge(e.first, e.second);
    }
    extra = sub.order();
    h.add_edge(local(x), extra);
    h.add_edge(local(y), extra);
    sub = h;
  }
  const SearchResult r = find_hamilton_path(sub, local(u), local(v));
  if (!r.found()) {
    throw ConstructionFailure("block " + std::to_string(index) + " has no Hamilton path from " +
                              std::to_string(u) + " to " + std::to_string(v) +
                              (r.status == SearchStatus::kInconclusive ? " within budget" : ""));
  }
  std::vector<Vertex> out;
  for (Vertex w : r.sequence) {
    if (w != extra) out.push_back(block[w]);
  }
  return out;
}

}  // namespace

std::vector<Vertex> c_graph_cycle_through_edge(const Graph& host, const CGraphDecomposition& decomp, Edge xy) {
  const int N = decomp.size();
  if (N < 3) throw PreconditionError("C-graph needs at least 3 blocks, got " + std::to_string(N));
  std::vector<int> block_of(static_cast<std::size_t>(host.order()), -1);
  for (int i = 0; i < N; ++i) {
    if (decomp.blocks[i].size() < 3) {
      throw PreconditionError("block " + std::to_string(i) + " has fewer than 3 vertices");
    }
    for (Vertex v : decomp.blocks[i]) {
      if (v < 0 || v >= host.order() || block_of[v] >= 0) {
        throw PreconditionError("blocks do not partition the host at vertex " + std::to_string(v));
      }
      block_of[v] = i;
    }
  }
  for (Vertex v = 0; v < host.order(); ++v) {
    if (block_of[v] < 0) throw PreconditionError("vertex " + std::to_string(v) + " lies in no block");
  }
  const auto [x, y] = xy;
  if (x < 0 || y < 0 || x >= host.order() || y >= host.order() || !host.has_edge(x, y) ||
      block_of[x] != block_of[y]) {
    throw PreconditionError("edge (" + std::to_string(x) + ", " + std::to_string(y) +
                            ") is not an edge inside one block");
  }
  const int home = block_of[x];

  std::vector<std::vector<Edge>> match(N);
  int wide = -1;
  for (int j = 0; j < N; ++j) {
    match[j] = max_matching(host, decomp.blocks[j], decomp.blocks[(j + 1) % N], x);
    if (match[j].size() < 2) {
      throw ConstructionFailure("blocks " + std::to_string(j) + " and " + std::to_string((j + 1) % N) +
                                " are joined by only " + std::to_string(match[j].size()) +
                                " disjoint edges avoiding vertex " + std::to_string(x));
    }
    if (wide < 0 && match[j].size() >= 3) wide = j;
  }
  if (wide < 0) throw ConstructionFailure("no pair of consecutive blocks is joined by 3 disjoint edges");

  std::vector<Vertex> in(N, -1), out(N, -1);
  const int start = (wide + 1) % N;
  for (int t = 0; t < N; ++t) {
    const int j = (start + t) % N;
    const int nj = (j + 1) % N;
    bool placed = false;
    for (const Edge& e : match[j]) {
      if (in[j] == e.first) continue;
      if (t == N - 1 && e.second == out[nj]) continue;
      out[j] = e.first;
      in[nj] = e.second;
      placed = true;
      break;
    }
    if (!placed) {
      throw ConstructionFailure("no usable edge between blocks " + std::to_string(j) + " and " +
                                std::to_string(nj));
    }
  }
  std::vector<Vertex> cycle;
  cycle.reserve(static_cast<std::size_t>(host.order()));
  for (int i = 0; i < N; ++i) {
    const bool here = i == home;
    const auto p = block_path(host, decomp.blocks[i], i, in[i], out[i], here ? x : -1, here ? y : -1);
    cycle.insert(cycle.end(), p.begin(), p.end());
  }
  const Validation v = validate_cycle(host, cycle);
  if (!v.ok) throw ConstructionFailure("C-graph cycle failed validation: " + v.witness);
  return cycle;
}

namespace detail {

namespace {

// (w, y) when beta is alpha with w moved from a cell of size >= 2 into the
// singleton {y}, neither equal to s.
std::optional<std::pair<Vertex, Vertex>> glue_form(const Partition& alpha, const Partition& beta, Vertex s) {
  for (Vertex w : members(alpha.ground())) {
    if (w == s) continue;
    const VertexMask from = alpha.cell_mask_of(w);
    const VertexMask to = beta.cell_mask_of(w);
    if (from == to || std::popcount(from) < 2 || std::popcount(to) != 2) continue;
    const Vertex y = lowest(to & ~bit(w));
    if (y == s || !alpha.is_singleton(y)) continue;
    if (alpha.restricted(w) == beta.restricted(w)) return std::make_pair(w, y);
  }
  return std::nullopt;
}

}  // namespace

LeafCycle sk_cycle_in(const Graph& g, VertexMask alive, int k, Vertex leaf) {
  if (k == 4) return s4_cycle_in(g, alive, leaf);
  const int n = popcount(alive);
  if (k < 4 || n < k + 1) throw PreconditionError("S_k tree cycle needs k >= 4 and at least k + 1 vertices");
  if (degree_in(g, leaf, alive) != 1) throw PreconditionError(std::to_string(leaf) + " is not a leaf");
  LeafCycle out;
  out.leaf = leaf;
  if (n == k + 1) {
    out.seq = base_cycle_in(g, alive, leaf);
    return out;
  }
  const Vertex l = leaf;
  const Vertex s = neighbour_in(g, l, alive);
  const VertexMask sub = alive & ~bit(l);

  LeafCycle outer = sk_cycle_in(g, sub, k, longest_path_end(g, sub));
  Vertex inner_leaf = -1;
  for (Vertex v : leaves_in(g, sub)) {
    if (v != s && neighbour_in(g, v, sub) == s) {
      inner_leaf = v;
      break;
    }
  }
  const bool case2 = inner_leaf < 0 && degree_in(g, s, sub) == 1;
  if (inner_leaf < 0) inner_leaf = case2 ? s : leaves_in(g, sub).front();
  LeafCycle inner = sk_cycle_in(g, sub, k - 1, inner_leaf);
  out.diagnostics = outer.diagnostics;
  out.diagnostics.insert(out.diagnostics.end(), inner.diagnostics.begin(), inner.diagnostics.end());
  const std::vector<Partition>& C = inner.seq;
  const int len = static_cast<int>(C.size());

  // candidate consecutive pairs (i, i+1), the explicit pair first
  std::vector<int> preferred;
  if (!case2) {
    for (int i = 0; i < len; ++i) {
      if (C[i].is_singleton(inner_leaf) != C[(i + 1) % len].is_singleton(inner_leaf)) preferred.push_back(i);
    }
  } else {
    VertexMask rest = sub & ~bit(s);
    std::vector<Vertex> xs;
    for (int i = 0; i < k - 4; ++i) {
      const Vertex x = leaves_in(g, rest).front();
      xs.push_back(x);
      rest &= ~bit(x);
    }
    const auto [pa, pb] = two_colouring(g, rest);
    const VertexMask Y = std::popcount(pb) >= 2 ? pb : pa;
    const VertexMask X = Y == pb ? pa : pb;
    std::vector<VertexMask> cells{X, Y, bit(s)};
    for (Vertex x : xs) cells.push_back(bit(x));
    const Partition alpha = Partition::from_masks(cells);
    const auto it = std::find(C.begin(), C.end(), alpha);
    if (it != C.end()) {
      const int at = static_cast<int>(it - C.begin());
      preferred.push_back(at);
      preferred.push_back((at + len - 1) % len);
    }
  }
  int pick = -1;
  bool alpha_first = true;
  std::pair<Vertex, Vertex> wy;
  auto try_pair = [&](int i) {
    const Partition& p = C[i];
    const Partition& q = C[(i + 1) % len];
    if (auto f = glue_form(p, q, s)) {
      pick = i, alpha_first = true, wy = *f;
      return true;
    }
    if (auto f = glue_form(q, p, s)) {
      pick = i, alpha_first = false, wy = *f;
      return true;
    }
    return false;
  };
  for (int i : preferred) {
    if (try_pair(i)) break;
  }
  if (pick < 0) {
    std::string what = "tree " + describe(alive) + ", k = " + std::to_string(k) + ", leaf " + std::to_string(l) +
                       (case2 ? ": the explicit alpha" : ": the junction edges of C");
    if (case2 && preferred.empty()) what += " is not on C";
    else what += " gave no glue pair";
    for (int i = 0; i < len && pick < 0; ++i) try_pair(i);
    if (pick < 0) throw ConstructionFailure(what + ", and no edge of C qualifies");
    const Partition& p = C[pick];
    const Partition& q = C[(pick + 1) % len];
    out.diagnostics.push_back(what + "; used " + describe(alpha_first ? p : q) + " -> " +
                              describe(alpha_first ? q : p) + " instead");
  }
  // path through C from alpha to beta
  std::vector<Partition> glue;
  const int ia = alpha_first ? pick : (pick + 1) % len;
  const int step = alpha_first ? -1 : 1;
  for (int t = 0, i = ia; t < len; ++t, i = (i + step + len) % len) glue.push_back(with_cell(C[i], bit(l)));
  const Partition& alpha = C[ia];
  const auto [w, y] = wy;
  const Partition f0 = alpha.with_vertex_moved(w, -1);

  std::vector<Partition> cyc = rotated_to(outer.seq, f0);
  if (cyc.empty()) throw ConstructionFailure("S_k step: " + describe(f0) + " missing from the S_k(T - l) cycle");
  Graph host;
  CGraphDecomposition decomp;
  std::vector<Partition> nodes;
  for (const Partition& f : cyc) {
    std::vector<Vertex> block;
    for (const Partition& e : extensions(f, l, s)) {
      block.push_back(static_cast<Vertex>(nodes.size()));
      nodes.push_back(e);
    }
    decomp.blocks.push_back(std::move(block));
  }
  host = Graph(static_cast<int>(nodes.size()));
  const int N = decomp.size();
  for (int i = 0; i < N; ++i) {
    const auto& bi = decomp.blocks[i];
    const auto& bj = decomp.blocks[(i + 1) % N];
    for (std::size_t u = 0; u < bi.size(); ++u) {
      for (std::size_t v = u + 1; v < bi.size(); ++v) host.add_edge(bi[u], bi[v]);
      if (N < 2) continue;
      for (Vertex v : bj) {
        if (bi[u] != v && adjacency_witness(nodes[bi[u]], nodes[v]) >= 0) host.add_edge(bi[u], v);
      }
    }
  }
  auto node_of = [&](const Partition& p) -> Vertex {
    for (Vertex v : decomp.blocks[0]) {
      if (nodes[v] == p) return v;
    }
    return -1;
  };
  std::vector<VertexMask> fc = f0.cell_masks();
  auto with_l_in = [&](Vertex host_vertex) {
    std::vector<VertexMask> m = fc;
    for (VertexMask& c : m) {
      if (c & bit(host_vertex)) c |= bit(l);
    }
    return Partition::from_masks(m);
  };
  const Vertex a = node_of(with_l_in(w));
  const Vertex b = node_of(with_l_in(y));
  if (a < 0 || b < 0) throw ConstructionFailure("S_k step: the colourings a, b are not in F_0");
  const auto hc = c_graph_cycle_through_edge(host, decomp, {a, b});
  const int hn = static_cast<int>(hc.size());
  const int pa = static_cast<int>(std::find(hc.begin(), hc.end(), a) - hc.begin());
  const int dir = hc[(pa + 1) % hn] == b ? 1 : -1;

  std::vector<Partition>& seq = out.seq;
  seq.clear();
  seq.push_back(nodes[a]);
  seq.insert(seq.end(), glue.begin(), glue.end());
  for (int t = 1; t < hn; ++t) seq.push_back(nodes[hc[((pa + dir * t) % hn + hn) % hn]]);
  check_partition_sequence(g, alive, k, k, seq, true, "S_k tree cycle");
  return out;
}

}  // namespace detail

namespace {

Vertex top_leaf(const Tree& t, std::optional<Vertex> leaf) {
  const VertexMask all = t.graph().all_vertices_mask();
  if (!leaf) return detail::longest_path_end(t.graph(), all);
  if (*leaf < 0 || *leaf >= t.order() || t.graph().degree(*leaf) != 1) {
    throw PreconditionError("vertex " + std::to_string(*leaf) + " is not a leaf");
  }
  return *leaf;
}

}  // namespace

DecoratedCycle s4_tree_cycle(const Tree& t, std::optional<Vertex> leaf) {
  if (t.order() < 5) throw PreconditionError("s4_tree_cycle needs a tree on at least 5 vertices");
  if (t.order() > kMaxMaskVertices) throw CapExceeded("s4_tree_cycle: tree too large");
  const Vertex l = top_leaf(t, leaf);
  detail::LeafCycle lc = detail::s4_cycle_in(t.graph(), t.graph().all_vertices_mask(), l);
  DecoratedCycle out = detail::finish(t.graph(), 4, ColourGraphKind::kStirling, CycleKind::kCycle,
                                      std::move(lc.seq), l, "s4_tree_cycle");
  out.diagnostics = std::move(lc.diagnostics);
  return out;
}

DecoratedCycle sk_tree_cycle(const Tree& t, int k, std::optional<Vertex> leaf) {
  if (k < 4) throw PreconditionError("sk_tree_cycle needs k >= 4");
  if (t.order() <= k) {
    throw PreconditionError("sk_tree_cycle needs more than k = " + std::to_string(k) + " vertices");
  }
  if (t.order() > kMaxMaskVertices) throw CapExceeded("sk_tree_cycle: tree too large");
  const Vertex l = top_leaf(t, leaf);
  detail::LeafCycle lc = detail::sk_cycle_in(t.graph(), t.graph().all_vertices_mask(), k, l);
  DecoratedCycle out = detail::finish(t.graph(), k, ColourGraphKind::kStirling, CycleKind::kCycle,
                                      std::move(lc.seq), l, "sk_tree_cycle");
  out.diagnostics = std::move(lc.diagnostics);
  return out;
}

DecoratedCycle stirling_base_cycle(const Graph& g, std::optional<Vertex> hub) {
  if (g.order() < 3) throw PreconditionError("stirling_base_cycle needs at least 3 vertices");
  if (g.order() > kMaxMaskVertices) throw CapExceeded("stirling_base_cycle: graph too large");
  if (hub && (*hub < 0 || *hub >= g.order())) throw PreconditionError("hub out of range");
  auto seq = detail::base_cycle_in(g, g.all_vertices_mask(), hub);
  return detail::finish(g, g.order() - 1, ColourGraphKind::kStirling, CycleKind::kCycle, std::move(seq), hub,
                        "stirling_base_cycle");
}

}  // namespace bellstir
