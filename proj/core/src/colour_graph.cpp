#include "bellstir/colour_graph.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "bellstir/errors.hpp"

namespace bellstir {

std::string to_string(ColourGraphKind kind) {
  switch (kind) {
    case ColourGraphKind::kBell:
      return "bell";
    case ColourGraphKind::kStirling:
      return "stirling";
    case ColourGraphKind::kColour:
      return "colour";
  }
  return "?";
}

int ColourGraph::vertex_of(const Partition& p) const {
  auto it = index.find(p);
  return it == index.end() ? -1 : it->second;
}

int ColourGraph::vertex_of(const Colouring& c) const {
  const auto& all = family.colourings;
  auto it = std::lower_bound(all.begin(), all.end(), c);
  if (it == all.end() || *it != c) return -1;
  return static_cast<int>(it - all.begin());
}

std::string ColourGraph::describe(int i) const {
  if (kind != ColourGraphKind::kColour) return partition(i).to_string();
  std::string out;
  for (std::size_t v = 0; v < colouring(i).size(); ++v) {
    if (v) out += ',';
    out += std::to_string(colouring(i)[v]);
  }
  return out;
}

namespace {

int colour_distance(const Colouring& a, const Colouring& b) {
  int d = 0;
  for (std::size_t v = 0; v < a.size(); ++v) d += a[v] != b[v];
  return d;
}

void all_pairs_edges(ColourGraph& cg) {
  const int n = cg.size();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const bool adj = cg.kind == ColourGraphKind::kColour
                           ? colour_distance(cg.colouring(i), cg.colouring(j)) == 1
                           : adjacent(cg.partition(i), cg.partition(j));
      if (adj) cg.skeleton.add_edge(i, j);
    }
  }
}

void connect_bucket(Graph& skeleton, const std::vector<int>& members) {
  for (std::size_t a = 0; a < members.size(); ++a) {
    for (std::size_t b = a + 1; b < members.size(); ++b) skeleton.add_edge(members[a], members[b]);
  }
}

void bucket_edges(ColourGraph& cg) {
  const int n = cg.size();
  if (n == 0) return;
  for (Vertex x = 0; x < cg.base.order(); ++x) {
    if (cg.kind == ColourGraphKind::kColour) {
      std::map<Colouring, std::vector<int>> buckets;
      for (int i = 0; i < n; ++i) {
        Colouring key = cg.colouring(i);
        key[x] = 0;
        buckets[std::move(key)].push_back(i);
      }
      for (const auto& [key, members] : buckets) connect_bucket(cg.skeleton, members);
    } else {
      std::unordered_map<Partition, std::vector<int>, PartitionHash> buckets;
      for (int i = 0; i < n; ++i) buckets[cg.partition(i).restricted(x)].push_back(i);
      for (const auto& [key, members] : buckets) connect_bucket(cg.skeleton, members);
    }
  }
}

}  // namespace

ColourGraph build(const Graph& g, int k, ColourGraphKind kind, EdgeStrategy strategy,
                  std::size_t cap) {
  ColourGraph cg;
  cg.base = g;
  cg.k = k;
  cg.kind = kind;
  const FamilyMode mode = kind == ColourGraphKind::kBell       ? FamilyMode::kAtMost
                          : kind == ColourGraphKind::kStirling ? FamilyMode::kExactly
                                                               : FamilyMode::kLabeled;
  cg.family = enumerate(g, k, mode, cap);
  const int n = static_cast<int>(cg.family.size());
  cg.skeleton = Graph(n);
  if (kind != ColourGraphKind::kColour) {
    cg.index.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) cg.index.emplace(cg.family.members[i], i);
  }
  if (strategy == EdgeStrategy::kAuto) {
    strategy = static_cast<std::size_t>(n) > kAllPairsLimit ? EdgeStrategy::kBuckets
                                                            : EdgeStrategy::kAllPairs;
  }
  if (strategy == EdgeStrategy::kAllPairs) {
    all_pairs_edges(cg);
  } else {
    bucket_edges(cg);
  }
  return cg;
}

Certificate verify_isomorphism(const Graph& domain, const Graph& codomain,
                               const std::vector<int>& map) {
  const int n = domain.order();
  if (codomain.order() != n || static_cast<int>(map.size()) != n) {
    return {false, "vertex counts differ: " + std::to_string(n) + " vs " +
                       std::to_string(codomain.order())};
  }
  std::vector<int> seen(static_cast<std::size_t>(n), -1);
  for (int v = 0; v < n; ++v) {
    const int w = map[v];
    if (w < 0 || w >= n) return {false, "vertex " + std::to_string(v) + " has no image"};
    if (seen[w] >= 0) {
      return {false, "vertices " + std::to_string(seen[w]) + " and " + std::to_string(v) +
                         " share the image " + std::to_string(w)};
    }
    seen[w] = v;
  }
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (domain.has_edge(u, v) != codomain.has_edge(map[u], map[v])) {
        return {false, "pair (" + std::to_string(u) + ", " + std::to_string(v) + ") is " +
                           (domain.has_edge(u, v) ? "an edge" : "a non-edge") +
                           " but its image is not"};
      }
    }
  }
  return {true, "isomorphism on " + std::to_string(n) + " vertices, " +
                    std::to_string(domain.edge_count()) + " edges"};
}

TopStirlingMap stirling_top_bijection(const Graph& g) {
  const int n = g.order();
  if (n < 2) throw PreconditionError("stirling_top_bijection needs at least 2 vertices");
  if (is_complete(g)) throw PreconditionError("stirling_top_bijection: graph is complete");
  TopStirlingMap out;
  out.stirling = build(g, n - 1, ColourGraphKind::kStirling);
  out.line = line_graph(complement(g));
  const int m = out.stirling.size();
  out.to_line.assign(static_cast<std::size_t>(m), -1);
  for (int i = 0; i < m; ++i) {
    for (VertexMask c : out.stirling.partition(i).cell_masks()) {
      if (std::popcount(c) != 2) continue;
      const Vertex x = std::countr_zero(c);
      const Vertex y = 63 - std::countl_zero(c);
      auto it = std::lower_bound(out.line.edge_index.begin(), out.line.edge_index.end(), Edge{x, y});
      if (it != out.line.edge_index.end() && *it == Edge{x, y}) {
        out.to_line[i] = static_cast<int>(it - out.line.edge_index.begin());
      }
    }
  }
  out.certificate = verify_isomorphism(out.stirling.skeleton, out.line.graph, out.to_line);
  if (out.certificate.ok) {
    out.from_line.assign(out.to_line.size(), -1);
    for (int i = 0; i < m; ++i) out.from_line[out.to_line[i]] = i;
  }
  return out;
}

UniqueColouringMap unique_colouring_bijection(const Graph& h, const Graph& g, int k) {
  const PartitionFamily hk = enumerate(h, k, FamilyMode::kAtMost);
  if (hk.members.size() != 1 || hk.members.front().cell_count() != k) {
    throw PreconditionError("unique_colouring_bijection: h is not uniquely " + std::to_string(k) +
                            "-colourable");
  }
  UniqueColouringMap out;
  out.unique_colouring = hk.members.front();
  out.colourings = build(g, k, ColourGraphKind::kColour);
  out.bell = build(disjoint_union(h, g), k, ColourGraphKind::kBell);
  const int offset = h.order();
  const auto& hcells = out.unique_colouring.cell_masks();
  out.to_bell.assign(static_cast<std::size_t>(out.colourings.size()), -1);
  for (int i = 0; i < out.colourings.size(); ++i) {
    std::vector<VertexMask> cells(hcells.begin(), hcells.end());
    const Colouring& c = out.colourings.colouring(i);
    for (std::size_t v = 0; v < c.size(); ++v) cells[c[v] - 1] |= bit(static_cast<Vertex>(v) + offset);
    out.to_bell[i] = out.bell.vertex_of(Partition::from_masks(std::move(cells)));
  }
  out.certificate = verify_isomorphism(out.colourings.skeleton, out.bell.skeleton, out.to_bell);
  return out;
}

JoinProductMap join_product_bijection(const Graph& g, const Graph& h) {
  JoinProductMap out;
  out.k = g.order() + h.order();
  if (out.k < 1) throw PreconditionError("join_product_bijection needs at least one vertex");
  out.left = build(g, out.k, ColourGraphKind::kBell);
  out.right = build(h, out.k, ColourGraphKind::kBell);
  out.joined = build(join(g, h), out.k, ColourGraphKind::kBell);
  out.product = cartesian_product(out.left.skeleton, out.right.skeleton);
  std::vector<Vertex> shift(static_cast<std::size_t>(h.order()));
  for (Vertex v = 0; v < h.order(); ++v) shift[v] = v + g.order();
  const int rs = out.right.size();
  out.to_joined.assign(static_cast<std::size_t>(out.product.order()), -1);
  for (int i = 0; i < out.left.size(); ++i) {
    for (int j = 0; j < rs; ++j) {
      const Partition merged = out.left.partition(i).merged_with(out.right.partition(j).relabeled(shift));
      out.to_joined[i * rs + j] = out.joined.vertex_of(merged);
    }
  }
  out.certificate = verify_isomorphism(out.product, out.joined.skeleton, out.to_joined);
  return out;
}

}  // namespace bellstir
