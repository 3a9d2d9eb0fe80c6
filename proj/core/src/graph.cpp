#include "bellstir/graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <string>

#include "bellstir/errors.hpp"

namespace bellstir {

Graph::Graph(int n) {
  if (n < 0) throw PreconditionError("graph order must be nonnegative");
  adjacency_.resize(static_cast<std::size_t>(n));
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= order()) {
    throw PreconditionError("vertex " + std::to_string(v) + " out of range for graph of order " +
                            std::to_string(order()));
  }
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw PreconditionError("self-loop at vertex " + std::to_string(u));
  auto& nu = adjacency_[u];
  auto it = std::lower_bound(nu.begin(), nu.end(), v);
  if (it != nu.end() && *it == v) return;
  nu.insert(it, v);
  auto& nv = adjacency_[v];
  nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
  ++edge_count_;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= order() || v >= order()) return false;
  const auto& nu = adjacency_[u];
  return std::binary_search(nu.begin(), nu.end(), v);
}

int Graph::max_degree() const {
  int best = 0;
  for (const auto& nbrs : adjacency_) best = std::max(best, static_cast<int>(nbrs.size()));
  return best;
}

int Graph::min_degree() const {
  if (adjacency_.empty()) return 0;
  int best = order();
  for (const auto& nbrs : adjacency_) best = std::min(best, static_cast<int>(nbrs.size()));
  return best;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

VertexMask Graph::neighbour_mask(Vertex v) const {
  if (order() > kMaxMaskVertices) {
    throw CapExceeded("vertex masks need a graph of order at most 64");
  }
  VertexMask m = 0;
  for (Vertex u : adjacency_[v]) m |= bit(u);
  return m;
}

VertexMask Graph::all_vertices_mask() const {
  if (order() > kMaxMaskVertices) {
    throw CapExceeded("vertex masks need a graph of order at most 64");
  }
  return order() == 64 ? ~VertexMask{0} : (bit(order()) - 1);
}

void Graph::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && static_cast<int>(labels.size()) != order()) {
    throw PreconditionError("label count does not match vertex count");
  }
  labels_ = std::move(labels);
}

std::string Graph::label(Vertex v) const {
  return labels_.empty() ? std::to_string(v) : labels_[v];
}

Graph complement(const Graph& g) {
  Graph out(g.order());
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (!g.has_edge(u, v)) out.add_edge(u, v);
    }
  }
  return out;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  const int offset = g.order();
  Graph out(g.order() + h.order());
  for (const auto& [u, v] : g.edges()) out.add_edge(u, v);
  for (const auto& [u, v] : h.edges()) out.add_edge(u + offset, v + offset);
  return out;
}

Graph join(const Graph& g, const Graph& h) {
  Graph out = disjoint_union(g, h);
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = 0; v < h.order(); ++v) out.add_edge(u, g.order() + v);
  }
  return out;
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  const int s = h.order();
  Graph out(g.order() * s);
  for (Vertex a = 0; a < g.order(); ++a) {
    for (const auto& [b, d] : h.edges()) out.add_edge(a * s + b, a * s + d);
  }
  for (const auto& [a, c] : g.edges()) {
    for (Vertex b = 0; b < s; ++b) out.add_edge(a * s + b, c * s + b);
  }
  return out;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = static_cast<int>(i);
  Graph out(static_cast<int>(vertices.size()));
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (Vertex w : g.neighbours(vertices[i])) {
      if (index[w] > static_cast<int>(i)) out.add_edge(static_cast<int>(i), index[w]);
    }
  }
  return out;
}

RookPlus rook_plus(int r, int s) {
  if (r < 1 || s < 1) throw PreconditionError("rook_plus needs r >= 1 and s >= 1");
  Graph rook = cartesian_product(complete(r), complete(s));
  Graph out(r * s + 1);
  for (const auto& [u, v] : rook.edges()) out.add_edge(u, v);
  const Vertex clone = r * s;
  const Vertex base = 0;
  out.add_edge(clone, base);
  for (Vertex w : rook.neighbours(base)) out.add_edge(clone, w);
  return RookPlus{std::move(out), clone, base};
}

Graph hypercube(int m) {
  if (m < 0) throw PreconditionError("hypercube dimension must be nonnegative");
  if (m > kMaxHypercubeDimension) {
    throw CapExceeded("hypercube dimension " + std::to_string(m) + " exceeds the size guard of " +
                      std::to_string(kMaxHypercubeDimension));
  }
  const int n = 1 << m;
  Graph out(n);
  for (int v = 0; v < n; ++v) {
    for (int i = 0; i < m; ++i) {
      const int w = v ^ (1 << i);
      if (v < w) out.add_edge(v, w);
    }
  }
  return out;
}

LineGraph line_graph(const Graph& g) {
  LineGraph out{Graph(static_cast<int>(g.edge_count())), g.edges()};
  std::vector<std::vector<int>> incident(static_cast<std::size_t>(g.order()));
  for (std::size_t i = 0; i < out.edge_index.size(); ++i) {
    incident[out.edge_index[i].first].push_back(static_cast<int>(i));
    incident[out.edge_index[i].second].push_back(static_cast<int>(i));
  }
  for (const auto& inc : incident) {
    for (std::size_t i = 0; i < inc.size(); ++i) {
      for (std::size_t j = i + 1; j < inc.size(); ++j) out.graph.add_edge(inc[i], inc[j]);
    }
  }
  return out;
}

int colouring_number(const Graph& g) {
  if (g.order() < 1) throw PreconditionError("colouring number needs at least one vertex");
  std::vector<int> deg(static_cast<std::size_t>(g.order()));
  std::vector<bool> removed(static_cast<std::size_t>(g.order()), false);
  for (Vertex v = 0; v < g.order(); ++v) deg[v] = g.degree(v);
  int degeneracy = 0;
  for (int step = 0; step < g.order(); ++step) {
    Vertex best = -1;
    for (Vertex v = 0; v < g.order(); ++v) {
      if (!removed[v] && (best < 0 || deg[v] < deg[best])) best = v;
    }
    degeneracy = std::max(degeneracy, deg[best]);
    removed[best] = true;
    for (Vertex w : g.neighbours(best)) {
      if (!removed[w]) --deg[w];
    }
  }
  return degeneracy + 1;
}

bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  std::vector<bool> seen(static_cast<std::size_t>(g.order()), false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbours(v)) {
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == g.order();
}

Graph complete(int n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph complete_minus_edge(int n) {
  if (n < 2) throw PreconditionError("K_n - e needs n >= 2");
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!(u == 0 && v == 1)) g.add_edge(u, v);
    }
  }
  return g;
}

Graph edgeless(int n) { return Graph(n); }

Graph star(int leaves) {
  if (leaves < 0) throw PreconditionError("star needs a nonnegative leaf count");
  Graph g(leaves + 1);
  for (Vertex v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

Graph path(int n) {
  if (n < 1) throw PreconditionError("path needs n >= 1");
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle(int n) {
  if (n < 3) throw PreconditionError("cycle needs n >= 3");
  Graph g = path(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph l_nn(int n) {
  if (n < 1) throw PreconditionError("L_{n,n} needs n >= 1");
  Graph g(2 * n);
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = 0; j < n; ++j) {
      if (i != j) g.add_edge(i, n + j);
    }
  }
  return g;
}

Graph g_t(int t) {
  if (t < 1) throw PreconditionError("G_t needs t >= 1");
  Graph g(2 * t);
  for (Vertex u = 0; u < 2 * t; ++u) {
    for (Vertex v = u + 1; v < 2 * t; ++v) {
      if (!(u % 2 == 0 && v == u + 1)) g.add_edge(u, v);
    }
  }
  return g;
}

Graph tree_from_pruefer(std::span<const int> seq) {
  const int n = static_cast<int>(seq.size()) + 2;
  for (int x : seq) {
    if (x < 0 || x >= n) throw PreconditionError("Pruefer entry out of range");
  }
  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (int x : seq) ++degree[x];
  Graph g(n);
  for (int x : seq) {
    for (Vertex leaf = 0; leaf < n; ++leaf) {
      if (degree[leaf] == 1) {
        g.add_edge(leaf, x);
        --degree[leaf];
        --degree[x];
        break;
      }
    }
  }
  Vertex u = -1;
  for (Vertex v = 0; v < n; ++v) {
    if (degree[v] == 1) {
      if (u < 0) {
        u = v;
      } else {
        g.add_edge(u, v);
        break;
      }
    }
  }
  return g;
}

std::vector<Graph> all_trees(int n, bool dedup) {
  if (n < 1) throw PreconditionError("all_trees needs n >= 1");
  if (n == 1) return {Graph(1)};
  if (n == 2) return {path(2)};
  std::vector<Graph> out;
  std::set<std::string> seen;
  std::vector<int> seq(static_cast<std::size_t>(n - 2), 0);
  while (true) {
    Graph t = tree_from_pruefer(seq);
    if (!dedup || seen.insert(tree_canonical_form(t)).second) out.push_back(std::move(t));
    int pos = n - 3;
    while (pos >= 0 && seq[pos] == n - 1) seq[pos--] = 0;
    if (pos < 0) break;
    ++seq[pos];
  }
  return out;
}

std::vector<Graph> nonisomorphic_trees(int n) {
  if (n < 1) throw PreconditionError("nonisomorphic_trees needs n >= 1");
  std::map<std::string, Graph> level{{tree_canonical_form(Graph(1)), Graph(1)}};
  for (int size = 2; size <= n; ++size) {
    std::map<std::string, Graph> next;
    for (const auto& [key, t] : level) {
      for (Vertex v = 0; v < t.order(); ++v) {
        Graph grown(size);
        for (const auto& [a, b] : t.edges()) grown.add_edge(a, b);
        grown.add_edge(v, size - 1);
        next.emplace(tree_canonical_form(grown), std::move(grown));
      }
    }
    level = std::move(next);
  }
  std::vector<Graph> out;
  for (auto& [key, t] : level) out.push_back(std::move(t));
  return out;
}

std::vector<Graph> nonisomorphic_graphs(int n) {
  if (n < 0 || n > 6) throw CapExceeded("nonisomorphic_graphs supports 0 <= n <= 6");
  std::vector<Edge> slots;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  }
  std::map<std::string, Graph> classes;
  const std::uint32_t limit = 1U << slots.size();
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    Graph g(n);
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if (mask & (1U << i)) g.add_edge(slots[i].first, slots[i].second);
    }
    classes.emplace(canonical_form(g), std::move(g));
  }
  std::vector<Graph> out;
  for (auto& [key, g] : classes) out.push_back(std::move(g));
  std::stable_sort(out.begin(), out.end(), [](const Graph& a, const Graph& b) {
    return a.edge_count() < b.edge_count();
  });
  return out;
}

std::string canonical_form(const Graph& g) {
  const int n = g.order();
  if (n > kMaxCanonicalVertices) {
    throw CapExceeded("canonical_form supports at most " + std::to_string(kMaxCanonicalVertices) +
                      " vertices");
  }
  // Candidate labelings list vertices by ascending degree; only the order
  // inside each degree class is free.
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) < g.degree(b); });
  std::vector<std::pair<int, int>> classes;
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && g.degree(order[j]) == g.degree(order[i])) ++j;
    classes.emplace_back(i, j);
    i = j;
  }
  std::string best;
  std::string code(static_cast<std::size_t>(n * (n - 1) / 2), '0');
  std::function<void(std::size_t)> rec = [&](std::size_t c) {
    if (c == classes.size()) {
      std::size_t pos = 0;
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) code[pos++] = g.has_edge(order[i], order[j]) ? '1' : '0';
      }
      if (best.empty() || code > best) best = code;
      return;
    }
    auto first = order.begin() + classes[c].first;
    auto last = order.begin() + classes[c].second;
    std::sort(first, last);
    do {
      rec(c + 1);
    } while (std::next_permutation(first, last));
  };
  rec(0);
  std::string degrees;
  for (Vertex v : order) degrees += std::to_string(g.degree(v)) + ",";
  return std::to_string(n) + ":" + degrees + ":" + best;
}

bool are_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
  return canonical_form(g) == canonical_form(h);
}

namespace {

std::string ahu(const Graph& t, Vertex v, Vertex parent) {
  std::vector<std::string> children;
  for (Vertex w : t.neighbours(v)) {
    if (w != parent) children.push_back(ahu(t, w, v));
  }
  std::sort(children.begin(), children.end());
  std::string out = "(";
  for (const auto& c : children) out += c;
  return out + ")";
}

}  // namespace

std::string tree_canonical_form(const Graph& tree) {
  const int n = tree.order();
  if (n == 0) return "";
  std::vector<int> deg(static_cast<std::size_t>(n));
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = tree.degree(v);
    if (deg[v] <= 1) layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<Vertex> next;
    for (Vertex v : layer) {
      for (Vertex w : tree.neighbours(v)) {
        if (--deg[w] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  std::string best;
  for (Vertex c : layer) {
    std::string code = ahu(tree, c, -1);
    if (best.empty() || code < best) best = code;
  }
  return best;
}

bool is_tree(const Graph& g) {
  return g.order() >= 1 && static_cast<int>(g.edge_count()) == g.order() - 1 && is_connected(g);
}

bool is_complete(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  return g.edge_count() == n * (n - (n > 0 ? 1 : 0)) / 2;
}

}  // namespace bellstir
