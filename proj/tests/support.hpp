#pragma once

// Brute-force oracles for the unit tests. Nothing here calls into the
// library's enumeration or search code.

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "bellstir/graph.hpp"

namespace oracle {

using bellstir::Graph;
using bellstir::Vertex;

using Cells = std::vector<std::vector<int>>;

// Cells sorted inside and by first element, printed like "0|1,3|2".
inline std::string show(Cells cells) {
  for (auto& c : cells) std::sort(c.begin(), c.end());
  std::sort(cells.begin(), cells.end());
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += '|';
    for (std::size_t j = 0; j < cells[i].size(); ++j) {
      if (j) out += ',';
      out += std::to_string(cells[i][j]);
    }
  }
  return out;
}

// Every set partition of 0..n-1 into independent cells, cell count in
// [lo, hi], as strings.
inline std::set<std::string> partitions(const Graph& g, int lo, int hi) {
  const int n = g.order();
  std::set<std::string> out;
  Cells cells;
  std::function<void(int)> rec = [&](int v) {
    if (v == n) {
      const int c = static_cast<int>(cells.size());
      if (c >= lo && c <= hi) out.insert(show(cells));
      return;
    }
    // by index: the recursion may grow cells and move it
    for (std::size_t i = 0; i < cells.size(); ++i) {
      bool ok = true;
      for (int u : cells[i]) ok = ok && !g.has_edge(u, v);
      if (!ok) continue;
      cells[i].push_back(v);
      rec(v + 1);
      cells[i].pop_back();
    }
    cells.push_back({v});
    rec(v + 1);
    cells.pop_back();
  };
  rec(0);
  return out;
}

inline Cells parse(const std::string& s) {
  Cells out{{}};
  std::string num;
  auto flush = [&] {
    if (!num.empty()) out.back().push_back(std::stoi(num));
    num.clear();
  };
  for (char ch : s) {
    if (ch == '|') {
      flush();
      out.emplace_back();
    } else if (ch == ',') {
      flush();
    } else {
      num.push_back(ch);
    }
  }
  flush();
  return out;
}

inline std::string drop(const std::string& p, int x) {
  Cells cells = parse(p);
  Cells out;
  for (auto& c : cells) {
    c.erase(std::remove(c.begin(), c.end(), x), c.end());
    if (!c.empty()) out.push_back(c);
  }
  return show(out);
}

// Adjacency by restriction to V - x for every x.
inline bool adjacent(const std::string& p, const std::string& q, int n) {
  if (p == q) return false;
  for (int x = 0; x < n; ++x) {
    if (drop(p, x) == drop(q, x)) return true;
  }
  return false;
}

// Hamilton cycle by trying every permutation that fixes vertex 0.
inline bool hamiltonian(const Graph& g) {
  const int n = g.order();
  if (n < 3) return false;
  std::vector<int> perm(static_cast<std::size_t>(n - 1));
  std::iota(perm.begin(), perm.end(), 1);
  do {
    if (!g.has_edge(0, perm.front()) || !g.has_edge(perm.back(), 0)) continue;
    bool ok = true;
    for (std::size_t i = 0; i + 1 < perm.size() && ok; ++i) ok = g.has_edge(perm[i], perm[i + 1]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline bool has_path(const Graph& g, int u, int v) {
  const int n = g.order();
  std::vector<int> mid;
  for (int w = 0; w < n; ++w) {
    if (w != u && w != v) mid.push_back(w);
  }
  do {
    std::vector<int> p{u};
    p.insert(p.end(), mid.begin(), mid.end());
    p.push_back(v);
    bool ok = true;
    for (std::size_t i = 0; i + 1 < p.size() && ok; ++i) ok = g.has_edge(p[i], p[i + 1]);
    if (ok) return true;
  } while (std::next_permutation(mid.begin(), mid.end()));
  return false;
}

// Isomorphism by trying every permutation.
inline bool isomorphic(const Graph& a, const Graph& b) {
  const int n = a.order();
  if (n != b.order() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (const auto& [u, v] : a.edges()) {
      if (!b.has_edge(perm[u], perm[v])) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// All graphs on n vertices, one per edge subset.
inline std::vector<Graph> all_graphs(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
  }
  std::vector<Graph> out;
  for (unsigned mask = 0; mask < (1U << pairs.size()); ++mask) {
    Graph g(n);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (mask >> i & 1U) g.add_edge(pairs[i].first, pairs[i].second);
    }
    out.push_back(g);
  }
  return out;
}

inline int connected_components(const Graph& g) {
  const int n = g.order();
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  int count = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{s};
    comp[s] = count;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbours(v)) {
        if (comp[w] < 0) {
          comp[w] = count;
          stack.push_back(w);
        }
      }
    }
    ++count;
  }
  return count;
}

}  // namespace oracle
