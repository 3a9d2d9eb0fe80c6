#include "bellstir/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "bellstir/colour_graph.hpp"
#include "bellstir/constructions.hpp"
#include "bellstir/errors.hpp"
#include "bellstir/partition.hpp"

namespace bellstir {

std::string to_string(Status status) {
  switch (status) {
    case Status::kPass: return "pass";
    case Status::kFail: return "fail";
    case Status::kInconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

struct Outcome {
  Status status = Status::kPass;
  std::string evidence;
};

Outcome pass(std::string e) { return {Status::kPass, std::move(e)}; }
Outcome fail(std::string e) { return {Status::kFail, std::move(e)}; }

struct Instance {
  std::string descriptor;
  std::function<Outcome()> run;
};

std::string brief(const Graph& g) {
  std::string out = "n=" + std::to_string(g.order()) + " [";
  bool first = true;
  for (const auto& [u, v] : g.edges()) {
    if (!first) out += ' ';
    out += std::to_string(u) + "-" + std::to_string(v);
    first = false;
  }
  return out + "]";
}

std::string instance_name(const Graph& g, int k, std::string_view kind) {
  return brief(g) + " k=" + std::to_string(k) + " " + std::string(kind);
}

// Oracle check that cg has a Hamilton cycle (want = true) or none.
Outcome oracle(const ColourGraph& cg, bool want, std::uint64_t budget) {
  SearchOptions opts;
  opts.budget = budget;
  const SearchResult r = find_hamilton_cycle(cg.skeleton, opts);
  if (r.status == SearchStatus::kInconclusive) {
    return {Status::kInconclusive, "oracle budget of " + std::to_string(budget) + " expansions exhausted"};
  }
  if (r.found() != want) {
    return fail(want ? "oracle finds no Hamilton cycle: " + (r.reason.empty() ? "search exhausted" : r.reason)
                     : "oracle found a Hamilton cycle of length " + std::to_string(r.sequence.size()));
  }
  if (r.found()) {
    const Validation v = validate_cycle(cg.skeleton, r.sequence);
    if (!v.ok) return fail("oracle cycle invalid: " + v.witness);
    return pass("oracle cycle confirmed");
  }
  return pass("oracle: no cycle (" + (r.reason.empty() ? "search exhausted" : r.reason) + ")");
}

// Rechecks a construction's certificate against a fresh colour graph.
Outcome recheck(const DecoratedCycle& c, const ColourGraph& cg) {
  const Validation v = validate(c, cg);
  if (!v.ok) return fail(v.witness);
  return pass(to_string(c.kind) + " of length " + std::to_string(c.size()));
}

Outcome both(Outcome a, const Outcome& b) {
  if (a.status == Status::kFail) return a;
  if (b.status == Status::kFail) return b;
  if (b.status == Status::kInconclusive) return b;
  if (a.status == Status::kInconclusive) return a;
  return pass(a.evidence + "; " + b.evidence);
}

bool almost_complete(const Graph& g) {
  const std::size_t n = g.order();
  return n >= 2 && g.edge_count() + 1 == n * (n - 1) / 2;
}

// ---- suites ----

std::vector<Instance> bell_n_exhaustive(const SuiteLimits& lim) {
  std::vector<Instance> out;
  for (int n = 2; n <= lim.max_n; ++n) {
    for (const Graph& g : nonisomorphic_graphs(n)) {
      if (is_complete(g) || almost_complete(g)) continue;
      out.push_back({instance_name(g, n, "bell"), [g, n, budget = lim.budget] {
                       const DecoratedCycle c = bell_n_cycle(g);
                       const ColourGraph cg = build(g, n, ColourGraphKind::kBell);
                       Outcome o = recheck(c, cg);
                       if (n <= 5) o = both(o, oracle(cg, true, budget));
                       return o;
                     }});
    }
  }
  return out;
}

std::vector<Instance> bell_trivial(const SuiteLimits& lim) {
  std::vector<Instance> out;
  for (int n = 1; n <= lim.max_n; ++n) {
    out.push_back({instance_name(complete(n), n, "bell"), [n] {
                     const ColourGraph cg = build(complete(n), n, ColourGraphKind::kBell);
                     if (cg.size() != 1) return fail("B_n(K_n) has " + std::to_string(cg.size()) + " vertices");
                     return pass("single vertex " + cg.describe(0));
                   }});
    if (n < 2) continue;
    out.push_back({instance_name(complete_minus_edge(n), n, "bell"), [n] {
                     const ColourGraph cg = build(complete_minus_edge(n), n, ColourGraphKind::kBell);
                     if (cg.size() != 2 || cg.skeleton.edge_count() != 1) {
                       return fail("B_n(K_n - e) has " + std::to_string(cg.size()) + " vertices and " +
                                   std::to_string(cg.skeleton.edge_count()) + " edges");
                     }
                     try {
                       bell_n_cycle(complete_minus_edge(n));
                       return fail("bell_n_cycle accepted K_n - e");
                     } catch (const PreconditionError&) {
                     }
                     return pass("K_2: " + cg.describe(0) + " -- " + cg.describe(1));
                   }});
  }
  return out;
}

std::vector<Instance> gt_parity(const SuiteLimits& lim) {
  std::vector<Instance> out;
  for (int t = 1; t <= lim.max_n; ++t) {
    for (int l = 0; l < t; ++l) {
      out.push_back({instance_name(g_t(t), t + l, "bell"), [t, l, budget = lim.budget] {
                       const ColourGraph cg = build(g_t(t), t + l, ColourGraphKind::kBell);
                       const auto parts = bipartition(cg.skeleton);
                       if (!parts) return fail("B_{t+l}(G_t) has an odd cycle");
                       if (!is_connected(cg.skeleton)) return fail("B_{t+l}(G_t) is disconnected");
                       const auto gap = static_cast<std::int64_t>(parts->first.size()) -
                                        static_cast<std::int64_t>(parts->second.size());
                       const std::int64_t expected = parity_gap(t, l);
                       if (std::llabs(gap) != std::llabs(expected) || std::llabs(expected) != binomial(t - 1, l)) {
                         return fail("|A| - |B| = " + std::to_string(gap) + ", parity_gap = " +
                                     std::to_string(expected) + ", C(t-1, l) = " + std::to_string(binomial(t - 1, l)));
                       }
                       const Outcome o = oracle(cg, false, budget);
                       if (o.status != Status::kPass) return o;
                       return pass("bipartite, |A| - |B| = " + std::to_string(gap) + ", no Hamilton cycle");
                     }});
    }
    if (t >= 2) {
      out.push_back({instance_name(g_t(t), 2 * t, "bell"), [t] {
                       const Graph g = g_t(t);
                       const DecoratedCycle c = bell_n_cycle(g);
                       return recheck(c, build(g, 2 * t, ColourGraphKind::kBell));
                     }});
    }
  }
  return out;
}

std::vector<Instance> star_parity(const SuiteLimits& lim) {
  std::vector<Instance> out;
  for (int n = 3; n <= lim.max_n; ++n) {
    const Graph g = star(n);
    if (n % 2 == 1) {
      out.push_back({instance_name(g, 3, "stirling"), [n, g] {
                       const DecoratedCycle c = star_s3_cycle(n);
                       return recheck(c, build(g, 3, ColourGraphKind::kStirling));
                     }});
    } else {
      out.push_back({instance_name(g, 3, "stirling"), [n, g, budget = lim.budget] {
                       const ColourGraph cg = build(g, 3, ColourGraphKind::kStirling);
                       const auto parts = bipartition(cg.skeleton);
                       if (!parts) return fail("S_3 of the star has an odd cycle");
                       const int expected = (1 << (n - 1)) - 1;
                       if (cg.size() != expected) {
                         return fail("order " + std::to_string(cg.size()) + ", expected " + std::to_string(expected));
                       }
                       try {
                         star_s3_cycle(n);
                         return fail("star_s3_cycle accepted an even star");
                       } catch (const PreconditionError&) {
                       }
                       Outcome o = pass("bipartite of odd order " + std::to_string(expected));
                       if (n <= 6) o = both(o, oracle(cg, false, budget));
                       return o;
                     }});
    }
  }
  return out;
}

std::vector<Instance> s3_endpoints(const SuiteLimits& lim) {
  std::vector<Instance> out;
  for (int n = 4; n <= lim.max_n; ++n) {
    for (const Graph& g : nonisomorphic_trees(n)) {
      for (Vertex x = 0; x < n; ++x) {
        out.push_back({instance_name(g, 3, "stirling") + " x=" + std::to_string(x), [g, x] {
                         const Tree t(g);
                         const EndpointPath r = s3_path_with_endpoints(t, x);
                         const auto& seq = r.path.sequence;
                         if (r.a == r.b || r.a == x || r.b == x) {
                           return fail("labels a=" + std::to_string(r.a) + " b=" + std::to_string(r.b));
                         }
                         const auto first = endpoint_labels(t, seq.front());
                         const auto last = endpoint_labels(t, seq.back());
                         if (std::find(first.begin(), first.end(), r.a) == first.end()) {
                           return fail("first entry " + seq.front().to_string() + " is not labelled " + std::to_string(r.a));
                         }
                         if (std::find(last.begin(), last.end(), r.b) == last.end()) {
                           return fail("last entry " + seq.back().to_string() + " is not labelled " + std::to_string(r.b));
                         }
                         Outcome o = recheck(r.path, build(g, 3, ColourGraphKind::kStirling));
                         if (o.status == Status::kPass) o.evidence += ", a=" + std::to_string(r.a) + " b=" + std::to_string(r.b);
                         return o;
                       }});
      }
    }
  }
  return out;
}

std::vector<Instance> sk_trees(const SuiteLimits& lim) {
  std::vector<Instance> out;
  for (int n = 5; n <= lim.max_n; ++n) {
    for (const Graph& g : nonisomorphic_trees(n)) {
      for (int k = 4; k <= std::min(n - 1, 8); ++k) {
        out.push_back({instance_name(g, k, "stirling"), [g, k, budget = lim.budget] {
                         const DecoratedCycle c = sk_tree_cycle(Tree(g), k);
                         const ColourGraph cg = build(g, k, ColourGraphKind::kStirling);
                         Outcome o = recheck(c, cg);
                         if (cg.size() <= 2000) o = both(o, oracle(cg, true, budget));
                         for (const auto& d : c.diagnostics) o.evidence += "; note: " + d;
                         return o;
                       }});
      }
    }
  }
  return out;
}

std::vector<Instance> top_stirling_iso(const SuiteLimits& lim) {
  std::vector<Instance> out;
  for (int n = 2; n <= lim.max_n; ++n) {
    for (const Graph& g : nonisomorphic_graphs(n)) {
      if (is_complete(g)) continue;
      out.push_back({instance_name(g, n - 1, "stirling"), [g] {
                       const TopStirlingMap m = stirling_top_bijection(g);
                       if (!m.certificate.ok) return fail(m.certificate.detail);
                       const Graph co = complement(g);
                       const bool s_conn = is_connected(m.stirling.skeleton);
                       const bool co_conn = is_connected(co);
                       if (s_conn != co_conn) {
                         int isolated = 0;
                         for (Vertex v = 0; v < co.order(); ++v) isolated += co.degree(v) == 0;
                         return fail(std::string("S_{n-1} is ") + (s_conn ? "connected" : "disconnected") +
                                     " but the complement is " + (co_conn ? "connected" : "disconnected") + " (" +
                                     std::to_string(isolated) + " isolated vertices in the complement)");
                       }
                       return pass("line graph isomorphism on " + std::to_string(m.stirling.size()) +
                                   " vertices; connected: " + (s_conn ? "yes" : "no"));
                     }});
    }
  }
  return out;
}

// ---- figures ----

struct Figure {
  std::string name;
  Graph tree;
  std::string letters;
  std::vector<std::string> vertices;  // cells of each drawn partition, letters
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> highlighted;  // paths through the drawn vertices
};

Partition from_letters(const std::string& text, const std::string& letters) {
  std::vector<std::vector<Vertex>> cells{{}};
  for (char ch : text) {
    if (ch == '|') {
      cells.emplace_back();
    } else {
      cells.back().push_back(static_cast<Vertex>(letters.find(ch)));
    }
  }
  return Partition::from_cells(cells);
}

std::vector<Figure> figures() {
  Graph spider(5);
  spider.add_edge(0, 2);
  spider.add_edge(1, 2);
  spider.add_edge(2, 3);
  spider.add_edge(3, 4);
  return {
      {"P4", path(4), "abcd", {"a|c|bd", "ad|b|c", "ac|b|d"}, {{0, 1}, {1, 2}}, {{0, 1, 2}}},
      {"P5",
       path(5),
       "abcde",
       {"ad|c|be", "ad|b|ce", "ace|b|d", "ac|be|d", "a|bd|ce", "ae|bd|c", "ac|bd|e"},
       {{0, 1}, {1, 2}, {4, 6}, {0, 3}, {4, 5}, {5, 6}, {6, 3}, {4, 1}, {2, 3}},
       {{2, 1, 0, 3, 6, 5, 4}, {2, 3, 0, 1, 4, 5, 6}}},
      {"spider",
       spider,
       "abcde",
       {"ab|ce|d", "a|bd|ce", "abd|c|e", "ad|b|ce", "ad|be|c", "ae|bd|c", "abe|c|d"},
       {{0, 1}, {0, 3}, {0, 6}, {1, 3}, {1, 5}, {2, 5}, {2, 4}, {3, 4}, {6, 4}, {6, 5}},
       {{0, 6, 4, 3, 1, 5, 2}, {1, 0, 6, 5, 2, 4, 3}}},
  };
}

std::vector<Instance> figures_suite(const SuiteLimits&) {
  std::vector<Instance> out;
  for (const Figure& f : figures()) {
    out.push_back({f.name + " k=3 stirling", [f] {
                     const ColourGraph cg = build(f.tree, 3, ColourGraphKind::kStirling);
                     std::vector<int> id;
                     for (const auto& text : f.vertices) {
                       const int v = cg.vertex_of(from_letters(text, f.letters));
                       if (v < 0) return fail("drawn vertex " + text + " is not in S_3");
                       id.push_back(v);
                     }
                     if (cg.size() != static_cast<int>(f.vertices.size())) {
                       return fail("S_3 has " + std::to_string(cg.size()) + " vertices, drawn " +
                                   std::to_string(f.vertices.size()));
                     }
                     std::set<std::pair<int, int>> drawn;
                     for (auto [a, b] : f.edges) {
                       const int u = std::min(id[a], id[b]);
                       const int v = std::max(id[a], id[b]);
                       if (!cg.skeleton.has_edge(u, v)) {
                         return fail("drawn edge " + f.vertices[a] + " -- " + f.vertices[b] + " is not an edge");
                       }
                       drawn.insert({u, v});
                     }
                     for (const auto& [u, v] : cg.skeleton.edges()) {
                       if (!drawn.count({u, v})) {
                         return fail("edge " + cg.describe(u) + " -- " + cg.describe(v) + " is not drawn");
                       }
                     }
                     for (const auto& h : f.highlighted) {
                       std::vector<Vertex> p;
                       for (int i : h) p.push_back(id[i]);
                       const Validation v = validate_path(cg.skeleton, p);
                       if (!v.ok) return fail("highlighted path: " + v.witness);
                     }
                     return pass(std::to_string(cg.size()) + " vertices, " + std::to_string(drawn.size()) +
                                 " edges as drawn, " + std::to_string(f.highlighted.size()) + " highlighted paths");
                   }});
    out.push_back({f.name + " stored paths", [f] {
                     const Tree t(f.tree);
                     const ColourGraph cg = build(f.tree, 3, ColourGraphKind::kStirling);
                     int checked = 0;
                     for (Vertex x = 0; x < t.order(); ++x) {
                       const EndpointPath r = s3_path_with_endpoints(t, x);
                       const Validation v = validate(r.path, cg);
                       if (!v.ok) return fail("x=" + std::to_string(x) + ": " + v.witness);
                       ++checked;
                     }
                     return pass(std::to_string(checked) + " paths valid");
                   }});
  }
  return out;
}

std::vector<Instance> bijections(const SuiteLimits& lim) {
  std::vector<Instance> out;
  auto unique_case = [&](Graph h, Graph g, int k) {
    out.push_back({"unique " + brief(h) + " + " + brief(g) + " k=" + std::to_string(k), [h, g, k] {
                     const UniqueColouringMap m = unique_colouring_bijection(h, g, k);
                     if (!m.certificate.ok) return fail(m.certificate.detail);
                     return pass("C_k(g) ~ B_k(h + g) on " + std::to_string(m.bell.size()) + " vertices");
                   }});
  };
  unique_case(complete(2), edgeless(1), 2);
  unique_case(complete(3), path(3), 3);
  std::vector<Graph> small;
  for (int n = 1; n <= std::min(3, lim.max_n); ++n) {
    for (const Graph& g : nonisomorphic_graphs(n)) small.push_back(g);
  }
  for (const Graph& g : small) {
    for (const Graph& h : small) {
      out.push_back({"join " + brief(g) + " v " + brief(h), [g, h] {
                       const JoinProductMap m = join_product_bijection(g, h);
                       if (!m.certificate.ok) return fail(m.certificate.detail);
                       return pass("B_k(g) box B_k(h) ~ B_k(g v h) on " + std::to_string(m.joined.size()) +
                                   " vertices, k=" + std::to_string(m.k));
                     }});
    }
  }
  return out;
}

std::vector<Instance> connectivity(const SuiteLimits& lim) {
  std::vector<Instance> out;
  for (int n = 1; n <= lim.max_n; ++n) {
    for (const Graph& g : nonisomorphic_graphs(n)) {
      const int k = colouring_number(g) + 1;
      out.push_back({instance_name(g, k, "bell"), [g, k] {
                       const ColourGraph cg = build(g, k, ColourGraphKind::kBell);
                       if (!is_connected(cg.skeleton)) return fail("B_{col+1} is disconnected");
                       return pass("connected, " + std::to_string(cg.size()) + " vertices");
                     }});
    }
  }
  for (int n = 3; n <= std::min(5, lim.max_n); ++n) {
    out.push_back({instance_name(l_nn(n), n, "bell"), [n] {
                     const Graph g = l_nn(n);
                     std::vector<std::vector<Vertex>> cells;
                     for (int i = 0; i < n; ++i) cells.push_back({i, n + i});
                     const Partition pairs = Partition::from_cells(cells);
                     const ColourGraph cg = build(g, n, ColourGraphKind::kBell);
                     const int v = cg.vertex_of(pairs);
                     if (v < 0) return fail(pairs.to_string() + " is not in B_n(L_nn)");
                     if (cg.skeleton.degree(v) != 0) {
                       return fail(pairs.to_string() + " has degree " + std::to_string(cg.skeleton.degree(v)));
                     }
                     return pass(pairs.to_string() + " isolated among " + std::to_string(cg.size()) + " vertices");
                   }});
  }
  return out;
}

std::vector<Instance> rook_cube(const SuiteLimits& lim) {
  std::vector<Instance> out;
  const int rs = std::min(4, lim.max_n);
  for (int r = 1; r <= rs; ++r) {
    for (int s = 1; s <= rs; ++s) {
      out.push_back({"rook_plus r=" + std::to_string(r) + " s=" + std::to_string(s), [r, s] {
                       const RookPlus rp = rook_plus(r, s);
                       for (Vertex t = 0; t < r * s; ++t) {
                         const auto p = rook_plus_path(r, s, t);
                         const Validation v = validate_path(rp.graph, p, rp.clone, t);
                         if (!v.ok) return fail("target " + std::to_string(t) + ": " + v.witness);
                       }
                       return pass(std::to_string(r * s) + " targets");
                     }});
    }
  }
  for (int m = 1; m <= lim.max_n; ++m) {
    out.push_back({"hypercube m=" + std::to_string(m), [m] {
                     const Graph q = hypercube(m);
                     const std::uint32_t count = std::uint32_t{1} << m;
                     int paths = 0;
                     int rejected = 0;
                     for (std::uint32_t a = 0; a < count; ++a) {
                       for (std::uint32_t b = 0; b < count; ++b) {
                         const BinarySeq x(a, m), y(b, m);
                         if (x.odd() == y.odd()) {
                           try {
                             hypercube_path(x, y);
                             return fail("same-parity pair " + x.to_string() + ", " + y.to_string() + " accepted");
                           } catch (const PreconditionError&) {
                             ++rejected;
                           }
                           continue;
                         }
                         std::vector<Vertex> p;
                         for (const BinarySeq& w : hypercube_path(x, y)) p.push_back(static_cast<Vertex>(w.value()));
                         const Validation v = validate_path(q, p, static_cast<Vertex>(a), static_cast<Vertex>(b));
                         if (!v.ok) return fail(x.to_string() + " to " + y.to_string() + ": " + v.witness);
                         ++paths;
                       }
                     }
                     return pass(std::to_string(paths) + " paths, " + std::to_string(rejected) + " rejected");
                   }});
  }
  return out;
}

using Builder = std::vector<Instance> (*)(const SuiteLimits&);

struct SuiteEntry {
  SuiteInfo info;
  Builder build;
};

const std::vector<SuiteEntry>& registry() {
  static const std::vector<SuiteEntry> r = {
      {{"bell-n-exhaustive", "Hamilton cycles of B_n(G), all graphs except K_n, K_n - e", 6}, bell_n_exhaustive},
      {{"bell-trivial", "B_n(K_n) and B_n(K_n - e) have 1 and 2 vertices", 6}, bell_trivial},
      {{"gt-parity", "B_{t+l}(G_t) is unbalanced bipartite for l < t, Hamiltonian at l = t", 5}, gt_parity},
      {{"star-parity", "S_3 of stars: cycles for odd n, odd bipartite for even n", 9}, star_parity},
      {{"s3-endpoints", "S_3 Hamilton paths of trees with labelled ends avoiding x", 9}, s3_endpoints},
      {{"sk-trees", "S_k Hamilton cycles of trees, k >= 4", 9}, sk_trees},
      {{"top-stirling-iso", "S_{n-1}(G) against the line graph of the complement", 6}, top_stirling_iso},
      {{"figures", "S_3 of the small trees against the drawn graphs", 5}, figures_suite},
      {{"bijections", "unique-colouring and join isomorphisms", 3}, bijections},
      {{"connectivity", "B_{col+1} connected; isolated pairs partition of L_nn", 6}, connectivity},
      {{"rook-cube", "rook-plus and hypercube Hamilton paths", 5}, rook_cube},
  };
  return r;
}

const SuiteEntry& find_suite(std::string_view name) {
  if (name == "lemma41-iso") name = "top-stirling-iso";
  for (const SuiteEntry& e : registry()) {
    if (e.info.name == name) return e;
  }
  throw PreconditionError("unknown suite '" + std::string(name) + "'");
}

}  // namespace

const std::vector<SuiteInfo>& suites() {
  static const std::vector<SuiteInfo> out = [] {
    std::vector<SuiteInfo> v;
    for (const SuiteEntry& e : registry()) v.push_back(e.info);
    return v;
  }();
  return out;
}

std::vector<VerificationReport> run_suite(std::string_view name, const SuiteLimits& limits) {
  const SuiteEntry& entry = find_suite(name);
  SuiteLimits lim = limits;
  if (lim.max_n < 0) lim.max_n = entry.info.default_max_n;
  const std::vector<Instance> instances = entry.build(lim);
  std::vector<VerificationReport> reports(instances.size());

  unsigned workers = lim.workers ? lim.workers : std::max(1U, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, std::max<std::size_t>(1, instances.size()));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < instances.size(); i = next++) {
      VerificationReport& r = reports[i];
      r.suite = entry.info.name;
      r.instance = instances[i].descriptor;
      const auto start = std::chrono::steady_clock::now();
      Outcome o;
      try {
        o = instances[i].run();
      } catch (const CapExceeded& e) {
        o = {Status::kInconclusive, e.what()};
      } catch (const std::exception& e) {
        o = fail(e.what());
      }
      r.status = o.status;
      r.evidence = std::move(o.evidence);
      r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  return reports;
}

Status aggregate(const std::vector<VerificationReport>& reports) {
  Status s = Status::kPass;
  for (const auto& r : reports) {
    if (r.status == Status::kFail) return Status::kFail;
    if (r.status == Status::kInconclusive) s = Status::kInconclusive;
  }
  return s;
}

int exit_code(Status status) {
  switch (status) {
    case Status::kPass: return 0;
    case Status::kFail: return 1;
    case Status::kInconclusive: return 2;
  }
  return 1;
}

std::string reports_text(const std::vector<VerificationReport>& reports, bool with_times) {
  std::ostringstream os;
  for (const auto& r : reports) {
    os << to_string(r.status) << "  " << r.suite << "  " << r.instance;
    if (with_times) os << "  (" << std::lround(r.seconds * 1000) << " ms)";
    os << "  " << r.evidence << '\n';
  }
  return os.str();
}

std::string reports_json(const std::vector<VerificationReport>& reports) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reports) {
    arr.push_back({{"suite", r.suite},
                   {"instance", r.instance},
                   {"status", to_string(r.status)},
                   {"evidence", r.evidence},
                   {"seconds", r.seconds}});
  }
  return arr.dump(2) + '\n';
}

}  // namespace bellstir
