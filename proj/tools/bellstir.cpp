#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "bellstir/colour_graph.hpp"
#include "bellstir/constructions.hpp"
#include "bellstir/errors.hpp"
#include "bellstir/io.hpp"
#include "bellstir/verify.hpp"

using namespace bellstir;

namespace {

constexpr int kUsage = 3;

struct GraphSource {
  std::string file;
  std::string family;
};

std::string read_all(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

int parse_int(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw PreconditionError("bad " + what + " '" + s + "'");
}

// name:n, e.g. path:5, star:4 (leaves), gt:3, lnn:3, kminus:4.
Graph family_graph(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw PreconditionError("family spec must look like name:n, got '" + spec + "'");
  const std::string name = spec.substr(0, colon);
  const std::string arg = spec.substr(colon + 1);
  if (name == "pruefer") {
    std::vector<int> seq;
    std::stringstream ss(arg);
    for (std::string item; std::getline(ss, item, ',');) {
      if (!item.empty()) seq.push_back(parse_int(item, "Pruefer entry"));
    }
    return tree_from_pruefer(seq);
  }
  const int n = parse_int(arg, "family size");
  if (n < 0) throw PreconditionError("negative family size");
  if (name == "path") return path(n);
  if (name == "cycle") return cycle(n);
  if (name == "star") return star(n);
  if (name == "complete") return complete(n);
  if (name == "kminus") return complete_minus_edge(n);
  if (name == "edgeless") return edgeless(n);
  if (name == "gt") return g_t(n);
  if (name == "lnn") return l_nn(n);
  if (name == "hypercube") return hypercube(n);
  throw PreconditionError("unknown family '" + name + "'");
}

Graph load(const GraphSource& src) {
  if (!src.file.empty() && !src.family.empty()) throw PreconditionError("give --graph or --family, not both");
  if (!src.file.empty()) return graph_from_json(read_all(src.file));
  if (!src.family.empty()) return family_graph(src.family);
  throw PreconditionError("no input graph (--graph FILE or --family name:n)");
}

ColourGraphKind parse_kind(const std::string& s) {
  if (s == "bell") return ColourGraphKind::kBell;
  if (s == "stirling") return ColourGraphKind::kStirling;
  if (s == "colour" || s == "color") return ColourGraphKind::kColour;
  throw PreconditionError("unknown kind '" + s + "' (bell, stirling, colour)");
}

void add_graph_options(CLI::App* cmd, GraphSource& src) {
  cmd->add_option("-g,--graph", src.file, "graph JSON file, - for stdin");
  cmd->add_option("-f,--family", src.family, "named graph: path:n cycle:n star:leaves complete:n kminus:n edgeless:n gt:t lnn:n hypercube:m pruefer:a,b,...");
}

struct GraycodeArgs {
  std::string construction = "auto";
  int k = -1;
  std::string kind = "stirling";
  int leaf = -1;
  int x = -1;
  int hub = -1;
};

bool almost_complete(const Graph& g) {
  const std::size_t n = g.order();
  return n >= 2 && g.edge_count() + 1 == n * (n - 1) / 2;
}

// Cycle of the colour graph from the backtracking search; exit code on failure.
std::optional<DecoratedCycle> oracle_cycle(const Graph& g, int k, ColourGraphKind kind, int* code) {
  if (kind == ColourGraphKind::kColour) throw PreconditionError("gray codes are listed for bell or stirling kinds");
  const ColourGraph cg = build(g, k, kind);
  const SearchResult r = find_hamilton_cycle(cg.skeleton);
  if (r.status == SearchStatus::kInconclusive) {
    std::cerr << "oracle budget exhausted after " << r.expansions << " expansions\n";
    *code = 2;
    return std::nullopt;
  }
  if (!r.found()) {
    std::cerr << "no Hamilton cycle in " << to_string(kind) << " colour graph (k=" << k
              << "): " << (r.reason.empty() ? "search exhausted" : r.reason) << '\n';
    *code = 1;
    return std::nullopt;
  }
  DecoratedCycle c;
  c.base = g;
  c.k = k;
  c.family = kind;
  c.kind = CycleKind::kCycle;
  for (Vertex v : r.sequence) c.sequence.push_back(cg.partition(v));
  return c;
}

std::optional<Vertex> opt_vertex(int v) { return v < 0 ? std::nullopt : std::optional<Vertex>(v); }

std::optional<DecoratedCycle> construct(const Graph& g, const GraycodeArgs& a, int* code) {
  const ColourGraphKind kind = parse_kind(a.kind);
  const int n = g.order();
  const int k = a.k < 0 ? (kind == ColourGraphKind::kBell ? n : 3) : a.k;
  std::string name = a.construction;
  if (name == "auto") {
    if (is_tree(g) && kind == ColourGraphKind::kBell && k == 3 && n >= 4) {
      name = "b3-tree";
    } else if (is_tree(g) && kind == ColourGraphKind::kStirling && k == 3 && n >= 3) {
      name = "s3-path";
    } else if (is_tree(g) && kind == ColourGraphKind::kStirling && k >= 4 && n >= k + 1) {
      name = "sk-tree";
    } else if (kind == ColourGraphKind::kBell && k >= n && !is_complete(g) && !almost_complete(g)) {
      name = "bell-n";
    } else {
      name = "oracle";
    }
    std::cerr << "construction: " << name << '\n';
  }
  if (name == "oracle") return oracle_cycle(g, k, kind, code);
  if (name == "bell-n") return bell_n_cycle(g);
  if (name == "s3-star") {
    if (n < 4 || !(g == star(n - 1))) throw PreconditionError("s3-star expects star:n (centre 0)");
    return star_s3_cycle(n - 1);
  }
  if (name == "base") return stirling_base_cycle(g, opt_vertex(a.hub));
  if (!is_tree(g)) throw PreconditionError("construction " + name + " needs a tree");
  const Tree t(g);
  if (name == "b3-tree") return b3_tree_cycle(t);
  if (name == "s3-path") {
    if (a.x >= 0) return s3_path_with_endpoints(t, a.x).path;
    return s3_tree_ham_path(t);
  }
  if (name == "s4-tree") return s4_tree_cycle(t, opt_vertex(a.leaf));
  if (name == "sk-tree") return sk_tree_cycle(t, k, opt_vertex(a.leaf));
  throw PreconditionError("unknown construction '" + name + "'");
}

int run(int argc, char** argv) {
  CLI::App app{"Bell and Stirling colour graphs, their Gray codes and checks"};
  app.require_subcommand(1);

  GraphSource src;
  std::string kind = "bell";
  int k = -1;
  std::string format;

  auto* enumerate_cmd = app.add_subcommand("enumerate", "list the partitions (or colourings) of a graph");
  add_graph_options(enumerate_cmd, src);
  enumerate_cmd->add_option("-k", k, "number of colours")->required();
  enumerate_cmd->add_option("--kind", kind, "bell, stirling or colour");
  enumerate_cmd->add_option("--format", format, "text or json");

  auto* build_cmd = app.add_subcommand("build", "materialize a colour graph");
  add_graph_options(build_cmd, src);
  build_cmd->add_option("-k", k, "number of colours")->required();
  build_cmd->add_option("--kind", kind, "bell, stirling or colour");
  build_cmd->add_option("--format", format, "json or dot");

  GraycodeArgs gc;
  auto* graycode_cmd = app.add_subcommand("graycode", "Hamilton cycle or path of a colour graph");
  add_graph_options(graycode_cmd, src);
  graycode_cmd->add_option("--construction", gc.construction,
                           "auto, bell-n, s3-star, b3-tree, s3-path, s4-tree, sk-tree, base, oracle");
  graycode_cmd->add_option("-k", gc.k, "number of colours");
  graycode_cmd->add_option("--kind", gc.kind, "bell or stirling");
  graycode_cmd->add_option("--leaf", gc.leaf, "leaf split off by the tree recursions");
  graycode_cmd->add_option("--x", gc.x, "vertex the s3-path end labels must avoid");
  graycode_cmd->add_option("--hub", gc.hub, "hub vertex for the base construction");
  graycode_cmd->add_option("--format", format, "graycode-text, json or dot");

  bool want_path = false;
  int from = -1, to = -1;
  auto* oracle_cmd = app.add_subcommand("oracle", "backtracking Hamilton search on a colour graph");
  add_graph_options(oracle_cmd, src);
  oracle_cmd->add_option("-k", k, "number of colours")->required();
  oracle_cmd->add_option("--kind", kind, "bell, stirling or colour");
  oracle_cmd->add_flag("--path", want_path, "look for a path between --from and --to");
  oracle_cmd->add_option("--from", from, "path start (colour graph vertex id)");
  oracle_cmd->add_option("--to", to, "path end (colour graph vertex id)");

  std::string suite;
  int max_n = -1;
  unsigned workers = 0;
  bool list = false;
  bool no_times = false;
  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->add_option("--suite", suite, "suite name");
  verify_cmd->add_option("--max-n", max_n, "largest instance size");
  verify_cmd->add_option("--workers", workers, "worker threads (default: all cores)");
  verify_cmd->add_option("--format", format, "text or json");
  verify_cmd->add_flag("--list", list, "list the suites");
  verify_cmd->add_flag("--no-times", no_times, "leave timings out of the text report");

  std::string listing_file;
  std::string check_kind = "stirling";
  auto* check_cmd = app.add_subcommand("check", "validate a graycode-text listing against a graph");
  add_graph_options(check_cmd, src);
  check_cmd->add_option("-k", k, "number of colours")->required();
  check_cmd->add_option("--kind", check_kind, "bell or stirling (default stirling, as for graycode)");
  check_cmd->add_option("--listing", listing_file, "graycode-text file, - for stdin")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  if (*enumerate_cmd) {
    const Graph g = load(src);
    const ColourGraphKind ck = parse_kind(kind);
    const FamilyMode mode = ck == ColourGraphKind::kBell       ? FamilyMode::kAtMost
                            : ck == ColourGraphKind::kStirling ? FamilyMode::kExactly
                                                               : FamilyMode::kLabeled;
    const PartitionFamily fam = enumerate(g, k, mode);
    std::vector<std::string> items;
    if (mode == FamilyMode::kLabeled) {
      for (const Colouring& c : fam.colourings) {
        std::string s;
        for (std::size_t i = 0; i < c.size(); ++i) s += (i ? " " : "") + std::to_string(c[i]);
        items.push_back(s);
      }
    } else {
      for (const Partition& p : fam.members) items.push_back(p.to_string());
    }
    if (format == "json") {
      std::cout << "[";
      for (std::size_t i = 0; i < items.size(); ++i) std::cout << (i ? ", " : "") << '"' << items[i] << '"';
      std::cout << "]\n";
    } else if (format.empty() || format == "text") {
      for (const auto& s : items) std::cout << s << '\n';
    } else {
      throw PreconditionError("enumerate prints text or json");
    }
    return 0;
  }
  if (*build_cmd) {
    const Graph g = load(src);
    const ColourGraph cg = build(g, k, parse_kind(kind));
    std::cout << export_colour_graph(cg, parse_format(format.empty() ? "dot" : format));
    return 0;
  }
  if (*graycode_cmd) {
    const Graph g = load(src);
    const ExportFormat fmt = parse_format(format.empty() ? "graycode-text" : format);
    int code = 0;
    const auto c = construct(g, gc, &code);
    if (!c) return code;
    const Validation v = validate(*c);
    if (!v.ok) {
      std::cerr << "certificate rejected: " << v.witness << '\n';
      return 1;
    }
    for (const auto& d : c->diagnostics) std::cerr << "note: " << d << '\n';
    std::cout << export_cycle(*c, fmt);
    return 0;
  }
  if (*oracle_cmd) {
    const Graph g = load(src);
    const ColourGraph cg = build(g, k, parse_kind(kind));
    const SearchResult r = want_path ? find_hamilton_path(cg.skeleton, from, to) : find_hamilton_cycle(cg.skeleton);
    std::cout << to_string(r.status) << " (" << r.expansions << " expansions)";
    if (!r.reason.empty()) std::cout << ": " << r.reason;
    std::cout << '\n';
    for (Vertex v : r.sequence) std::cout << cg.describe(v) << '\n';
    if (r.status == SearchStatus::kInconclusive) return 2;
    return r.found() ? 0 : 1;
  }
  if (*verify_cmd) {
    if (list) {
      for (const SuiteInfo& s : suites()) std::cout << s.name << "  (max-n " << s.default_max_n << ")  " << s.summary << '\n';
      return 0;
    }
    if (suite.empty()) throw PreconditionError("verify needs --suite (see --list)");
    SuiteLimits lim;
    lim.max_n = max_n;
    lim.workers = workers;
    const auto reports = run_suite(suite, lim);
    if (format == "json") {
      std::cout << reports_json(reports);
    } else if (format.empty() || format == "text") {
      std::cout << reports_text(reports, !no_times);
    } else {
      throw PreconditionError("verify prints text or json");
    }
    const Status s = aggregate(reports);
    std::cerr << suite << ": " << to_string(s) << " (" << reports.size() << " instances)\n";
    return exit_code(s);
  }
  if (*check_cmd) {
    const Graph g = load(src);
    const GraycodeListing listing = parse_graycode_text(read_all(listing_file));
    const Validation v = check_listing(g, k, parse_kind(check_kind), listing);
    std::cout << (v.ok ? "valid" : "invalid: " + v.witness) << '\n';
    return v.ok ? 0 : 1;
  }
  return kUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const CapExceeded& e) {
    std::cerr << "too large: " << e.what() << '\n';
    return 2;
  } catch (const ConstructionFailure& e) {
    std::cerr << "construction failed: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
