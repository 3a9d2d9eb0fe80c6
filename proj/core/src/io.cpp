#include "bellstir/io.hpp"

#include <set>
#include <sstream>

#include <json.hpp>

#include "bellstir/errors.hpp"

namespace bellstir {

using nlohmann::json;

Graph graph_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw PreconditionError(std::string("graph JSON does not parse: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer()) {
    throw PreconditionError("graph JSON needs an integer field \"n\"");
  }
  const int n = doc["n"].get<int>();
  if (n < 0) throw PreconditionError("graph JSON: negative n");
  Graph g(n);
  std::set<Edge> seen;
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) throw PreconditionError("graph JSON: \"edges\" must be an array");
    for (const json& e : doc["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
        throw PreconditionError("graph JSON: edge " + e.dump() + " is not a pair of ids");
      }
      Vertex u = e[0].get<int>();
      Vertex v = e[1].get<int>();
      if (u < 0 || v < 0 || u >= n || v >= n) throw PreconditionError("graph JSON: edge " + e.dump() + " out of range");
      if (u == v) throw PreconditionError("graph JSON: loop at " + std::to_string(u));
      if (u > v) std::swap(u, v);
      if (!seen.insert({u, v}).second) throw PreconditionError("graph JSON: duplicate edge " + e.dump());
      g.add_edge(u, v);
    }
  }
  if (doc.contains("labels")) {
    const json& labels = doc["labels"];
    if (!labels.is_array() || static_cast<int>(labels.size()) != n) {
      throw PreconditionError("graph JSON: \"labels\" must list n strings");
    }
    std::vector<std::string> out;
    for (const json& l : labels) {
      if (!l.is_string()) throw PreconditionError("graph JSON: label " + l.dump() + " is not a string");
      out.push_back(l.get<std::string>());
    }
    g.set_labels(std::move(out));
  }
  return g;
}

namespace {

json graph_json(const Graph& g) {
  json edges = json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  json out = {{"n", g.order()}, {"edges", edges}};
  if (g.has_labels()) out["labels"] = g.labels();
  return out;
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

std::string family_name(ColourGraphKind kind, int k) {
  switch (kind) {
    case ColourGraphKind::kBell: return "B" + std::to_string(k);
    case ColourGraphKind::kStirling: return "S" + std::to_string(k);
    case ColourGraphKind::kColour: return "C" + std::to_string(k);
  }
  return "G";
}

}  // namespace

std::string graph_to_json(const Graph& g) { return graph_json(g).dump(); }

ExportFormat parse_format(std::string_view name) {
  if (name == "json") return ExportFormat::kJson;
  if (name == "dot") return ExportFormat::kDot;
  if (name == "graycode-text") return ExportFormat::kGraycodeText;
  throw PreconditionError("unsupported format '" + std::string(name) + "' (json, dot, graycode-text)");
}

std::string to_string(ExportFormat format) {
  switch (format) {
    case ExportFormat::kJson: return "json";
    case ExportFormat::kDot: return "dot";
    case ExportFormat::kGraycodeText: return "graycode-text";
  }
  return "?";
}

std::string export_colour_graph(const ColourGraph& cg, ExportFormat format) {
  std::ostringstream os;
  switch (format) {
    case ExportFormat::kJson: {
      json vertices = json::array();
      for (int i = 0; i < cg.size(); ++i) vertices.push_back(cg.describe(i));
      json edges = json::array();
      for (const auto& [u, v] : cg.skeleton.edges()) edges.push_back({u, v});
      json doc = {{"base", graph_json(cg.base)},
                  {"k", cg.k},
                  {"kind", to_string(cg.kind)},
                  {"vertices", vertices},
                  {"edges", edges}};
      os << doc.dump(2) << '\n';
      break;
    }
    case ExportFormat::kDot: {
      os << "graph " << family_name(cg.kind, cg.k) << " {\n";
      for (int i = 0; i < cg.size(); ++i) os << "  " << i << " [label=\"" << dot_escape(cg.describe(i)) << "\"];\n";
      for (const auto& [u, v] : cg.skeleton.edges()) os << "  " << u << " -- " << v << ";\n";
      os << "}\n";
      break;
    }
    case ExportFormat::kGraycodeText:
      throw PreconditionError("graycode-text needs a cycle or path, not a whole colour graph");
  }
  return os.str();
}

std::string graycode_text(const std::vector<Partition>& seq, CycleKind kind) {
  if (seq.empty()) return {};
  std::string out;
  for (const Partition& p : seq) out += p.to_string() + '\n';
  out += kind == CycleKind::kCycle ? "CYCLE\n" : "PATH\n";
  return out;
}

std::string export_cycle(const DecoratedCycle& c, ExportFormat format) {
  switch (format) {
    case ExportFormat::kGraycodeText:
      return graycode_text(c.sequence, c.kind);
    case ExportFormat::kJson: {
      json seq = json::array();
      for (const Partition& p : c.sequence) seq.push_back(p.to_string());
      json doc = {{"base", graph_json(c.base)},
                  {"k", c.k},
                  {"family", to_string(c.family)},
                  {"kind", to_string(c.kind)},
                  {"sequence", seq}};
      if (c.leaf) {
        doc["leaf"] = *c.leaf;
        doc["leaf_singleton"] = c.leaf_singleton;
      }
      if (!c.anchors.empty()) doc["anchors"] = c.anchors;
      if (!c.diagnostics.empty()) doc["diagnostics"] = c.diagnostics;
      return doc.dump(2) + '\n';
    }
    case ExportFormat::kDot: {
      if (c.sequence.empty()) return {};
      std::ostringstream os;
      os << "graph " << family_name(c.family, c.k) << "_" << to_string(c.kind) << " {\n";
      const int m = static_cast<int>(c.sequence.size());
      for (int i = 0; i < m; ++i) os << "  " << i << " [label=\"" << c.sequence[i].to_string() << "\"];\n";
      for (int i = 0; i + 1 < m; ++i) os << "  " << i << " -- " << i + 1 << ";\n";
      if (c.kind == CycleKind::kCycle && m > 2) os << "  " << m - 1 << " -- 0;\n";
      os << "}\n";
      return os.str();
    }
  }
  throw PreconditionError("unsupported format");
}

GraycodeListing parse_graycode_text(std::string_view text) {
  GraycodeListing out;
  bool closed = false;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
    while (!line.empty() && line.front() == ' ') line.remove_prefix(1);
    if (line.empty()) continue;
    if (closed) throw PreconditionError("graycode-text: line " + std::to_string(line_no) + " follows the trailer");
    if (line == "CYCLE" || line == "PATH") {
      out.kind = line == "CYCLE" ? CycleKind::kCycle : CycleKind::kPath;
      closed = true;
      continue;
    }
    try {
      out.sequence.push_back(Partition::parse(line));
    } catch (const PreconditionError& e) {
      throw PreconditionError("graycode-text line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

Validation check_listing(const Graph& g, int k, ColourGraphKind family, const GraycodeListing& listing) {
  DecoratedCycle c;
  c.base = g;
  c.k = k;
  c.family = family;
  c.kind = listing.kind;
  c.sequence = listing.sequence;
  return validate(c);
}

}  // namespace bellstir
