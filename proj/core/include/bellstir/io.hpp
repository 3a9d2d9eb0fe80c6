#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bellstir/colour_graph.hpp"
#include "bellstir/constructions.hpp"
#include "bellstir/graph.hpp"
#include "bellstir/partition.hpp"

namespace bellstir {

// {"n": 4, "edges": [[0,1],[1,2]], "labels": ["a","b","c","d"]}, ids 0-based.
// Loops, duplicate edges, bad ids and a label count other than n throw
// PreconditionError.
Graph graph_from_json(std::string_view text);
std::string graph_to_json(const Graph& g);

enum class ExportFormat { kJson, kDot, kGraycodeText };

// Throws PreconditionError naming the accepted formats.
ExportFormat parse_format(std::string_view name);
std::string to_string(ExportFormat format);

// Colour graphs have no graycode-text form; asking for it throws
// PreconditionError.
std::string export_colour_graph(const ColourGraph& cg, ExportFormat format);
std::string export_cycle(const DecoratedCycle& c, ExportFormat format);

// One partition per line, then CYCLE or PATH. An empty sequence prints
// nothing.
std::string graycode_text(const std::vector<Partition>& seq, CycleKind kind);

struct GraycodeListing {
  std::vector<Partition> sequence;
  CycleKind kind = CycleKind::kPath;
};

// Inverse of graycode_text. Blank lines are skipped; a missing trailer
// reads as a path.
GraycodeListing parse_graycode_text(std::string_view text);

// Reads a listing back against g: every entry in B_k(g) / S_k(g), all
// members present once, and consecutive entries adjacent (closing too for
// cycles).
Validation check_listing(const Graph& g, int k, ColourGraphKind family, const GraycodeListing& listing);

}  // namespace bellstir
