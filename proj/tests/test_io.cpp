#include <gtest/gtest.h>

#include "bellstir/errors.hpp"
#include "bellstir/io.hpp"
#include "support.hpp"

using namespace bellstir;

TEST(GraphJson, RoundTrip) {
  Graph g = path(4);
  g.set_labels({"a", "b", "c", "d"});
  const Graph back = graph_from_json(graph_to_json(g));
  EXPECT_EQ(back, g);
  EXPECT_EQ(back.labels(), g.labels());
  const Graph plain = graph_from_json(R"({"n": 3, "edges": [[2, 0]]})");
  EXPECT_TRUE(plain.has_edge(0, 2));
  EXPECT_FALSE(plain.has_labels());
  EXPECT_EQ(graph_from_json(R"({"n": 2})").edge_count(), 0u);
}

TEST(GraphJson, Rejections) {
  EXPECT_THROW(graph_from_json(R"({"n": 3, "edges": [[0, 1], [1, 0]]})"), PreconditionError);
  EXPECT_THROW(graph_from_json(R"({"n": 3, "edges": [[1, 1]]})"), PreconditionError);
  EXPECT_THROW(graph_from_json(R"({"n": 3, "edges": [[0, 3]]})"), PreconditionError);
  EXPECT_THROW(graph_from_json(R"({"n": 3, "edges": [[0]]})"), PreconditionError);
  EXPECT_THROW(graph_from_json(R"({"n": 2, "labels": ["a"]})"), PreconditionError);
  EXPECT_THROW(graph_from_json(R"({"edges": []})"), PreconditionError);
  EXPECT_THROW(graph_from_json("{"), PreconditionError);
}

TEST(Export, PathFourListing) {
  const DecoratedCycle p = s3_tree_ham_path(Tree(path(4)));
  const std::string text = export_cycle(p, ExportFormat::kGraycodeText);
  // the drawn path a|c|bd, ad|b|c, ac|b|d with a, b, c, d -> 0..3, in either direction
  const std::vector<std::string> drawn{"0|2|1,3", "0,3|1|2", "0,2|1|3"};
  const GraycodeListing listing = parse_graycode_text(text);
  ASSERT_EQ(listing.sequence.size(), 3u);
  EXPECT_EQ(listing.kind, CycleKind::kPath);
  std::vector<std::string> got;
  for (const Partition& q : listing.sequence) got.push_back(oracle::show(oracle::parse(q.to_string())));
  std::vector<std::string> want;
  for (const auto& d : drawn) want.push_back(oracle::show(oracle::parse(d)));
  std::vector<std::string> rev(want.rbegin(), want.rend());
  EXPECT_TRUE(got == want || got == rev);
  EXPECT_EQ(text, "0|1,3|2\n0,3|1|2\n0,2|1|3\nPATH\n");
}

TEST(Export, GraycodeRoundTripRevalidates) {
  for (int n = 5; n <= 7; ++n) {
    for (const Graph& g : nonisomorphic_trees(n)) {
      const DecoratedCycle c = s4_tree_cycle(Tree(g));
      const GraycodeListing back = parse_graycode_text(export_cycle(c, ExportFormat::kGraycodeText));
      EXPECT_EQ(back.sequence, c.sequence);
      EXPECT_EQ(back.kind, CycleKind::kCycle);
      EXPECT_TRUE(check_listing(g, 4, ColourGraphKind::kStirling, back).ok);
    }
  }
}

TEST(Export, CheckListingFindsBrokenOrder) {
  const DecoratedCycle c = star_s3_cycle(5);
  GraycodeListing l = parse_graycode_text(export_cycle(c, ExportFormat::kGraycodeText));
  std::swap(l.sequence[0], l.sequence[5]);
  EXPECT_FALSE(check_listing(c.base, 3, ColourGraphKind::kStirling, l).ok);
}

TEST(Export, EmptyPathPrintsNothing) {
  DecoratedCycle empty;
  empty.kind = CycleKind::kPath;
  EXPECT_EQ(export_cycle(empty, ExportFormat::kGraycodeText), "");
  EXPECT_EQ(export_cycle(empty, ExportFormat::kDot), "");
  EXPECT_TRUE(parse_graycode_text("").sequence.empty());
}

TEST(Export, ParseErrors) {
  EXPECT_THROW(parse_graycode_text("0|1\nCYCLE\n0|1\n"), PreconditionError);
  EXPECT_THROW(parse_graycode_text("0|x\n"), PreconditionError);
  const GraycodeListing l = parse_graycode_text("0|1\r\n\n 0,1 \nCYCLE\n");
  EXPECT_EQ(l.sequence.size(), 2u);
  EXPECT_EQ(l.kind, CycleKind::kCycle);
}

TEST(Export, DotForColourGraph) {
  const ColourGraph cg = build(path(4), 3, ColourGraphKind::kStirling);
  const std::string dot = export_colour_graph(cg, ExportFormat::kDot);
  EXPECT_EQ(dot.rfind("graph S3 {", 0), 0u);
  EXPECT_NE(dot.find("label=\"0,3|1|2\""), std::string::npos);
  int edges = 0;
  for (std::size_t at = dot.find(" -- "); at != std::string::npos; at = dot.find(" -- ", at + 1)) ++edges;
  EXPECT_EQ(edges, 2);
  EXPECT_THROW(export_colour_graph(cg, ExportFormat::kGraycodeText), PreconditionError);
}

TEST(Export, JsonIsDeterministic) {
  const ColourGraph cg = build(star(3), 3, ColourGraphKind::kBell);
  EXPECT_EQ(export_colour_graph(cg, ExportFormat::kJson), export_colour_graph(cg, ExportFormat::kJson));
  const DecoratedCycle c = sk_tree_cycle(Tree(path(6)), 4);
  const std::string a = export_cycle(c, ExportFormat::kJson);
  EXPECT_EQ(a, export_cycle(sk_tree_cycle(Tree(path(6)), 4), ExportFormat::kJson));
  EXPECT_NE(a.find("\"leaf\""), std::string::npos);
}

TEST(Export, Formats) {
  EXPECT_EQ(parse_format("dot"), ExportFormat::kDot);
  EXPECT_EQ(to_string(parse_format("graycode-text")), "graycode-text");
  EXPECT_THROW(parse_format("svg"), PreconditionError);
}
