#include <gtest/gtest.h>

#include "fum/formats.hpp"
#include "fum/planar_code.hpp"
#include "test_graphs.hpp"

namespace fum {
namespace {

using testing::from_text;

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no fum::Error thrown";
  return ErrorKind::ParseError;
}

std::string bytes(std::initializer_list<int> values) {
  std::string out(kPlanarCodeHeader);
  for (int v : values) out.push_back(static_cast<char>(v));
  return out;
}

TEST(RotationText, TriangleRoundTrip) {
  const std::string text = "0: 1 2\n1: 2 0\n2: 0 1\n";
  const GraphDocument doc = parse_rotation_text(text);
  EXPECT_EQ(doc.graph.vertex_count(), 3);
  EXPECT_EQ(doc.graph.edge_count(), 3);
  EXPECT_FALSE(doc.coloring);
  EXPECT_EQ(write_rotation_text(doc), text);
}

TEST(RotationText, CommentsColorsAndHints) {
  const GraphDocument doc = parse_rotation_text(
      "# a nested edge\n0: 1 2\n1: 2 0\n2: 0 1\n3: 4\n4: 3\nhost: 3 0 2\nprecolor 0 1\n"
      "color 0 1\ncolor 1 2\ncolor 2 3\ncolor 3 1\ncolor 4 2\n");
  ASSERT_TRUE(doc.coloring);
  ASSERT_TRUE(doc.precolor);
  EXPECT_EQ(doc.coloring->colors, (std::vector<Color>{1, 2, 3, 1, 2}));
  EXPECT_EQ(doc.precolor->entries, (std::vector<Precolor>{{0, 1}}));
  EXPECT_FALSE(doc.graph.on_outer_face(3));
  EXPECT_EQ(parse_rotation_text(write_rotation_text(doc)), doc);
}

TEST(RotationText, ParseErrors) {
  EXPECT_EQ(kind_of([] { parse_rotation_text("0 1 2\n"); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { parse_rotation_text("0: x\n"); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { parse_rotation_text("0: 1\n1: 0\nwhatever 1\n"); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { parse_rotation_text("0: 1\n1:\n"); }), ErrorKind::AsymmetricRotation);
}

TEST(RotationJson, RoundTripKeepsEverything) {
  GraphDocument doc{testing::nested_edge(), Coloring({1, 2, 3, 1, 2}), PrecoloredPath{{{0, 1}}}};
  const std::string json = write_rotation_json(doc);
  EXPECT_EQ(json.substr(0, 6), "{\"n\":5");
  EXPECT_NE(json.find("\"hosts\""), std::string::npos);
  EXPECT_EQ(parse_rotation_json(json), doc);
  EXPECT_EQ(detect_format(json), Format::RotationJson);
}

TEST(RotationJson, ParseErrors) {
  EXPECT_EQ(kind_of([] { parse_rotation_json("{"); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { parse_rotation_json("{\"rotations\": []}"); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { parse_rotation_json("{\"n\": 2, \"rotations\": [[1],[0]], \"coloring\": [1]}"); }),
            ErrorKind::ParseError);
}

TEST(PlanarCode, ParsesTheTriangle) {
  const auto graphs = parse_planar_code(bytes({3, 2, 3, 0, 3, 1, 0, 1, 2, 0}));
  ASSERT_EQ(graphs.size(), 1u);
  EXPECT_EQ(graphs[0].rotations(), (std::vector<std::vector<Vertex>>{{1, 2}, {2, 0}, {0, 1}}));
  EXPECT_EQ(encode_planar_code(graphs[0]), bytes({3, 2, 3, 0, 3, 1, 0, 1, 2, 0}).substr(kPlanarCodeHeader.size()));
}

TEST(PlanarCode, EmptyTailAndErrors) {
  EXPECT_TRUE(parse_planar_code(std::string(kPlanarCodeHeader)).empty());
  EXPECT_EQ(kind_of([] { parse_planar_code("planar_code"); }), ErrorKind::BadHeader);
  EXPECT_EQ(kind_of([] { parse_planar_code(">>planar_code xx<<"); }), ErrorKind::BadHeader);
  EXPECT_EQ(kind_of([] { parse_planar_code(bytes({3, 2, 3, 0, 3})); }), ErrorKind::TruncatedGraph);
  EXPECT_EQ(kind_of([] { parse_planar_code(bytes({2, 3, 0, 1, 0})); }), ErrorKind::IndexOutOfRange);
  EXPECT_EQ(kind_of([] { parse_planar_code(bytes({2, 2, 0, 0})); }), ErrorKind::AsymmetricRotation);
}

TEST(PlanarCode, LenientModeSkipsBadGraphs) {
  const std::string stream = bytes({2, 2, 0, 0, 2, 2, 0, 1, 0});
  std::vector<std::string> skipped;
  const auto graphs = parse_planar_code(stream, {true}, &skipped);
  ASSERT_EQ(graphs.size(), 1u);
  EXPECT_EQ(graphs[0].edge_count(), 1);
  ASSERT_EQ(skipped.size(), 1u);
  EXPECT_EQ(skipped[0].rfind("graph 0", 0), 0u);
}

TEST(PlanarCode, WideEncoding) {
  const PlaneGraph big = testing::cycle(300);
  const std::vector<PlaneGraph> one{big};
  const std::string stream = serialize_planar_code(one);
  EXPECT_EQ(stream.rfind(">>planar_code le<<", 0), 0u);
  EXPECT_EQ(parse_planar_code(stream), one);

  // big-endian variant of the triangle
  std::string be(">>planar_code be<<");
  for (int v : {0, 0, 3, 0, 2, 0, 3, 0, 0, 0, 3, 0, 1, 0, 0, 0, 1, 0, 2, 0, 0}) be.push_back(static_cast<char>(v));
  const auto tri = parse_planar_code(be);
  ASSERT_EQ(tri.size(), 1u);
  EXPECT_EQ(tri[0], testing::cycle(3));

  const std::vector<PlaneGraph> empty{build_plane_graph(0, {})};
  EXPECT_EQ(parse_planar_code(serialize_planar_code(empty)), empty);
}

TEST(Formats, UnrepresentableInPlanarCode) {
  EXPECT_EQ(kind_of([] { serialize(GraphDocument{testing::nested_edge(), {}, {}}, Format::PlanarCode); }),
            ErrorKind::UnrepresentableInFormat);
  EXPECT_EQ(kind_of([] { serialize(GraphDocument{testing::cycle(3), Coloring({1, 2, 3}), {}}, Format::PlanarCode); }),
            ErrorKind::UnrepresentableInFormat);
  EXPECT_EQ(kind_of([] { serialize(GraphDocument{testing::k4(), {}, {}}, Format::PlanarCode); }),
            ErrorKind::UnrepresentableInFormat);
}

TEST(Formats, DetectAndDeserialize) {
  EXPECT_EQ(detect_format(std::string(kPlanarCodeHeader)), Format::PlanarCode);
  EXPECT_EQ(detect_format("  {\"n\": 0}"), Format::RotationJson);
  EXPECT_EQ(detect_format("0: 1\n1: 0\n"), Format::RotationText);

  const std::vector<PlaneGraph> two{testing::cycle(3), testing::cycle(4)};
  const std::string stream = serialize_planar_code(two);
  EXPECT_EQ(deserialize(stream, Format::PlanarCode, 1).graph, testing::cycle(4));
  EXPECT_EQ(kind_of([&] { deserialize(stream, Format::PlanarCode); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([&] { deserialize(stream, Format::PlanarCode, 2); }), ErrorKind::IndexOutOfRange);
  EXPECT_EQ(format_name(Format::RotationJson), "json");
}

TEST(Formats, EveryFormatRoundTrips) {
  for (const PlaneGraph& g : {testing::cycle(5), testing::cube(), testing::bowtie(), testing::star(4)}) {
    const GraphDocument doc{g, {}, {}};
    for (Format f : {Format::PlanarCode, Format::RotationText, Format::RotationJson}) {
      const std::string out = serialize(doc, f);
      EXPECT_EQ(detect_format(out), f);
      EXPECT_EQ(deserialize(out, f), doc) << format_name(f);
      EXPECT_EQ(serialize(deserialize(out, f), f), out);
    }
  }
}

TEST(Dot, K4) {
  const PlaneGraph g = testing::k4();
  const Coloring c({1, 2, 3, 4});
  EXPECT_EQ(export_dot(g, &c),
            "graph fum {\n"
            "  node [shape=circle];\n"
            "  0 [label=\"0:1\", peripheries=2];\n"
            "  1 [label=\"1:2\", peripheries=2];\n"
            "  2 [label=\"2:3\", peripheries=2];\n"
            "  3 [label=\"3:4\", style=filled, fillcolor=gold];\n"
            "  0 -- 1;\n  0 -- 2;\n  0 -- 3;\n  1 -- 2;\n  1 -- 3;\n  2 -- 3;\n"
            "}\n");
  EXPECT_EQ(export_dot(testing::path(2)), "graph fum {\n  node [shape=circle];\n  0 [label=\"0\", peripheries=2];\n"
                                          "  1 [label=\"1\", peripheries=2];\n  0 -- 1;\n}\n");
}

}  // namespace
}  // namespace fum
