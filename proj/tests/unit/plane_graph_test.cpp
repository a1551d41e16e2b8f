#include <gtest/gtest.h>

#include "fum/enumerate.hpp"
#include "fum/plane_graph.hpp"
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

TEST(PlaneGraph, TriangleHasTwoFacesOfLengthThree) {
  const PlaneGraph g = testing::cycle(3);
  ASSERT_EQ(g.face_count(), 2);
  for (const Face& f : g.faces().faces) EXPECT_EQ(f.walk_length(), 3u);
  EXPECT_EQ(g.outer_face().vertices, (std::vector<Vertex>{0, 1, 2}));
}

TEST(PlaneGraph, SingleVertexAndEmptyGraph) {
  const PlaneGraph one = build_plane_graph(1, {{}});
  EXPECT_EQ(one.face_count(), 1);
  EXPECT_TRUE(one.on_outer_face(0));
  const PlaneGraph none = build_plane_graph(0, {});
  EXPECT_EQ(none.face_count(), 0);
  EXPECT_EQ(none.component_count(), 0);
}

TEST(PlaneGraph, TreeHasOneFaceWalkingEveryEdgeTwice) {
  const PlaneGraph g = testing::star(3);
  ASSERT_EQ(g.face_count(), 1);
  EXPECT_EQ(g.outer_face().walk_length(), 6u);
}

TEST(PlaneGraph, K4AndWheelAndCube) {
  EXPECT_EQ(testing::k4().face_count(), 4);
  EXPECT_EQ(testing::wheel(5).face_count(), 6);
  EXPECT_EQ(testing::cube().face_count(), 6);
  EXPECT_EQ(testing::octahedron().face_count(), 8);
}

TEST(PlaneGraph, RejectsMalformedRotations) {
  EXPECT_EQ(kind_of([] { build_plane_graph(2, {{0}, {}}); }), ErrorKind::SelfLoop);
  EXPECT_EQ(kind_of([] { build_plane_graph(2, {{1, 1}, {0, 0}}); }), ErrorKind::DuplicateNeighbor);
  EXPECT_EQ(kind_of([] { build_plane_graph(2, {{1}, {}}); }), ErrorKind::AsymmetricRotation);
  EXPECT_EQ(kind_of([] { build_plane_graph(2, {{2}, {}}); }), ErrorKind::IndexOutOfRange);
  EXPECT_EQ(kind_of([] { build_plane_graph(3, {{1}, {0}}); }), ErrorKind::IndexOutOfRange);
}

TEST(PlaneGraph, RejectsToroidalRotationOfK4) {
  // every rotation sorted ascending: traces to 2 faces, genus 1
  EXPECT_EQ(kind_of([] { build_plane_graph(4, {{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}}); }),
            ErrorKind::NonPlanarEmbedding);
}

TEST(PlaneGraph, EulerAndDartCountsOnCorpus) {
  for (int n = 1; n <= 6; ++n) {
    for (const PlaneGraph& g : enumerate_connected_plane_graphs(n)) {
      EXPECT_EQ(g.vertex_count() - g.edge_count() + g.face_count(), 2);
      std::size_t total = 0;
      for (const Face& f : g.faces().faces) total += f.walk_length();
      EXPECT_EQ(total, static_cast<std::size_t>(2 * g.edge_count()));
    }
  }
}

TEST(PlaneGraph, OuterHintPicksTheOuterFace) {
  const PlaneGraph base = testing::k4();
  for (int f = 0; f < base.face_count(); ++f) {
    const Dart d = base.faces().faces[f].boundary[0][0];
    const PlaneGraph g = build_plane_graph(4, base.rotations(), {{d}, {}});
    EXPECT_EQ(g.outer_face().vertices, base.faces().faces[f].vertices);
    EXPECT_EQ(build_plane_graph(4, g.rotations(), g.explicit_hints()), g);
  }
}

TEST(PlaneGraph, NestedComponentSharesTheEnclosingFace) {
  const PlaneGraph g = testing::nested_edge();
  EXPECT_EQ(g.component_count(), 2);
  EXPECT_EQ(g.face_count(), 2);
  EXPECT_FALSE(g.is_root_component(g.component_of(3)));
  EXPECT_FALSE(g.on_outer_face(3));
  const Face& inner = g.faces().faces[g.enclosing_face(g.component_of(3))];
  EXPECT_EQ(inner.boundary.size(), 2u);
  EXPECT_EQ(inner.vertices, (std::vector<Vertex>{0, 1, 2, 3, 4}));
  EXPECT_EQ(g.root_groups().size(), 1u);
}

TEST(PlaneGraph, DisjointRootComponentsShareTheOuterFace) {
  const PlaneGraph g = from_text("0: 1\n1: 0\n2: 3\n3: 2\n");
  EXPECT_EQ(g.face_count(), 1);
  EXPECT_EQ(g.outer_face().boundary.size(), 2u);
  EXPECT_EQ(g.root_groups().size(), 2u);
}

TEST(PlaneGraph, InvalidPlacements) {
  EXPECT_EQ(kind_of([] { from_text("0: 1 2\n1: 2 0\n2: 0 1\nhost: 0 0 1\n"); }), ErrorKind::InvalidPlacement);
  EXPECT_EQ(kind_of([] { from_text("0: 1\n1: 0\n2: 3\n3: 2\nhost: 0 2 3\nhost: 2 0 1\n"); }),
            ErrorKind::InvalidPlacement);
  EXPECT_EQ(kind_of([] { from_text("0: 1\n1: 0\nouter: 0 2\n"); }), ErrorKind::InvalidPlacement);
}

TEST(InducedSubgraph, KeepingEverythingIsTheIdentity) {
  for (const PlaneGraph& g : {testing::k4(), testing::cube(), testing::nested_edge(), testing::bowtie()}) {
    std::vector<Vertex> all(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) all[v] = v;
    const Subgraph s = induced_plane_subgraph(g, all);
    EXPECT_EQ(s.graph, g);
  }
}

TEST(InducedSubgraph, InheritsTheOuterFace) {
  // wheel minus its hub: the rim cycle, outer walk still the parent's outer side
  const PlaneGraph w = build_plane_graph(6, testing::wheel(5).rotations(), {{Dart{1, 2}}, {}});
  ASSERT_EQ(w.outer_face().walk_length(), 5u);
  const std::vector<Vertex> rim{1, 2, 3, 4, 5};
  const Subgraph s = induced_plane_subgraph(w, rim);
  EXPECT_EQ(s.graph.face_count(), 2);
  const auto parent_outer = w.outer_face().boundary[0];
  const auto child_outer = s.graph.outer_face().boundary[0];
  ASSERT_EQ(child_outer.size(), 5u);
  // every outer dart of the child maps to an outer dart of the parent
  for (const Dart& d : child_outer) {
    const Dart p{s.to_parent[d.tail], s.to_parent[d.head]};
    EXPECT_NE(std::find(parent_outer.begin(), parent_outer.end(), p), parent_outer.end());
  }
}

TEST(InducedSubgraph, PrismMinusAVertex) {
  // triangle 0 1 2 around triangle 3 4 5, joined by 0-3, 1-4, 2-5
  const PlaneGraph g = from_text(
      "0: 1 3 2\n1: 2 4 0\n2: 0 5 1\n3: 0 4 5\n4: 1 5 3\n5: 2 3 4\n");
  ASSERT_EQ(g.outer_face().vertices, (std::vector<Vertex>{0, 1, 2}));
  EXPECT_EQ(g.face_count(), 5);

  // drop vertex 0: the rest stays one component on the outer face
  const std::vector<Vertex> no_zero{1, 2, 3, 4, 5};
  const Subgraph s = induced_plane_subgraph(g, no_zero);
  EXPECT_EQ(s.graph.component_count(), 1);
  EXPECT_TRUE(s.graph.on_outer_face(s.from_parent[3]));
  EXPECT_EQ(s.graph.vertex_count() - s.graph.edge_count() + s.graph.face_count(), 2);
}

TEST(InducedSubgraph, NestedComponentKeepsItsHost) {
  // K4 with 3 as the interior apex; removing the apex leaves a triangle, and
  // an extra isolated component inside the triangle stays inside
  const PlaneGraph g = from_text("0: 1 2\n1: 2 0\n2: 0 1\n3: 4\n4: 3\nhost: 3 0 2\n");
  const std::vector<Vertex> keep{0, 1, 2, 3};
  const Subgraph s = induced_plane_subgraph(g, keep);
  EXPECT_FALSE(s.graph.on_outer_face(s.from_parent[3]));
  EXPECT_EQ(s.graph.face_count(), 2);
}

}  // namespace
}  // namespace fum
