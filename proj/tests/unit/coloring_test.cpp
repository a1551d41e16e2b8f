#include <gtest/gtest.h>

#include "fum/coloring.hpp"
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

TEST(Verify, FourCycleWithTwoColorsFailsBothFaces) {
  const PlaneGraph g = testing::cycle(4);
  const VerificationReport r = verify_fum(g, Coloring({1, 2, 1, 2}));
  EXPECT_TRUE(r.proper.ok);
  EXPECT_FALSE(r.overall);
  ASSERT_EQ(r.faces.size(), 2u);
  for (const FaceCheck& f : r.faces) {
    EXPECT_FALSE(f.pass);
    EXPECT_EQ(f.max_color, 2);
    EXPECT_EQ(f.attaining, (std::vector<Vertex>{1, 3}));
  }
  EXPECT_TRUE(verify_fum(g, Coloring({1, 2, 1, 3})).overall);
}

TEST(Verify, ImproperColoringIsReported) {
  const VerificationReport r = verify_fum(testing::cycle(3), Coloring({1, 1, 2}));
  EXPECT_FALSE(r.proper.ok);
  EXPECT_EQ(r.proper.violating_edge, (std::pair<Vertex, Vertex>{0, 1}));
  EXPECT_FALSE(r.overall);
}

TEST(Verify, CutVertexCountsOnce) {
  // the bowtie's outer walk meets 0 twice; 0 alone holds the maximum
  EXPECT_TRUE(verify_fum(testing::bowtie(), Coloring({3, 1, 2, 1, 2})).overall);
  EXPECT_TRUE(verify_fum(testing::star(3), Coloring({2, 1, 1, 1})).overall);
}

TEST(Verify, InternalScopeSkipsTheOuterFace) {
  const PlaneGraph g = testing::cycle(4);
  const Coloring c({1, 2, 1, 2});
  EXPECT_FALSE(verify_fum(g, c, FaceScope::InternalOnly).overall);
  // K4 drawn with outer face 0 1 2: color 4 on 3 inside
  const PlaneGraph k = testing::k4();
  const Coloring kc({1, 2, 3, 4});
  EXPECT_TRUE(verify_fum(k, kc).overall);
}

TEST(Verify, PartialColoring) {
  EXPECT_EQ(kind_of([] { verify_fum(testing::cycle(3), Coloring({1, 2})); }), ErrorKind::PartialColoring);
  EXPECT_EQ(kind_of([] { verify_fum(testing::cycle(3), Coloring({1, 0, 2})); }), ErrorKind::PartialColoring);
}

TEST(LemmaContract, ChecksPrecolorPaletteAndOuterFours) {
  const PlaneGraph g = testing::k4();  // outer face 0 1 2, vertex 3 inside
  const PrecoloredPath p{{{0, 1}, {1, 2}}};
  EXPECT_TRUE(verify_lemma_contract(g, p, Coloring({1, 2, 3, 4})).overall);
  EXPECT_EQ(kind_of([&] { verify_lemma_contract(g, p, Coloring({2, 1, 3, 4})); }),
            ErrorKind::PrecoloringMismatch);
  const VerificationReport four = verify_lemma_contract(g, {}, Coloring({4, 1, 2, 3}));
  EXPECT_FALSE(four.overall);
  EXPECT_EQ(four.outer_fours, (std::vector<Vertex>{0}));
  const VerificationReport five = verify_lemma_contract(g, {}, Coloring({1, 2, 3, 5}));
  EXPECT_FALSE(five.palette_ok);
  EXPECT_FALSE(five.overall);
}

TEST(PrecoloredPathValidation, RejectsBadPaths) {
  const PlaneGraph g = testing::k4();
  auto bad = [&](PrecoloredPath p) { return kind_of([&] { validate_precolored_path(g, p); }); };
  EXPECT_EQ(bad({{{3, 1}}}), ErrorKind::InvalidPrecoloring);                      // not outer
  EXPECT_EQ(bad({{{0, 4}}}), ErrorKind::InvalidPrecoloring);                      // color 4
  EXPECT_EQ(bad({{{0, 0}}}), ErrorKind::InvalidPrecoloring);                      // color 0
  EXPECT_EQ(bad({{{0, 1}, {1, 1}}}), ErrorKind::InvalidPrecoloring);              // same color
  EXPECT_EQ(bad({{{0, 1}, {0, 2}}}), ErrorKind::InvalidPrecoloring);              // repeated
  EXPECT_EQ(bad({{{0, 1}, {1, 2}, {2, 3}}}), ErrorKind::InvalidPrecoloring);      // too long
  EXPECT_EQ(bad({{{7, 1}}}), ErrorKind::InvalidPrecoloring);                      // out of range
  const PlaneGraph c = testing::cycle(4);
  EXPECT_EQ(kind_of([&] { validate_precolored_path(c, {{{0, 1}, {2, 2}}}); }), ErrorKind::InvalidPrecoloring);
  EXPECT_NO_THROW(validate_precolored_path(c, {{{0, 1}, {1, 2}}}));
  EXPECT_NO_THROW(validate_precolored_path(c, {}));
}

TEST(InducedShape, StarForestAndAcyclic) {
  const PlaneGraph s = testing::star(4);
  const std::vector<Vertex> all{0, 1, 2, 3, 4};
  EXPECT_TRUE(is_star_forest(s, all));
  const PlaneGraph p = testing::path(4);
  const std::vector<Vertex> four{0, 1, 2, 3};
  EXPECT_FALSE(is_star_forest(p, four));  // two centers
  EXPECT_TRUE(is_acyclic(p, four));
  const std::vector<Vertex> three{0, 1, 2};
  EXPECT_TRUE(is_star_forest(p, three));
  const PlaneGraph c = testing::cycle(3);
  const std::vector<Vertex> tri{0, 1, 2};
  EXPECT_FALSE(is_acyclic(c, tri));
  EXPECT_EQ(induced_max_degree(c, tri), 2);
}

TEST(XSets, TheoremAndLemmaVariants) {
  // octahedron: every vertex has degree 4; G[X] is the whole 4-regular graph
  const XSet oct = compute_xset(testing::octahedron());
  EXPECT_EQ(oct.members.size(), 6u);
  EXPECT_EQ(oct.induced_class, InducedClass::Other);
  EXPECT_EQ(oct.max_degree, 4);

  // cube is 3-regular: X empty
  EXPECT_TRUE(compute_xset(testing::cube()).members.empty());
  EXPECT_EQ(class_name(compute_xset(testing::cube()).induced_class), "star-forest");

  // K4: degree-3 path vertices join X only in the lemma variant
  const PlaneGraph k = testing::k4();
  const PrecoloredPath p{{{0, 1}, {1, 2}}};
  EXPECT_TRUE(compute_xset(k, p).members.empty());
  const XSet lx = compute_xset(k, p, XMode::LemmaX);
  EXPECT_EQ(lx.members, (std::vector<Vertex>{0, 1}));
  EXPECT_TRUE(lx.star_forest);

  // wheel with 6 spokes: X = {hub}
  const XSet w = compute_xset(testing::wheel(6));
  EXPECT_EQ(w.members, (std::vector<Vertex>{0}));
}

TEST(XSets, ClassOrdering) {
  // triangle of degree-4 vertices: cycle in G[X], max degree 2
  const PlaneGraph g = testing::octahedron();
  const std::vector<Vertex> c4{1, 2, 3, 4};
  EXPECT_FALSE(is_acyclic(g, c4));
  EXPECT_EQ(induced_max_degree(g, c4), 2);
}

}  // namespace
}  // namespace fum
