#include <gtest/gtest.h>

#include "fum/enumerate.hpp"
#include "fum/exact_solver.hpp"
#include "test_graphs.hpp"

namespace fum {
namespace {

// Reference values from an independent brute force over all colorings.
int chi(const PlaneGraph& g) { return chi_fum(g, 6).value.value_or(-1); }

TEST(ExactSolver, SmallFamilies) {
  EXPECT_EQ(chi(build_plane_graph(1, {{}})), 1);
  EXPECT_EQ(chi(testing::path(2)), 2);
  for (int n = 3; n <= 8; ++n) EXPECT_EQ(chi(testing::cycle(n)), 3) << "C" << n;
  EXPECT_EQ(chi(testing::k4()), 4);
  EXPECT_EQ(chi(testing::star(3)), 2);
  EXPECT_EQ(chi(testing::path(3)), 2);
  EXPECT_EQ(chi(testing::path(4)), 3);
  EXPECT_EQ(chi(testing::path(5)), 3);
  for (int k = 3; k <= 6; ++k) EXPECT_EQ(chi(testing::wheel(k)), 4) << "W" << k;
  EXPECT_EQ(chi(testing::cube()), 3);
  EXPECT_EQ(chi(testing::octahedron()), 3);
  EXPECT_EQ(chi(testing::bowtie()), 3);
  EXPECT_EQ(chi(build_plane_graph(0, {})), 0);
}

// A tree has a single face, so two colors work exactly when one side of the
// bipartition is a single vertex.
TEST(ExactSolver, TreesNeedTwoOnlyWhenStars) {
  for (int n = 2; n <= 7; ++n) {
    for (const PlaneGraph& g : enumerate_connected_plane_graphs(n)) {
      if (g.edge_count() != n - 1) continue;
      int max_degree = 0;
      for (Vertex v = 0; v < n; ++v) max_degree = std::max(max_degree, g.degree(v));
      EXPECT_EQ(chi(g), max_degree == n - 1 ? 2 : 3);
    }
  }
}

TEST(ExactSolver, WitnessIsVerifiedAndMonotone) {
  for (const PlaneGraph& g : enumerate_small(5)) {
    const ChiResult r = chi_fum(g, 6);
    ASSERT_TRUE(r.value);
    ASSERT_TRUE(r.witness);
    EXPECT_TRUE(verify_fum(g, *r.witness).overall);
    EXPECT_LE(r.witness->max_color(), *r.value);
    for (int k = 1; k <= 6; ++k) {
      const SolveResult s = fum_colorable(g, k);
      EXPECT_EQ(s.status == SolveStatus::Colorable, k >= *r.value);
    }
  }
}

TEST(ExactSolver, AboveTheBudget) {
  const ChiResult r = chi_fum(testing::k4(), 3);
  EXPECT_FALSE(r.value);
  EXPECT_TRUE(r.exhaustive);
  EXPECT_EQ(fum_colorable(testing::k4(), 3).status, SolveStatus::NotColorable);
}

TEST(ExactSolver, NodeLimitGivesTimeout) {
  SolveLimits tiny;
  tiny.max_nodes = 3;
  const SolveResult r = fum_colorable(testing::cube(), 2, AllFacesMode{}, tiny);
  EXPECT_EQ(r.status, SolveStatus::Timeout);
  const ChiResult c = chi_fum(testing::cube(), 5, tiny);
  EXPECT_FALSE(c.value);
  EXPECT_FALSE(c.exhaustive);
}

TEST(ExactSolver, LemmaMode) {
  // K4 with outer face 0 1 2: the inner vertex takes 4
  const PlaneGraph k = testing::k4();
  const SolveResult r = fum_colorable(k, 4, LemmaMode{{{{0, 1}, {1, 2}}}});
  ASSERT_EQ(r.status, SolveStatus::Colorable);
  EXPECT_EQ((*r.witness)[0], 1);
  EXPECT_EQ((*r.witness)[1], 2);
  EXPECT_EQ((*r.witness)[3], 4);
  EXPECT_EQ(fum_colorable(k, 3, LemmaMode{}).status, SolveStatus::NotColorable);

  // a 4-cycle with 1 2 1 2 fails everywhere but is fine in lemma mode once
  // the inner face has a unique maximum
  const SolveResult c = fum_colorable(testing::cycle(4), 3, LemmaMode{{{{0, 1}}}});
  ASSERT_EQ(c.status, SolveStatus::Colorable);
  EXPECT_EQ((*c.witness)[0], 1);
}

TEST(ExactSolver, RejectsBadInput) {
  EXPECT_THROW(fum_colorable(testing::k4(), 0), std::invalid_argument);
  EXPECT_THROW(fum_colorable(testing::k4(), 4, LemmaMode{{{{3, 1}}}}), Error);
}

}  // namespace
}  // namespace fum
