// Generates a seeded random plane graph, thins it until the vertices of
// degree at least 4 induce a star forest, colors it and checks the result.
//
//   demo_color [seed] [n]

#include <cstdlib>
#include <iostream>

#include "fum/constructive.hpp"
#include "fum/random_graphs.hpp"

int main(int argc, char** argv) {
  const std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 1;
  const int n = argc > 2 ? std::atoi(argv[2]) : 40;

  const fum::PlaneGraph g =
      fum::repair_to_star_forest(fum::random_plane_graph(seed, n, fum::TriangulationMinusRandomEdges{0.3}));
  const fum::ExtensionResult r = fum::fum_color_star_forest(g);
  const fum::VerificationReport check = fum::verify_fum(g, r.coloring);

  std::cout << "n " << g.vertex_count() << ", m " << g.edge_count() << ", faces " << g.face_count() << '\n'
            << "colors used " << r.coloring.max_color() << ", steps " << r.trace.steps.size() << '\n'
            << (check.overall ? "PASS" : "FAIL") << '\n';
  return check.overall ? 0 : 1;
}
