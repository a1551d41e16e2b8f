#pragma once

// Seeded random plane graphs. Draws use raw mt19937_64 output (modulo and
// 53-bit fractions) so results do not depend on the standard library's
// distribution implementations.

#include <array>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <variant>
#include <vector>

#include "fum/coloring.hpp"
#include "fum/enumerate.hpp"
#include "fum/plane_graph.hpp"

namespace fum {

struct Triangulation {};
struct TriangulationMinusRandomEdges {
  double p = 0.0;
};
using RandomModel = std::variant<Triangulation, TriangulationMinusRandomEdges>;

namespace detail {

class Draw {
 public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}
  std::uint64_t below(std::uint64_t bound) { return rng_() % bound; }
  double unit() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 rng_;
};

inline void erase_value(std::vector<Vertex>& r, Vertex value) { r.erase(std::find(r.begin(), r.end(), value)); }

inline Vertex succ_in(const std::vector<Vertex>& r, Vertex a) {
  auto it = std::find(r.begin(), r.end(), a);
  return ++it == r.end() ? r.front() : *it;
}

/// Stacked triangulation (each new vertex lands in a random face) followed
/// by 2n random edge flips.
inline Rotations random_triangulation(Draw& draw, int n) {
  Rotations rot{{1, 2}, {2, 0}, {0, 1}};
  std::vector<std::array<Vertex, 3>> faces{{0, 1, 2}, {0, 2, 1}};
  std::vector<std::pair<Vertex, Vertex>> edges{{0, 1}, {1, 2}, {0, 2}};
  for (Vertex w = 3; w < n; ++w) {
    const std::size_t fi = draw.below(faces.size());
    const auto [x, y, z] = faces[fi];
    insert_after(rot[y], x, w);
    insert_after(rot[z], y, w);
    insert_after(rot[x], z, w);
    rot.push_back({y, x, z});
    faces[fi] = {x, y, w};
    faces.push_back({y, z, w});
    faces.push_back({z, x, w});
    edges.insert(edges.end(), {{x, w}, {y, w}, {z, w}});
  }
  if (n < 5) return rot;
  for (int t = 0; t < 2 * n; ++t) {
    const std::size_t ei = draw.below(edges.size());
    const auto [a, b] = edges[ei];
    const Vertex c = succ_in(rot[b], a);
    const Vertex d = succ_in(rot[a], b);
    if (c == d || rot[a].size() <= 3 || rot[b].size() <= 3) continue;
    if (std::find(rot[c].begin(), rot[c].end(), d) != rot[c].end()) continue;
    erase_value(rot[a], b);
    erase_value(rot[b], a);
    insert_after(rot[c], b, d);
    insert_after(rot[d], a, c);
    edges[ei] = {std::min(c, d), std::max(c, d)};
  }
  return rot;
}

inline bool connected_without(const Rotations& rot, Vertex a, Vertex b) {
  std::vector<char> seen(rot.size(), 0);
  std::vector<Vertex> stack{a};
  seen[a] = 1;
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    for (Vertex w : rot[x]) {
      if ((x == a && w == b) || (x == b && w == a) || seen[w]) continue;
      if (w == b) return true;
      seen[w] = 1;
      stack.push_back(w);
    }
  }
  return false;
}

}  // namespace detail

/// Deterministic in (seed, n, model). The deletion model visits the edges
/// off the triangulation's outer face in sorted order and drops each with
/// probability p unless it is a bridge of what is left.
inline PlaneGraph random_plane_graph(std::uint64_t seed, int n, const RandomModel& model = Triangulation{}) {
  if (n < 3) throw std::invalid_argument("random plane graphs need n >= 3");
  detail::Draw draw(seed);
  Rotations rot = detail::random_triangulation(draw, n);
  if (const auto* minus = std::get_if<TriangulationMinusRandomEdges>(&model)) {
    const PlaneGraph tri = build_plane_graph(n, rot);
    for (const auto& [a, b] : tri.edges()) {
      const int d = tri.dart_id({a, b});
      const bool boundary = tri.face_of(d) == tri.faces().outer || tri.face_of(tri.twin(d)) == tri.faces().outer;
      const double roll = draw.unit();
      if (boundary || roll >= minus->p || !detail::connected_without(rot, a, b)) continue;
      detail::erase_value(rot[a], b);
      detail::erase_value(rot[b], a);
    }
  }
  return build_plane_graph(n, std::move(rot));
}

/// Deletes edges of G[X] joining two vertices of X-degree at least 2 (the
/// obstruction to a star forest) until X induces a star forest. Non-bridges
/// go first; among equals the smallest edge is taken.
inline PlaneGraph repair_to_star_forest(const PlaneGraph& g) {
  Rotations rot = g.rotations();
  const int n = g.vertex_count();
  for (;;) {
    std::vector<int> xdeg(n, -1);
    for (Vertex v = 0; v < n; ++v)
      if (rot[v].size() >= 4) xdeg[v] = 0;
    for (Vertex v = 0; v < n; ++v)
      if (xdeg[v] >= 0)
        for (Vertex w : rot[v])
          if (xdeg[w] >= 0) ++xdeg[v];
    std::pair<Vertex, Vertex> pick{-1, -1};
    bool pick_is_bridge = true;
    for (Vertex v = 0; v < n && (pick.first < 0 || pick_is_bridge); ++v) {
      if (xdeg[v] < 2) continue;
      for (Vertex w : rot[v]) {
        if (w < v || xdeg[w] < 2) continue;
        const bool bridge = !detail::connected_without(rot, v, w);
        if (pick.first < 0 || (pick_is_bridge && !bridge)) {
          pick = {v, w};
          pick_is_bridge = bridge;
          if (!bridge) break;
        }
      }
    }
    if (pick.first < 0) {
      PlaneGraph out = build_plane_graph(n, rot);
      if (compute_xset(out).star_forest) return out;
      throw std::logic_error("star-forest repair stalled");
    }
    detail::erase_value(rot[pick.first], pick.second);
    detail::erase_value(rot[pick.second], pick.first);
  }
}

}  // namespace fum
