#pragma once

// Colorings, precolored outer paths, and the checks behind facial
// unique-maximum colorings.

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fum/plane_graph.hpp"

namespace fum {

using Color = int;

/// Vertex -> color. Zero marks an uncolored vertex; a coloring handed to a
/// verifier has to be total.
struct Coloring {
  std::vector<Color> colors;

  Coloring() = default;
  explicit Coloring(int n) : colors(n, 0) {}
  explicit Coloring(std::vector<Color> c) : colors(std::move(c)) {}

  Color operator[](Vertex v) const { return colors[v]; }
  Color& operator[](Vertex v) { return colors[v]; }
  int size() const noexcept { return static_cast<int>(colors.size()); }
  Color max_color() const { return colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end()); }

  friend bool operator==(const Coloring&, const Coloring&) = default;
};

struct Precolor {
  Vertex vertex = 0;
  Color color = 0;
  friend bool operator==(const Precolor&, const Precolor&) = default;
};

/// Zero, one or two outer-face vertices with colors from {1,2,3}.
struct PrecoloredPath {
  std::vector<Precolor> entries;

  std::size_t size() const noexcept { return entries.size(); }
  bool empty() const noexcept { return entries.empty(); }
  bool contains(Vertex v) const {
    return std::any_of(entries.begin(), entries.end(), [v](const Precolor& p) { return p.vertex == v; });
  }
  Color color_of(Vertex v) const {
    for (const auto& p : entries)
      if (p.vertex == v) return p.color;
    return 0;
  }

  friend bool operator==(const PrecoloredPath&, const PrecoloredPath&) = default;
};

inline void validate_precolored_path(const PlaneGraph& g, const PrecoloredPath& path) {
  auto fail = [](const std::string& why) { throw Error(ErrorKind::InvalidPrecoloring, why); };
  if (path.size() > 2) fail("at most two vertices can be precolored");
  for (const auto& p : path.entries) {
    if (p.vertex < 0 || p.vertex >= g.vertex_count()) fail("vertex " + std::to_string(p.vertex) + " out of range");
    if (p.color < 1 || p.color > 3) fail("precolor of vertex " + std::to_string(p.vertex) + " is not in {1,2,3}");
    if (!g.on_outer_face(p.vertex)) fail("vertex " + std::to_string(p.vertex) + " is not on the outer face");
  }
  if (path.size() == 2) {
    const auto& a = path.entries[0];
    const auto& b = path.entries[1];
    if (a.vertex == b.vertex) fail("precolored vertices must be distinct");
    int d = g.dart_id({a.vertex, b.vertex});
    if (d < 0) fail("precolored vertices are not adjacent");
    const int outer = g.faces().outer;
    if (g.face_of(d) != outer && g.face_of(g.twin(d)) != outer) fail("precolored edge is not on the outer walk");
    if (a.color == b.color) fail("adjacent precolored vertices share a color");
  }
}

inline void require_total(const PlaneGraph& g, const Coloring& c) {
  if (c.size() != g.vertex_count()) {
    throw Error(ErrorKind::PartialColoring, "coloring has " + std::to_string(c.size()) + " entries for " +
                                                std::to_string(g.vertex_count()) + " vertices");
  }
  for (Vertex v = 0; v < c.size(); ++v)
    if (c[v] < 1) throw Error(ErrorKind::PartialColoring, "vertex " + std::to_string(v) + " is uncolored");
}

struct ProperCheck {
  bool ok = true;
  std::optional<std::pair<Vertex, Vertex>> violating_edge;
};

inline ProperCheck is_proper(const PlaneGraph& g, const Coloring& c) {
  require_total(g, c);
  for (const auto& [u, v] : g.edges())
    if (c[u] == c[v]) return {false, std::pair{u, v}};
  return {};
}

enum class FaceScope { AllFaces, InternalOnly };

struct FaceCheck {
  int face = -1;
  bool outer = false;
  Color max_color = 0;
  std::vector<Vertex> attaining;
  bool pass = true;
};

struct VerificationReport {
  ProperCheck proper;
  std::vector<FaceCheck> faces;
  bool palette_ok = true;             // lemma contract: colors within {1,2,3,4}
  std::vector<Vertex> outer_fours;    // lemma contract: outer vertices colored 4
  bool overall = true;
  std::vector<std::string> notes;
};

namespace detail {

inline FaceCheck check_face(const PlaneGraph& g, const Coloring& c, int f) {
  FaceCheck fc;
  fc.face = f;
  fc.outer = f == g.faces().outer;
  for (Vertex v : g.faces().faces[f].vertices) fc.max_color = std::max(fc.max_color, c[v]);
  for (Vertex v : g.faces().faces[f].vertices)
    if (c[v] == fc.max_color) fc.attaining.push_back(v);
  fc.pass = fc.attaining.size() == 1;
  return fc;
}

}  // namespace detail

/// A face passes when exactly one distinct vertex of it attains the face
/// maximum; a cut vertex met twice on the walk still counts once.
inline VerificationReport verify_fum(const PlaneGraph& g, const Coloring& c,
                                     FaceScope scope = FaceScope::AllFaces) {
  VerificationReport r;
  r.proper = is_proper(g, c);
  r.overall = r.proper.ok;
  for (int f = 0; f < g.face_count(); ++f) {
    if (scope == FaceScope::InternalOnly && f == g.faces().outer) continue;
    r.faces.push_back(detail::check_face(g, c, f));
    r.overall = r.overall && r.faces.back().pass;
  }
  if (g.face_count() > 0 && g.outer_face().boundary.size() > 1) {
    r.notes.push_back("outer face is shared by " + std::to_string(g.outer_face().boundary.size()) +
                      " components and checked once");
  }
  return r;
}

/// The extension contract: proper, extends the precoloring, colors within
/// {1,2,3,4}, no 4 on the outer face, unique maxima on all internal faces.
inline VerificationReport verify_lemma_contract(const PlaneGraph& g, const PrecoloredPath& path, const Coloring& c) {
  require_total(g, c);
  for (const auto& p : path.entries) {
    if (p.vertex < 0 || p.vertex >= g.vertex_count() || c[p.vertex] != p.color) {
      throw Error(ErrorKind::PrecoloringMismatch,
                  "vertex " + std::to_string(p.vertex) + " should keep color " + std::to_string(p.color));
    }
  }
  VerificationReport r = verify_fum(g, c, FaceScope::InternalOnly);
  for (Vertex v = 0; v < c.size(); ++v) {
    if (c[v] > 4) r.palette_ok = false;
    if (c[v] == 4 && g.on_outer_face(v)) r.outer_fours.push_back(v);
  }
  r.overall = r.overall && r.palette_ok && r.outer_fours.empty();
  return r;
}

// ---------------------------------------------------------------------------
// The set X of high-degree vertices and the shape of the graph it induces.

enum class XMode { TheoremX, LemmaX };

enum class InducedClass { StarForest, Acyclic, MaxDeg2, MaxDeg3, Other };

constexpr std::string_view class_name(InducedClass c) {
  switch (c) {
    case InducedClass::StarForest: return "star-forest";
    case InducedClass::Acyclic: return "acyclic";
    case InducedClass::MaxDeg2: return "max-degree-2";
    case InducedClass::MaxDeg3: return "max-degree-3";
    case InducedClass::Other: return "other";
  }
  return "?";
}

/// Degrees inside G[S]; vertices outside S get -1.
inline std::vector<int> induced_degrees(const PlaneGraph& g, std::span<const Vertex> s) {
  std::vector<int> deg(g.vertex_count(), -1);
  for (Vertex v : s) deg[v] = 0;
  for (Vertex v : s)
    for (Vertex w : g.rotation(v))
      if (deg[w] >= 0) ++deg[v];
  return deg;
}

/// Every component of G[S] is a tree with at most one vertex of degree > 1.
inline bool is_star_forest(const PlaneGraph& g, std::span<const Vertex> s) {
  auto deg = induced_degrees(g, s);
  std::vector<char> seen(g.vertex_count(), 0);
  for (Vertex start : s) {
    if (seen[start]) continue;
    std::vector<Vertex> members{start};
    seen[start] = 1;
    long degree_sum = 0;
    int centers = 0;
    for (std::size_t i = 0; i < members.size(); ++i) {
      Vertex v = members[i];
      degree_sum += deg[v];
      if (deg[v] > 1) ++centers;
      for (Vertex w : g.rotation(v)) {
        if (deg[w] >= 0 && !seen[w]) {
          seen[w] = 1;
          members.push_back(w);
        }
      }
    }
    if (degree_sum / 2 != static_cast<long>(members.size()) - 1 || centers > 1) return false;
  }
  return true;
}

/// Cycle detection on G[S] by union-find over its edges.
inline bool is_acyclic(const PlaneGraph& g, std::span<const Vertex> s) {
  std::vector<char> in(g.vertex_count(), 0);
  for (Vertex v : s) in[v] = 1;
  detail::DisjointSets sets(g.vertex_count());
  for (const auto& [u, v] : g.edges())
    if (in[u] && in[v] && !sets.unite(u, v)) return false;
  return true;
}

inline int induced_max_degree(const PlaneGraph& g, std::span<const Vertex> s) {
  auto deg = induced_degrees(g, s);
  int best = 0;
  for (Vertex v : s) best = std::max(best, deg[v]);
  return best;
}

struct XSet {
  std::vector<Vertex> members;
  InducedClass induced_class = InducedClass::StarForest;
  bool star_forest = true;
  bool acyclic = true;
  int max_degree = 0;  // maximum degree inside G[X]
};

/// TheoremX: {v : d(v) >= 4}. LemmaX adds the degree-3 vertices of the path.
inline XSet compute_xset(const PlaneGraph& g, const PrecoloredPath& path = {}, XMode mode = XMode::TheoremX) {
  XSet x;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    bool high = g.degree(v) >= 4;
    bool path_three = mode == XMode::LemmaX && g.degree(v) == 3 && path.contains(v);
    if (high || path_three) x.members.push_back(v);
  }
  x.star_forest = is_star_forest(g, x.members);
  x.acyclic = is_acyclic(g, x.members);
  x.max_degree = induced_max_degree(g, x.members);
  if (x.star_forest) {
    x.induced_class = InducedClass::StarForest;
  } else if (x.acyclic) {
    x.induced_class = InducedClass::Acyclic;
  } else if (x.max_degree <= 2) {
    x.induced_class = InducedClass::MaxDeg2;
  } else if (x.max_degree <= 3) {
    x.induced_class = InducedClass::MaxDeg3;
  } else {
    x.induced_class = InducedClass::Other;
  }
  return x;
}

}  // namespace fum
