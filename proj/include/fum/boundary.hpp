#pragma once

// Queries on the outer boundary and the separator splits used by the
// precoloring-extension recursion.

#include <algorithm>
#include <cstdlib>
#include <span>
#include <variant>
#include <vector>

#include "fum/plane_graph.hpp"

namespace fum {

struct BoundaryCycle {
  std::vector<Vertex> vertices;  // in walk order, starting at the smallest vertex
};
struct CutVertexWalk {
  Vertex vertex = -1;  // smallest vertex repeated on the outer walk
};
struct NoInternalFaces {};
struct Disconnected {
  std::vector<std::vector<Vertex>> groups;  // see PlaneGraph::root_groups
};

using BoundaryClass = std::variant<BoundaryCycle, CutVertexWalk, NoInternalFaces, Disconnected>;

inline BoundaryClass classify_boundary(const PlaneGraph& g) {
  if (g.vertex_count() == 0) return NoInternalFaces{};
  auto groups = g.root_groups();
  if (groups.size() > 1) return Disconnected{std::move(groups)};
  if (g.face_count() == 1) return NoInternalFaces{};

  int root = 0;
  while (!g.is_root_component(root)) ++root;
  const auto walk = g.outer_walk(root);
  std::vector<int> seen(g.vertex_count(), 0);
  Vertex cut = -1;
  for (const Dart& d : walk) {
    if (++seen[d.tail] == 2 && (cut < 0 || d.tail < cut)) cut = d.tail;
  }
  if (cut >= 0) return CutVertexWalk{cut};

  BoundaryCycle cycle;
  for (const Dart& d : walk) cycle.vertices.push_back(d.tail);
  auto smallest = std::min_element(cycle.vertices.begin(), cycle.vertices.end());
  std::rotate(cycle.vertices.begin(), smallest, cycle.vertices.end());
  return cycle;
}

/// Edges of G joining two non-consecutive vertices of `cycle`, as sorted pairs.
inline std::vector<std::pair<Vertex, Vertex>> chords_of_cycle(const PlaneGraph& g, const BoundaryCycle& cycle) {
  const auto& cv = cycle.vertices;
  const int len = static_cast<int>(cv.size());
  std::vector<int> position(g.vertex_count(), -1);
  for (int i = 0; i < len; ++i) position[cv[i]] = i;
  std::vector<std::pair<Vertex, Vertex>> chords;
  for (int i = 0; i < len; ++i) {
    for (Vertex w : g.rotation(cv[i])) {
      int j = position[w];
      if (j < 0 || cv[i] > w) continue;
      int gap = std::abs(i - j);
      if (gap != 1 && gap != len - 1) chords.emplace_back(cv[i], w);
    }
  }
  std::sort(chords.begin(), chords.end());
  return chords;
}

inline std::vector<std::pair<Vertex, Vertex>> chords_of_outer_cycle(const PlaneGraph& g) {
  auto cls = classify_boundary(g);
  const auto* cycle = std::get_if<BoundaryCycle>(&cls);
  if (cycle == nullptr) throw Error(ErrorKind::NotACycleBoundary, "outer boundary is not a cycle");
  return chords_of_cycle(g, *cycle);
}

/// Y together with every vertex drawn inside a bounded face of G[Y].
inline std::vector<Vertex> interior_closure(const PlaneGraph& g, std::span<const Vertex> y) {
  std::vector<char> keep(g.vertex_count(), 0);
  for (Vertex v : y) {
    if (v < 0 || v >= g.vertex_count()) throw Error(ErrorKind::IndexOutOfRange, "vertex " + std::to_string(v));
    keep[v] = 1;
  }
  auto regions = detail::merge_across_deleted(g, keep);
  const int outer_class = g.vertex_count() > 0 ? regions.find(g.faces().outer) : -1;
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (keep[v] || regions.find(g.face_at(v)) != outer_class) out.push_back(v);
  }
  return out;
}

struct SeparatorSplit {
  std::vector<Vertex> y_closure;  // closure of the separator plus the chosen side
  std::vector<Vertex> z;          // everything else plus the separator
};

/// Splits G at a cut vertex or at the two ends of a chord. The retained side
/// is the component of G - sep meeting `anchor`; failing that, the
/// smallest-indexed component reaching the outer face; failing that, the
/// smallest-indexed component.
inline SeparatorSplit split_at_separator(const PlaneGraph& g, std::span<const Vertex> sep,
                                         std::span<const Vertex> anchor) {
  const int n = g.vertex_count();
  if (sep.empty() || sep.size() > 2) throw Error(ErrorKind::NotASeparator, "separator must have 1 or 2 vertices");
  std::vector<char> removed(n, 0);
  for (Vertex v : sep) {
    if (v < 0 || v >= n) throw Error(ErrorKind::IndexOutOfRange, "vertex " + std::to_string(v));
    removed[v] = 1;
  }

  std::vector<int> comp(n, -1);
  std::vector<std::vector<Vertex>> parts;
  for (Vertex s = 0; s < n; ++s) {
    if (removed[s] || comp[s] >= 0) continue;
    std::vector<Vertex> members{s};
    comp[s] = static_cast<int>(parts.size());
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (Vertex w : g.rotation(members[i])) {
        if (!removed[w] && comp[w] < 0) {
          comp[w] = comp[s];
          members.push_back(w);
        }
      }
    }
    parts.push_back(std::move(members));
  }

  // The separator has to split its own component.
  const int home = g.component_of(sep.front());
  int pieces = 0;
  for (const auto& p : parts)
    if (g.component_of(p.front()) == home) ++pieces;
  for (Vertex v : sep) {
    if (g.component_of(v) != home) throw Error(ErrorKind::NotASeparator, "separator spans two components");
  }
  if (pieces < 2) throw Error(ErrorKind::NotASeparator, "removing the separator leaves its component connected");

  int chosen = -1;
  for (Vertex a : anchor) {
    if (a >= 0 && a < n && !removed[a]) {
      chosen = comp[a];
      break;
    }
  }
  if (chosen < 0) {
    for (int p = 0; p < static_cast<int>(parts.size()) && chosen < 0; ++p) {
      if (g.component_of(parts[p].front()) != home) continue;
      for (Vertex v : parts[p]) {
        if (g.on_outer_face(v)) {
          chosen = p;
          break;
        }
      }
    }
  }
  if (chosen < 0) {
    for (int p = 0; p < static_cast<int>(parts.size()); ++p) {
      if (g.component_of(parts[p].front()) == home) {
        chosen = p;
        break;
      }
    }
  }

  std::vector<Vertex> y(sep.begin(), sep.end());
  y.insert(y.end(), parts[chosen].begin(), parts[chosen].end());
  SeparatorSplit out;
  out.y_closure = interior_closure(g, y);
  std::vector<char> in_y(n, 0);
  for (Vertex v : out.y_closure) in_y[v] = 1;
  for (Vertex v = 0; v < n; ++v)
    if (!in_y[v] || removed[v]) out.z.push_back(v);
  return out;
}

}  // namespace fum
