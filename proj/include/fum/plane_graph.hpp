#pragma once

// Combinatorial plane graphs stored as rotation systems.
//
// Rotations are read counterclockwise. Faces are traced with the rule
// "after the dart u->v continue with v->w, where w follows u in the rotation
// of v". A connected component of n vertices, m edges and f traced walks is
// accepted only if n - m + f = 2.
//
// A rotation system says nothing about how the components of a disconnected
// graph sit relative to each other, so every component carries a placement:
// it either lies in the unbounded region (a root component) or inside a
// bounded face of another component. A face is therefore a region with one
// boundary walk per incident component, and the outer face collects the outer
// walks of all root components.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fum/error.hpp"

namespace fum {

using Vertex = int;

struct Dart {
  Vertex tail = 0;
  Vertex head = 0;

  friend auto operator<=>(const Dart&, const Dart&) = default;
};

/// Puts the component containing `member` inside the face traced through `face`.
struct Placement {
  Vertex member = 0;
  Dart face;

  friend bool operator==(const Placement&, const Placement&) = default;
};

/// Optional embedding data that the rotations alone cannot express.
struct EmbeddingHints {
  std::vector<Dart> outer;         // at most one dart per component
  std::vector<Placement> hosts;    // nesting of components inside bounded faces

  bool empty() const noexcept { return outer.empty() && hosts.empty(); }
  friend bool operator==(const EmbeddingHints&, const EmbeddingHints&) = default;
};

struct Face {
  // One closed walk per component incident to the face. An isolated vertex
  // contributes an empty walk; its presence shows up in `vertices` only.
  std::vector<std::vector<Dart>> boundary;
  std::vector<Vertex> vertices;  // sorted, distinct

  std::size_t walk_length() const {
    std::size_t total = 0;
    for (const auto& walk : boundary) total += walk.size();
    return total;
  }
};

struct FaceSet {
  std::vector<Face> faces;
  int outer = -1;                 // -1 only for the empty graph
  std::vector<int> dart_to_face;  // indexed by PlaneGraph::dart_id
};

namespace detail {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a < b) std::swap(a, b);
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace detail

class PlaneGraph {
 public:
  PlaneGraph() = default;

  int vertex_count() const noexcept { return static_cast<int>(rotations_.size()); }
  int edge_count() const noexcept { return static_cast<int>(tail_.size()) / 2; }
  int dart_count() const noexcept { return static_cast<int>(tail_.size()); }

  const std::vector<std::vector<Vertex>>& rotations() const noexcept { return rotations_; }
  std::span<const Vertex> rotation(Vertex v) const { return rotations_[v]; }
  int degree(Vertex v) const { return static_cast<int>(rotations_[v].size()); }

  bool adjacent(Vertex u, Vertex v) const {
    const auto& s = sorted_[u];
    auto it = std::lower_bound(s.begin(), s.end(), std::pair<Vertex, int>{v, -1});
    return it != s.end() && it->first == v;
  }

  /// Dart index of u->v, or -1 when u and v are not adjacent.
  int dart_id(Dart d) const {
    if (d.tail < 0 || d.tail >= vertex_count()) return -1;
    const auto& s = sorted_[d.tail];
    auto it = std::lower_bound(s.begin(), s.end(), std::pair<Vertex, int>{d.head, -1});
    if (it == s.end() || it->first != d.head) return -1;
    return offset_[d.tail] + it->second;
  }
  Dart dart(int id) const { return {tail_[id], head_[id]}; }
  int twin(int id) const { return twin_[id]; }
  int next_in_face(int id) const { return next_[id]; }
  int first_dart(Vertex v) const { return offset_[v]; }

  const FaceSet& faces() const noexcept { return faces_; }
  int face_count() const noexcept { return static_cast<int>(faces_.faces.size()); }
  const Face& outer_face() const { return faces_.faces.at(faces_.outer); }
  int face_of(int dart_index) const { return faces_.dart_to_face[dart_index]; }
  bool on_outer_face(Vertex v) const { return on_outer_[v]; }

  /// A face incident to v. All faces around a vertex whose edges are deleted
  /// merge into one region, which is what subgraph placement relies on.
  int face_at(Vertex v) const {
    if (degree(v) > 0) return faces_.dart_to_face[offset_[v]];
    return face_of_walk_[isolated_walk_[v]];
  }

  int component_count() const noexcept { return static_cast<int>(components_.size()); }
  int component_of(Vertex v) const { return component_[v]; }
  const std::vector<Vertex>& component_vertices(int c) const { return components_[c]; }
  bool is_root_component(int c) const { return comp_host_walk_[c] < 0; }

  /// Index of the face whose region contains component c.
  int enclosing_face(int c) const {
    return comp_host_walk_[c] < 0 ? faces_.outer : face_of_walk_[comp_host_walk_[c]];
  }

  std::vector<Dart> outer_walk(int c) const { return walk_darts(comp_outer_walk_[c]); }

  /// Root components together with everything nested inside them, in root order.
  std::vector<std::vector<Vertex>> root_groups() const {
    std::vector<int> root(components_.size(), -1);
    auto root_of = [&](int c) {
      int r = c;
      while (comp_host_walk_[r] >= 0) r = walks_[comp_host_walk_[r]].component;
      return r;
    };
    std::vector<std::vector<Vertex>> groups;
    std::vector<int> group_index(components_.size(), -1);
    for (int c = 0; c < component_count(); ++c) {
      if (is_root_component(c)) {
        group_index[c] = static_cast<int>(groups.size());
        groups.emplace_back();
      }
    }
    for (int c = 0; c < component_count(); ++c) {
      auto& g = groups[group_index[root_of(c)]];
      g.insert(g.end(), components_[c].begin(), components_[c].end());
    }
    for (auto& g : groups) std::sort(g.begin(), g.end());
    return groups;
  }

  std::vector<std::pair<Vertex, Vertex>> edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(edge_count());
    for (int d = 0; d < dart_count(); ++d)
      if (tail_[d] < head_[d]) out.emplace_back(tail_[d], head_[d]);
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Hints that rebuild exactly this embedding: an outer dart for each
  /// component whose outer walk is not the default one, and a placement for
  /// each nested component.
  EmbeddingHints explicit_hints() const {
    EmbeddingHints h;
    for (int c = 0; c < component_count(); ++c) {
      if (comp_outer_walk_[c] != default_outer_walk(c)) {
        h.outer.push_back(dart(walks_[comp_outer_walk_[c]].darts.front()));
      }
      if (comp_host_walk_[c] >= 0) {
        h.hosts.push_back({components_[c].front(), dart(walks_[comp_host_walk_[c]].darts.front())});
      }
    }
    return h;
  }

  friend bool operator==(const PlaneGraph& a, const PlaneGraph& b) {
    return a.rotations_ == b.rotations_ && a.comp_outer_walk_ == b.comp_outer_walk_ &&
           a.comp_host_walk_ == b.comp_host_walk_;
  }

  friend PlaneGraph build_plane_graph(int n, std::vector<std::vector<Vertex>> rotations,
                                      const EmbeddingHints& hints);
  friend class SubgraphBuilder;

 private:
  struct Walk {
    int component = -1;
    std::vector<int> darts;
    Vertex isolated = -1;
  };

  std::vector<Dart> walk_darts(int w) const {
    std::vector<Dart> out;
    out.reserve(walks_[w].darts.size());
    for (int d : walks_[w].darts) out.push_back(dart(d));
    return out;
  }

  int default_outer_walk(int c) const {
    Vertex s = components_[c].front();
    if (degree(s) == 0) return isolated_walk_[s];
    // sorted_ is ordered by neighbor, so its front is the smallest dart of s
    return walk_of_dart_[offset_[s] + sorted_[s].front().second];
  }

  // Validates simplicity, symmetry and genus; traces all walks.
  void init_skeleton(std::vector<std::vector<Vertex>> rotations) {
    const int n = static_cast<int>(rotations.size());
    rotations_ = std::move(rotations);
    sorted_.assign(n, {});
    offset_.assign(n + 1, 0);
    for (Vertex v = 0; v < n; ++v) {
      auto& s = sorted_[v];
      for (int i = 0; i < static_cast<int>(rotations_[v].size()); ++i) {
        Vertex w = rotations_[v][i];
        if (w < 0 || w >= n) {
          throw Error(ErrorKind::IndexOutOfRange,
                      "vertex " + std::to_string(v) + " lists neighbor " + std::to_string(w));
        }
        if (w == v) throw Error(ErrorKind::SelfLoop, "vertex " + std::to_string(v));
        s.emplace_back(w, i);
      }
      std::sort(s.begin(), s.end());
      for (std::size_t i = 1; i < s.size(); ++i) {
        if (s[i].first == s[i - 1].first) {
          throw Error(ErrorKind::DuplicateNeighbor,
                      "vertex " + std::to_string(v) + " lists " + std::to_string(s[i].first) + " twice");
        }
      }
      offset_[v + 1] = offset_[v] + static_cast<int>(s.size());
    }
    const int darts = offset_[n];
    tail_.resize(darts);
    head_.resize(darts);
    twin_.resize(darts);
    next_.resize(darts);
    for (Vertex v = 0; v < n; ++v) {
      for (int i = 0; i < degree(v); ++i) {
        tail_[offset_[v] + i] = v;
        head_[offset_[v] + i] = rotations_[v][i];
      }
    }
    for (int d = 0; d < darts; ++d) {
      int back = dart_id({head_[d], tail_[d]});
      if (back < 0) {
        throw Error(ErrorKind::AsymmetricRotation, std::to_string(tail_[d]) + " lists " +
                                                       std::to_string(head_[d]) + " but not conversely");
      }
      twin_[d] = back;
      Vertex w = head_[d];
      int j = back - offset_[w];
      next_[d] = offset_[w] + (j + 1) % degree(w);
    }

    component_.assign(n, -1);
    components_.clear();
    for (Vertex s = 0; s < n; ++s) {
      if (component_[s] >= 0) continue;
      int c = static_cast<int>(components_.size());
      std::vector<Vertex> members{s};
      component_[s] = c;
      for (std::size_t i = 0; i < members.size(); ++i) {
        for (Vertex w : rotations_[members[i]]) {
          if (component_[w] < 0) {
            component_[w] = c;
            members.push_back(w);
          }
        }
      }
      std::sort(members.begin(), members.end());
      components_.push_back(std::move(members));
    }

    walks_.clear();
    walk_of_dart_.assign(darts, -1);
    isolated_walk_.assign(n, -1);
    for (int d0 = 0; d0 < darts; ++d0) {
      if (walk_of_dart_[d0] >= 0) continue;
      Walk w;
      w.component = component_[tail_[d0]];
      int d = d0;
      do {
        walk_of_dart_[d] = static_cast<int>(walks_.size());
        w.darts.push_back(d);
        d = next_[d];
      } while (d != d0);
      walks_.push_back(std::move(w));
    }
    for (Vertex v = 0; v < n; ++v) {
      if (degree(v) == 0) {
        isolated_walk_[v] = static_cast<int>(walks_.size());
        walks_.push_back(Walk{component_[v], {}, v});
      }
    }

    std::vector<int> walk_count(components_.size(), 0);
    for (const auto& w : walks_) ++walk_count[w.component];
    for (int c = 0; c < component_count(); ++c) {
      int nv = static_cast<int>(components_[c].size());
      int nd = 0;
      for (Vertex v : components_[c]) nd += degree(v);
      int euler = nv - nd / 2 + walk_count[c];
      if (euler != 2) {
        throw Error(ErrorKind::NonPlanarEmbedding,
                    "component of vertex " + std::to_string(components_[c].front()) + " has genus " +
                        std::to_string((2 - euler) / 2));
      }
    }
  }

  // Assembles faces from walks given each component's outer walk and the walk
  // of the face it is nested in (-1 for root components).
  void place(std::vector<int> outer_walk, std::vector<int> host_walk) {
    comp_outer_walk_ = std::move(outer_walk);
    comp_host_walk_ = std::move(host_walk);
    const int nw = static_cast<int>(walks_.size());
    face_of_walk_.assign(nw, -1);
    faces_ = FaceSet{};
    if (vertex_count() == 0) return;

    std::vector<std::vector<int>> face_walks(1);
    for (int c = 0; c < component_count(); ++c) {
      if (comp_host_walk_[c] < 0) face_walks[0].push_back(comp_outer_walk_[c]);
    }
    std::vector<bool> is_outer_walk(nw, false);
    for (int c = 0; c < component_count(); ++c) is_outer_walk[comp_outer_walk_[c]] = true;
    for (int w = 0; w < nw; ++w) {
      if (is_outer_walk[w]) continue;
      face_of_walk_[w] = static_cast<int>(face_walks.size());
      face_walks.push_back({w});
    }
    for (int c = 0; c < component_count(); ++c) {
      if (comp_host_walk_[c] >= 0) face_walks[face_of_walk_[comp_host_walk_[c]]].push_back(comp_outer_walk_[c]);
    }
    for (int f = 0; f < static_cast<int>(face_walks.size()); ++f)
      for (int w : face_walks[f]) face_of_walk_[w] = f;

    faces_.outer = 0;
    faces_.dart_to_face.assign(dart_count(), -1);
    on_outer_.assign(vertex_count(), false);
    for (int f = 0; f < static_cast<int>(face_walks.size()); ++f) {
      Face face;
      for (int w : face_walks[f]) {
        face.boundary.push_back(walk_darts(w));
        for (int d : walks_[w].darts) {
          faces_.dart_to_face[d] = f;
          face.vertices.push_back(tail_[d]);
        }
        if (walks_[w].isolated >= 0) face.vertices.push_back(walks_[w].isolated);
      }
      std::sort(face.vertices.begin(), face.vertices.end());
      face.vertices.erase(std::unique(face.vertices.begin(), face.vertices.end()), face.vertices.end());
      faces_.faces.push_back(std::move(face));
    }
    for (Vertex v : faces_.faces[0].vertices) on_outer_[v] = true;
  }

  std::vector<std::vector<Vertex>> rotations_;
  std::vector<std::vector<std::pair<Vertex, int>>> sorted_;  // (neighbor, rotation position)
  std::vector<int> offset_;
  std::vector<Vertex> tail_, head_;
  std::vector<int> twin_, next_;

  std::vector<int> component_;
  std::vector<std::vector<Vertex>> components_;

  std::vector<Walk> walks_;
  std::vector<int> walk_of_dart_;
  std::vector<int> isolated_walk_;

  std::vector<int> comp_outer_walk_;
  std::vector<int> comp_host_walk_;
  std::vector<int> face_of_walk_;
  FaceSet faces_;
  std::vector<bool> on_outer_;
};

/// Validates and embeds a rotation system. The outer walk of each component
/// defaults to the walk through the smallest dart of its smallest vertex.
inline PlaneGraph build_plane_graph(int n, std::vector<std::vector<Vertex>> rotations,
                                    const EmbeddingHints& hints = {}) {
  if (n < 0 || static_cast<int>(rotations.size()) != n) {
    throw Error(ErrorKind::IndexOutOfRange, "expected " + std::to_string(n) + " rotation lists, got " +
                                                std::to_string(rotations.size()));
  }
  PlaneGraph g;
  g.init_skeleton(std::move(rotations));
  const int nc = g.component_count();

  std::vector<int> outer(nc, -1);
  for (const Dart& d : hints.outer) {
    int id = g.dart_id(d);
    if (id < 0) {
      throw Error(ErrorKind::InvalidPlacement,
                  "outer dart " + std::to_string(d.tail) + "->" + std::to_string(d.head) + " is not an edge");
    }
    int c = g.component_of(d.tail);
    int w = g.walk_of_dart_[id];
    if (outer[c] >= 0 && outer[c] != w) {
      throw Error(ErrorKind::InvalidPlacement, "two different outer faces for the component of vertex " +
                                                   std::to_string(g.components_[c].front()));
    }
    outer[c] = w;
  }
  for (int c = 0; c < nc; ++c)
    if (outer[c] < 0) outer[c] = g.default_outer_walk(c);

  std::vector<int> target(nc, -1);
  for (const Placement& p : hints.hosts) {
    if (p.member < 0 || p.member >= n) {
      throw Error(ErrorKind::InvalidPlacement, "placement of unknown vertex " + std::to_string(p.member));
    }
    int id = g.dart_id(p.face);
    if (id < 0) throw Error(ErrorKind::InvalidPlacement, "placement face dart is not an edge");
    int c = g.component_of(p.member);
    int w = g.walk_of_dart_[id];
    if (g.walks_[w].component == c) {
      throw Error(ErrorKind::InvalidPlacement, "component placed inside its own face");
    }
    if (target[c] >= 0 && target[c] != w) {
      throw Error(ErrorKind::InvalidPlacement, "conflicting placements for vertex " + std::to_string(p.member));
    }
    target[c] = w;
  }
  // A component placed in another component's outer walk shares that
  // component's region.
  std::vector<int> host(nc, -1);
  for (int c = 0; c < nc; ++c) {
    int w = target[c];
    int steps = 0;
    while (w >= 0 && w == outer[g.walks_[w].component]) {
      w = target[g.walks_[w].component];
      if (++steps > nc) throw Error(ErrorKind::InvalidPlacement, "cyclic placement");
    }
    host[c] = w;
  }
  for (int c = 0; c < nc; ++c) {
    int r = c;
    int steps = 0;
    while (host[r] >= 0) {
      r = g.walks_[host[r]].component;
      if (++steps > nc) throw Error(ErrorKind::InvalidPlacement, "cyclic placement");
    }
  }
  g.place(std::move(outer), std::move(host));
  return g;
}

inline const FaceSet& trace_faces(const PlaneGraph& g) { return g.faces(); }

struct Subgraph {
  PlaneGraph graph;
  std::vector<Vertex> to_parent;    // subgraph vertex -> parent vertex
  std::vector<Vertex> from_parent;  // parent vertex -> subgraph vertex, or -1
};

namespace detail {

// Faces of an induced subgraph are unions of parent faces: deleting an edge
// glues the two faces on its sides together.
inline DisjointSets merge_across_deleted(const PlaneGraph& g, const std::vector<char>& keep) {
  DisjointSets sets(static_cast<std::size_t>(std::max(g.face_count(), 1)));
  for (int d = 0; d < g.dart_count(); ++d) {
    Dart e = g.dart(d);
    if (!keep[e.tail] || !keep[e.head]) sets.unite(g.face_of(d), g.face_of(g.twin(d)));
  }
  return sets;
}

}  // namespace detail

class SubgraphBuilder {
 public:
  static Subgraph build(const PlaneGraph& g, std::span<const Vertex> keep_list) {
    const int n = g.vertex_count();
    std::vector<char> keep(n, 0);
    for (Vertex v : keep_list) {
      if (v < 0 || v >= n) throw Error(ErrorKind::IndexOutOfRange, "subgraph vertex " + std::to_string(v));
      keep[v] = 1;
    }
    Subgraph s;
    s.from_parent.assign(n, -1);
    for (Vertex v = 0; v < n; ++v) {
      if (!keep[v]) continue;
      s.from_parent[v] = static_cast<Vertex>(s.to_parent.size());
      s.to_parent.push_back(v);
    }
    const int k = static_cast<int>(s.to_parent.size());
    std::vector<std::vector<Vertex>> rotations(k);
    for (Vertex x = 0; x < k; ++x) {
      for (Vertex w : g.rotation(s.to_parent[x]))
        if (keep[w]) rotations[x].push_back(s.from_parent[w]);
    }
    PlaneGraph& h = s.graph;
    h.init_skeleton(std::move(rotations));
    if (k == 0) {
      h.place({}, {});
      return s;
    }

    auto regions = detail::merge_across_deleted(g, keep);
    const int outer_class = regions.find(g.faces().outer);
    auto class_of_walk = [&](detail::DisjointSets& sets, const PlaneGraph::Walk& w) {
      if (!w.darts.empty()) {
        int cd = w.darts.front();
        int pd = g.dart_id({s.to_parent[h.tail_[cd]], s.to_parent[h.head_[cd]]});
        return sets.find(g.face_of(pd));
      }
      return sets.find(g.face_at(s.to_parent[w.isolated]));
    };

    const int nw = static_cast<int>(h.walks_.size());
    const int nc = h.component_count();
    std::vector<int> walk_class(nw);
    std::vector<int> outer(nc, -1), host(nc, -1);
    for (int w = 0; w < nw; ++w) {
      walk_class[w] = class_of_walk(regions, h.walks_[w]);
      if (walk_class[w] == outer_class) outer[h.walks_[w].component] = w;
    }
    // A component that does not reach the parent's unbounded region is nested;
    // its own outer walk is the one facing that region once everything else
    // is removed.
    for (int c = 0; c < nc; ++c) {
      if (outer[c] >= 0) continue;
      if (h.components_[c].size() == 1 && h.degree(h.components_[c].front()) == 0) {
        outer[c] = h.isolated_walk_[h.components_[c].front()];
        continue;
      }
      std::vector<char> in_component(n, 0);
      for (Vertex x : h.components_[c]) in_component[s.to_parent[x]] = 1;
      auto alone = detail::merge_across_deleted(g, in_component);
      const int target = alone.find(g.faces().outer);
      for (int w = 0; w < nw; ++w) {
        if (h.walks_[w].component == c && class_of_walk(alone, h.walks_[w]) == target) outer[c] = w;
      }
      if (outer[c] < 0) throw std::logic_error("nested component without an outer walk");
    }
    for (int c = 0; c < nc; ++c) {
      if (walk_class[outer[c]] == outer_class) continue;
      for (int w = 0; w < nw; ++w) {
        int wc = h.walks_[w].component;
        if (wc == c || walk_class[w] != walk_class[outer[c]] || outer[wc] == w) continue;
        if (host[c] >= 0) throw std::logic_error("nested component with two enclosing walks");
        host[c] = w;
      }
      if (host[c] < 0) throw std::logic_error("nested component without an enclosing walk");
    }
    h.place(std::move(outer), std::move(host));
    return s;
  }
};

/// Subgraph induced by `keep`, with rotations restricted to kept neighbors and
/// vertices renumbered in increasing parent order. The placement of every
/// component and its outer walk are inherited from the parent drawing.
inline Subgraph induced_plane_subgraph(const PlaneGraph& g, std::span<const Vertex> keep) {
  return SubgraphBuilder::build(g, keep);
}

}  // namespace fum
