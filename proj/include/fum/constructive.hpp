#pragma once

// Recursive precoloring extension for plane graphs whose high-degree vertices
// induce a star forest, and the 4-coloring built on top of it.
//
// extend_precoloring() reduces a problem (G, P) by the first case that
// applies, in this order:
//
//   Components       several components reach the outer face
//   TreeBase         no internal face
//   CutVertex        the outer walk repeats a vertex
//   Chord            the outer cycle has a chord
//   CycleBase        G is a cycle
//   LowDegreeVertex  an outer vertex off P has degree 2 or 3
//   ThreeHighOnC     three outer vertices off P, all of P of degree 2
//   TwoTwoP          P is two vertices of degree 2
//   FourCycleC       outer 4-cycle, P = (p1, p2) with only p2 of degree 2
//   TwoVertexInP     some vertex of P has degree 2
//
// Anything left over contradicts the hypothesis and raises
// InternalCaseExhaustion with the offending subproblem attached.

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fum/boundary.hpp"
#include "fum/coloring.hpp"
#include "fum/formats.hpp"
#include "fum/plane_graph.hpp"

namespace fum {

enum class CaseLabel {
  Components,
  TreeBase,
  CutVertex,
  Chord,
  CycleBase,
  LowDegreeVertex,
  ThreeHighOnC,
  TwoTwoP,
  FourCycleC,
  TwoVertexInP,
  ApexFour,  // the 4-coloring wrapper: one outer vertex colored 4
};

constexpr std::string_view case_name(CaseLabel label) {
  switch (label) {
    case CaseLabel::Components: return "Components";
    case CaseLabel::TreeBase: return "TreeBase";
    case CaseLabel::CutVertex: return "CutVertex";
    case CaseLabel::Chord: return "Chord";
    case CaseLabel::CycleBase: return "CycleBase";
    case CaseLabel::LowDegreeVertex: return "LowDegreeVertex";
    case CaseLabel::ThreeHighOnC: return "ThreeHighOnC";
    case CaseLabel::TwoTwoP: return "TwoTwoP";
    case CaseLabel::FourCycleC: return "FourCycleC";
    case CaseLabel::TwoVertexInP: return "TwoVertexInP";
    case CaseLabel::ApexFour: return "ApexFour";
  }
  return "?";
}

/// One applied case. Vertex ids refer to the input graph. `assigned` lists
/// the colors this step fixed itself; every vertex outside the input
/// precoloring is assigned by exactly one step.
struct TraceStep {
  CaseLabel label = CaseLabel::TreeBase;
  int depth = 0;
  std::vector<Vertex> involved;
  std::vector<std::pair<Vertex, Color>> assigned;

  friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

struct CaseTrace {
  std::vector<TraceStep> steps;

  bool contains(CaseLabel label) const {
    return std::any_of(steps.begin(), steps.end(), [label](const TraceStep& s) { return s.label == label; });
  }
  std::vector<CaseLabel> labels() const {
    std::vector<CaseLabel> out;
    for (const auto& s : steps) out.push_back(s.label);
    return out;
  }

  friend bool operator==(const CaseTrace&, const CaseTrace&) = default;
};

struct ExtensionProblem {
  const PlaneGraph& graph;
  PrecoloredPath path;
  int depth = 0;
};

struct ExtensionResult {
  Coloring coloring;
  CaseTrace trace;
};

/// The subgraph transfer condition: every vertex newly precolored in the
/// child that has degree 3 there must have lost a neighbor, and the child's
/// X set must still induce a star forest.
inline bool check_transfer(const Subgraph& child, const PrecoloredPath& child_path, const ExtensionProblem& parent) {
  for (const auto& p : child_path.entries) {
    if (p.vertex < 0 || p.vertex >= child.graph.vertex_count()) return false;
    const Vertex original = child.to_parent[p.vertex];
    if (parent.path.contains(original)) continue;
    const int dh = child.graph.degree(p.vertex);
    if (dh == 3 && dh >= parent.graph.degree(original)) return false;
  }
  return compute_xset(child.graph, child_path, XMode::LemmaX).star_forest;
}

/// Rebuilds a coloring from the input precoloring and the trace alone.
inline Coloring replay_trace(int n, const PrecoloredPath& path, const CaseTrace& trace) {
  Coloring c(n);
  auto put = [&](Vertex v, Color col) {
    if (v < 0 || v >= n) throw std::logic_error("trace names vertex " + std::to_string(v));
    if (c[v] != 0 && c[v] != col) throw std::logic_error("trace colors vertex " + std::to_string(v) + " twice");
    c[v] = col;
  };
  for (const auto& p : path.entries) put(p.vertex, p.color);
  for (const auto& step : trace.steps)
    for (const auto& [v, col] : step.assigned) put(v, col);
  return c;
}

inline std::string format_trace(const CaseTrace& trace) {
  std::ostringstream out;
  for (const auto& s : trace.steps) {
    out << std::string(2 * s.depth, ' ') << case_name(s.label);
    if (!s.involved.empty()) {
      out << " [";
      for (std::size_t i = 0; i < s.involved.size(); ++i) out << (i ? " " : "") << s.involved[i];
      out << ']';
    }
    if (!s.assigned.empty()) {
      out << " ->";
      for (const auto& [v, col] : s.assigned) out << ' ' << v << ':' << col;
    }
    out << '\n';
  }
  return out.str();
}

namespace detail {

inline Color smallest_color_except(std::initializer_list<Color> used) {
  for (Color c = 1; c <= 3; ++c)
    if (std::find(used.begin(), used.end(), c) == used.end()) return c;
  return 0;
}

class Extender {
 public:
  CaseTrace trace;

  Coloring solve(const PlaneGraph& g, const PrecoloredPath& path, int depth, const std::vector<Vertex>& to_root) {
    Frame f{g, path, depth, to_root};
    const int n = g.vertex_count();
    if (n == 0) return Coloring{};

    const auto cls = classify_boundary(g);
    if (const auto* parts = std::get_if<Disconnected>(&cls)) return components(f, parts->groups);
    if (std::holds_alternative<NoInternalFaces>(cls)) return tree_base(f);
    if (const auto* cut = std::get_if<CutVertexWalk>(&cls)) return cut_vertex(f, cut->vertex);

    const auto& cycle = std::get<BoundaryCycle>(cls).vertices;
    const auto chords = chords_of_cycle(g, BoundaryCycle{cycle});
    if (!chords.empty()) return chord(f, chords.front());
    if (g.component_count() == 1 && g.edge_count() == n && static_cast<int>(cycle.size()) == n) {
      return cycle_base(f, cycle);
    }
    for (Vertex v : cycle) {
      if (!path.contains(v) && (g.degree(v) == 2 || g.degree(v) == 3)) {
        // cycle starts at its smallest vertex but is not sorted
        Vertex best = v;
        for (Vertex w : cycle)
          if (!path.contains(w) && (g.degree(w) == 2 || g.degree(w) == 3)) best = std::min(best, w);
        return low_degree(f, cycle, best);
      }
    }
    return high_outer(f, cycle);
  }

 private:
  struct Frame {
    const PlaneGraph& g;
    const PrecoloredPath& path;
    int depth;
    const std::vector<Vertex>& to_root;
  };

  [[noreturn]] void exhausted(const Frame& f, const std::string& why) {
    GraphDocument doc{f.g, std::nullopt, f.path};
    std::string dump = write_rotation_text(doc);
    throw Error(ErrorKind::InternalCaseExhaustion, why + " (depth " + std::to_string(f.depth) + ")", dump);
  }

  std::size_t open(const Frame& f, CaseLabel label, std::initializer_list<Vertex> involved) {
    TraceStep step{label, f.depth, {}, {}};
    for (Vertex v : involved) step.involved.push_back(f.to_root[v]);
    trace.steps.push_back(std::move(step));
    return trace.steps.size() - 1;
  }

  void assign(const Frame& f, std::size_t step, Coloring& c, Vertex v, Color col) {
    c[v] = col;
    trace.steps[step].assigned.emplace_back(f.to_root[v], col);
  }

  Coloring seeded(const Frame& f) const {
    Coloring c(f.g.vertex_count());
    for (const auto& p : f.path.entries) c[p.vertex] = p.color;
    return c;
  }

  /// Solves G[keep] with the given precoloring (parent indices) and copies
  /// the result into `c`.
  void recurse(const Frame& f, std::vector<Vertex> keep, const std::vector<Precolor>& pre, Coloring& c) {
    std::sort(keep.begin(), keep.end());
    Subgraph sub = induced_plane_subgraph(f.g, keep);
    PrecoloredPath child_path;
    for (const auto& p : pre) {
      if (sub.from_parent[p.vertex] < 0) exhausted(f, "precolored vertex dropped from child");
      child_path.entries.push_back({sub.from_parent[p.vertex], p.color});
    }
    try {
      validate_precolored_path(sub.graph, child_path);
    } catch (const Error& e) {
      exhausted(f, std::string("child precoloring is not an outer path: ") + e.what());
    }
    if (!check_transfer(sub, child_path, ExtensionProblem{f.g, f.path, f.depth})) {
      exhausted(f, "child violates the transfer condition");
    }
    std::vector<Vertex> child_root(sub.to_parent.size());
    for (std::size_t x = 0; x < child_root.size(); ++x) child_root[x] = f.to_root[sub.to_parent[x]];

    Coloring cc = solve(sub.graph, child_path, f.depth + 1, child_root);
    if (!verify_lemma_contract(sub.graph, child_path, cc).overall) {
      throw Error(ErrorKind::ChildContractFailure, "child at depth " + std::to_string(f.depth + 1) +
                                                       " returned a coloring that breaks its contract");
    }
    for (std::size_t x = 0; x < child_root.size(); ++x) c[sub.to_parent[x]] = cc[static_cast<Vertex>(x)];
  }

  Coloring components(const Frame& f, const std::vector<std::vector<Vertex>>& groups) {
    std::size_t step = trace.steps.size();
    open(f, CaseLabel::Components, {});
    for (const auto& grp : groups) trace.steps[step].involved.push_back(f.to_root[grp.front()]);
    Coloring c(f.g.vertex_count());
    for (const auto& grp : groups) {
      std::vector<Precolor> pre;
      for (const auto& p : f.path.entries)
        if (std::binary_search(grp.begin(), grp.end(), p.vertex)) pre.push_back(p);
      recurse(f, grp, pre, c);
    }
    return c;
  }

  Coloring tree_base(const Frame& f) {
    const PlaneGraph& g = f.g;
    std::size_t step = open(f, CaseLabel::TreeBase, {});
    Coloring c = seeded(f);
    std::vector<Vertex> queue;
    for (const auto& p : f.path.entries) queue.push_back(p.vertex);
    auto pick = [&](Vertex v) {
      Color col = 1;
      while (std::any_of(g.rotation(v).begin(), g.rotation(v).end(), [&](Vertex w) { return c[w] == col; })) ++col;
      if (col > 3) exhausted(f, "tree vertex sees three colors");
      assign(f, step, c, v, col);
    };
    for (Vertex root = 0;; ++root) {
      for (std::size_t head = 0; head < queue.size(); ++head) {
        for (Vertex w : g.rotation(queue[head])) {
          if (c[w] == 0) {
            pick(w);
            queue.push_back(w);
          }
        }
      }
      while (root < g.vertex_count() && c[root] != 0) ++root;
      if (root == g.vertex_count()) break;
      pick(root);
      queue.assign(1, root);
    }
    return c;
  }

  Coloring cut_vertex(const Frame& f, Vertex v) {
    open(f, CaseLabel::CutVertex, {v});
    std::vector<Vertex> anchor;
    for (const auto& p : f.path.entries) anchor.push_back(p.vertex);
    const Vertex sep[] = {v};
    auto split = split_at_separator(f.g, sep, anchor);
    Coloring c(f.g.vertex_count());
    recurse(f, split.y_closure, f.path.entries, c);
    recurse(f, split.z, {{v, c[v]}}, c);
    return c;
  }

  Coloring chord(const Frame& f, std::pair<Vertex, Vertex> ab) {
    const auto [a, b] = ab;
    open(f, CaseLabel::Chord, {a, b});
    std::vector<Vertex> anchor;
    for (const auto& p : f.path.entries) anchor.push_back(p.vertex);
    const Vertex sep[] = {a, b};
    auto split = split_at_separator(f.g, sep, anchor);
    Coloring c(f.g.vertex_count());
    recurse(f, split.y_closure, f.path.entries, c);
    recurse(f, split.z, {{a, c[a]}, {b, c[b]}}, c);
    return c;
  }

  // One vertex colored 3 (from P if possible), the rest alternating 1 and 2
  // in phase with whatever P fixes.
  Coloring cycle_base(const Frame& f, const std::vector<Vertex>& cycle) {
    const int len = static_cast<int>(cycle.size());
    int pivot = -1;
    for (int i = 0; i < len; ++i)
      if (f.path.color_of(cycle[i]) == 3) pivot = i;
    if (pivot < 0) {
      for (int i = 0; i < len; ++i)
        if (!f.path.contains(cycle[i]) && (pivot < 0 || cycle[i] < cycle[pivot])) pivot = i;
    }
    std::size_t step = open(f, CaseLabel::CycleBase, {cycle[pivot]});
    Coloring c = seeded(f);
    if (c[cycle[pivot]] == 0) assign(f, step, c, cycle[pivot], 3);

    std::vector<Vertex> rest;
    for (int i = 1; i < len; ++i) rest.push_back(cycle[(pivot + i) % len]);
    int anchor = 0;
    Color anchor_color = 1;
    for (int i = 0; i < len - 1; ++i) {
      if (c[rest[i]] != 0) {
        anchor = i;
        anchor_color = c[rest[i]];
        break;
      }
    }
    for (int i = 0; i < len - 1; ++i) {
      Color want = (i - anchor) % 2 == 0 ? anchor_color : 3 - anchor_color;
      if (c[rest[i]] == 0) {
        assign(f, step, c, rest[i], want);
      } else if (c[rest[i]] != want) {
        exhausted(f, "precoloring out of phase on a cycle");
      }
    }
    return c;
  }

  /// The internal face at an outer vertex of degree 2.
  int inner_face_at(const Frame& f, Vertex r) {
    for (Vertex w : f.g.rotation(r)) {
      int face = f.g.face_of(f.g.dart_id({r, w}));
      if (face != f.g.faces().outer) return face;
    }
    exhausted(f, "degree-2 vertex without an internal face");
  }

  Vertex off_boundary_vertex(const Frame& f, int face) {
    for (Vertex w : f.g.faces().faces[face].vertices)
      if (!f.g.on_outer_face(w)) return w;
    exhausted(f, "no vertex off the outer cycle on the face");
  }

  static std::pair<Vertex, Vertex> cycle_neighbors(const std::vector<Vertex>& cycle, Vertex v) {
    const int len = static_cast<int>(cycle.size());
    const int i = static_cast<int>(std::find(cycle.begin(), cycle.end(), v) - cycle.begin());
    return {cycle[(i + len - 1) % len], cycle[(i + 1) % len]};
  }

  static std::vector<Vertex> all_but(const PlaneGraph& g, std::initializer_list<Vertex> drop) {
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      if (std::find(drop.begin(), drop.end(), v) == drop.end()) keep.push_back(v);
    return keep;
  }

  Coloring low_degree(const Frame& f, const std::vector<Vertex>& cycle, Vertex v) {
    Vertex u = -1;
    if (f.g.degree(v) == 2) {
      u = off_boundary_vertex(f, inner_face_at(f, v));
    } else {
      for (Vertex w : f.g.rotation(v))
        if (!f.g.on_outer_face(w)) u = w;
      if (u < 0) exhausted(f, "degree-3 outer vertex with all neighbors outer");
    }
    std::size_t step = open(f, CaseLabel::LowDegreeVertex, {v, u});
    Coloring c(f.g.vertex_count());
    recurse(f, all_but(f.g, {u, v}), f.path.entries, c);
    const auto [a, b] = cycle_neighbors(cycle, v);
    assign(f, step, c, u, 4);
    assign(f, step, c, v, smallest_color_except({c[a], c[b]}));
    return c;
  }

  // Every outer vertex off P has degree at least 4 from here on.
  Coloring high_outer(const Frame& f, const std::vector<Vertex>& cycle) {
    const PlaneGraph& g = f.g;
    const auto& P = f.path.entries;
    const int len = static_cast<int>(cycle.size());
    const int off_p = len - static_cast<int>(P.size());
    auto succ = [&](Vertex v) { return cycle_neighbors(cycle, v).second; };
    auto pred = [&](Vertex v) { return cycle_neighbors(cycle, v).first; };
    auto deg2 = [&](Vertex v) { return g.degree(v) == 2; };
    const bool all_p_deg2 = !P.empty() && std::all_of(P.begin(), P.end(), [&](const Precolor& p) { return deg2(p.vertex); });
    Coloring c = seeded(f);

    if (off_p == 3 && all_p_deg2) {
      // Cycle order p1 p2 v1 v2 v3; with a single precolored vertex p1 = p2.
      Vertex p1 = P[0].vertex, p2 = P[0].vertex;
      if (P.size() == 2) {
        p1 = succ(P[0].vertex) == P[1].vertex ? P[0].vertex : P[1].vertex;
        p2 = p1 == P[0].vertex ? P[1].vertex : P[0].vertex;
      }
      const Vertex v1 = succ(p2), v2 = succ(v1), v3 = succ(v2);
      if (succ(v3) != p1) exhausted(f, "outer cycle does not match p1 p2 v1 v2 v3");
      const Vertex u = off_boundary_vertex(f, inner_face_at(f, p2));
      std::size_t step = open(f, CaseLabel::ThreeHighOnC, {p1, p2, v1, v2, v3, u});
      assign(f, step, c, v2, c[p2]);
      assign(f, step, c, v3, smallest_color_except({c[p1], c[v2]}));
      recurse(f, all_but(g, {p1, p2, u}), {{v2, c[v2]}, {v3, c[v3]}}, c);
      assign(f, step, c, u, 4);
      return c;
    }

    if (P.size() == 2 && all_p_deg2) {
      const Vertex p1 = P[0].vertex, p2 = P[1].vertex;
      const auto [a1, b1] = cycle_neighbors(cycle, p1);
      const auto [a2, b2] = cycle_neighbors(cycle, p2);
      const Vertex v1 = a1 == p2 ? b1 : a1;
      const Vertex v2 = a2 == p1 ? b2 : a2;
      if (v1 != v2 && !g.adjacent(v1, v2)) exhausted(f, "neighbors of the precolored pair are not adjacent");
      const Vertex u = off_boundary_vertex(f, inner_face_at(f, p1));
      std::size_t step = open(f, CaseLabel::TwoTwoP, {p1, p2, v1, v2, u});
      std::vector<Precolor> pre;
      if (v1 == v2) {
        assign(f, step, c, v1, smallest_color_except({c[p1], c[p2]}));
        pre = {{v1, c[v1]}};
      } else {
        assign(f, step, c, v1, smallest_color_except({c[p1]}));
        assign(f, step, c, v2, smallest_color_except({c[p2], c[v1]}));
        pre = {{v1, c[v1]}, {v2, c[v2]}};
      }
      recurse(f, all_but(g, {p1, p2, u}), pre, c);
      assign(f, step, c, u, 4);
      return c;
    }

    if (len == 4 && P.size() == 2 && deg2(P[0].vertex) != deg2(P[1].vertex)) {
      // Cycle order p1 p2 v1 v2 with p2 the 2-vertex.
      const Vertex p2 = deg2(P[0].vertex) ? P[0].vertex : P[1].vertex;
      const Vertex p1 = p2 == P[0].vertex ? P[1].vertex : P[0].vertex;
      const auto [a, b] = cycle_neighbors(cycle, p2);
      const Vertex v1 = a == p1 ? b : a;
      const auto [x, y] = cycle_neighbors(cycle, p1);
      const Vertex v2 = x == p2 ? y : x;
      const Vertex u = off_boundary_vertex(f, inner_face_at(f, p2));
      std::size_t step = open(f, CaseLabel::FourCycleC, {p1, p2, v1, v2, u});
      assign(f, step, c, v2, c[p2]);
      recurse(f, all_but(g, {p2, u}), {{p1, c[p1]}, {v2, c[v2]}}, c);
      assign(f, step, c, u, 4);
      return c;
    }

    for (const auto& pp : P) {
      if (!deg2(pp.vertex)) continue;
      // u sits on the internal face at p, i.e. the outer face of G - p.
      const Vertex p = pp.vertex;
      Vertex v1 = succ(p), v2 = pred(p);
      if (f.path.contains(v1)) std::swap(v1, v2);
      if (!g.adjacent(v1, v2)) exhausted(f, "neighbors of the precolored 2-vertex are not adjacent");
      const Vertex u = off_boundary_vertex(f, inner_face_at(f, p));
      std::size_t step = open(f, CaseLabel::TwoVertexInP, {p, v1, v2, u});
      if (!f.path.contains(v2)) assign(f, step, c, v2, smallest_color_except({c[p]}));
      assign(f, step, c, v1, smallest_color_except({c[p], c[v2]}));
      recurse(f, all_but(g, {p, u}), {{v1, c[v1]}, {v2, c[v2]}}, c);
      assign(f, step, c, u, 4);
      return c;
    }

    exhausted(f, "every outer vertex lies in X although X induces a star forest");
  }
};

}  // namespace detail

/// Extends `prob.path` to a coloring of G with colors 1..4 such that 4 stays
/// off the outer face and every internal face has a unique maximum.
inline ExtensionResult extend_precoloring(const ExtensionProblem& prob) {
  const PlaneGraph& g = prob.graph;
  validate_precolored_path(g, prob.path);
  const XSet x = compute_xset(g, prob.path, XMode::LemmaX);
  if (!x.star_forest) {
    throw Error(ErrorKind::HypothesisViolated,
                "X does not induce a star forest (class " + std::string(class_name(x.induced_class)) + ")");
  }
  std::vector<Vertex> identity(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) identity[v] = v;
  detail::Extender ext;
  ExtensionResult r;
  r.coloring = ext.solve(g, prob.path, prob.depth, identity);
  r.trace = std::move(ext.trace);
  if (!verify_lemma_contract(g, prob.path, r.coloring).overall) {
    throw Error(ErrorKind::ChildContractFailure, "extension breaks its contract at the top level");
  }
  return r;
}

inline ExtensionResult extend_precoloring(const PlaneGraph& g, const PrecoloredPath& path = {}) {
  return extend_precoloring(ExtensionProblem{g, path, 0});
}

/// FUM 4-coloring when the vertices of degree at least 4 induce a star
/// forest: extend the empty precoloring on G - v for the smallest outer
/// vertex v, then give v color 4.
inline ExtensionResult fum_color_star_forest(const PlaneGraph& g) {
  const XSet x = compute_xset(g, {}, XMode::TheoremX);
  if (!x.star_forest) {
    throw Error(ErrorKind::HypothesisViolated,
                "X does not induce a star forest (class " + std::string(class_name(x.induced_class)) + ")");
  }
  ExtensionResult r;
  const int n = g.vertex_count();
  if (n == 0) return r;

  const Vertex apex = g.outer_face().vertices.front();
  r.trace.steps.push_back({CaseLabel::ApexFour, 0, {apex}, {{apex, 4}}});
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < n; ++v)
    if (v != apex) keep.push_back(v);
  Subgraph rest = induced_plane_subgraph(g, keep);

  detail::Extender ext;
  Coloring cr = ext.solve(rest.graph, {}, 1, rest.to_parent);
  if (!verify_lemma_contract(rest.graph, {}, cr).overall) {
    throw Error(ErrorKind::ChildContractFailure, "extension of G - v breaks its contract");
  }
  r.coloring = Coloring(n);
  for (Vertex x2 = 0; x2 < rest.graph.vertex_count(); ++x2) r.coloring[rest.to_parent[x2]] = cr[x2];
  r.coloring[apex] = 4;
  for (auto& s : ext.trace.steps) r.trace.steps.push_back(std::move(s));

  if (!verify_fum(g, r.coloring, FaceScope::AllFaces).overall) {
    throw Error(ErrorKind::ChildContractFailure, "final coloring fails verification");
  }
  return r;
}

}  // namespace fum
