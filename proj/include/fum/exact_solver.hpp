#pragma once

// Exhaustive backtracking for k-FUM-colorability and the FUM-chromatic number.
// Intended for desk-scale instances (a dozen vertices or so); it is the ground
// truth that the constructive algorithm and the search harness are checked
// against.

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

#include "fum/coloring.hpp"

namespace fum {

struct SolveLimits {
  std::uint64_t max_nodes = 50'000'000;
  std::chrono::milliseconds max_time{120'000};
};

enum class SolveStatus { Colorable, NotColorable, Timeout };

struct SolveStats {
  std::uint64_t nodes = 0;
  double wall_ms = 0.0;
};

struct SolveResult {
  SolveStatus status = SolveStatus::NotColorable;
  std::optional<Coloring> witness;
  SolveStats stats;
};

/// Every face, the outer one included, needs a unique maximum.
struct AllFacesMode {};

/// Extend `path`; the outer face is exempt from the uniqueness requirement
/// but may not use colors above 3.
struct LemmaMode {
  PrecoloredPath path;
};

using SolveMode = std::variant<AllFacesMode, LemmaMode>;

namespace detail {

class FumSearch {
 public:
  FumSearch(const PlaneGraph& g, int k, const SolveMode& mode, const SolveLimits& limits)
      : g_(g), k_(k), limits_(limits), color_(g.vertex_count(), 0), cap_(g.vertex_count(), k),
        fixed_(g.vertex_count(), 0) {
    const auto* lemma = std::get_if<LemmaMode>(&mode);
    lemma_ = lemma != nullptr;
    if (lemma_) {
      validate_precolored_path(g, lemma->path);
      for (const auto& p : lemma->path.entries) fixed_[p.vertex] = p.color;
      for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.on_outer_face(v)) cap_[v] = std::min(k, 3);
    }

    vertex_faces_.assign(g.vertex_count(), {});
    for (int f = 0; f < g.face_count(); ++f) {
      if (lemma_ && f == g.faces().outer) continue;
      for (Vertex v : g.faces().faces[f].vertices) vertex_faces_[v].push_back(f);
    }
    build_order();
  }

  SolveResult run() {
    const auto start = std::chrono::steady_clock::now();
    start_ = start;
    SolveResult r;
    bool feasible = true;
    for (Vertex v = 0; v < g_.vertex_count(); ++v)
      if (fixed_[v] > cap_[v]) feasible = false;
    bool found = false;
    try {
      found = feasible && dfs(0);
    } catch (const LimitHit&) {
      r.status = SolveStatus::Timeout;
    }
    r.stats.nodes = nodes_;
    r.stats.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (r.status == SolveStatus::Timeout) return r;
    if (found) {
      r.status = SolveStatus::Colorable;
      r.witness = Coloring(color_);
    } else {
      r.status = SolveStatus::NotColorable;
    }
    return r;
  }

 private:
  struct LimitHit {};

  void build_order() {
    const int n = g_.vertex_count();
    std::vector<char> queued(n, 0);
    for (Vertex v = 0; v < n; ++v) {
      if (fixed_[v] > 0) {
        order_.push_back(v);
        queued[v] = 1;
      }
    }
    auto bfs_from = [&](std::size_t head) {
      for (; head < order_.size(); ++head) {
        for (Vertex w : g_.rotation(order_[head])) {
          if (!queued[w]) {
            queued[w] = 1;
            order_.push_back(w);
          }
        }
      }
    };
    std::size_t head = 0;
    if (n > 0) {
      for (Vertex v : g_.outer_face().vertices) {
        if (!queued[v]) {
          queued[v] = 1;
          order_.push_back(v);
        }
      }
    }
    bfs_from(head);
    for (Vertex v = 0; v < n; ++v) {
      if (!queued[v]) {
        queued[v] = 1;
        head = order_.size();
        order_.push_back(v);
        bfs_from(head);
      }
    }
  }

  bool faces_ok(Vertex v) const {
    for (int f : vertex_faces_[v]) {
      Color top = 0;
      int top_count = 0;
      Color best_open = 0;
      bool complete = true;
      for (Vertex w : g_.faces().faces[f].vertices) {
        Color c = color_[w];
        if (c == 0) {
          complete = false;
          best_open = std::max(best_open, cap_[w]);
        } else if (c > top) {
          top = c;
          top_count = 1;
        } else if (c == top) {
          ++top_count;
        }
      }
      if (complete ? top_count != 1 : (top_count >= 2 && best_open <= top)) return false;
    }
    return true;
  }

  bool dfs(std::size_t index) {
    if (index == order_.size()) return true;
    const Vertex v = order_[index];
    const Color lo = fixed_[v] > 0 ? fixed_[v] : 1;
    const Color hi = fixed_[v] > 0 ? fixed_[v] : cap_[v];
    for (Color c = lo; c <= hi; ++c) {
      if (++nodes_ > limits_.max_nodes) throw LimitHit{};
      if ((nodes_ & 0x3ff) == 0 && std::chrono::steady_clock::now() - start_ > limits_.max_time) throw LimitHit{};
      bool clash = false;
      for (Vertex w : g_.rotation(v)) {
        if (color_[w] == c) {
          clash = true;
          break;
        }
      }
      if (clash) continue;
      color_[v] = c;
      if (faces_ok(v) && dfs(index + 1)) return true;
      color_[v] = 0;
    }
    return false;
  }

  const PlaneGraph& g_;
  int k_;
  SolveLimits limits_;
  bool lemma_ = false;
  std::vector<Color> color_;
  std::vector<Color> cap_;
  std::vector<Color> fixed_;
  std::vector<std::vector<int>> vertex_faces_;
  std::vector<Vertex> order_;
  std::uint64_t nodes_ = 0;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace detail

/// Decides whether G has a coloring with colors 1..k meeting the mode's
/// contract. A returned witness has already been re-verified.
inline SolveResult fum_colorable(const PlaneGraph& g, int k, const SolveMode& mode = AllFacesMode{},
                                 const SolveLimits& limits = {}) {
  if (k < 1) throw std::invalid_argument("color budget must be positive");
  SolveResult r = detail::FumSearch(g, k, mode, limits).run();
  if (r.witness) {
    const Coloring& c = *r.witness;
    bool ok = c.max_color() <= k;
    if (const auto* lemma = std::get_if<LemmaMode>(&mode)) {
      ok = ok && verify_fum(g, c, FaceScope::InternalOnly).overall;
      for (Vertex v = 0; v < g.vertex_count(); ++v)
        ok = ok && (!g.on_outer_face(v) || c[v] <= 3);
      for (const auto& p : lemma->path.entries) ok = ok && c[p.vertex] == p.color;
    } else {
      ok = ok && verify_fum(g, c, FaceScope::AllFaces).overall;
    }
    if (!ok) throw std::logic_error("exact solver produced an invalid witness");
  }
  return r;
}

struct ChiResult {
  std::optional<int> value;   // empty: above k_max (exhaustive) or unknown (timeout)
  bool exhaustive = true;
  std::optional<Coloring> witness;
  SolveStats stats;
};

/// Smallest k <= k_max admitting a FUM-coloring of every face.
inline ChiResult chi_fum(const PlaneGraph& g, int k_max, const SolveLimits& limits = {}) {
  ChiResult out;
  if (g.vertex_count() == 0) {
    out.value = 0;
    out.witness = Coloring{};
    return out;
  }
  for (int k = 1; k <= k_max; ++k) {
    SolveResult r = fum_colorable(g, k, AllFacesMode{}, limits);
    out.stats.nodes += r.stats.nodes;
    out.stats.wall_ms += r.stats.wall_ms;
    if (r.status == SolveStatus::Timeout) {
      out.exhaustive = false;
      return out;
    }
    if (r.status == SolveStatus::Colorable) {
      out.value = k;
      out.witness = std::move(r.witness);
      return out;
    }
  }
  return out;
}

}  // namespace fum
