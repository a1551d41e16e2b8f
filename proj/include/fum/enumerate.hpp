#pragma once

// Exhaustive generation of small connected simple plane graphs, one rotation
// system per isomorphism class of maps on the sphere (mirror images are
// identified). Plane trees are grown leaf by leaf, then edges are added
// inside faces until no new map appears.

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "fum/plane_graph.hpp"

namespace fum {

using Rotations = std::vector<std::vector<Vertex>>;

namespace detail {

/// BFS code of a connected map from dart (u -> v), walking rotations forward
/// or backward. Each vertex lists its neighbors' labels starting from the
/// neighbor it was reached from, followed by -1.
inline std::vector<int> map_code(const Rotations& rot, Vertex u, Vertex v, bool mirrored,
                                 const std::vector<int>* best = nullptr) {
  const int n = static_cast<int>(rot.size());
  std::vector<int> label(n, -1), from(n, -1), order;
  std::vector<int> code{n};
  label[u] = 0;
  from[u] = v;
  order.push_back(u);
  bool tied = best != nullptr;
  auto emit = [&](int value) {
    code.push_back(value);
    if (tied) {
      const int b = (*best)[code.size() - 1];
      if (value > b) return false;
      if (value < b) tied = false;
    }
    return true;
  };
  for (std::size_t head = 0; head < order.size(); ++head) {
    const Vertex x = order[head];
    const auto& r = rot[x];
    const int deg = static_cast<int>(r.size());
    const int start = static_cast<int>(std::find(r.begin(), r.end(), from[x]) - r.begin());
    for (int i = 0; i < deg; ++i) {
      const Vertex w = r[((mirrored ? start - i : start + i) % deg + deg) % deg];
      if (label[w] < 0) {
        label[w] = static_cast<int>(order.size());
        from[w] = x;
        order.push_back(w);
      }
      if (!emit(label[w])) return {};
    }
    if (!emit(-1)) return {};
  }
  return code;
}

inline std::vector<int> canonical_map_code(const Rotations& rot) {
  const int n = static_cast<int>(rot.size());
  if (n == 1) return {1, -1};
  std::vector<int> best;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v : rot[u]) {
      for (bool mirrored : {false, true}) {
        auto code = map_code(rot, u, v, mirrored, best.empty() ? nullptr : &best);
        if (!code.empty() && (best.empty() || code < best)) best = std::move(code);
      }
    }
  }
  return best;
}

/// The rotation system spelled out by a canonical code.
inline Rotations decode_map_code(const std::vector<int>& code) {
  Rotations rot(code.front());
  std::size_t i = 1;
  for (auto& r : rot) {
    for (; code[i] >= 0; ++i) r.push_back(code[i]);
    ++i;
  }
  return rot;
}

/// Faces as dart sequences: after (a -> x) comes (x -> successor of a at x).
inline std::vector<std::vector<std::pair<Vertex, Vertex>>> trace_rotation_faces(const Rotations& rot) {
  std::set<std::pair<Vertex, Vertex>> seen;
  std::vector<std::vector<std::pair<Vertex, Vertex>>> faces;
  auto succ = [&](Vertex x, Vertex a) {
    const auto& r = rot[x];
    auto it = std::find(r.begin(), r.end(), a);
    return ++it == r.end() ? r.front() : *it;
  };
  for (Vertex u = 0; u < static_cast<Vertex>(rot.size()); ++u) {
    for (Vertex v : rot[u]) {
      if (seen.count({u, v})) continue;
      std::vector<std::pair<Vertex, Vertex>> face;
      for (std::pair<Vertex, Vertex> d{u, v}; !seen.count(d); d = {d.second, succ(d.second, d.first)}) {
        seen.insert(d);
        face.push_back(d);
      }
      faces.push_back(std::move(face));
    }
  }
  return faces;
}

inline void insert_after(std::vector<Vertex>& r, Vertex after, Vertex value) {
  r.insert(std::find(r.begin(), r.end(), after) + 1, value);
}

}  // namespace detail

/// All connected simple plane graphs on exactly n vertices with maximum
/// degree at most `max_degree`, in canonical form and canonical-code order.
inline std::vector<PlaneGraph> enumerate_connected_plane_graphs(int n, int max_degree = 1 << 20) {
  if (n < 1) return {};
  if (n > 8) throw std::invalid_argument("internal enumeration is limited to n <= 8");
  using Code = std::vector<int>;

  std::set<Code> trees{detail::canonical_map_code(Rotations(1))};
  for (int k = 1; k < n; ++k) {
    std::set<Code> grown;
    for (const Code& code : trees) {
      const Rotations rot = detail::decode_map_code(code);
      const Vertex leaf = k;
      if (k == 1) {
        if (max_degree >= 1) grown.insert(detail::canonical_map_code({{1}, {0}}));
        continue;
      }
      for (Vertex x = 0; x < k; ++x) {
        if (static_cast<int>(rot[x].size()) >= max_degree) continue;
        for (Vertex a : rot[x]) {
          Rotations next = rot;
          detail::insert_after(next[x], a, leaf);
          next.push_back({x});
          grown.insert(detail::canonical_map_code(next));
        }
      }
    }
    trees = std::move(grown);
  }

  std::set<Code> all = trees;
  std::set<Code> layer = trees;
  while (!layer.empty()) {
    std::set<Code> next_layer;
    for (const Code& code : layer) {
      const Rotations rot = detail::decode_map_code(code);
      for (const auto& face : detail::trace_rotation_faces(rot)) {
        // corner (a -> x): a new edge at x goes right after a
        for (std::size_t i = 0; i < face.size(); ++i) {
          for (std::size_t j = i + 1; j < face.size(); ++j) {
            const auto [a, x] = face[i];
            const auto [b, y] = face[j];
            if (x == y || static_cast<int>(rot[x].size()) >= max_degree ||
                static_cast<int>(rot[y].size()) >= max_degree) {
              continue;
            }
            if (std::find(rot[x].begin(), rot[x].end(), y) != rot[x].end()) continue;
            Rotations next = rot;
            detail::insert_after(next[x], a, y);
            detail::insert_after(next[y], b, x);
            Code c = detail::canonical_map_code(next);
            if (all.insert(c).second) next_layer.insert(std::move(c));
          }
        }
      }
    }
    layer = std::move(next_layer);
  }

  std::vector<PlaneGraph> out;
  out.reserve(all.size());
  for (const Code& code : all) out.push_back(build_plane_graph(n, detail::decode_map_code(code)));
  return out;
}

/// Every connected simple plane graph with 1 <= n <= n_max vertices.
inline std::vector<PlaneGraph> enumerate_small(int n_max) {
  if (n_max > 7) throw std::invalid_argument("enumerate_small supports n_max <= 7");
  std::vector<PlaneGraph> out;
  for (int n = 1; n <= n_max; ++n) {
    auto level = enumerate_connected_plane_graphs(n);
    for (auto& g : level) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace fum
