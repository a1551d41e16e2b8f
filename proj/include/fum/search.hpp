#pragma once

// Hypothesis filters and the counterexample search over a graph source.

#include <atomic>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "fum/coloring.hpp"
#include "fum/exact_solver.hpp"
#include "fum/planar_code.hpp"
#include "fum/plane_graph.hpp"

namespace fum {

enum class HypothesisFilter { StarForestX, AcyclicX, MaxDeg2X, MaxDeg3X, ConnectedMaxDeg4, Subcubic, All };

inline constexpr HypothesisFilter kAllFilters[] = {
    HypothesisFilter::StarForestX, HypothesisFilter::AcyclicX,         HypothesisFilter::MaxDeg2X,
    HypothesisFilter::MaxDeg3X,    HypothesisFilter::ConnectedMaxDeg4, HypothesisFilter::Subcubic,
    HypothesisFilter::All,
};

constexpr std::string_view filter_name(HypothesisFilter f) {
  switch (f) {
    case HypothesisFilter::StarForestX: return "StarForestX";
    case HypothesisFilter::AcyclicX: return "AcyclicX";
    case HypothesisFilter::MaxDeg2X: return "MaxDeg2X";
    case HypothesisFilter::MaxDeg3X: return "MaxDeg3X";
    case HypothesisFilter::ConnectedMaxDeg4: return "ConnectedMaxDeg4";
    case HypothesisFilter::Subcubic: return "Subcubic";
    case HypothesisFilter::All: return "All";
  }
  return "?";
}

inline std::optional<HypothesisFilter> parse_filter(std::string_view name) {
  for (HypothesisFilter f : kAllFilters)
    if (filter_name(f) == name) return f;
  return std::nullopt;
}

inline bool apply_filter(const PlaneGraph& g, HypothesisFilter f) {
  auto max_degree = [&] {
    int d = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) d = std::max(d, g.degree(v));
    return d;
  };
  switch (f) {
    case HypothesisFilter::StarForestX: return compute_xset(g).star_forest;
    case HypothesisFilter::AcyclicX: return compute_xset(g).acyclic;
    case HypothesisFilter::MaxDeg2X: return compute_xset(g).max_degree <= 2;
    case HypothesisFilter::MaxDeg3X: return compute_xset(g).max_degree <= 3;
    case HypothesisFilter::ConnectedMaxDeg4: return g.component_count() <= 1 && max_degree() <= 4;
    case HypothesisFilter::Subcubic: return max_degree() <= 3;
    case HypothesisFilter::All: return true;
  }
  return false;
}

/// Hex of the planar_code body after relabeling by BFS from vertex 0
/// (neighbors in rotation order; further components from their smallest
/// vertex). Equal drawings with equal vertex 0 get equal ids.
inline std::string canonical_id(const PlaneGraph& g) {
  const int n = g.vertex_count();
  std::vector<Vertex> label(n, -1), order;
  for (Vertex s = 0; s < n; ++s) {
    if (label[s] >= 0) continue;
    label[s] = static_cast<Vertex>(order.size());
    order.push_back(s);
    for (std::size_t head = order.size() - 1; head < order.size(); ++head) {
      for (Vertex w : g.rotation(order[head])) {
        if (label[w] < 0) {
          label[w] = static_cast<Vertex>(order.size());
          order.push_back(w);
        }
      }
    }
  }
  std::vector<std::vector<Vertex>> rot(n);
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w : g.rotation(v)) rot[label[v]].push_back(label[w]);
  const std::string bytes = encode_planar_code(build_plane_graph(n, std::move(rot)));
  std::ostringstream hex;
  for (unsigned char ch : bytes) hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(ch);
  return hex.str();
}

struct SearchRecord {
  std::size_t index = 0;  // position in the source
  std::string id;
  int n = 0;
  int m = 0;
  std::vector<HypothesisFilter> flags;  // every filter the graph passes
  std::optional<int> chi;               // empty: above threshold or unknown
  bool exhaustive = true;
  std::uint64_t nodes = 0;
  std::optional<Coloring> witness;

  bool counterexample() const { return !chi && exhaustive; }
};

struct SearchReport {
  std::string source;
  HypothesisFilter filter = HypothesisFilter::All;
  int threshold = 4;
  std::size_t source_size = 0;
  std::vector<SearchRecord> records;         // graphs passing the filter, in source order
  std::vector<std::size_t> counterexamples;  // indices into records
  std::size_t timeouts = 0;
  std::uint64_t total_nodes = 0;
  double wall_ms = 0.0;  // not part of the written report

  /// Counterexamples get a coloring with threshold + 1 colors when one
  /// exists within the limits, re-verified like every other witness.
  std::vector<std::optional<Coloring>> above_threshold;
};

inline std::string chi_text(const SearchRecord& r, int threshold) {
  if (r.chi) return std::to_string(*r.chi);
  return r.exhaustive ? ">" + std::to_string(threshold) : "unknown";
}

inline void write_report(std::ostream& out, const SearchReport& rep) {
  out << "# source " << rep.source << "\n# filter " << filter_name(rep.filter) << "\n# threshold " << rep.threshold
      << "\n# columns: id n m flags chi_fum nodes\n";
  for (const auto& r : rep.records) {
    out << r.id << ' ' << r.n << ' ' << r.m << ' ';
    for (std::size_t i = 0; i < r.flags.size(); ++i) out << (i ? "," : "") << filter_name(r.flags[i]);
    if (r.flags.empty()) out << '-';
    out << ' ' << chi_text(r, rep.threshold) << ' ' << r.nodes << '\n';
  }
  out << "# summary\n"
      << "source_graphs " << rep.source_size << '\n'
      << "tested " << rep.records.size() << '\n'
      << "timeouts " << rep.timeouts << '\n'
      << "counterexamples " << rep.counterexamples.size() << '\n'
      << "solver_nodes " << rep.total_nodes << '\n';
  for (std::size_t i = 0; i < rep.counterexamples.size(); ++i) {
    const auto& r = rep.records[rep.counterexamples[i]];
    out << "counterexample " << r.id << " certified_not_" << rep.threshold << "_colorable";
    if (i < rep.above_threshold.size() && rep.above_threshold[i]) out << " colorable_with_" << rep.threshold + 1;
    out << '\n';
  }
}

/// Sidecar: one line per record with a witness, "id: c0 c1 ...".
inline void write_witnesses(std::ostream& out, const SearchReport& rep) {
  for (const auto& r : rep.records) {
    if (!r.witness) continue;
    out << r.id << ':';
    for (Color c : r.witness->colors) out << ' ' << c;
    out << '\n';
  }
}

/// Runs the exact solver with k_max = threshold on every source graph that
/// passes `filter`. Graphs are solved on `jobs` threads; records are merged
/// by source index, so the report does not depend on scheduling.
inline SearchReport search_counterexamples(const std::vector<PlaneGraph>& source, HypothesisFilter filter,
                                           int threshold, const SolveLimits& limits = {}, int jobs = 1,
                                           std::string source_name = "graphs") {
  if (threshold < 1) throw std::invalid_argument("threshold must be at least 1");
  const auto start = std::chrono::steady_clock::now();
  SearchReport rep;
  rep.source = std::move(source_name);
  rep.filter = filter;
  rep.threshold = threshold;
  rep.source_size = source.size();

  std::vector<std::size_t> picked;
  for (std::size_t i = 0; i < source.size(); ++i)
    if (apply_filter(source[i], filter)) picked.push_back(i);
  rep.records.resize(picked.size());

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t k = next++; k < picked.size(); k = next++) {
      const PlaneGraph& g = source[picked[k]];
      SearchRecord& r = rep.records[k];
      r.index = picked[k];
      r.id = canonical_id(g);
      r.n = g.vertex_count();
      r.m = g.edge_count();
      for (HypothesisFilter f : kAllFilters)
        if (f != HypothesisFilter::All && apply_filter(g, f)) r.flags.push_back(f);
      ChiResult chi = chi_fum(g, threshold, limits);
      r.chi = chi.value;
      r.exhaustive = chi.exhaustive;
      r.nodes = chi.stats.nodes;
      r.witness = std::move(chi.witness);
    }
  };
  jobs = std::max(1, jobs);
  if (jobs == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  for (std::size_t k = 0; k < rep.records.size(); ++k) {
    const auto& r = rep.records[k];
    rep.total_nodes += r.nodes;
    if (!r.exhaustive) ++rep.timeouts;
    if (r.counterexample()) {
      rep.counterexamples.push_back(k);
      SolveResult more = fum_colorable(source[r.index], threshold + 1, AllFacesMode{}, limits);
      rep.above_threshold.push_back(more.witness);
    }
  }
  rep.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace fum
