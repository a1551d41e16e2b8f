#pragma once

// On-disk graph documents: planar_code, a line-oriented rotation text format
// and its JSON mirror, plus DOT export.
//
// Rotation text, one item per line ('#' starts a comment):
//
//   0: 1 2          rotation of vertex 0 (0-based indices)
//   outer: 0 1      the outer face of this component is traced through 0->1
//   host: 5 0 1     the component of vertex 5 sits inside the face of 0->1
//   precolor 0 3    vertex 0 is precolored 3
//   color 0 3       vertex 0 has color 3

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "fum/coloring.hpp"
#include "fum/planar_code.hpp"
#include "fum/plane_graph.hpp"

namespace fum {

enum class Format { PlanarCode, RotationText, RotationJson };

struct GraphDocument {
  PlaneGraph graph;
  std::optional<Coloring> coloring;
  std::optional<PrecoloredPath> precolor;

  friend bool operator==(const GraphDocument&, const GraphDocument&) = default;
};

namespace detail {

inline std::vector<std::string> split_words(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string word;
  while (in >> word) out.push_back(word);
  return out;
}

inline int parse_int(const std::string& word, int line_no) {
  try {
    std::size_t used = 0;
    int value = std::stoi(word, &used);
    if (used == word.size()) return value;
  } catch (const std::exception&) {
  }
  throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": expected an integer, got '" + word + "'");
}

inline GraphDocument assemble(int n, std::vector<std::vector<Vertex>> rotations, const EmbeddingHints& hints,
                              const std::vector<std::pair<Vertex, Color>>& colors,
                              const std::vector<Precolor>& precolors, bool has_colors, bool has_precolor) {
  GraphDocument doc;
  doc.graph = build_plane_graph(n, std::move(rotations), hints);
  if (has_colors) {
    Coloring c(n);
    for (const auto& [v, col] : colors) {
      if (v < 0 || v >= n) throw Error(ErrorKind::IndexOutOfRange, "color for unknown vertex " + std::to_string(v));
      c[v] = col;
    }
    doc.coloring = std::move(c);
  }
  if (has_precolor) doc.precolor = PrecoloredPath{precolors};
  return doc;
}

}  // namespace detail

inline GraphDocument parse_rotation_text(std::string_view text) {
  std::map<int, std::vector<Vertex>> rows;
  EmbeddingHints hints;
  std::vector<std::pair<Vertex, Color>> colors;
  std::vector<Precolor> precolors;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto words = detail::split_words(line);
    if (words.empty()) continue;
    const std::string& head = words[0];
    auto expect = [&](std::size_t count) {
      if (words.size() != count) {
        throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": malformed '" + head + "' line");
      }
    };
    if (head == "outer:") {
      expect(3);
      hints.outer.push_back({detail::parse_int(words[1], line_no), detail::parse_int(words[2], line_no)});
    } else if (head == "host:") {
      expect(4);
      hints.hosts.push_back({detail::parse_int(words[1], line_no),
                             {detail::parse_int(words[2], line_no), detail::parse_int(words[3], line_no)}});
    } else if (head == "color") {
      expect(3);
      colors.emplace_back(detail::parse_int(words[1], line_no), detail::parse_int(words[2], line_no));
    } else if (head == "precolor") {
      expect(3);
      precolors.push_back({detail::parse_int(words[1], line_no), detail::parse_int(words[2], line_no)});
    } else if (head.size() > 1 && head.back() == ':') {
      int v = detail::parse_int(head.substr(0, head.size() - 1), line_no);
      if (v < 0) throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": negative vertex");
      if (rows.count(v)) throw Error(ErrorKind::ParseError, "vertex " + std::to_string(v) + " listed twice");
      std::vector<Vertex> rotation;
      for (std::size_t i = 1; i < words.size(); ++i) rotation.push_back(detail::parse_int(words[i], line_no));
      rows.emplace(v, std::move(rotation));
    } else {
      throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": unrecognized '" + head + "'");
    }
  }
  const int n = rows.empty() ? 0 : rows.rbegin()->first + 1;
  if (static_cast<int>(rows.size()) != n) throw Error(ErrorKind::ParseError, "vertex lines are not 0..n-1");
  std::vector<std::vector<Vertex>> rotations;
  for (auto& [v, r] : rows) rotations.push_back(std::move(r));
  return detail::assemble(n, std::move(rotations), hints, colors, precolors, !colors.empty(), !precolors.empty());
}

inline std::string write_rotation_text(const GraphDocument& doc) {
  std::ostringstream out;
  const PlaneGraph& g = doc.graph;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    out << v << ':';
    for (Vertex w : g.rotation(v)) out << ' ' << w;
    out << '\n';
  }
  const auto hints = g.explicit_hints();
  for (const Dart& d : hints.outer) out << "outer: " << d.tail << ' ' << d.head << '\n';
  for (const Placement& p : hints.hosts) out << "host: " << p.member << ' ' << p.face.tail << ' ' << p.face.head << '\n';
  if (doc.precolor) {
    for (const auto& p : doc.precolor->entries) out << "precolor " << p.vertex << ' ' << p.color << '\n';
  }
  if (doc.coloring) {
    for (Vertex v = 0; v < doc.coloring->size(); ++v)
      if ((*doc.coloring)[v] > 0) out << "color " << v << ' ' << (*doc.coloring)[v] << '\n';
  }
  return out.str();
}

inline GraphDocument parse_rotation_json(std::string_view text) {
  using nlohmann::json;
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  try {
    const int n = j.at("n").get<int>();
    auto rotations = j.at("rotations").get<std::vector<std::vector<Vertex>>>();
    EmbeddingHints hints;
    if (j.contains("outer")) {
      for (const auto& d : j["outer"]) hints.outer.push_back({d.at(0).get<int>(), d.at(1).get<int>()});
    }
    if (j.contains("hosts")) {
      for (const auto& h : j["hosts"]) hints.hosts.push_back({h.at(0).get<int>(), {h.at(1).get<int>(), h.at(2).get<int>()}});
    }
    std::vector<std::pair<Vertex, Color>> colors;
    bool has_colors = j.contains("coloring");
    if (has_colors) {
      auto values = j["coloring"].get<std::vector<int>>();
      if (static_cast<int>(values.size()) != n) throw Error(ErrorKind::ParseError, "coloring length differs from n");
      for (int v = 0; v < n; ++v) colors.emplace_back(v, values[v]);
    }
    std::vector<Precolor> precolors;
    bool has_precolor = j.contains("precolor");
    if (has_precolor) {
      for (const auto& p : j["precolor"]) precolors.push_back({p.at(0).get<int>(), p.at(1).get<int>()});
    }
    return detail::assemble(n, std::move(rotations), hints, colors, precolors, has_colors, has_precolor);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

inline std::string write_rotation_json(const GraphDocument& doc) {
  using nlohmann::ordered_json;
  const PlaneGraph& g = doc.graph;
  ordered_json j;
  j["n"] = g.vertex_count();
  j["rotations"] = g.rotations();
  const auto hints = g.explicit_hints();
  if (!hints.outer.empty()) {
    j["outer"] = ordered_json::array();
    for (const Dart& d : hints.outer) j["outer"].push_back({d.tail, d.head});
  }
  if (!hints.hosts.empty()) {
    j["hosts"] = ordered_json::array();
    for (const Placement& p : hints.hosts) j["hosts"].push_back({p.member, p.face.tail, p.face.head});
  }
  if (doc.precolor) {
    j["precolor"] = ordered_json::array();
    for (const auto& p : doc.precolor->entries) j["precolor"].push_back({p.vertex, p.color});
  }
  if (doc.coloring) j["coloring"] = doc.coloring->colors;
  return j.dump() + "\n";
}

inline Format detect_format(std::string_view bytes) {
  if (bytes.substr(0, 13) == ">>planar_code") return Format::PlanarCode;
  for (char ch : bytes) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    return ch == '{' ? Format::RotationJson : Format::RotationText;
  }
  return Format::RotationText;
}

inline std::string serialize(const GraphDocument& doc, Format format) {
  switch (format) {
    case Format::RotationText: return write_rotation_text(doc);
    case Format::RotationJson: return write_rotation_json(doc);
    case Format::PlanarCode:
      if (doc.coloring || doc.precolor) {
        throw Error(ErrorKind::UnrepresentableInFormat, "planar_code carries no colorings or precolorings");
      }
      return serialize_planar_code(std::span<const PlaneGraph>(&doc.graph, 1));
  }
  return {};
}

/// Reads one document. A planar_code stream must hold exactly one graph
/// unless `index` picks one.
inline GraphDocument deserialize(std::string_view bytes, Format format, std::optional<std::size_t> index = {}) {
  switch (format) {
    case Format::RotationText: return parse_rotation_text(bytes);
    case Format::RotationJson: return parse_rotation_json(bytes);
    case Format::PlanarCode: {
      auto graphs = parse_planar_code(bytes);
      if (index) {
        if (*index >= graphs.size()) throw Error(ErrorKind::IndexOutOfRange, "no graph at that index");
        return GraphDocument{std::move(graphs[*index]), {}, {}};
      }
      if (graphs.size() != 1) {
        throw Error(ErrorKind::ParseError, "stream holds " + std::to_string(graphs.size()) + " graphs; pick one");
      }
      return GraphDocument{std::move(graphs.front()), {}, {}};
    }
  }
  return {};
}

inline std::string format_name(Format f) {
  switch (f) {
    case Format::PlanarCode: return "planar-code";
    case Format::RotationText: return "text";
    case Format::RotationJson: return "json";
  }
  return "?";
}

/// Graphviz text. Colored vertices are labeled "v:c", color-4 vertices are
/// filled and outer-face vertices get a double border.
inline std::string export_dot(const PlaneGraph& g, const Coloring* coloring = nullptr) {
  std::ostringstream out;
  out << "graph fum {\n  node [shape=circle];\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    out << "  " << v << " [label=\"" << v;
    Color c = coloring != nullptr && v < coloring->size() ? (*coloring)[v] : 0;
    if (c > 0) out << ':' << c;
    out << '"';
    if (c == 4) out << ", style=filled, fillcolor=gold";
    if (g.on_outer_face(v)) out << ", peripheries=2";
    out << "];\n";
  }
  for (const auto& [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace fum
