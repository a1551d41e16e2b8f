#pragma once

// The planar_code stream format: a ">>planar_code<<" header, then per graph
// the vertex count followed by each vertex's rotation as 1-based neighbor
// indices terminated by 0. Graphs with 256 or more vertices use the escape
// byte 0 and 16-bit entries (little endian unless the header says "be").

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fum/plane_graph.hpp"

namespace fum {

inline constexpr std::string_view kPlanarCodeHeader = ">>planar_code<<";

struct PlanarCodeOptions {
  bool lenient = false;  // skip graphs that fail validation instead of throwing
};

inline std::vector<PlaneGraph> parse_planar_code(std::string_view bytes, const PlanarCodeOptions& options = {},
                                                 std::vector<std::string>* skipped = nullptr) {
  constexpr std::string_view prefix = ">>planar_code";
  if (bytes.substr(0, prefix.size()) != prefix) throw Error(ErrorKind::BadHeader, "missing >>planar_code<< header");
  auto close = bytes.find("<<", prefix.size());
  if (close == std::string_view::npos || close > 32) throw Error(ErrorKind::BadHeader, "unterminated header");
  const std::string_view variant = bytes.substr(prefix.size(), close - prefix.size());
  bool big_endian = false;
  if (variant == " be") {
    big_endian = true;
  } else if (!variant.empty() && variant != " le") {
    throw Error(ErrorKind::BadHeader, "unknown header variant '" + std::string(variant) + "'");
  }

  std::size_t pos = close + 2;
  std::vector<PlaneGraph> graphs;
  int index = 0;
  while (pos < bytes.size()) {
    auto byte = [&]() -> unsigned {
      if (pos >= bytes.size()) throw Error(ErrorKind::TruncatedGraph, "graph " + std::to_string(index));
      return static_cast<unsigned char>(bytes[pos++]);
    };
    bool wide = false;
    unsigned n = byte();
    if (n == 0) {
      wide = true;
      unsigned a = byte();
      unsigned b = byte();
      n = big_endian ? (a << 8 | b) : (b << 8 | a);
    }
    auto entry = [&]() -> unsigned {
      if (!wide) return byte();
      unsigned a = byte();
      unsigned b = byte();
      return big_endian ? (a << 8 | b) : (b << 8 | a);
    };

    std::vector<std::vector<Vertex>> rotations(n);
    std::string problem;
    for (unsigned v = 0; v < n; ++v) {
      for (unsigned e = entry(); e != 0; e = entry()) {
        if (e > n && problem.empty()) {
          problem = "vertex " + std::to_string(v + 1) + " lists neighbor " + std::to_string(e);
        }
        rotations[v].push_back(static_cast<Vertex>(e) - 1);
      }
    }
    try {
      if (!problem.empty()) throw Error(ErrorKind::IndexOutOfRange, problem);
      graphs.push_back(build_plane_graph(static_cast<int>(n), std::move(rotations)));
    } catch (const Error& err) {
      if (!options.lenient) throw;
      if (skipped != nullptr) skipped->push_back("graph " + std::to_string(index) + ": " + err.what());
    }
    ++index;
  }
  return graphs;
}

/// Body bytes of one graph in the one-byte encoding (or the escaped wide
/// encoding once the graph has 256 or more vertices).
inline std::string encode_planar_code(const PlaneGraph& g) {
  if (!g.explicit_hints().empty()) {
    throw Error(ErrorKind::UnrepresentableInFormat, "planar_code cannot carry an outer-face override or nesting");
  }
  const int n = g.vertex_count();
  if (n > 0xffff) throw Error(ErrorKind::UnrepresentableInFormat, "too many vertices for planar_code");
  std::string out;
  const bool wide = n >= 256 || n == 0;  // a zero count byte would read as the escape
  auto put = [&](unsigned value) {
    if (wide) {
      out.push_back(static_cast<char>(value & 0xff));
      out.push_back(static_cast<char>(value >> 8));
    } else {
      out.push_back(static_cast<char>(value));
    }
  };
  if (wide) out.push_back('\0');
  put(static_cast<unsigned>(n));
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : g.rotation(v)) put(static_cast<unsigned>(w + 1));
    put(0);
  }
  return out;
}

inline std::string serialize_planar_code(std::span<const PlaneGraph> graphs) {
  bool wide = false;
  for (const auto& g : graphs) wide = wide || g.vertex_count() >= 256 || g.vertex_count() == 0;
  std::string out(wide ? ">>planar_code le<<" : kPlanarCodeHeader);
  for (const auto& g : graphs) out += encode_planar_code(g);
  return out;
}

}  // namespace fum
