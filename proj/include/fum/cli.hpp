#pragma once

// The fumtool command line. run_cli() takes its streams as arguments so the
// whole surface can be driven from tests.
//
// Exit codes: 0 success, 1 verification failure / not colorable / timeout,
// 2 input error, 3 internal case exhaustion or a broken child contract.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fum/constructive.hpp"
#include "fum/enumerate.hpp"
#include "fum/exact_solver.hpp"
#include "fum/formats.hpp"
#include "fum/random_graphs.hpp"
#include "fum/search.hpp"

namespace fum {

namespace cli_detail {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::string slurp(const std::string& path, std::istream& in) {
  if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot open " + path);
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

inline GraphDocument load(const std::string& path, std::istream& in, std::optional<std::size_t> index) {
  const std::string bytes = slurp(path, in);
  return deserialize(bytes, detect_format(bytes), index);
}

inline std::optional<Format> parse_format(const std::string& name) {
  for (Format f : {Format::RotationText, Format::RotationJson, Format::PlanarCode})
    if (format_name(f) == name) return f;
  return std::nullopt;
}

inline PrecoloredPath parse_precolor(const std::string& spec) {
  PrecoloredPath path;
  std::stringstream items(spec);
  std::string item;
  while (std::getline(items, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw InputError("precolor entries look like v:c, got '" + item + "'");
    try {
      path.entries.push_back({std::stoi(item.substr(0, colon)), std::stoi(item.substr(colon + 1))});
    } catch (const std::exception&) {
      throw InputError("precolor entries look like v:c, got '" + item + "'");
    }
  }
  return path;
}

inline std::string report_path(const std::string& path) {
  const char* dir = std::getenv("FUM_REPORT_DIR");
  if (dir == nullptr || *dir == '\0' || std::filesystem::path(path).is_absolute()) return path;
  return (std::filesystem::path(dir) / path).string();
}

inline std::vector<PlaneGraph> load_source(const std::string& spec, std::optional<std::uint64_t> seed, std::istream& in) {
  auto number = [&](const std::string& text) {
    try {
      std::size_t used = 0;
      long value = std::stol(text, &used);
      if (used == text.size() && value >= 0) return value;
    } catch (const std::exception&) {
    }
    throw InputError("bad number '" + text + "' in source " + spec);
  };
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);

  if (parts.size() == 2 && parts[0] == "enum") {
    const long n = number(parts[1]);
    if (n > 7) throw InputError("enum sources stop at 7 vertices");
    return enumerate_small(static_cast<int>(n));
  }
  if (parts.size() == 2 && parts[0] == "subcubic") {
    const long n = number(parts[1]);
    if (n > 8) throw InputError("subcubic sources stop at 8 vertices");
    std::vector<PlaneGraph> out;
    for (int k = 1; k <= n; ++k)
      for (auto& g : enumerate_connected_plane_graphs(k, 3)) out.push_back(std::move(g));
    return out;
  }
  if (parts.size() == 3 && parts[0] == "random") {
    if (!seed) throw InputError("random sources need --seed");
    const long n = number(parts[1]);
    const long count = number(parts[2]);
    if (n < 3) throw InputError("random sources need at least 3 vertices");
    std::vector<PlaneGraph> out;
    for (long i = 0; i < count; ++i) out.push_back(random_plane_graph(*seed + static_cast<std::uint64_t>(i), static_cast<int>(n)));
    return out;
  }
  const std::string bytes = slurp(spec, in);
  if (detect_format(bytes) == Format::PlanarCode) return parse_planar_code(bytes);
  return {deserialize(bytes, detect_format(bytes)).graph};
}

inline void print_report_summary(std::ostream& out, const VerificationReport& rep) {
  if (!rep.proper.ok) {
    out << "improper edge " << rep.proper.violating_edge->first << '-' << rep.proper.violating_edge->second << '\n';
  }
  for (const auto& f : rep.faces) {
    if (f.pass) continue;
    out << "face " << f.face << (f.outer ? " (outer)" : "") << ": max " << f.max_color << " attained by";
    for (Vertex v : f.attaining) out << ' ' << v;
    out << '\n';
  }
  if (!rep.palette_ok) out << "colors above 4\n";
  if (!rep.outer_fours.empty()) {
    out << "color 4 on the outer face at";
    for (Vertex v : rep.outer_fours) out << ' ' << v;
    out << '\n';
  }
  for (const auto& note : rep.notes) out << "note: " << note << '\n';
  out << (rep.overall ? "PASS" : "FAIL") << '\n';
}

}  // namespace cli_detail

inline int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  using namespace cli_detail;
  CLI::App app{"Facial unique-maximum coloring of plane graphs"};
  app.require_subcommand(1);
  std::string file;
  std::optional<std::size_t> index;
  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("file", file, "rotation text, rotation JSON or planar_code; '-' reads stdin")->required();
    cmd->add_option("--index", index, "graph to pick from a multi-graph planar_code stream");
  };

  auto* validate = app.add_subcommand("validate", "build the graph and report its invariants");
  add_input(validate);
  auto* faces = app.add_subcommand("faces", "list faces");
  add_input(faces);

  auto* verify = app.add_subcommand("verify", "check the coloring stored in the file");
  add_input(verify);
  std::string scope = "all";
  verify->add_option("--scope", scope, "all, internal, or lemma (the extension contract)")
      ->check(CLI::IsMember({"all", "internal", "lemma"}));

  auto* solve = app.add_subcommand("solve", "exact chi_fum");
  add_input(solve);
  int kmax = 5;
  std::uint64_t max_nodes = SolveLimits{}.max_nodes;
  long timeout_ms = static_cast<long>(SolveLimits{}.max_time.count());
  auto add_limits = [&](CLI::App* cmd) {
    cmd->add_option("--max-nodes", max_nodes, "search node budget per k");
    cmd->add_option("--timeout-ms", timeout_ms, "wall-clock budget per k");
  };
  solve->add_option("--kmax", kmax, "largest k tried")->check(CLI::PositiveNumber);
  add_limits(solve);

  auto* color = app.add_subcommand("color", "constructive coloring (4 colors when X induces a star forest)");
  add_input(color);
  std::string precolor;
  bool trace = false;
  std::string out_format = "text";
  color->add_option("--precolor", precolor, "v:c[,v:c] extends a precolored outer path instead");
  color->add_flag("--trace", trace, "print the applied cases as comments");
  color->add_option("--to", out_format, "output format")->check(CLI::IsMember({"text", "json"}));

  auto* search = app.add_subcommand("search", "look for graphs with chi_fum above a threshold");
  std::string source;
  std::string filter_text = "All";
  int threshold = 4;
  std::string report = "search_report.txt";
  int jobs = 1;
  std::optional<std::uint64_t> seed;
  search->add_option("source", source, "enum:N, subcubic:N, random:N:COUNT, or a graph file")->required();
  search->add_option("--filter", filter_text, "StarForestX AcyclicX MaxDeg2X MaxDeg3X ConnectedMaxDeg4 Subcubic All");
  search->add_option("--threshold", threshold)->check(CLI::PositiveNumber);
  search->add_option("--report", report, "report path; witnesses go to <report>.witness");
  search->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  search->add_option("--seed", seed, "required for random sources");
  add_limits(search);

  auto* convert = app.add_subcommand("convert", "rewrite a graph document in another format");
  std::string target;
  std::string to_format;
  add_input(convert);
  convert->add_option("output", target, "output path; '-' writes stdout")->required();
  convert->add_option("--to", to_format, "text, json or planar-code")->required()->check(CLI::IsMember({"text", "json", "planar-code"}));

  auto* dot = app.add_subcommand("export-dot", "Graphviz rendering");
  add_input(dot);

  std::vector<const char*> argv{"fumtool"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }
  const SolveLimits limits{max_nodes, std::chrono::milliseconds(timeout_ms)};

  try {
    if (validate->parsed()) {
      const GraphDocument doc = load(file, in, index);
      const PlaneGraph& g = doc.graph;
      out << "vertices " << g.vertex_count() << "\nedges " << g.edge_count() << "\nfaces " << g.face_count()
          << "\ncomponents " << g.component_count() << '\n';
      const XSet x = compute_xset(g);
      out << "x_size " << x.members.size() << "\nx_class " << class_name(x.induced_class) << '\n';
      out << "outer_vertices";
      if (g.vertex_count() > 0)
        for (Vertex v : g.outer_face().vertices) out << ' ' << v;
      out << "\nvalid\n";
      return 0;
    }
    if (faces->parsed()) {
      const GraphDocument doc = load(file, in, index);
      const PlaneGraph& g = doc.graph;
      for (int f = 0; f < g.face_count(); ++f) {
        const Face& face = g.faces().faces[f];
        out << "face " << f << (f == g.faces().outer ? " outer" : "") << " length " << face.walk_length() << ':';
        for (std::size_t w = 0; w < face.boundary.size(); ++w) {
          if (w > 0) out << " |";
          for (const Dart& d : face.boundary[w]) out << ' ' << d.tail;
        }
        if (face.boundary.size() > 1 || face.walk_length() == 0) {
          out << " ; vertices";
          for (Vertex v : face.vertices) out << ' ' << v;
        }
        out << '\n';
      }
      return 0;
    }
    if (verify->parsed()) {
      const GraphDocument doc = load(file, in, index);
      if (!doc.coloring) throw InputError("the file carries no coloring");
      VerificationReport rep;
      if (scope == "lemma") {
        rep = verify_lemma_contract(doc.graph, doc.precolor.value_or(PrecoloredPath{}), *doc.coloring);
      } else {
        rep = verify_fum(doc.graph, *doc.coloring, scope == "all" ? FaceScope::AllFaces : FaceScope::InternalOnly);
      }
      print_report_summary(out, rep);
      return rep.overall ? 0 : 1;
    }
    if (solve->parsed()) {
      const GraphDocument doc = load(file, in, index);
      const ChiResult r = chi_fum(doc.graph, kmax, limits);
      err << "solver nodes " << r.stats.nodes << ", " << r.stats.wall_ms << " ms\n";
      if (!r.exhaustive) {
        out << "chi_fum unknown (search limit reached)\n";
        return 1;
      }
      if (!r.value) {
        out << "chi_fum > " << kmax << '\n';
        return 1;
      }
      out << "chi_fum = " << *r.value << '\n';
      out << write_rotation_text(GraphDocument{doc.graph, r.witness, std::nullopt});
      return 0;
    }
    if (color->parsed()) {
      const GraphDocument doc = load(file, in, index);
      ExtensionResult r;
      std::optional<PrecoloredPath> path;
      if (!precolor.empty()) {
        path = parse_precolor(precolor);
        r = extend_precoloring(doc.graph, *path);
      } else {
        r = fum_color_star_forest(doc.graph);
      }
      GraphDocument result{doc.graph, r.coloring, path};
      if (out_format == "json") {
        out << write_rotation_json(result);
      } else {
        if (trace) {
          std::istringstream lines(format_trace(r.trace));
          for (std::string line; std::getline(lines, line);) out << "# " << line << '\n';
        }
        out << write_rotation_text(result);
      }
      return 0;
    }
    if (search->parsed()) {
      const auto filter = parse_filter(filter_text);
      if (!filter) throw InputError("unknown filter " + filter_text);
      const std::vector<PlaneGraph> graphs = load_source(source, seed, in);
      std::string name = source;
      if (seed) name += " seed " + std::to_string(*seed);
      const SearchReport rep = search_counterexamples(graphs, *filter, threshold, limits, jobs, name);
      const std::string path = report_path(report);
      std::ofstream report_file(path);
      std::ofstream witness_file(path + ".witness");
      if (!report_file || !witness_file) throw InputError("cannot write " + path);
      write_report(report_file, rep);
      write_witnesses(witness_file, rep);
      out << "tested " << rep.records.size() << " of " << rep.source_size << " graphs, " << rep.counterexamples.size()
          << " counterexamples, " << rep.timeouts << " timeouts\nreport " << path << '\n';
      err << "search took " << rep.wall_ms << " ms\n";
      return rep.timeouts > 0 ? 1 : 0;
    }
    if (convert->parsed()) {
      const GraphDocument doc = load(file, in, index);
      const std::string bytes = serialize(doc, *parse_format(to_format));
      if (target == "-") {
        out << bytes;
      } else {
        std::ofstream o(target, std::ios::binary);
        if (!o) throw InputError("cannot write " + target);
        o << bytes;
      }
      return 0;
    }
    if (dot->parsed()) {
      const GraphDocument doc = load(file, in, index);
      out << export_dot(doc.graph, doc.coloring ? &*doc.coloring : nullptr);
      return 0;
    }
  } catch (const Error& e) {
    err << e.what() << '\n';
    if (!e.detail().empty()) err << e.detail();
    const bool internal = e.kind() == ErrorKind::InternalCaseExhaustion || e.kind() == ErrorKind::ChildContractFailure;
    return internal ? 3 : 2;
  } catch (const InputError& e) {
    err << "InputError: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "InputError: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace fum
