#include "trinion/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <ostream>

#include "trinion/report.hpp"

namespace trinion {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InputSource {
  std::string path;
  int theta = 0;
};

void add_input_options(CLI::App* cmd, InputSource& src) {
  cmd->add_option("graph", src.path, "Graph file (one edge per line)");
  cmd->add_option("--theta", src.theta, "Use the multi-theta graph of this genus instead of a file");
}

TrivalentGraph load(const InputSource& src) {
  const bool has_path = !src.path.empty();
  const bool has_theta = src.theta != 0;
  if (has_path == has_theta) throw UsageError("give exactly one of a graph file or --theta");
  if (has_theta) {
    if (src.theta < 2) throw UsageError("--theta must be >= 2");
    return multi_theta(src.theta);
  }
  return read_graph_file(src.path);
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << text;
  if (!f) throw std::runtime_error("write failed: " + path);
}

std::string cell(const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : "-"; }
std::string cell(const std::optional<bool>& v) { return v ? (*v ? "ok" : "FAIL") : "-"; }

int cmd_theta(int g, const std::string& output, std::ostream& out) {
  if (g < 2) throw UsageError("genus must be >= 2");
  const auto graph = multi_theta(g);
  if (output.empty()) {
    out << serialize_graph(graph);
  } else {
    write_graph_file(output, graph);
  }
  return kSuccess;
}

struct AnalyzeFlags {
  bool json = false;
  bool skip_vertex_enum = false;
  std::string export_hrep;
  std::string export_vrep;
};

int cmd_analyze(const InputSource& src, const AnalyzeFlags& flags, std::ostream& out) {
  if (flags.skip_vertex_enum && !flags.export_vrep.empty()) {
    throw UsageError("--export-vrep needs vertex enumeration");
  }
  const auto graph = load(src);
  const Analysis a = analyze(graph, {flags.skip_vertex_enum});
  if (!flags.export_hrep.empty()) write_text(flags.export_hrep, export_hrep(a.hrep));
  if (!flags.export_vrep.empty()) write_text(flags.export_vrep, export_vrep(*a.vrep));
  if (flags.json) {
    out << to_json(a.report).dump(2) << '\n';
  } else {
    out << format_text(a.report);
  }
  return kSuccess;
}

int cmd_oracle(const InputSource& src, std::ostream& out, std::ostream& err) {
  const auto graph = load(src);
  if (graph.edge_count() > kOracleMaxDim) {
    throw UsageError("oracle is limited to ambient dimension " + std::to_string(kOracleMaxDim) + " (got " +
                     std::to_string(graph.edge_count()) + ")");
  }
  const HPolytope h = build_hrep(graph);
  const VPolytope fast = enumerate_vertices(h);
  const VPolytope slow = brute_force_vertices(h);
  if (fast.vertices() == slow.vertices()) {
    out << "oracle PASS: " << fast.vertex_count() << " vertices agree\n";
    return kSuccess;
  }
  err << "oracle FAIL: double description found " << fast.vertex_count() << " vertices, brute force "
      << slow.vertex_count() << '\n';
  return kContradiction;
}

int cmd_batch(int g_min, int g_max, bool json, bool skip, std::ostream& out, std::ostream& err) {
  if (g_min < 2 || g_min > g_max) throw UsageError("need 2 <= g_min <= g_max");
  int worst = kSuccess;
  if (!json) {
    out << std::left << std::setw(4) << "g" << std::setw(10) << "vertices" << std::setw(8) << "facets"
        << std::setw(6) << "cube" << std::setw(6) << "2^g" << std::setw(15) << "origin-facets" << std::setw(7)
        << "6g-6" << std::setw(10) << "overall" << "ms\n";
  }
  for (int g = g_min; g <= g_max; ++g) {
    try {
      const AnalysisReport r = analyze(multi_theta(g), {skip}).report;
      const BatchChecks c = batch_checks(r);
      if (json) {
        nlohmann::ordered_json row;
        row["genus"] = g;
        row["report"] = to_json(r);
        row["checks"] = {{"cube_vertices_eq_2g", c.cube_vertices_match},
                         {"origin_facets_eq_6g_minus_6",
                          c.origin_facets_match ? nlohmann::ordered_json(*c.origin_facets_match) : nullptr}};
        out << row.dump() << '\n';
      } else {
        const auto origin = r.polytope.origin_facet_count ? r.polytope.origin_facet_count
                                                          : std::optional<std::size_t>(r.polytope.origin_tight_rows);
        out << std::setw(4) << g << std::setw(10) << cell(r.polytope.vertex_count) << std::setw(8)
            << cell(r.polytope.facet_count) << std::setw(6) << r.polytope.cube_vertex_count << std::setw(6)
            << cell(std::optional<bool>(c.cube_vertices_match)) << std::setw(15) << cell(origin) << std::setw(7)
            << cell(c.origin_facets_match) << std::setw(10) << (r.verdict ? to_string(r.verdict->overall) : "-")
            << r.timing_ms << '\n';
      }
      out.flush();
    } catch (const ContradictionError& e) {
      err << "g=" << g << ": " << e.what() << '\n';
      worst = std::max(worst, static_cast<int>(kContradiction));
    } catch (const std::exception& e) {
      err << "g=" << g << ": " << e.what() << '\n';
      worst = std::max(worst, static_cast<int>(kInput));
    }
  }
  return worst;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Moment polytopes, lattices, and smoothness of toric varieties from trivalent graphs", "trinion"};
  app.require_subcommand(1);

  int theta_g = 0;
  std::string theta_out;
  auto* theta = app.add_subcommand("theta", "Write the multi-theta graph of genus g");
  theta->add_option("g", theta_g, "Genus (>= 2)")->required();
  theta->add_option("-o,--output", theta_out, "Output path (stdout if omitted)");

  InputSource analyze_src;
  AnalyzeFlags analyze_flags;
  auto* analyze_cmd = app.add_subcommand("analyze", "Run the full pipeline and print a report");
  add_input_options(analyze_cmd, analyze_src);
  analyze_cmd->add_flag("--json", analyze_flags.json, "Emit the report as JSON");
  analyze_cmd->add_flag("--skip-vertex-enum", analyze_flags.skip_vertex_enum,
                        "Only H-representation and labelling facts");
  analyze_cmd->add_option("--export-hrep", analyze_flags.export_hrep, "Write the H-representation (cdd format)");
  analyze_cmd->add_option("--export-vrep", analyze_flags.export_vrep, "Write the V-representation (cdd format)");

  InputSource oracle_src;
  auto* oracle = app.add_subcommand("oracle", "Compare double description against brute-force enumeration");
  add_input_options(oracle, oracle_src);

  int g_min = 0;
  int g_max = 0;
  bool batch_json = false;
  bool batch_skip = false;
  auto* batch = app.add_subcommand("batch", "Analyze the multi-theta graphs for a range of genera");
  batch->add_option("g_min", g_min)->required();
  batch->add_option("g_max", g_max)->required();
  batch->add_flag("--json", batch_json, "One JSON object per line");
  batch->add_flag("--skip-vertex-enum", batch_skip, "Only H-representation and labelling facts");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  try {
    if (*theta) return cmd_theta(theta_g, theta_out, out);
    if (*analyze_cmd) return cmd_analyze(analyze_src, analyze_flags, out);
    if (*oracle) return cmd_oracle(oracle_src, out, err);
    if (*batch) return cmd_batch(g_min, g_max, batch_json, batch_skip, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ContradictionError& e) {
    err << "internal contradiction: " << e.what() << '\n';
    return kContradiction;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInput;
  }
  return kUsage;
}

}  // namespace trinion
