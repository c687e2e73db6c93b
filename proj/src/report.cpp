#include "trinion/report.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

namespace trinion {

namespace {

using json = nlohmann::ordered_json;

json vector_json(const std::optional<QVector>& v) {
  if (!v) return nullptr;
  json arr = json::array();
  for (const auto& x : *v) arr.push_back(to_string(x));
  return arr;
}

std::optional<QVector> vector_from(const json& j) {
  if (j.is_null()) return std::nullopt;
  QVector v;
  for (const auto& x : j) v.push_back(parse_rational(x.get<std::string>()));
  return v;
}

template <typename T>
json optional_json(const std::optional<T>& v) {
  if (!v) return nullptr;
  return *v;
}

template <typename T>
std::optional<T> optional_from(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<T>();
}

std::optional<Rational> rational_from(const json& j) {
  if (j.is_null()) return std::nullopt;
  return parse_rational(j.get<std::string>());
}

Overall overall_from(const std::string& s) {
  if (s == "SMOOTH") return Overall::Smooth;
  if (s == "SINGULAR") return Overall::Singular;
  throw std::invalid_argument("unknown verdict: " + s);
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

const char* to_string(Overall overall) { return overall == Overall::Smooth ? "SMOOTH" : "SINGULAR"; }

std::string format_vector(const QVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += to_string(v[i]);
  }
  return out + ")";
}

Analysis analyze(const TrivalentGraph& graph, const AnalysisOptions& options) {
  const auto start = std::chrono::steady_clock::now();

  AnalysisReport r;
  r.graph = {graph.genus(), graph.vertex_count(), graph.edge_count(), is_loop_free(graph)};

  std::optional<SingularityReport> full;
  if (!options.skip_vertex_enum) full = singularity_report(graph);
  HPolytope h = full ? full->hrep : build_hrep(graph);

  auto& p = r.polytope;
  p.ambient_dim = h.ambient_dim();
  p.row_count = h.row_count();
  for (const auto& row : h.rows()) p.origin_tight_rows += row.bound == 0 ? 1 : 0;
  p.cube_vertex_count = cube_vertex_labellings(graph).size();

  if (!full) {
    r.covolume = build_lattice(graph).covolume();
  } else {
    const VPolytope& v = full->vrep;
    const auto facets = facet_defining_rows(h, v);
    p.affine_dim = v.dimension();
    p.facet_count = facets.size();
    p.vertex_count = v.vertex_count();
    p.max_vertex_denominator = max_vertex_denominator(v);
    if (const auto origin = v.find(QVector(h.ambient_dim()))) {
      std::size_t count = 0;
      for (auto row : v.tight_rows(*origin)) count += std::binary_search(facets.begin(), facets.end(), row) ? 1 : 0;
      p.origin_facet_count = count;
    }
    r.covolume = full->lattice.covolume();

    const DelzantVerdict& d = full->verdict;
    VerdictSummary s;
    s.simple = d.simplicity.simple;
    s.simple_witness = d.simplicity.witness;
    if (!d.simplicity.simple) s.witness_facet_count = d.simplicity.witness_facets;
    s.lattice_polytope = d.lattice_polytope;
    s.lattice_offending = d.lattice_offending;
    s.smooth = d.smooth;
    s.smooth_witness = d.smooth_witness;
    s.smooth_witness_det = d.witness_det;
    s.overall = d.overall;
    r.verdict = std::move(s);
  }

  r.timing_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  std::optional<VPolytope> vrep;
  if (full) vrep = std::move(full->vrep);
  return {std::move(r), std::move(h), std::move(vrep)};
}

json to_json(const AnalysisReport& r) {
  json j;
  j["graph"] = {{"genus", r.graph.genus},
                {"vertices", r.graph.vertices},
                {"edges", r.graph.edges},
                {"loop_free", r.graph.loop_free}};
  const auto& p = r.polytope;
  j["polytope"] = {{"ambient_dim", p.ambient_dim},
                   {"row_count", p.row_count},
                   {"origin_tight_rows", p.origin_tight_rows},
                   {"cube_vertex_count", p.cube_vertex_count},
                   {"affine_dim", optional_json(p.affine_dim)},
                   {"facet_count", optional_json(p.facet_count)},
                   {"vertex_count", optional_json(p.vertex_count)},
                   {"origin_facet_count", optional_json(p.origin_facet_count)},
                   {"max_vertex_denominator",
                    p.max_vertex_denominator ? json(p.max_vertex_denominator->get_str()) : json(nullptr)}};
  j["lattice"] = {{"covolume", to_string(r.covolume)}};
  if (r.verdict) {
    const auto& v = *r.verdict;
    j["verdict"] = {{"simple", v.simple},
                    {"simple_witness", vector_json(v.simple_witness)},
                    {"witness_facet_count", optional_json(v.witness_facet_count)},
                    {"lattice_polytope", v.lattice_polytope},
                    {"lattice_offending", vector_json(v.lattice_offending)},
                    {"smooth", v.smooth},
                    {"smooth_witness", vector_json(v.smooth_witness)},
                    {"smooth_witness_det", v.smooth_witness_det ? json(to_string(*v.smooth_witness_det)) : json(nullptr)},
                    {"overall", to_string(v.overall)}};
  } else {
    j["verdict"] = nullptr;
  }
  j["timing_ms"] = r.timing_ms;
  return j;
}

AnalysisReport report_from_json(const json& j) {
  AnalysisReport r;
  const auto& g = j.at("graph");
  r.graph = {g.at("genus").get<std::size_t>(), g.at("vertices").get<std::size_t>(), g.at("edges").get<std::size_t>(),
             g.at("loop_free").get<bool>()};
  const auto& p = j.at("polytope");
  r.polytope.ambient_dim = p.at("ambient_dim").get<std::size_t>();
  r.polytope.row_count = p.at("row_count").get<std::size_t>();
  r.polytope.origin_tight_rows = p.at("origin_tight_rows").get<std::size_t>();
  r.polytope.cube_vertex_count = p.at("cube_vertex_count").get<std::size_t>();
  r.polytope.affine_dim = optional_from<int>(p.at("affine_dim"));
  r.polytope.facet_count = optional_from<std::size_t>(p.at("facet_count"));
  r.polytope.vertex_count = optional_from<std::size_t>(p.at("vertex_count"));
  r.polytope.origin_facet_count = optional_from<std::size_t>(p.at("origin_facet_count"));
  if (const auto& d = p.at("max_vertex_denominator"); !d.is_null()) {
    r.polytope.max_vertex_denominator = Integer(d.get<std::string>());
  }
  r.covolume = parse_rational(j.at("lattice").at("covolume").get<std::string>());
  if (const auto& v = j.at("verdict"); !v.is_null()) {
    VerdictSummary s;
    s.simple = v.at("simple").get<bool>();
    s.simple_witness = vector_from(v.at("simple_witness"));
    s.witness_facet_count = optional_from<std::size_t>(v.at("witness_facet_count"));
    s.lattice_polytope = v.at("lattice_polytope").get<bool>();
    s.lattice_offending = vector_from(v.at("lattice_offending"));
    s.smooth = v.at("smooth").get<bool>();
    s.smooth_witness = vector_from(v.at("smooth_witness"));
    s.smooth_witness_det = rational_from(v.at("smooth_witness_det"));
    s.overall = overall_from(v.at("overall").get<std::string>());
    r.verdict = std::move(s);
  }
  r.timing_ms = j.at("timing_ms").get<std::int64_t>();
  return r;
}

std::string format_text(const AnalysisReport& r) {
  std::ostringstream out;
  const auto& p = r.polytope;
  out << "graph     genus " << r.graph.genus << ", " << r.graph.vertices << " vertices, " << r.graph.edges
      << " edges, " << (r.graph.loop_free ? "loop-free" : "has loops") << '\n';
  out << "polytope  ambient dim " << p.ambient_dim << ", " << p.row_count << " rows, " << p.origin_tight_rows
      << " through the origin\n";
  out << "          cube vertices " << p.cube_vertex_count << '\n';
  if (p.vertex_count) {
    out << "          affine dim " << *p.affine_dim << ", " << *p.facet_count << " facets, " << *p.vertex_count
        << " vertices\n";
    out << "          origin facets " << (p.origin_facet_count ? std::to_string(*p.origin_facet_count) : "-")
        << ", max vertex denominator " << p.max_vertex_denominator->get_str() << '\n';
  } else {
    out << "          vertex enumeration skipped\n";
  }
  out << "lattice   covolume " << to_string(r.covolume) << '\n';
  if (r.verdict) {
    const auto& v = *r.verdict;
    out << "verdict   simple: " << yes_no(v.simple);
    if (v.simple_witness) {
      out << " (witness " << format_vector(*v.simple_witness) << " on " << *v.witness_facet_count << " facets)";
    }
    out << "\n          lattice polytope: " << yes_no(v.lattice_polytope);
    if (v.lattice_offending) out << " (offending vertex " << format_vector(*v.lattice_offending) << ")";
    out << "\n          smooth: " << yes_no(v.smooth);
    if (v.smooth_witness) out << " (at " << format_vector(*v.smooth_witness) << ")";
    if (v.smooth_witness_det) out << " edge determinant " << to_string(*v.smooth_witness_det);
    out << "\n          overall: " << to_string(v.overall) << '\n';
  }
  out << "time      " << r.timing_ms << " ms\n";
  return out.str();
}

BatchChecks batch_checks(const AnalysisReport& r) {
  const std::size_t g = r.graph.genus;
  BatchChecks c{r.polytope.cube_vertex_count == (std::size_t{1} << g), std::nullopt};
  if (g >= 3) {
    const std::size_t count = r.polytope.origin_facet_count.value_or(r.polytope.origin_tight_rows);
    c.origin_facets_match = count == 6 * g - 6;
  }
  return c;
}

}  // namespace trinion
