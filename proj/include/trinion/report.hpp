#pragma once

// Analysis reports: one value per run, rendered either as text or as exact
// JSON (fractions are "p/q" strings, never floats).

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"

#include "trinion/lattice_fan.hpp"

namespace trinion {

struct AnalysisOptions {
  bool skip_vertex_enum = false;
};

struct GraphSummary {
  std::size_t genus = 0;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  bool loop_free = false;

  friend bool operator==(const GraphSummary&, const GraphSummary&) = default;
};

/// Fields needing vertex enumeration are empty under skip_vertex_enum.
struct PolytopeSummary {
  std::size_t ambient_dim = 0;
  std::size_t row_count = 0;
  std::size_t origin_tight_rows = 0;  // rows with bound 0, i.e. through the origin
  std::size_t cube_vertex_count = 0;
  std::optional<int> affine_dim;
  std::optional<std::size_t> facet_count;
  std::optional<std::size_t> vertex_count;
  std::optional<std::size_t> origin_facet_count;
  std::optional<Integer> max_vertex_denominator;

  friend bool operator==(const PolytopeSummary&, const PolytopeSummary&) = default;
};

struct VerdictSummary {
  bool simple = false;
  std::optional<QVector> simple_witness;
  std::optional<std::size_t> witness_facet_count;
  bool lattice_polytope = false;
  std::optional<QVector> lattice_offending;
  bool smooth = false;
  std::optional<QVector> smooth_witness;
  std::optional<Rational> smooth_witness_det;
  Overall overall = Overall::Singular;

  friend bool operator==(const VerdictSummary&, const VerdictSummary&) = default;
};

struct AnalysisReport {
  GraphSummary graph;
  PolytopeSummary polytope;
  Rational covolume;
  std::optional<VerdictSummary> verdict;
  std::int64_t timing_ms = 0;

  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

struct Analysis {
  AnalysisReport report;
  HPolytope hrep;
  std::optional<VPolytope> vrep;
};

/// Runs the pipeline. Throws ContradictionError from singularity_report.
Analysis analyze(const TrivalentGraph& graph, const AnalysisOptions& options = {});

nlohmann::ordered_json to_json(const AnalysisReport& report);
/// Throws nlohmann::json::exception or std::invalid_argument on bad input.
AnalysisReport report_from_json(const nlohmann::ordered_json& j);
std::string format_text(const AnalysisReport& report);

std::string format_vector(const QVector& v);
const char* to_string(Overall overall);

/// Lemma checks shown by batch mode for the multi-theta family.
struct BatchChecks {
  bool cube_vertices_match;               // cube_vertex_count == 2^g
  std::optional<bool> origin_facets_match;  // == 6g-6, only for g >= 3
};

BatchChecks batch_checks(const AnalysisReport& report);

}  // namespace trinion
