#pragma once

// H- and V-representations of rational polytopes, and the moment polytope
// P(Γ) cut out by one tetrahedron system per trinion.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "trinion/exactmath.hpp"
#include "trinion/graph.hpp"

namespace trinion {

class NotFullDimensional : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class UnboundedPolyhedron : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// normal · x <= bound.
struct Inequality {
  ZVector normal;
  Integer bound;

  friend bool operator==(const Inequality&, const Inequality&) = default;
};

/// Which of the four tetrahedron inequalities of a trinion a row came from.
/// For a triple (x1, x2, x3): Sum is x1+x2+x3 <= 2, and NegFirst/NegSecond/
/// NegThird are the triangle inequalities with that coordinate negated (>= 0).
enum class RowKind { Sum, NegFirst, NegSecond, NegThird };

struct RowSource {
  std::size_t vertex;
  RowKind kind;

  friend bool operator==(const RowSource&, const RowSource&) = default;
};

/// A system of inequalities in R^n. Rows are stored gcd-reduced over
/// (normal, bound) and exact duplicates are merged, merging provenance too.
class HPolytope {
 public:
  explicit HPolytope(std::size_t ambient_dim) : dim_(ambient_dim) {}
  HPolytope(std::size_t ambient_dim, const std::vector<Inequality>& rows);

  /// Adds a row after normalization; returns its index (an existing index
  /// when the row is a duplicate). Throws std::invalid_argument on a length
  /// mismatch.
  std::size_t add_row(const Inequality& row, std::optional<RowSource> source = std::nullopt);

  std::size_t ambient_dim() const { return dim_; }
  std::size_t row_count() const { return rows_.size(); }
  const std::vector<Inequality>& rows() const { return rows_; }
  const Inequality& row(std::size_t i) const { return rows_[i]; }
  const std::vector<RowSource>& sources(std::size_t i) const { return sources_[i]; }

 private:
  std::size_t dim_;
  std::vector<Inequality> rows_;
  std::vector<std::vector<RowSource>> sources_;
};

/// Vertices (sorted lexicographically, no duplicates) with the H-rows each one
/// satisfies with equality.
class VPolytope {
 public:
  /// Sorts, deduplicates, and computes incidence against h.
  VPolytope(const HPolytope& h, std::vector<QVector> points);

  std::size_t ambient_dim() const { return dim_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  const std::vector<QVector>& vertices() const { return vertices_; }
  const QVector& vertex(std::size_t i) const { return vertices_[i]; }
  /// Ascending row indices tight at vertex i.
  const std::vector<std::size_t>& tight_rows(std::size_t i) const { return tight_[i]; }
  /// Affine dimension of the vertex set; -1 when empty.
  int dimension() const { return affine_dim_; }

  /// Vertex index, or nullopt.
  std::optional<std::size_t> find(const QVector& point) const;

 private:
  std::size_t dim_;
  std::vector<QVector> vertices_;
  std::vector<std::vector<std::size_t>> tight_;
  int affine_dim_;
};

/// Affine dimension of a finite point set (-1 for the empty set).
int affine_dimension(const std::vector<QVector>& points);

HPolytope build_hrep(const TrivalentGraph& graph);

/// Exact vertex enumeration by double description on the homogenized cone.
/// Empty input gives no vertices and dimension -1; throws UnboundedPolyhedron
/// when the polyhedron is nonempty and unbounded.
VPolytope enumerate_vertices(const HPolytope& h);

/// Reference oracle: solves every n-row subset and keeps feasible unique
/// solutions. Exponential; meant for n <= 9.
VPolytope brute_force_vertices(const HPolytope& h);

int dimension(const VPolytope& v);

/// Row indices whose tight vertices span an (n-1)-dimensional affine space.
/// Throws NotFullDimensional.
std::vector<std::size_t> facet_defining_rows(const HPolytope& h, const VPolytope& v);

struct Simplicity {
  bool simple;
  std::optional<QVector> witness;  // first vertex (lex order) not on exactly n facets
  std::size_t witness_facets = 0;
};

/// Throws NotFullDimensional.
Simplicity is_simple(const HPolytope& h, const VPolytope& v);
Simplicity is_simple(const HPolytope& h, const VPolytope& v, const std::vector<std::size_t>& facets);

/// Throws std::invalid_argument on a length mismatch.
bool contains(const HPolytope& h, const QVector& x);

/// 0/1 edge labels whose every trinion triple (loops doubled) is a vertex of
/// the tetrahedron, i.e. all zero or exactly one zero.
using EdgeLabelling = std::vector<std::uint8_t>;

std::vector<EdgeLabelling> cube_vertex_labellings(const TrivalentGraph& graph);
QVector labelling_point(const EdgeLabelling& labelling);

/// Largest denominator among all vertex coordinates (1 for an empty set).
Integer max_vertex_denominator(const VPolytope& v);

/// cdd-style exact text: "H-representation" rows are `b -a1 ... -an`.
std::string export_hrep(const HPolytope& h);
/// cdd-style exact text: "V-representation" rows are `1 v1 ... vn`.
std::string export_vrep(const VPolytope& v);

}  // namespace trinion
