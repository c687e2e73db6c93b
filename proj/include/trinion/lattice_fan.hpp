#pragma once

// The torus lattice Λ(Γ), normal fans, and the Delzant (smoothness) verdict.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "trinion/exactmath.hpp"
#include "trinion/graph.hpp"
#include "trinion/polytope.hpp"

namespace trinion {

/// A full-rank lattice in Q^n given by generators and reduced to a basis.
class Lattice {
 public:
  /// Clears denominators, runs HNF, and rescales. Throws std::invalid_argument
  /// if the generators do not span Q^n.
  static Lattice from_generators(std::size_t dim, std::vector<QVector> generators);
  static Lattice standard(std::size_t dim);

  std::size_t dimension() const { return dim_; }
  const std::vector<QVector>& generators() const { return generators_; }
  /// Basis vectors as rows.
  const QMatrix& basis() const { return basis_; }
  const Rational& covolume() const { return covolume_; }

  /// Coefficients c with sum_i c_i * basis_i = x.
  QVector coordinates(const QVector& x) const;
  bool contains(const QVector& x) const;

  /// {y : y·λ ∈ Z for every λ in this lattice}.
  Lattice dual() const;

 private:
  Lattice(std::size_t dim, std::vector<QVector> generators, QMatrix basis);

  std::size_t dim_;
  std::vector<QVector> generators_;
  QMatrix basis_;
  QMatrix basis_inverse_;
  Rational covolume_;
};

/// Generated by the standard basis and, per trinion (j1, j2, j3), the vector
/// (e_j1 + e_j2 + e_j3) / 2 with loop indices counted twice.
Lattice build_lattice(const TrivalentGraph& graph);

/// Throws std::invalid_argument on a length mismatch.
bool is_lattice_point(const QVector& x, const Lattice& lattice);

struct LatticePolytopeCheck {
  bool is_lattice_polytope;
  std::optional<QVector> offending_vertex;
};

LatticePolytopeCheck is_lattice_polytope(const VPolytope& v, const Lattice& lattice);

/// Rays are primitive integer vectors in standard coordinates; each maximal
/// cone lists the ray indices (ascending) tight at one vertex.
struct Fan {
  std::size_t dim;
  std::vector<ZVector> rays;
  std::vector<std::vector<std::size_t>> cones;
};

/// One inward ray primitive(-a) per facet-defining row a·x <= b, one cone per
/// vertex. Throws NotFullDimensional.
Fan normal_fan(const HPolytope& h, const VPolytope& v);

/// Replaces each ray r by primitive(m·r). Throws std::invalid_argument unless
/// m is a square integer matrix with nonzero determinant of matching size.
Fan map_fan(const Fan& fan, const QMatrix& m);

/// Fan-side smoothness: every maximal cone has exactly n rays and the rays,
/// made primitive in `lattice`, form a basis of it.
bool fan_is_smooth(const Fan& fan, const Lattice& lattice);

enum class Overall { Smooth, Singular };

struct DelzantVerdict {
  Simplicity simplicity;
  bool lattice_polytope = false;
  std::optional<QVector> lattice_offending;
  bool smooth = false;
  std::optional<QVector> smooth_witness;
  std::optional<Rational> witness_det;  // edge-matrix determinant at a simple, non-smooth witness
  Overall overall = Overall::Singular;
};

/// Non-simple polytopes are SINGULAR with the simplicity witness. At each
/// vertex of a simple polytope the n primitive edge directions, measured in
/// the dual lattice of `lattice` (the polytope lives in the dual of the torus
/// Lie algebra), must have determinant ±1. Throws NotFullDimensional.
DelzantVerdict delzant_check(const HPolytope& h, const VPolytope& v, const Lattice& lattice);

/// A SMOOTH verdict on loop-free input of genus >= 3, which the origin-vertex
/// facet count rules out.
class ContradictionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct SingularityReport {
  HPolytope hrep;
  VPolytope vrep;
  Lattice lattice;
  DelzantVerdict verdict;
  bool origin_argument_applies;  // loop-free and genus >= 3
};

/// Full pipeline. Throws ContradictionError if origin_argument_applies but the
/// verdict is SMOOTH.
SingularityReport singularity_report(const TrivalentGraph& graph);

}  // namespace trinion
