#include "trinion/lattice_fan.hpp"

#include <algorithm>
#include <iterator>

namespace trinion {

// ---------------------------------------------------------------------------
// Lattice

Lattice::Lattice(std::size_t dim, std::vector<QVector> generators, QMatrix basis)
    : dim_(dim),
      generators_(std::move(generators)),
      basis_(std::move(basis)),
      basis_inverse_(inverse(basis_)),
      covolume_(abs(det(basis_))) {}

Lattice Lattice::from_generators(std::size_t dim, std::vector<QVector> generators) {
  if (dim == 0) throw std::invalid_argument("lattice: dimension must be positive");
  if (generators.size() < dim) throw std::invalid_argument("lattice: generators do not span");
  Integer scale = 1;
  for (const auto& g : generators) {
    if (g.size() != dim) throw std::invalid_argument("lattice: generator has wrong length");
    for (const auto& x : g) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), x.get_den_mpz_t());
  }
  QMatrix scaled(generators.size(), dim);
  for (std::size_t r = 0; r < generators.size(); ++r) {
    for (std::size_t c = 0; c < dim; ++c) scaled(r, c) = generators[r][c] * scale;
  }
  const HermiteForm form = hnf(scaled);
  if (form.rank != dim) throw std::invalid_argument("lattice: generators do not span");
  QMatrix basis(dim, dim);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) basis(r, c) = form.h(r, c) / scale;
  }
  return Lattice(dim, std::move(generators), std::move(basis));
}

Lattice Lattice::standard(std::size_t dim) {
  std::vector<QVector> gens;
  for (std::size_t i = 0; i < dim; ++i) {
    QVector e(dim);
    e[i] = 1;
    gens.push_back(std::move(e));
  }
  return from_generators(dim, std::move(gens));
}

QVector Lattice::coordinates(const QVector& x) const {
  if (x.size() != dim_) throw std::invalid_argument("lattice: dimension mismatch");
  QVector c(dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    for (std::size_t i = 0; i < dim_; ++i) {
      if (x[i] != 0) c[j] += x[i] * basis_inverse_(i, j);
    }
  }
  return c;
}

bool Lattice::contains(const QVector& x) const {
  const QVector c = coordinates(x);
  return std::all_of(c.begin(), c.end(), [](const Rational& q) { return q.get_den() == 1; });
}

Lattice Lattice::dual() const {
  std::vector<QVector> rows;
  for (std::size_t j = 0; j < dim_; ++j) {
    QVector col(dim_);
    for (std::size_t i = 0; i < dim_; ++i) col[i] = basis_inverse_(i, j);
    rows.push_back(std::move(col));
  }
  return from_generators(dim_, std::move(rows));
}

Lattice build_lattice(const TrivalentGraph& graph) {
  const std::size_t n = graph.edge_count();
  std::vector<QVector> gens;
  for (std::size_t i = 0; i < n; ++i) {
    QVector e(n);
    e[i] = 1;
    gens.push_back(std::move(e));
  }
  const Rational half(1, 2);
  for (const auto& t : trinion_triples(graph)) {
    QVector g(n);
    for (auto e : t.edges) g[e] += half;
    gens.push_back(std::move(g));
  }
  return Lattice::from_generators(n, std::move(gens));
}

bool is_lattice_point(const QVector& x, const Lattice& lattice) { return lattice.contains(x); }

LatticePolytopeCheck is_lattice_polytope(const VPolytope& v, const Lattice& lattice) {
  for (const auto& p : v.vertices()) {
    if (!lattice.contains(p)) return {false, p};
  }
  return {true, std::nullopt};
}

// ---------------------------------------------------------------------------
// Fans

Fan normal_fan(const HPolytope& h, const VPolytope& v) {
  const auto facets = facet_defining_rows(h, v);
  Fan fan{h.ambient_dim(), {}, {}};
  for (auto r : facets) {
    ZVector inward = h.row(r).normal;
    for (auto& x : inward) x = -x;
    fan.rays.push_back(primitive(inward));
  }
  for (std::size_t i = 0; i < v.vertex_count(); ++i) {
    std::vector<std::size_t> cone;
    for (std::size_t k = 0; k < facets.size(); ++k) {
      const auto& tight = v.tight_rows(i);
      if (std::binary_search(tight.begin(), tight.end(), facets[k])) cone.push_back(k);
    }
    fan.cones.push_back(std::move(cone));
  }
  return fan;
}

Fan map_fan(const Fan& fan, const QMatrix& m) {
  if (!m.is_square() || m.rows() != fan.dim) throw std::invalid_argument("map_fan: matrix has wrong shape");
  if (!m.is_integral()) throw std::invalid_argument("map_fan: matrix is not integral");
  if (det(m) == 0) throw std::invalid_argument("map_fan: matrix is singular");
  Fan out{fan.dim, {}, fan.cones};
  for (const auto& r : fan.rays) out.rays.push_back(primitive_direction(m * to_rational(r)));
  return out;
}

bool fan_is_smooth(const Fan& fan, const Lattice& lattice) {
  const std::size_t n = fan.dim;
  for (const auto& cone : fan.cones) {
    if (cone.size() != n) return false;
    std::vector<ZVector> gens;
    for (auto k : cone) gens.push_back(primitive_direction(lattice.coordinates(to_rational(fan.rays[k]))));
    if (abs(det(QMatrix::from_rows(gens))) != 1) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Delzant verdict

DelzantVerdict delzant_check(const HPolytope& h, const VPolytope& v, const Lattice& lattice) {
  const auto facets = facet_defining_rows(h, v);
  const std::size_t n = h.ambient_dim();

  DelzantVerdict verdict;
  verdict.simplicity = is_simple(h, v, facets);
  const auto lp = is_lattice_polytope(v, lattice);
  verdict.lattice_polytope = lp.is_lattice_polytope;
  verdict.lattice_offending = lp.offending_vertex;

  if (!verdict.simplicity.simple) {
    verdict.smooth = false;
    verdict.smooth_witness = verdict.simplicity.witness;
    verdict.overall = Overall::Singular;
    return verdict;
  }

  std::vector<std::vector<std::size_t>> vertex_facets(v.vertex_count());
  for (std::size_t i = 0; i < v.vertex_count(); ++i) {
    const auto& tight = v.tight_rows(i);
    std::set_intersection(tight.begin(), tight.end(), facets.begin(), facets.end(),
                          std::back_inserter(vertex_facets[i]));
  }

  const Lattice edge_lattice = lattice.dual();
  verdict.smooth = true;
  for (std::size_t i = 0; i < v.vertex_count(); ++i) {
    std::vector<ZVector> edges;
    for (std::size_t j = 0; j < v.vertex_count(); ++j) {
      if (j == i) continue;
      std::vector<std::size_t> shared;
      std::set_intersection(vertex_facets[i].begin(), vertex_facets[i].end(), vertex_facets[j].begin(),
                            vertex_facets[j].end(), std::back_inserter(shared));
      if (shared.size() + 1 != n) continue;
      QVector dir(n);
      for (std::size_t c = 0; c < n; ++c) dir[c] = v.vertex(j)[c] - v.vertex(i)[c];
      edges.push_back(primitive_direction(edge_lattice.coordinates(dir)));
    }
    if (edges.size() != n) throw std::logic_error("delzant_check: simple vertex without n edges");
    const Rational d = det(QMatrix::from_rows(edges));
    if (abs(d) != 1) {
      verdict.smooth = false;
      verdict.smooth_witness = v.vertex(i);
      verdict.witness_det = d;
      break;
    }
  }
  verdict.overall = verdict.smooth ? Overall::Smooth : Overall::Singular;
  return verdict;
}

SingularityReport singularity_report(const TrivalentGraph& graph) {
  HPolytope h = build_hrep(graph);
  VPolytope v = enumerate_vertices(h);
  Lattice lattice = build_lattice(graph);
  DelzantVerdict verdict = delzant_check(h, v, lattice);
  const bool applies = is_loop_free(graph) && graph.genus() >= 3;
  if (applies && verdict.overall == Overall::Smooth) {
    throw ContradictionError("SMOOTH verdict for a loop-free graph of genus " + std::to_string(graph.genus()) +
                             "; the origin lies on 6g-6 facets");
  }
  return {std::move(h), std::move(v), std::move(lattice), std::move(verdict), applies};
}

}  // namespace trinion
