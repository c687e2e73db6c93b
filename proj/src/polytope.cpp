#include "trinion/polytope.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace trinion {

namespace {

Inequality normalize(const Inequality& row) {
  Integer g = row.bound;
  g = abs(g);
  for (const auto& a : row.normal) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
  if (g == 0 || g == 1) return row;
  Inequality out{ZVector(row.normal.size()), 0};
  for (std::size_t i = 0; i < row.normal.size(); ++i) {
    mpz_divexact(out.normal[i].get_mpz_t(), row.normal[i].get_mpz_t(), g.get_mpz_t());
  }
  mpz_divexact(out.bound.get_mpz_t(), row.bound.get_mpz_t(), g.get_mpz_t());
  return out;
}

bool is_tight(const Inequality& row, const QVector& x) { return dot(row.normal, x) == row.bound; }

}  // namespace

// ---------------------------------------------------------------------------
// HPolytope

HPolytope::HPolytope(std::size_t ambient_dim, const std::vector<Inequality>& rows) : dim_(ambient_dim) {
  for (const auto& r : rows) add_row(r);
}

std::size_t HPolytope::add_row(const Inequality& row, std::optional<RowSource> source) {
  if (row.normal.size() != dim_) throw std::invalid_argument("add_row: normal has wrong length");
  Inequality n = normalize(row);
  std::size_t idx = 0;
  for (; idx < rows_.size(); ++idx) {
    if (rows_[idx] == n) break;
  }
  if (idx == rows_.size()) {
    rows_.push_back(std::move(n));
    sources_.emplace_back();
  }
  if (source) sources_[idx].push_back(*source);
  return idx;
}

HPolytope build_hrep(const TrivalentGraph& graph) {
  const std::size_t n = graph.edge_count();
  HPolytope h(n);
  for (const auto& t : trinion_triples(graph)) {
    // Repeated indices (loops) fold into a single coefficient.
    auto emit = [&](std::array<int, 3> signs, int bound, RowKind kind) {
      Inequality row{ZVector(n), bound};
      for (std::size_t k = 0; k < 3; ++k) row.normal[t.edges[k]] += signs[k];
      h.add_row(row, RowSource{t.vertex, kind});
    };
    emit({1, 1, 1}, 2, RowKind::Sum);
    // x_a + x_b - x_c >= 0 becomes -x_a - x_b + x_c <= 0.
    emit({1, -1, -1}, 0, RowKind::NegFirst);
    emit({-1, 1, -1}, 0, RowKind::NegSecond);
    emit({-1, -1, 1}, 0, RowKind::NegThird);
  }
  return h;
}

bool contains(const HPolytope& h, const QVector& x) {
  if (x.size() != h.ambient_dim()) throw std::invalid_argument("contains: dimension mismatch");
  return std::all_of(h.rows().begin(), h.rows().end(),
                     [&](const Inequality& r) { return dot(r.normal, x) <= r.bound; });
}

// ---------------------------------------------------------------------------
// VPolytope

int affine_dimension(const std::vector<QVector>& points) {
  if (points.empty()) return -1;
  if (points.size() == 1) return 0;
  const std::size_t n = points.front().size();
  QMatrix diff(points.size() - 1, n);
  for (std::size_t i = 1; i < points.size(); ++i) {
    for (std::size_t c = 0; c < n; ++c) diff(i - 1, c) = points[i][c] - points[0][c];
  }
  return static_cast<int>(rank(diff));
}

VPolytope::VPolytope(const HPolytope& h, std::vector<QVector> points)
    : dim_(h.ambient_dim()), vertices_(std::move(points)) {
  for (const auto& p : vertices_) {
    if (p.size() != dim_) throw std::invalid_argument("VPolytope: vertex has wrong length");
  }
  std::sort(vertices_.begin(), vertices_.end());
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
  tight_.resize(vertices_.size());
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    for (std::size_t r = 0; r < h.row_count(); ++r) {
      if (is_tight(h.row(r), vertices_[v])) tight_[v].push_back(r);
    }
  }
  affine_dim_ = affine_dimension(vertices_);
}

std::optional<std::size_t> VPolytope::find(const QVector& point) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), point);
  if (it == vertices_.end() || *it != point) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

int dimension(const VPolytope& v) { return v.dimension(); }

Integer max_vertex_denominator(const VPolytope& v) {
  Integer best = 1;
  for (const auto& p : v.vertices()) {
    for (const auto& x : p) {
      if (x.get_den() > best) best = x.get_den();
    }
  }
  return best;
}

// ---------------------------------------------------------------------------
// Facets and simplicity

std::vector<std::size_t> facet_defining_rows(const HPolytope& h, const VPolytope& v) {
  const auto n = static_cast<int>(h.ambient_dim());
  if (v.dimension() != n) throw NotFullDimensional("polytope is not full-dimensional");
  std::vector<std::vector<QVector>> on_row(h.row_count());
  for (std::size_t i = 0; i < v.vertex_count(); ++i) {
    for (auto r : v.tight_rows(i)) on_row[r].push_back(v.vertex(i));
  }
  std::vector<std::size_t> facets;
  for (std::size_t r = 0; r < h.row_count(); ++r) {
    if (static_cast<int>(on_row[r].size()) >= n && affine_dimension(on_row[r]) == n - 1) facets.push_back(r);
  }
  return facets;
}

Simplicity is_simple(const HPolytope& h, const VPolytope& v) {
  return is_simple(h, v, facet_defining_rows(h, v));
}

Simplicity is_simple(const HPolytope& h, const VPolytope& v, const std::vector<std::size_t>& facets) {
  if (v.dimension() != static_cast<int>(h.ambient_dim())) {
    throw NotFullDimensional("polytope is not full-dimensional");
  }
  for (std::size_t i = 0; i < v.vertex_count(); ++i) {
    const auto& tight = v.tight_rows(i);
    std::size_t count = 0;
    for (auto r : tight) count += std::binary_search(facets.begin(), facets.end(), r) ? 1 : 0;
    if (count != h.ambient_dim()) return {false, v.vertex(i), count};
  }
  return {true, std::nullopt, 0};
}

// ---------------------------------------------------------------------------
// Cube-vertex labellings

std::vector<EdgeLabelling> cube_vertex_labellings(const TrivalentGraph& graph) {
  const auto triples = trinion_triples(graph);
  const std::size_t m = graph.edge_count();
  // A vertex constraint is checked as soon as its largest edge index is set.
  std::vector<std::vector<std::size_t>> closes(m);
  for (std::size_t v = 0; v < triples.size(); ++v) closes[triples[v].edges[2]].push_back(v);

  std::vector<EdgeLabelling> out;
  EdgeLabelling label(m, 0);
  auto admissible = [&](std::size_t v) {
    int zeros = 0;
    for (auto e : triples[v].edges) zeros += label[e] == 0 ? 1 : 0;
    return zeros == 3 || zeros == 1;
  };
  auto recurse = [&](auto&& self, std::size_t e) -> void {
    if (e == m) {
      out.push_back(label);
      return;
    }
    for (std::uint8_t bit : {std::uint8_t{0}, std::uint8_t{1}}) {
      label[e] = bit;
      if (std::all_of(closes[e].begin(), closes[e].end(), admissible)) self(self, e + 1);
    }
    label[e] = 0;
  };
  recurse(recurse, 0);
  return out;
}

QVector labelling_point(const EdgeLabelling& labelling) {
  QVector x;
  x.reserve(labelling.size());
  for (auto bit : labelling) x.emplace_back(static_cast<int>(bit));
  return x;
}

// ---------------------------------------------------------------------------
// Brute-force oracle

VPolytope brute_force_vertices(const HPolytope& h) {
  const std::size_t n = h.ambient_dim();
  const std::size_t m = h.row_count();
  std::vector<QVector> found;
  if (m < n) return VPolytope(h, {});

  std::vector<std::size_t> pick(n);
  for (std::size_t i = 0; i < n; ++i) pick[i] = i;
  QMatrix a(n, n);
  QVector b(n);
  while (true) {
    for (std::size_t i = 0; i < n; ++i) {
      const auto& row = h.row(pick[i]);
      for (std::size_t c = 0; c < n; ++c) a(i, c) = row.normal[c];
      b[i] = row.bound;
    }
    auto sol = solve(a, b);
    if (sol.kind == SolveResult::Kind::Unique && contains(h, sol.solution)) found.push_back(std::move(sol.solution));

    // Next combination in lexicographic order.
    std::size_t i = n;
    while (i > 0 && pick[i - 1] == m - n + (i - 1)) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < n; ++j) pick[j] = pick[j - 1] + 1;
  }
  return VPolytope(h, std::move(found));
}

// ---------------------------------------------------------------------------
// cdd-style export

std::string export_hrep(const HPolytope& h) {
  std::ostringstream out;
  out << "H-representation\nbegin\n" << h.row_count() << ' ' << h.ambient_dim() + 1 << " rational\n";
  for (const auto& r : h.rows()) {
    out << r.bound.get_str();
    for (const auto& a : r.normal) {
      const Integer neg = -a;
      out << ' ' << neg.get_str();
    }
    out << '\n';
  }
  out << "end\n";
  return out.str();
}

std::string export_vrep(const VPolytope& v) {
  std::ostringstream out;
  out << "V-representation\nbegin\n" << v.vertex_count() << ' ' << v.ambient_dim() + 1 << " rational\n";
  for (const auto& p : v.vertices()) {
    out << '1';
    for (const auto& x : p) out << ' ' << to_string(x);
    out << '\n';
  }
  out << "end\n";
  return out.str();
}

}  // namespace trinion
