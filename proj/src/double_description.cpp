// Double description vertex enumeration.
//
// The polytope {x : a·x <= b} is homogenized to the cone
//   C = {(t, x) : t >= 0, b·t - a·x >= 0}
// whose extreme rays with t > 0 are exactly the vertices (scaled by t).
// Constraints are inserted one at a time in row order, starting from all of
// R^{n+1} held as a lineality space. Rays are kept as primitive integer
// vectors together with the set of processed constraints they make tight.

#include <boost/dynamic_bitset.hpp>

#include <algorithm>

#include "trinion/polytope.hpp"

namespace trinion {

namespace {

struct Ray {
  ZVector coords;
  boost::dynamic_bitset<> zeros;
};

// Primitive integer vector along  alpha·x - beta·y.
ZVector combine(const Integer& alpha, const ZVector& x, const Integer& beta, const ZVector& y) {
  ZVector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = alpha * x[i] - beta * y[i];
  return primitive(out);
}

class DoubleDescription {
 public:
  DoubleDescription(std::size_t dim, std::size_t constraint_count) : dim_(dim), constraint_count_(constraint_count) {
    for (std::size_t i = 0; i < dim; ++i) {
      ZVector e(dim);
      e[i] = 1;
      lineality_.push_back(std::move(e));
    }
  }

  void insert(std::size_t k, const ZVector& c) {
    if (shrink_lineality(k, c)) return;

    std::vector<Integer> value(rays_.size());
    std::vector<std::size_t> pos;
    std::vector<std::size_t> neg;
    for (std::size_t i = 0; i < rays_.size(); ++i) {
      value[i] = dot(c, rays_[i].coords);
      if (value[i] > 0) pos.push_back(i);
      if (value[i] < 0) neg.push_back(i);
    }
    if (neg.empty()) {
      for (std::size_t i = 0; i < rays_.size(); ++i) {
        if (value[i] == 0) rays_[i].zeros.set(k);
      }
      return;
    }

    // Two adjacent rays share at least (pointed dimension - 2) tight constraints.
    const long pointed_dim = static_cast<long>(dim_) - static_cast<long>(lineality_.size());
    const std::size_t needed = pointed_dim > 2 ? static_cast<std::size_t>(pointed_dim - 2) : 0;

    std::vector<Ray> next;
    next.reserve(rays_.size());
    for (std::size_t p : pos) {
      for (std::size_t q : neg) {
        boost::dynamic_bitset<> common = rays_[p].zeros & rays_[q].zeros;
        if (common.count() < needed || !adjacent(p, q, common)) continue;
        Ray r{combine(value[p], rays_[q].coords, value[q], rays_[p].coords), std::move(common)};
        r.zeros.set(k);
        next.push_back(std::move(r));
      }
    }
    for (std::size_t i = 0; i < rays_.size(); ++i) {
      if (value[i] < 0) continue;
      if (value[i] == 0) rays_[i].zeros.set(k);
      next.push_back(std::move(rays_[i]));
    }
    rays_ = std::move(next);
  }

  const std::vector<Ray>& rays() const { return rays_; }
  bool has_lineality() const { return !lineality_.empty(); }

 private:
  // If some lineality direction is not orthogonal to c, the new halfspace cuts
  // the lineality space: that direction becomes a ray and everything else is
  // projected onto c = 0 along it.
  bool shrink_lineality(std::size_t k, const ZVector& c) {
    auto it = std::find_if(lineality_.begin(), lineality_.end(), [&](const ZVector& l) { return dot(c, l) != 0; });
    if (it == lineality_.end()) return false;
    ZVector pivot = std::move(*it);
    lineality_.erase(it);
    Integer cp = dot(c, pivot);
    if (cp < 0) {
      for (auto& x : pivot) x = -x;
      cp = -cp;
    }
    for (auto& l : lineality_) {
      const Integer cl = dot(c, l);
      if (cl != 0) l = combine(cp, l, cl, pivot);
    }
    for (auto& r : rays_) {
      const Integer cr = dot(c, r.coords);
      if (cr != 0) r.coords = combine(cp, r.coords, cr, pivot);
      r.zeros.set(k);
    }
    Ray fresh{std::move(pivot), boost::dynamic_bitset<>(constraint_count_)};
    for (std::size_t j = 0; j < k; ++j) fresh.zeros.set(j);
    rays_.push_back(std::move(fresh));
    return true;
  }

  // Combinatorial test: no third ray is tight on everything p and q share.
  bool adjacent(std::size_t p, std::size_t q, const boost::dynamic_bitset<>& common) const {
    for (std::size_t r = 0; r < rays_.size(); ++r) {
      if (r != p && r != q && common.is_subset_of(rays_[r].zeros)) return false;
    }
    return true;
  }

  std::size_t dim_;
  std::size_t constraint_count_;
  std::vector<ZVector> lineality_;
  std::vector<Ray> rays_;
};

}  // namespace

VPolytope enumerate_vertices(const HPolytope& h) {
  const std::size_t n = h.ambient_dim();
  const std::size_t total = h.row_count() + 1;
  DoubleDescription dd(n + 1, total);

  ZVector homogenizer(n + 1);
  homogenizer[0] = 1;
  dd.insert(0, homogenizer);
  for (std::size_t r = 0; r < h.row_count(); ++r) {
    const Inequality& row = h.row(r);
    ZVector c(n + 1);
    c[0] = row.bound;
    for (std::size_t i = 0; i < n; ++i) c[i + 1] = -row.normal[i];
    dd.insert(r + 1, c);
  }

  const auto& rays = dd.rays();
  const bool nonempty = std::any_of(rays.begin(), rays.end(), [](const Ray& r) { return r.coords[0] > 0; });
  if (!nonempty) return VPolytope(h, {});
  const bool recedes = std::any_of(rays.begin(), rays.end(), [](const Ray& r) { return r.coords[0] == 0; });
  if (recedes || dd.has_lineality()) throw UnboundedPolyhedron("polyhedron is unbounded");

  std::vector<QVector> points;
  points.reserve(rays.size());
  for (const auto& r : rays) {
    QVector x(n);
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = Rational(r.coords[i + 1], r.coords[0]);
      x[i].canonicalize();
    }
    points.push_back(std::move(x));
  }
  return VPolytope(h, std::move(points));
}

}  // namespace trinion
