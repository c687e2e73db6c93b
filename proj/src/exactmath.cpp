#include "trinion/exactmath.hpp"

#include <stdexcept>
#include <utility>

namespace trinion {

namespace {

// Reduced row echelon form in place; returns the pivot column of each
// nonzero row. Pivot choice: first nonzero entry at the smallest row index.
std::vector<std::size_t> reduce_rows(QMatrix& m, std::size_t pivot_cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivot_cols && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(p, k), m(r, k));
    }
    const Rational inv = 1 / m(r, c);
    for (std::size_t k = c; k < m.cols(); ++k) m(r, k) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Rational f = m(i, c);
      for (std::size_t k = c; k < m.cols(); ++k) m(i, k) -= f * m(r, k);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

void require_integral(const QMatrix& m) {
  if (!m.is_integral()) throw std::invalid_argument("hnf: matrix has non-integer entries");
}

}  // namespace

std::string to_string(const Rational& value) {
  Rational canonical(value);
  canonical.canonicalize();
  return canonical.get_str();
}

Rational parse_rational(std::string_view text) {
  const std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational");
  const auto slash = s.find('/');
  auto valid_int = [](const std::string& part) {
    std::size_t i = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9') return false;
    }
    return true;
  };
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+') {
    throw std::invalid_argument("malformed rational: " + s);
  }
  const Integer d(den);
  if (d == 0) throw std::invalid_argument("zero denominator: " + s);
  Rational r(Integer(num.front() == '+' ? num.substr(1) : num), d);
  r.canonicalize();
  return r;
}

QVector to_rational(const ZVector& v) {
  QVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

Rational dot(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Integer dot(const ZVector& a, const ZVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(const ZVector& a, const QVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0) s += a[i] * b[i];
  }
  return s;
}

// ---------------------------------------------------------------------------
// QMatrix

QMatrix::QMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {
  if (rows == 0 || cols == 0) throw std::invalid_argument("QMatrix: dimensions must be positive");
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_rows(const std::vector<QVector>& rows) {
  if (rows.empty()) throw std::invalid_argument("QMatrix: no rows");
  QMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols()) throw std::invalid_argument("QMatrix: ragged rows");
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

QMatrix QMatrix::from_rows(const std::vector<ZVector>& rows) {
  std::vector<QVector> q;
  q.reserve(rows.size());
  for (const auto& r : rows) q.push_back(to_rational(r));
  return from_rows(q);
}

bool QMatrix::is_integral() const {
  for (const auto& x : data_) {
    if (x.get_den() != 1) return false;
  }
  return true;
}

QVector QMatrix::row(std::size_t r) const {
  return QVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                 data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: dimension mismatch");
  QMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  }
  return out;
}

QVector operator*(const QMatrix& m, const QVector& v) {
  if (m.cols() != v.size()) throw std::invalid_argument("matrix-vector product: dimension mismatch");
  QVector out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t k = 0; k < m.cols(); ++k) out[i] += m(i, k) * v[k];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Elimination-based queries

Rational det(const QMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("det: matrix is not square");
  QMatrix a = m;
  const std::size_t n = a.rows();
  Rational result = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t k = c; k < n; ++k) std::swap(a(p, k), a(c, k));
      result = -result;
    }
    result *= a(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c) == 0) continue;
      const Rational f = a(i, c) / a(c, c);
      for (std::size_t k = c; k < n; ++k) a(i, k) -= f * a(c, k);
    }
  }
  return result;
}

std::size_t rank(const QMatrix& m) {
  QMatrix a = m;
  return reduce_rows(a, a.cols()).size();
}

QMatrix inverse(const QMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse: matrix is not square");
  const std::size_t n = m.rows();
  QMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  if (reduce_rows(aug, n).size() != n) throw std::invalid_argument("inverse: matrix is singular");
  QMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = aug(r, n + c);
  }
  return inv;
}

SolveResult solve(const QMatrix& m, const QVector& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: dimension mismatch");
  QMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  const auto pivots = reduce_rows(aug, m.cols());
  for (std::size_t r = pivots.size(); r < aug.rows(); ++r) {
    if (aug(r, m.cols()) != 0) return {SolveResult::Kind::NoSolution, {}};
  }
  if (pivots.size() < m.cols()) return {SolveResult::Kind::NonUnique, {}};
  QVector x(m.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, m.cols());
  return {SolveResult::Kind::Unique, std::move(x)};
}

// ---------------------------------------------------------------------------
// Integer lattice algorithms

HermiteForm hnf(const QMatrix& m) {
  require_integral(m);
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();

  std::vector<ZVector> h(rows, ZVector(cols));
  std::vector<ZVector> u(rows, ZVector(rows));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) h[r][c] = m(r, c).get_num();
    u[r][r] = 1;
  }

  // row_i -= q * row_j, mirrored on the transform.
  auto sub_row = [&](std::size_t i, std::size_t j, const Integer& q) {
    if (q == 0) return;
    for (std::size_t k = 0; k < cols; ++k) h[i][k] -= q * h[j][k];
    for (std::size_t k = 0; k < rows; ++k) u[i][k] -= q * u[j][k];
  };

  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    bool found = false;
    while (true) {
      // Smallest |entry| among the remaining rows; ties go to the lower index.
      std::size_t p = rows;
      for (std::size_t i = r; i < rows; ++i) {
        if (h[i][c] == 0) continue;
        if (p == rows || abs(h[i][c]) < abs(h[p][c])) p = i;
      }
      if (p == rows) break;
      found = true;
      std::swap(h[p], h[r]);
      std::swap(u[p], u[r]);
      bool remainder = false;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (h[i][c] == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), h[i][c].get_mpz_t(), h[r][c].get_mpz_t());
        sub_row(i, r, q);
        if (h[i][c] != 0) remainder = true;
      }
      if (!remainder) break;
    }
    if (!found) continue;
    if (h[r][c] < 0) {
      for (auto& x : h[r]) x = -x;
      for (auto& x : u[r]) x = -x;
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), h[i][c].get_mpz_t(), h[r][c].get_mpz_t());
      sub_row(i, r, q);
    }
    ++r;
  }

  return {QMatrix::from_rows(h), QMatrix::from_rows(u), r};
}

ZVector primitive(const ZVector& v) {
  Integer g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g == 0) throw std::invalid_argument("primitive: zero vector");
  ZVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) mpz_divexact(out[i].get_mpz_t(), v[i].get_mpz_t(), g.get_mpz_t());
  return out;
}

ZVector primitive_direction(const QVector& v) {
  Integer l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  ZVector scaled(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Rational s = v[i] * l;
    scaled[i] = s.get_num();
  }
  return primitive(scaled);
}

}  // namespace trinion
