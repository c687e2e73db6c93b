#pragma once

// Exact rational linear algebra and integer-lattice primitives.
//
// Every quantity in the library is an exact GMP integer or rational; nothing
// is ever rounded. Matrices are small and dense (dimension <= 3g-3).

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace trinion {

using Integer = mpz_class;
using Rational = mpq_class;
using ZVector = std::vector<Integer>;
using QVector = std::vector<Rational>;

/// Formats as "p/q", or "p" when the value is integral.
std::string to_string(const Rational& value);
/// Inverse of to_string; throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

QVector to_rational(const ZVector& v);
Rational dot(const QVector& a, const QVector& b);
Integer dot(const ZVector& a, const ZVector& b);
Rational dot(const ZVector& a, const QVector& b);

/// Dense row-major rational matrix with positive dimensions.
class QMatrix {
 public:
  QMatrix(std::size_t rows, std::size_t cols);

  static QMatrix identity(std::size_t n);
  static QMatrix from_rows(const std::vector<QVector>& rows);
  static QMatrix from_rows(const std::vector<ZVector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool is_integral() const;

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  QVector row(std::size_t r) const;
  QMatrix transpose() const;

  friend bool operator==(const QMatrix&, const QMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> data_;
};

QMatrix operator*(const QMatrix& a, const QMatrix& b);
QVector operator*(const QMatrix& m, const QVector& v);

/// Throws std::invalid_argument for non-square input.
Rational det(const QMatrix& m);
std::size_t rank(const QMatrix& m);
/// Throws std::invalid_argument if m is singular or non-square.
QMatrix inverse(const QMatrix& m);

struct SolveResult {
  enum class Kind { Unique, NoSolution, NonUnique };
  Kind kind;
  QVector solution;  // populated only for Kind::Unique
};

/// Classifies m·x = b. Throws std::invalid_argument on dimension mismatch.
SolveResult solve(const QMatrix& m, const QVector& b);

/// Row-style Hermite normal form: U·M = H with U unimodular. H keeps the row
/// count of M; its first `rank` rows are nonzero, in echelon form with
/// positive pivots and entries above each pivot reduced into [0, pivot).
struct HermiteForm {
  QMatrix h;
  QMatrix u;
  std::size_t rank;
};

/// Throws std::invalid_argument if any entry is not an integer.
HermiteForm hnf(const QMatrix& m);

/// Divides v by the gcd of its entries. Throws std::invalid_argument on zero.
ZVector primitive(const ZVector& v);
/// Smallest positive integer multiple of v that is an integer vector, then
/// made primitive. Throws std::invalid_argument on zero.
ZVector primitive_direction(const QVector& v);

}  // namespace trinion
