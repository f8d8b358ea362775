#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace cubesob {

/// Power series with exact rational coefficients, truncated after x^degree.
///
/// Arithmetic is exact. Binary operations truncate to the smaller of the two
/// operand degrees, so a result never claims coefficients that one of its
/// inputs did not know.
class RationalSeries {
 public:
  explicit RationalSeries(std::size_t degree);
  RationalSeries(std::size_t degree, std::vector<mpq_class> coeffs);

  /// Exact polynomial, carried at truncation degree `degree`.
  static RationalSeries polynomial(std::size_t degree, const std::vector<mpq_class>& coeffs);

  std::size_t degree() const { return coeffs_.size() - 1; }

  /// Coefficient of x^power; zero above the stored degree is not implied,
  /// so asking past the truncation throws std::out_of_range.
  const mpq_class& coeff(std::size_t power) const;
  void set_coeff(std::size_t power, const mpq_class& value);

  const std::vector<mpq_class>& coeffs() const { return coeffs_; }

  RationalSeries truncated(std::size_t degree) const;

  /// Multiplies by x^k (dropping terms that fall past the truncation).
  RationalSeries shifted(std::size_t k) const;

  RationalSeries& operator+=(const RationalSeries& other);
  RationalSeries& operator-=(const RationalSeries& other);
  RationalSeries& operator*=(const mpq_class& scalar);

  friend RationalSeries operator+(RationalSeries a, const RationalSeries& b) { return a += b; }
  friend RationalSeries operator-(RationalSeries a, const RationalSeries& b) { return a -= b; }
  friend RationalSeries operator*(RationalSeries a, const mpq_class& s) { return a *= s; }
  friend RationalSeries operator*(const mpq_class& s, RationalSeries a) { return a *= s; }
  friend RationalSeries operator*(const RationalSeries& a, const RationalSeries& b);

  friend bool operator==(const RationalSeries& a, const RationalSeries& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  std::vector<mpq_class> coeffs_;
};

}  // namespace cubesob
