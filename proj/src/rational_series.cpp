#include "cubesob/rational_series.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace cubesob {

RationalSeries::RationalSeries(std::size_t degree) : coeffs_(degree + 1, mpq_class(0)) {}

RationalSeries::RationalSeries(std::size_t degree, std::vector<mpq_class> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() > degree + 1) {
    throw std::invalid_argument("RationalSeries: more coefficients than degree + 1");
  }
  coeffs_.resize(degree + 1, mpq_class(0));
  for (auto& c : coeffs_) c.canonicalize();
}

RationalSeries RationalSeries::polynomial(std::size_t degree, const std::vector<mpq_class>& coeffs) {
  RationalSeries s(degree);
  for (std::size_t i = 0; i < coeffs.size() && i <= degree; ++i) s.coeffs_[i] = coeffs[i];
  return s;
}

const mpq_class& RationalSeries::coeff(std::size_t power) const {
  if (power >= coeffs_.size()) {
    throw std::out_of_range("RationalSeries: power " + std::to_string(power) +
                            " past truncation degree " + std::to_string(degree()));
  }
  return coeffs_[power];
}

void RationalSeries::set_coeff(std::size_t power, const mpq_class& value) {
  if (power >= coeffs_.size()) {
    throw std::out_of_range("RationalSeries: power " + std::to_string(power) +
                            " past truncation degree " + std::to_string(degree()));
  }
  coeffs_[power] = value;
}

RationalSeries RationalSeries::truncated(std::size_t degree) const {
  if (degree > this->degree()) {
    throw std::invalid_argument("RationalSeries: cannot extend truncation degree");
  }
  return RationalSeries(degree, std::vector<mpq_class>(coeffs_.begin(), coeffs_.begin() + degree + 1));
}

RationalSeries RationalSeries::shifted(std::size_t k) const {
  RationalSeries out(degree());
  for (std::size_t i = 0; i + k <= degree(); ++i) out.coeffs_[i + k] = coeffs_[i];
  return out;
}

RationalSeries& RationalSeries::operator+=(const RationalSeries& other) {
  const std::size_t d = std::min(degree(), other.degree());
  coeffs_.resize(d + 1);
  for (std::size_t i = 0; i <= d; ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

RationalSeries& RationalSeries::operator-=(const RationalSeries& other) {
  const std::size_t d = std::min(degree(), other.degree());
  coeffs_.resize(d + 1);
  for (std::size_t i = 0; i <= d; ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

RationalSeries& RationalSeries::operator*=(const mpq_class& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

RationalSeries operator*(const RationalSeries& a, const RationalSeries& b) {
  const std::size_t d = std::min(a.degree(), b.degree());
  RationalSeries out(d);
  for (std::size_t i = 0; i <= d; ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; i + j <= d; ++j) {
      if (sgn(b.coeffs_[j]) == 0) continue;
      out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return out;
}

}  // namespace cubesob
