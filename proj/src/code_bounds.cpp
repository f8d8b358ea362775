#include "cubesob/code_bounds.hpp"

#include "cubesob/ball_spectra.hpp"
#include "cubesob/cube.hpp"
#include "cubesob/special_functions.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace cubesob {
namespace {

void require_distance(int n, int d) {
  if (n < 2) throw std::domain_error("code bound: n must be >= 2");
  if (d < 1 || 2 * static_cast<long>(d) > n) {
    throw std::domain_error("code bound: need 1 <= d <= n/2, got d = " + std::to_string(d));
  }
}

}  // namespace

int critical_radius(int n, int d) {
  require_distance(n, d);
  const double threshold = 2.0 * (2.0 * d + 1.0);
  // lambda*(B_r) is nonincreasing in r and lambda*(B_n) = 0.
  int lo = 0;
  int hi = n;
  while (lo < hi) {
    const int mid = lo + (hi - lo) / 2;
    if (ball_lambda_star(n, mid) <= threshold) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo;
}

CodeBoundResult code_size_bound(int n, int d) {
  CodeBoundResult res;
  res.n = n;
  res.d = d;
  res.critical_radius = critical_radius(n, d);
  res.log_ball_size = log_cardinality(SubsetSpec::ball(n, res.critical_radius));
  res.log_bound = std::log(static_cast<double>(n)) + res.log_ball_size;
  res.rate_bound_bits = res.log_bound / (n * kLog2);
  res.reference_radius = 0.5 * n - std::sqrt(static_cast<double>(d) * static_cast<double>(n - d));
  return res;
}

double asymptotic_rate_bound(double delta) {
  if (!(delta > 0.0 && delta < 0.5)) throw std::domain_error("asymptotic_rate_bound: delta must lie in (0, 1/2)");
  return entropy_H(0.5 - std::sqrt(delta * (1.0 - delta))) / kLog2;
}

}  // namespace cubesob
