#include "cubesob/ball_spectra.hpp"
#include "cubesob/code_bounds.hpp"
#include "cubesob/special_functions.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>

using namespace cubesob;

namespace {

double h2(double x) { return -(x * std::log2(x) + (1 - x) * std::log2(1 - x)); }

}  // namespace

TEST_CASE("critical radius is the first ball under the threshold") {
  for (int n : {10, 57, 300}) {
    int prev = -1;
    for (int d = 1; 2 * d <= n; d += (n > 100 ? 13 : 1)) {
      const int r = critical_radius(n, d);
      CHECK(ball_lambda_star(n, r) <= 2.0 * (2 * d + 1));
      if (r > 0) CHECK(ball_lambda_star(n, r - 1) > 2.0 * (2 * d + 1));
      // Larger d loosens the threshold, so the radius can only shrink.
      if (prev >= 0) CHECK(r <= prev);
      prev = r;
    }
  }
  CHECK_THROWS_AS(critical_radius(10, 0), std::domain_error);
  CHECK_THROWS_AS(critical_radius(10, 6), std::domain_error);
}

TEST_CASE("code size bound record") {
  const auto res = code_size_bound(2000, 200);
  CHECK(res.reference_radius == doctest::Approx(400.0));
  CHECK(std::abs(res.critical_radius / 2000.0 - 0.2) <= 0.01);
  CHECK(res.log_bound == doctest::Approx(std::log(2000.0) + res.log_ball_size));
  CHECK(res.rate_bound_bits == doctest::Approx(res.log_bound / (2000 * std::log(2.0))));
  CHECK(std::abs(res.rate_bound_bits - h2(0.2)) <= 0.02);

  const auto far = code_size_bound(2000, 1000);
  CHECK(far.critical_radius <= 5);
  CHECK(far.rate_bound_bits < 0.02);
}

TEST_CASE("asymptotic rate bound") {
  CHECK(asymptotic_rate_bound(0.1) == doctest::Approx(h2(0.2)).epsilon(1e-12));
  CHECK(asymptotic_rate_bound(0.499999) < 1e-6);
  CHECK(asymptotic_rate_bound(1e-9) > 0.999);
  CHECK_THROWS_AS(asymptotic_rate_bound(0.0), std::domain_error);
  CHECK_THROWS_AS(asymptotic_rate_bound(0.5), std::domain_error);
}

TEST_CASE("finite-n rates approach the asymptote from above") {
  double prev_gap = 1.0;
  for (int n : {500, 1000, 2000, 4000}) {
    const double gap = code_size_bound(n, n / 10).rate_bound_bits - asymptotic_rate_bound(0.1);
    CHECK(gap >= -0.02);
    CHECK(std::abs(gap) < prev_gap);
    prev_gap = std::abs(gap);
  }
}

TEST_CASE("d = 1 can exceed the trivial 2^n bound") {
  // log n + log|B_r| is reported as is; for tiny d it loses to |C| <= 2^n.
  const auto res = code_size_bound(10, 1);
  CHECK(res.critical_radius == 4);
  CHECK(res.rate_bound_bits > 1.0);
  CHECK(code_size_bound(2000, 1).rate_bound_bits > 1.0);
}
