#include "cubesob/special_functions.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>

using namespace cubesob;

namespace {

// Ent(f^2) for f = (1 - s, 1 + s) under the uniform measure, straight from
// the definition in long double.
long double two_point_entropy(long double s) {
  auto xl = [](long double v) { return v == 0.0L ? 0.0L : v * std::log(v); };
  const long double a = (1.0L - s) * (1.0L - s);
  const long double b = (1.0L + s) * (1.0L + s);
  const long double m = 0.5L * (a + b);
  return 0.5L * (xl(a) + xl(b)) - xl(m);
}

long double binary_entropy(long double x) {
  return -x * std::log(x) - (1.0L - x) * std::log(1.0L - x);
}

}  // namespace

TEST_CASE("entropy_H against the direct formula") {
  for (double x : {1e-6, 0.01, 0.11, 0.25, 0.4, 0.5, 0.77}) {
    CHECK(entropy_H(x) == doctest::Approx(static_cast<double>(binary_entropy(x))).epsilon(1e-14));
  }
  CHECK(entropy_H(0.0) == 0.0);
  CHECK(entropy_H(1.0) == 0.0);
  CHECK(entropy_H(0.5) == doctest::Approx(kLog2).epsilon(1e-15));
  CHECK_THROWS_AS(entropy_H(-0.1), std::domain_error);
  CHECK_THROWS_AS(entropy_H(1.5), std::domain_error);
}

TEST_CASE("inv_entropy inverts H on [0, 1/2]") {
  for (double x : {1e-8, 1e-4, 0.03, 0.11, 0.2, 0.37, 0.499}) {
    CHECK(inv_entropy(entropy_H(x)) == doctest::Approx(x).epsilon(1e-9));
  }
  CHECK(inv_entropy(0.0) == 0.0);
  CHECK(inv_entropy(kLog2) == 0.5);
  CHECK_THROWS_AS(inv_entropy(0.7), std::domain_error);
}

TEST_CASE("h and psi match the two-point entropy") {
  for (double s : {0.0, 1e-4, 0.05, 0.3, 0.5, 0.8, 0.95, 0.999999, 1.0}) {
    const double oracle = static_cast<double>(two_point_entropy(s));
    CHECK(h_of(s) == doctest::Approx(oracle).epsilon(1e-12));
    CHECK(psi(s * s) == doctest::Approx(oracle).epsilon(1e-12));
  }
  CHECK(h_of(1.0) == doctest::Approx(2.0 * kLog2).epsilon(1e-15));
  // h(t) = 2t^2 - 2t^4/3 + O(t^6) near 0.
  CHECK(h_of(1e-3) == doctest::Approx(2e-6 - 2e-12 / 3).epsilon(1e-12));
}

TEST_CASE("h' and h'' agree with central differences") {
  const long double step = 1e-5L;
  for (double t : {0.1, 0.4, 0.7, 0.9}) {
    const long double dh = (two_point_entropy(t + step) - two_point_entropy(t - step)) / (2 * step);
    CHECK(h_prime(t) == doctest::Approx(static_cast<double>(dh)).epsilon(1e-7));
    const double d2h = (h_prime(t + 1e-6) - h_prime(t - 1e-6)) / 2e-6;
    CHECK(h_second(t) == doctest::Approx(d2h).epsilon(1e-6));
  }
  CHECK(h_prime(0.0) == 0.0);
  CHECK(h_second(0.0) == doctest::Approx(4.0));
  CHECK_THROWS_AS(h_second(1.0), std::domain_error);
}

TEST_CASE("phi and alpha invert psi and xi") {
  for (double t : {1e-6, 0.01, 0.2, 0.5, 0.75, 0.99}) {
    CHECK(phi(psi(t)) == doctest::Approx(t).epsilon(1e-8));
    CHECK(alpha(xi(t)) == doctest::Approx(t).epsilon(1e-8));
  }
  CHECK(phi(0.0) == 0.0);
  CHECK(phi(2.0 * kLog2) == 1.0);
  CHECK(alpha(kLog2) == 1.0);
  CHECK(xi(1.0) == doctest::Approx(kLog2));
  CHECK_THROWS_AS(phi(-1e-3), std::domain_error);
  CHECK_THROWS_AS(phi(2.0), std::domain_error);
  CHECK_THROWS_AS(alpha(0.8), std::domain_error);
}

TEST_CASE("tau limit and values") {
  CHECK(tau(0.0) == 0.5);
  // psi(t) = 2t + O(t^2), so phi(y) / y -> 1/2.
  CHECK(tau(1e-8) == doctest::Approx(0.5).epsilon(1e-6));
  CHECK(tau(2.0 * kLog2) == doctest::Approx(1.0 / (2.0 * kLog2)));
}

TEST_CASE("C(rho): endpoints and the two representations") {
  CHECK(c_alpha(0.0) == 2.0);
  CHECK(c_explicit(0.0) == 2.0);
  CHECK(c_explicit(kLog2) == doctest::Approx(2.0 / kLog2).epsilon(1e-12));
  CHECK(c_alpha(kLog2) == doctest::Approx(2.0 / kLog2).epsilon(1e-12));
  for (int i = 1; i <= 200; ++i) {
    const double t = kLog2 * i / 200.0;
    CHECK(std::abs(c_alpha(t) - c_explicit(t)) <= 1e-9);
  }
  // Small rho: both sides tend to 2.
  CHECK(c_explicit(1e-7) == doctest::Approx(2.0).epsilon(1e-3));
  CHECK(std::abs(c_alpha(7e-5) - c_explicit(7e-5)) <= 1e-9);
  CHECK_THROWS_AS(c_explicit(1.0), std::domain_error);
  CHECK_THROWS_AS(c_alpha(-0.5), std::domain_error);
}

TEST_CASE("log_sobolev_constant clamps rounding overshoot only") {
  CHECK(log_sobolev_constant(kLog2 + 1e-13) == doctest::Approx(2.0 / kLog2));
  CHECK(log_sobolev_constant(-1e-13) == 2.0);
  CHECK_THROWS_AS(log_sobolev_constant(kLog2 + 1e-6), std::domain_error);
}

TEST_CASE("half_minus_sqrt_product agrees with the naive form away from 1/2") {
  for (double x : {0.0, 0.05, 0.2, 0.35}) {
    CHECK(half_minus_sqrt_product(x) == doctest::Approx(0.5 - std::sqrt(x * (1 - x))).epsilon(1e-13));
  }
  CHECK(half_minus_sqrt_product(0.5) == 0.0);
  CHECK(half_minus_sqrt_product(0.5 - 1e-9) > 0.0);
}

TEST_CASE("Tolerance validation") {
  Tolerance bad;
  bad.abs_tol = 0.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  CHECK_THROWS_AS(phi(0.3, bad), std::invalid_argument);
  Tolerance tight;
  tight.max_bisect_iters = 3;
  CHECK_THROWS_AS(phi(0.3, tight), std::runtime_error);
}
