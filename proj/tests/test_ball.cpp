#include "cubesob/ball_spectra.hpp"
#include "cubesob/cube.hpp"
#include "cubesob/special_functions.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>

using namespace cubesob;

TEST_CASE("radial solver agrees with the full eigensolve, n <= 12") {
  for (int n = 1; n <= 12; ++n) {
    for (int r = 0; r <= n; ++r) {
      SolverConfig cfg;
      cfg.want_minimizer = false;
      const double full = lambda_star(SubsetSpec::ball(n, r), cfg).lambda_star;
      CHECK(std::abs(ball_lambda_star(n, r) - full) <= 1e-8);
    }
  }
}

TEST_CASE("ball n = 6, r = 2: tridiagonal spectrum and Rayleigh quotient") {
  // The 3x3 form has eigenvalues 0, +-sqrt(6 + 10) = +-4.
  CHECK(ball_lambda_star(6, 2) == doctest::Approx(4.0).epsilon(1e-14));
  const auto p = ball_minimizer(6, 2);
  CHECK(p.mean_square() == doctest::Approx(1.0));
  const auto f = p.to_cube_function();
  CHECK(f.mean_square() == doctest::Approx(1.0));
  CHECK(d2(f) / f.mean_square() == doctest::Approx(4.0).epsilon(1e-12));
  // Top eigenvector (sqrt6, 4, sqrt10)/sqrt32 divided by sqrt(C(6,k)).
  CHECK(p.g[1] / p.g[0] == doctest::Approx(4.0 / std::sqrt(6.0) / std::sqrt(6.0)));
}

TEST_CASE("ball lambda* is nonincreasing in r and hits the endpoints") {
  for (int n : {5, 40, 300}) {
    double prev = ball_lambda_star(n, 0);
    CHECK(prev == 2.0 * n);
    for (int r = 1; r <= n; ++r) {
      const double cur = ball_lambda_star(n, r);
      CHECK(cur <= prev + 1e-9);
      prev = cur;
    }
    CHECK(ball_lambda_star(n, n) == doctest::Approx(0.0).scale(1.0).epsilon(1e-9));
  }
  CHECK_THROWS_AS(ball_lambda_star(5, 6), std::invalid_argument);
  CHECK_THROWS_AS(ball_lambda_star(5, -1), std::invalid_argument);
}

TEST_CASE("Sturm count matches a dense eigensolve") {
  const auto t = TridiagonalForm::for_ball(9, 4);
  CHECK(t.count_below(-100) == 0);
  CHECK(t.count_below(100) == 5);
  const double top = t.largest_eigenvalue();
  CHECK(t.count_below(top - 1e-9) == 4);
  CHECK(t.count_below(top + 1e-9) == 5);
  SolverConfig cfg;
  cfg.want_minimizer = false;
  CHECK(2 * (9 - top) == doctest::Approx(lambda_star(SubsetSpec::ball(9, 4), cfg).lambda_star));
}

TEST_CASE("minimizer profile is positive and matches the full minimizer") {
  for (int n = 3; n <= 10; ++n) {
    for (int r = 1; r < n; ++r) {
      const auto p = ball_minimizer(n, r);
      for (double g : p.g) CHECK(g > 0.0);
      const auto full = lambda_star(SubsetSpec::ball(n, r));
      const auto f = p.to_cube_function();
      // full minimizer is normalized to E f^2 = |B| / 2^n; rescale to compare.
      const double scale = std::sqrt(full.minimizer->mean_square());
      for (std::size_t x = 0; x < f.size(); ++x) {
        CHECK((*full.minimizer)[x] == doctest::Approx(scale * f[x]).epsilon(1e-7));
      }
    }
  }
  CHECK_THROWS_AS(ball_minimizer(3000, 10), std::overflow_error);
}

TEST_CASE("fk_rhs endpoints and domain") {
  // |A| = 1: x = 0, bound 2n (singleton lambda* = 2n, so it is sharp).
  CHECK(fk_rhs(7, 0.0) == doctest::Approx(14.0));
  // |A| = 2^n: x = 1/2, bound 0.
  CHECK(fk_rhs(7, 7 * kLog2) == doctest::Approx(0.0).epsilon(1e-12));
  const double x = inv_entropy((1.0 - 1.0 / 8) * kLog2);
  CHECK(fk_rhs(8, 7 * kLog2) == doctest::Approx(32.0 * (0.5 - std::sqrt(x * (1 - x)))));
  CHECK(fk_rhs(8, 7 * kLog2) < 2.0);
  CHECK_THROWS_AS(fk_rhs(3, -1.0), std::domain_error);
  CHECK_THROWS_AS(fk_rhs(3, 3.0), std::domain_error);
  CHECK_THROWS_AS(fk_rhs(0, 0.0), std::invalid_argument);
}

TEST_CASE("large balls sit near the Faber-Krahn curve") {
  const int n = 2000, r = 220;
  const double lam = ball_lambda_star(n, r) / n;
  const double ref = 4 * (0.5 - std::sqrt(0.11 * 0.89));
  CHECK(lam >= ref - 1e-9);
  CHECK(lam - ref < 0.05);
}
