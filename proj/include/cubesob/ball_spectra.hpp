#pragma once

#include "cubesob/cube.hpp"

#include <vector>

namespace cubesob {

/// Function of Hamming weight only, supported on the ball of radius r.
/// g[k] is the value on weight-k vertices.
struct RadialProfile {
  int n = 0;
  int r = 0;
  std::vector<double> g;

  /// E f^2 with weights C(n, k) / 2^n.
  double mean_square() const;
  /// Expands to a full CubeFunction; requires n <= kMaxMaterializedDimension.
  CubeFunction to_cube_function() const;
};

/// Symmetric tridiagonal form of the adjacency acting on radial functions
/// supported on the ball: zero diagonal, off-diagonal sqrt((n-k)(k+1)).
struct TridiagonalForm {
  int n = 0;
  int r = 0;
  std::vector<double> off_diagonal;  // length r

  static TridiagonalForm for_ball(int n, int r);
  std::size_t size() const { return static_cast<std::size_t>(r) + 1; }

  /// Number of eigenvalues strictly below x (Sturm count).
  std::size_t count_below(double x) const;

  /// Largest eigenvalue by Sturm bisection to full double precision.
  double largest_eigenvalue() const;
};

/// lambda*(Ball(n, r)) = 2 (n - lambda_max) of the tridiagonal form.
/// r = 0 returns 2n; r > n throws.
double ball_lambda_star(int n, int r);

/// Top eigenvector mapped back to weight space (component k divided by
/// sqrt(C(n, k))), positive, scaled to E f^2 = 1.
RadialProfile ball_minimizer(int n, int r);

/// Lower bound on lambda*(A) in terms of log|A|:
/// 4n (1/2 - sqrt(x (1 - x))), x = H^{-1}(log|A| / n).
double fk_rhs(int n, double log_cardinality);

}  // namespace cubesob
