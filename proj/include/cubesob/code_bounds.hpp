#pragma once

namespace cubesob {

/// Upper bound on A(n, d) from Hamming balls. Sizes are natural logs.
struct CodeBoundResult {
  int n = 0;
  int d = 0;
  int critical_radius = 0;
  double log_ball_size = 0.0;
  /// log n + log |B_r|
  double log_bound = 0.0;
  double rate_bound_bits = 0.0;
  /// n/2 - sqrt(d (n - d))
  double reference_radius = 0.0;
};

/// Smallest r with lambda*(B_r) <= 2(2d + 1). Requires 1 <= d <= n/2.
int critical_radius(int n, int d);

CodeBoundResult code_size_bound(int n, int d);

/// H(1/2 - sqrt(delta (1 - delta))) in bits, 0 < delta < 1/2.
double asymptotic_rate_bound(double delta);

}  // namespace cubesob
