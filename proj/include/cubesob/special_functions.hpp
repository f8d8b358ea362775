#pragma once

// Scalar functions behind the modified log-Sobolev constant.
//
//   H(x)      binary entropy in nats
//   psi(t)    Ent(f^2) of the two-point function (1 - sqrt t, 1 + sqrt t)
//   h(t)      psi(t^2)
//   phi       inverse of psi,  [0, 2 log 2] -> [0, 1]
//   xi(t)     psi(t) / (1 + t)
//   alpha     inverse of xi,   [0, log 2] -> [0, 1]
//   tau(y)    phi(y) / y
//   c(t)      4 alpha(t) / (t (1 + alpha(t))), equal to the closed form C(t)
//
// All functions are pure. Domain violations throw std::domain_error.

namespace cubesob {

struct Tolerance {
  double abs_tol = 1e-12;
  int max_bisect_iters = 200;

  void validate() const;
};

inline constexpr double kLog2 = 0.693147180559945309417232121458176568;

/// x log x with the 0 log 0 = 0 convention.
double xlogx(double x);

double entropy_H(double x);

/// Unique x in [0, 1/2] with H(x) = y.
double inv_entropy(double y, const Tolerance& tol = {});

double psi(double t);

double h_of(double t);
double h_prime(double t);
/// Diverges at t = 1; throws std::domain_error there.
double h_second(double t);

double phi(double y, const Tolerance& tol = {});

double xi(double t);

double alpha(double y, const Tolerance& tol = {});

/// tau(0) is the limit phi'(0) = 1/2.
double tau(double y, const Tolerance& tol = {});

/// c(0) = 2 by continuity.
double c_alpha(double t, const Tolerance& tol = {});

/// 4/t (1/2 - sqrt(x (1 - x))), x = H^{-1}(log 2 - t); c(0) = 2.
double c_explicit(double t, const Tolerance& tol = {});

/// The log-Sobolev constant C(rho). Same as c_explicit, but clamps rho that
/// overshoots [0, log 2] by rounding (up to 1e-12).
double log_sobolev_constant(double rho, const Tolerance& tol = {});

/// 1/2 - sqrt(x (1 - x)) evaluated as (1/2 - x)^2 / (1/2 + sqrt(x (1 - x))).
double half_minus_sqrt_product(double x);

}  // namespace cubesob
