#include "cubesob/special_functions.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>

namespace cubesob {
namespace {

[[noreturn]] void domain_fail(const char* fn, double v, const char* range) {
  std::ostringstream os;
  os.precision(17);
  os << fn << ": argument " << v << " outside " << range;
  throw std::domain_error(os.str());
}

void require_in(const char* fn, double v, double lo, double hi, const char* range) {
  if (!(v >= lo && v <= hi)) domain_fail(fn, v, range);
}

// Inverts a strictly increasing function on [lo, hi] by bisection. The
// bracket is halved until it collapses in floating point or the iteration
// budget runs out; the residual |f(x) - y| must then be within abs_tol.
template <typename F>
double bisect_increasing(F&& f, double y, double lo, double hi, const Tolerance& tol,
                         const char* fn) {
  double best = 0.5 * (lo + hi);
  for (int it = 0; it < tol.max_bisect_iters; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double v = f(mid);
    best = mid;
    if (v == y) break;
    if (v < y) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double lo_res = std::abs(f(lo) - y);
  const double hi_res = std::abs(f(hi) - y);
  const double best_res = std::abs(f(best) - y);
  double x = best;
  double res = best_res;
  if (lo_res < res) {
    x = lo;
    res = lo_res;
  }
  if (hi_res < res) {
    x = hi;
    res = hi_res;
  }
  if (res > tol.abs_tol) {
    std::ostringstream os;
    os.precision(17);
    os << fn << ": bisection residual " << res << " exceeds tolerance " << tol.abs_tol;
    throw std::runtime_error(os.str());
  }
  return x;
}
}  // namespace

void Tolerance::validate() const {
  if (!(abs_tol > 0.0)) throw std::invalid_argument("Tolerance: abs_tol must be positive");
  if (max_bisect_iters < 1) throw std::invalid_argument("Tolerance: max_bisect_iters must be >= 1");
}

double xlogx(double x) { return x == 0.0 ? 0.0 : x * std::log(x); }

double entropy_H(double x) {
  require_in("entropy_H", x, 0.0, 1.0, "[0, 1]");
  if (x == 0.0 || x == 1.0) return 0.0;
  return -x * std::log(x) - (1.0 - x) * std::log1p(-x);
}

double inv_entropy(double y, const Tolerance& tol) {
  tol.validate();
  require_in("inv_entropy", y, 0.0, kLog2, "[0, log 2]");
  if (y == 0.0) return 0.0;
  if (y == kLog2) return 0.5;
  return bisect_increasing([](double x) { return entropy_H(x); }, y, 0.0, 0.5, tol,
                           "inv_entropy");
}

namespace {

// L1(t) = log((1+t)/(1-t)) and L2(t) = L1(t^2). Near 1 the factor 1 - t^2
// is split as (1-t)(1+t) so nothing cancels; near 0 atanh is accurate.
double l1_of(double t) { return 2.0 * std::atanh(t); }
double l2_of(double t) {
  if (t < 0.5) return 2.0 * std::atanh(t * t);
  return std::log1p(t * t) - std::log1p(-t) - std::log1p(t);
}

}  // namespace

// h(t) = 2t L1(t) - (1 + t^2) L2(t).
double h_of(double t) {
  require_in("h_of", t, 0.0, 1.0, "[0, 1]");
  if (t == 1.0) return 2.0 * kLog2;
  return 2.0 * t * l1_of(t) - (1.0 + t * t) * l2_of(t);
}

double h_prime(double t) {
  require_in("h_prime", t, 0.0, 1.0, "[0, 1]");
  return 2.0 * (xlogx(1.0 + t) - xlogx(1.0 - t) - t * std::log1p(t * t));
}

double h_second(double t) {
  require_in("h_second", t, 0.0, 1.0, "[0, 1]");
  if (t == 1.0) throw std::domain_error("h_second: diverges at t = 1");
  return 4.0 / (1.0 + t * t) - 2.0 * l2_of(t);
}

double psi(double t) {
  require_in("psi", t, 0.0, 1.0, "[0, 1]");
  return h_of(std::sqrt(t));
}

double phi(double y, const Tolerance& tol) {
  tol.validate();
  require_in("phi", y, 0.0, 2.0 * kLog2, "[0, 2 log 2]");
  if (y == 0.0) return 0.0;
  if (y == 2.0 * kLog2) return 1.0;
  return bisect_increasing([](double t) { return psi(t); }, y, 0.0, 1.0, tol, "phi");
}

double xi(double t) {
  require_in("xi", t, 0.0, 1.0, "[0, 1]");
  return psi(t) / (1.0 + t);
}

double alpha(double y, const Tolerance& tol) {
  tol.validate();
  require_in("alpha", y, 0.0, kLog2, "[0, log 2]");
  if (y == 0.0) return 0.0;
  if (y == kLog2) return 1.0;
  return bisect_increasing([](double t) { return xi(t); }, y, 0.0, 1.0, tol, "alpha");
}

double tau(double y, const Tolerance& tol) {
  require_in("tau", y, 0.0, 2.0 * kLog2, "[0, 2 log 2]");
  if (y == 0.0) return 0.5;
  return phi(y, tol) / y;
}

double c_alpha(double t, const Tolerance& tol) {
  require_in("c_alpha", t, 0.0, kLog2, "[0, log 2]");
  if (t == 0.0) return 2.0;
  const double a = alpha(t, tol);
  return 4.0 * a / (t * (1.0 + a));
}

double half_minus_sqrt_product(double x) {
  const double d = 0.5 - x;
  return d * d / (0.5 + std::sqrt(x * (1.0 - x)));
}

double c_explicit(double t, const Tolerance& tol) {
  require_in("c_explicit", t, 0.0, kLog2, "[0, log 2]");
  if (t == 0.0) return 2.0;
  const double x = inv_entropy(kLog2 - t, tol);
  return 4.0 / t * half_minus_sqrt_product(x);
}

double log_sobolev_constant(double rho, const Tolerance& tol) {
  constexpr double kOvershoot = 1e-12;
  if (rho < 0.0 && rho >= -kOvershoot) rho = 0.0;
  if (rho > kLog2 && rho <= kLog2 + kOvershoot) rho = kLog2;
  return c_explicit(rho, tol);
}

}  // namespace cubesob
