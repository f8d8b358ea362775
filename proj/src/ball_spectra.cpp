#include "cubesob/ball_spectra.hpp"

#include "cubesob/special_functions.hpp"

#include <Eigen/Eigenvalues>

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace cubesob {
namespace {

void require_ball(int n, int r, const char* fn) {
  if (n < 1) throw std::invalid_argument(std::string(fn) + ": n must be >= 1");
  if (r < 0 || r > n) {
    throw std::invalid_argument(std::string(fn) + ": radius " + std::to_string(r) + " outside [0, " +
                                std::to_string(n) + "]");
  }
}

}  // namespace

double RadialProfile::mean_square() const {
  double s = 0.0;
  for (int k = 0; k <= r; ++k) {
    if (g[k] == 0.0) continue;
    s += std::exp(log_binomial(n, k) - n * kLog2 + 2.0 * std::log(std::abs(g[k])));
  }
  return s;
}

CubeFunction RadialProfile::to_cube_function() const {
  if (n > kMaxMaterializedDimension) {
    throw std::invalid_argument("RadialProfile: n too large to materialize");
  }
  std::vector<double> v(std::size_t{1} << n, 0.0);
  for (std::size_t x = 0; x < v.size(); ++x) {
    const int w = std::popcount(static_cast<std::uint32_t>(x));
    if (w <= r) v[x] = g[w];
  }
  return CubeFunction(n, std::move(v));
}

TridiagonalForm TridiagonalForm::for_ball(int n, int r) {
  require_ball(n, r, "TridiagonalForm");
  TridiagonalForm t;
  t.n = n;
  t.r = r;
  t.off_diagonal.resize(static_cast<std::size_t>(r));
  for (int k = 0; k < r; ++k) {
    t.off_diagonal[k] = std::sqrt(static_cast<double>(n - k) * static_cast<double>(k + 1));
  }
  return t;
}

std::size_t TridiagonalForm::count_below(double x) const {
  std::size_t count = 0;
  double q = -x;
  if (q < 0.0) ++count;
  for (std::size_t i = 1; i < size(); ++i) {
    const double b = off_diagonal[i - 1];
    if (q == 0.0) q = 1e-300;
    q = -x - b * b / q;
    if (q < 0.0) ++count;
  }
  return count;
}

double TridiagonalForm::largest_eigenvalue() const {
  if (r == 0) return 0.0;
  // Gershgorin: every eigenvalue lies in [-n, n].
  double lo = 0.0;
  double hi = static_cast<double>(n) + 1.0;
  const std::size_t all = size();
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (count_below(mid) == all) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double ball_lambda_star(int n, int r) {
  require_ball(n, r, "ball_lambda_star");
  if (r == 0) return 2.0 * n;
  const auto t = TridiagonalForm::for_ball(n, r);
  return std::max(0.0, 2.0 * (n - t.largest_eigenvalue()));
}

RadialProfile ball_minimizer(int n, int r) {
  require_ball(n, r, "ball_minimizer");
  RadialProfile p;
  p.n = n;
  p.r = r;
  p.g.assign(static_cast<std::size_t>(r) + 1, 0.0);

  std::vector<double> u(static_cast<std::size_t>(r) + 1, 1.0);
  if (r > 0) {
    const auto t = TridiagonalForm::for_ball(n, r);
    Eigen::VectorXd diag = Eigen::VectorXd::Zero(r + 1);
    Eigen::VectorXd sub = Eigen::Map<const Eigen::VectorXd>(t.off_diagonal.data(), r);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    const Eigen::VectorXd top = es.eigenvectors().col(r);
    const double sign = top.sum() < 0.0 ? -1.0 : 1.0;
    for (int k = 0; k <= r; ++k) u[k] = sign * top[k];
  }
  double norm2 = 0.0;
  for (double x : u) norm2 += x * x;

  // Symmetrized coordinates u_k = sqrt(C(n,k)) g_k; E f^2 = sum u_k^2 / 2^n.
  for (int k = 0; k <= r; ++k) {
    const double log_scale = 0.5 * (n * kLog2 - log_binomial(n, k) - std::log(norm2));
    p.g[k] = u[k] * std::exp(log_scale);
    if (!std::isfinite(p.g[k])) {
      throw std::overflow_error("ball_minimizer: profile not representable for n = " + std::to_string(n));
    }
    if (!(p.g[k] > 0.0)) {
      throw std::runtime_error("ball_minimizer: top eigenvector has a non-positive entry");
    }
  }
  return p;
}

double fk_rhs(int n, double log_card) {
  if (n < 1) throw std::invalid_argument("fk_rhs: n must be >= 1");
  const double top = n * kLog2;
  if (log_card < 0.0 && log_card > -1e-12) log_card = 0.0;
  if (log_card > top && log_card <= top * (1.0 + 1e-14)) log_card = top;
  if (!(log_card >= 0.0 && log_card <= top)) {
    throw std::domain_error("fk_rhs: log|A| outside [0, n log 2]");
  }
  const double y = std::min(log_card / n, kLog2);
  const double x = inv_entropy(y);
  return 4.0 * n * half_minus_sqrt_product(x);
}

}  // namespace cubesob
