#include "cubesob/lanczos.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace cubesob {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double unit_double(std::uint64_t& state) {
  return static_cast<double>(splitmix64(state) >> 11) * 0x1.0p-53;
}

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm(std::span<const double> a) { return std::sqrt(dot(a, a)); }

void axpy(double alpha, std::span<const double> x, std::span<double> y) {
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

double true_residual(const SymmetricOperator& op, std::span<const double> v, double theta,
                     std::vector<double>& scratch) {
  op(v, scratch);
  double s = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double d = scratch[i] - theta * v[i];
    s += d * d;
  }
  return std::sqrt(s);
}

}  // namespace

TopEigenpair lanczos_top_eigenpair(const SymmetricOperator& op, std::size_t dim,
                                   const LanczosConfig& config) {
  if (dim == 0) throw std::invalid_argument("lanczos_top_eigenpair: empty operator");
  if (config.krylov_dim < 2 || config.max_restarts < 1 || !(config.residual_tol > 0.0)) {
    throw std::invalid_argument("lanczos_top_eigenpair: invalid configuration");
  }

  std::vector<double> start(dim);
  std::uint64_t state = config.seed;
  for (auto& x : start) x = 0.5 + unit_double(state);

  const std::size_t m_max = std::min<std::size_t>(static_cast<std::size_t>(config.krylov_dim), dim);
  std::vector<std::vector<double>> basis;
  basis.reserve(m_max + 1);
  std::vector<double> alpha_diag;
  std::vector<double> beta_off;
  std::vector<double> w(dim);
  std::vector<double> scratch(dim);

  TopEigenpair best;
  best.residual = std::numeric_limits<double>::infinity();
  int matvecs = 0;

  for (int restart = 0; restart < config.max_restarts; ++restart) {
    basis.clear();
    alpha_diag.clear();
    beta_off.clear();
    {
      const double s = norm(start);
      for (auto& x : start) x /= s;
    }
    basis.push_back(start);

    for (std::size_t j = 0; j < m_max; ++j) {
      op(basis[j], w);
      ++matvecs;
      const double a = dot(basis[j], w);
      alpha_diag.push_back(a);
      // Two passes of classical Gram-Schmidt against the whole basis.
      for (int pass = 0; pass < 2; ++pass) {
        for (const auto& q : basis) axpy(-dot(q, w), q, w);
      }
      const double b = norm(w);
      if (j + 1 == m_max || b <= 1e-14 * std::max(1.0, std::abs(a))) break;
      beta_off.push_back(b);
      std::vector<double> next(dim);
      for (std::size_t i = 0; i < dim; ++i) next[i] = w[i] / b;
      basis.push_back(std::move(next));
    }

    const auto k = static_cast<Eigen::Index>(alpha_diag.size());
    Eigen::VectorXd diag = Eigen::Map<const Eigen::VectorXd>(alpha_diag.data(), k);
    Eigen::VectorXd sub(std::max<Eigen::Index>(k - 1, 0));
    for (Eigen::Index i = 0; i + 1 < k; ++i) sub[i] = beta_off[static_cast<std::size_t>(i)];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tri;
    tri.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    const double theta = tri.eigenvalues()[k - 1];
    const Eigen::VectorXd y = tri.eigenvectors().col(k - 1);

    std::vector<double> ritz(dim, 0.0);
    for (Eigen::Index i = 0; i < k; ++i) axpy(y[i], basis[static_cast<std::size_t>(i)], ritz);
    const double s = norm(ritz);
    for (auto& x : ritz) x /= s;

    const double res = true_residual(op, ritz, theta, scratch);
    ++matvecs;
    if (res < best.residual) {
      best.value = theta;
      best.vector = ritz;
      best.residual = res;
    }
    if (res <= config.residual_tol) {
      best.matvecs = matvecs;
      return best;
    }
    start = std::move(ritz);
  }

  std::ostringstream os;
  os.precision(6);
  os << "lanczos_top_eigenpair: no convergence after " << config.max_restarts
     << " restarts (best residual " << best.residual << ", tolerance " << config.residual_tol << ")";
  throw NonConvergenceError(os.str(), best.residual);
}

}  // namespace cubesob
