#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

namespace cubesob {

/// Thrown when an iterative eigensolve exhausts its budget.
class NonConvergenceError : public std::runtime_error {
 public:
  NonConvergenceError(const std::string& what, double best_residual)
      : std::runtime_error(what), best_residual_(best_residual) {}
  double best_residual() const { return best_residual_; }

 private:
  double best_residual_;
};

struct LanczosConfig {
  /// Stop when ||A v - theta v||_2 <= residual_tol * ||v||_2.
  double residual_tol = 1e-10;
  int krylov_dim = 120;
  int max_restarts = 60;
  std::uint64_t seed = 0;
};

struct TopEigenpair {
  double value = 0.0;
  std::vector<double> vector;  // unit 2-norm
  double residual = 0.0;
  int matvecs = 0;
};

/// y = A x for a symmetric operator of the given dimension.
using SymmetricOperator = std::function<void(std::span<const double> x, std::span<double> y)>;

/// Largest eigenvalue of a symmetric operator by explicitly restarted Lanczos
/// with full reorthogonalization. The start vector is drawn from a
/// splitmix64 stream seeded by `config.seed` with entries in [0.5, 1.5), so
/// it overlaps any nonnegative eigenvector.
TopEigenpair lanczos_top_eigenpair(const SymmetricOperator& op, std::size_t dim,
                                   const LanczosConfig& config = {});

/// Deterministic 64-bit mixer used for seeded streams across the library.
std::uint64_t splitmix64(std::uint64_t& state);

/// Uniform double in [0, 1) from the top 53 bits of a splitmix64 draw.
double unit_double(std::uint64_t& state);

}  // namespace cubesob
