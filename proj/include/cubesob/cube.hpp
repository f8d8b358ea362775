#pragma once

#include "cubesob/lanczos.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace cubesob {

/// Largest dimension for which a full 2^n vector is materialized.
inline constexpr int kMaxMaterializedDimension = 24;

/// Real function on {0,1}^n; values[x] is the value at the vertex with bitmask x.
class CubeFunction {
 public:
  CubeFunction(int n, std::vector<double> values);

  static CubeFunction constant(int n, double c);
  static CubeFunction indicator(int n, std::span<const std::uint32_t> vertices);

  int dimension() const { return n_; }
  std::size_t size() const { return values_.size(); }
  std::span<const double> values() const { return values_; }
  double operator[](std::size_t x) const { return values_[x]; }

  CubeFunction abs() const;
  CubeFunction scaled(double c) const;

  bool is_zero() const;
  double mean() const;
  double mean_abs() const;
  double mean_square() const;

 private:
  int n_;
  std::vector<double> values_;
};

struct MaskSubset {
  int n = 0;
  std::vector<std::uint32_t> vertices;  // sorted, unique
};

/// Hamming ball of radius r around the all-zeros vertex.
struct BallSubset {
  int n = 0;
  int r = 0;
};

/// Subcube with the first t coordinates fixed to 0.
struct SubcubeSubset {
  int n = 0;
  int t = 0;
};

class SubsetSpec {
 public:
  using Variant = std::variant<MaskSubset, BallSubset, SubcubeSubset>;

  /// Rejects out-of-range and duplicate vertices. Order of input is irrelevant.
  static SubsetSpec mask(int n, std::vector<std::uint32_t> vertices);
  static SubsetSpec ball(int n, int r);
  static SubsetSpec subcube(int n, int t);
  static SubsetSpec full(int n) { return subcube(n, 0); }

  int dimension() const;
  const Variant& kind() const { return spec_; }

  /// Exact |A|; throws std::overflow_error when n > 62.
  std::uint64_t cardinality() const;

  /// Sorted vertex list; requires n <= kMaxMaterializedDimension.
  std::vector<std::uint32_t> vertices() const;

  std::string describe() const;

 private:
  explicit SubsetSpec(Variant v) : spec_(std::move(v)) {}
  Variant spec_;
};

/// Reads the text mask format: first line `n=<int>`, then one vertex index
/// per line. Blank lines are ignored; duplicates and out-of-range indices
/// throw std::invalid_argument.
SubsetSpec parse_mask(std::istream& in);
SubsetSpec read_mask_file(const std::string& path);
void write_mask(std::ostream& out, const SubsetSpec& mask);

/// Mask obtained by XOR-ing every vertex with `shift`.
SubsetSpec translated(const SubsetSpec& subset, std::uint32_t shift);

/// True when the vertex set is exactly a subcube (some coordinates fixed).
bool is_subcube(int n, std::span<const std::uint32_t> sorted_vertices);

/// D^2(f) = E_x sum_{y ~ x} (f(x) - f(y))^2.
double d2(const CubeFunction& f);

/// K^2(f) = 1/4 E_x sum_{y ~ x} (f(x) + f(y))^2.
double k2(const CubeFunction& f);

/// Ent(f^2) = E f^2 log f^2 - E f^2 log E f^2. Throws on the zero function.
double entropy_sq(const CubeFunction& f);

/// rho = Ent(f^2) / (n E f^2), in [0, log 2]. Throws on the zero function.
double rho_of(const CubeFunction& f);

/// Cut edges between A and its complement, divided by 2^{n-1}.
double edge_boundary(const SubsetSpec& subset);

/// Natural log of |A|; balls are summed in the log domain so n may be large.
double log_cardinality(const SubsetSpec& subset);

/// log C(n, k) via lgamma.
double log_binomial(int n, int k);

enum class SpectralMethod { dense, iterative, radial };

std::string_view to_string(SpectralMethod m);

struct SolverConfig {
  /// Induced subgraphs up to this many vertices are solved densely.
  std::size_t dense_threshold = 2048;
  LanczosConfig lanczos{};
  bool want_minimizer = true;
};

struct SpectralResult {
  double lambda_star = 0.0;
  double frac_boundary = 0.0;
  std::optional<CubeFunction> minimizer;
  SpectralMethod method = SpectralMethod::dense;
  double residual = 0.0;
  std::uint64_t cardinality = 0;
};

/// Fundamental tone of A: min over f supported in A of D^2(f) / E f^2,
/// evaluated as 2 (n - lambda_max(W_A)) for the adjacency W_A of the
/// induced subgraph. The minimizer (if requested) is the top eigenvector,
/// extended by zero, nonnegative, scaled to E f^2 = |A| / 2^n.
SpectralResult lambda_star(const SubsetSpec& subset, const SolverConfig& config = {});

/// Same, for a sorted vertex list of {0,1}^n.
SpectralResult lambda_star(int n, std::span<const std::uint32_t> sorted_vertices,
                           const SolverConfig& config = {});

/// |d*A| = (|A| / 2^n) lambda*(A).
double frac_boundary(const SubsetSpec& subset, const SolverConfig& config = {});

}  // namespace cubesob
