#include "cubesob/cube.hpp"

#include "cubesob/special_functions.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace cubesob {
namespace {

void require_dimension(int n, int max_n, const char* what) {
  if (n < 1 || n > max_n) {
    throw std::invalid_argument(std::string(what) + ": dimension " + std::to_string(n) +
                                " outside [1, " + std::to_string(max_n) + "]");
  }
}

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Sum over ordered neighbour pairs of g(f(x), f(y)), divided by 2^n.
template <typename G>
double edge_average(const CubeFunction& f, G&& g) {
  const int n = f.dimension();
  const auto v = f.values();
  double s = 0.0;
  for (std::size_t x = 0; x < v.size(); ++x) {
    for (int i = 0; i < n; ++i) s += g(v[x], v[x ^ (std::size_t{1} << i)]);
  }
  return s / static_cast<double>(v.size());
}

double log_sum_exp(const std::vector<double>& terms) {
  const double m = *std::max_element(terms.begin(), terms.end());
  double s = 0.0;
  for (double t : terms) s += std::exp(t - m);
  return m + std::log(s);
}

std::uint64_t binomial_u64(int n, int k) {
  std::uint64_t c = 1;
  for (int i = 1; i <= k; ++i) c = c * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return c;
}

}  // namespace

// ---------------------------------------------------------------------------
// CubeFunction

CubeFunction::CubeFunction(int n, std::vector<double> values) : n_(n), values_(std::move(values)) {
  require_dimension(n, kMaxMaterializedDimension, "CubeFunction");
  if (values_.size() != (std::size_t{1} << n)) {
    throw std::invalid_argument("CubeFunction: expected " + std::to_string(std::size_t{1} << n) +
                                " values, got " + std::to_string(values_.size()));
  }
  for (double v : values_) {
    if (!std::isfinite(v)) throw std::invalid_argument("CubeFunction: non-finite value");
  }
}

CubeFunction CubeFunction::constant(int n, double c) {
  require_dimension(n, kMaxMaterializedDimension, "CubeFunction");
  return CubeFunction(n, std::vector<double>(std::size_t{1} << n, c));
}

CubeFunction CubeFunction::indicator(int n, std::span<const std::uint32_t> vertices) {
  require_dimension(n, kMaxMaterializedDimension, "CubeFunction");
  std::vector<double> v(std::size_t{1} << n, 0.0);
  for (auto x : vertices) v.at(x) = 1.0;
  return CubeFunction(n, std::move(v));
}

CubeFunction CubeFunction::abs() const {
  std::vector<double> v(values_);
  for (auto& x : v) x = std::abs(x);
  return CubeFunction(n_, std::move(v));
}

CubeFunction CubeFunction::scaled(double c) const {
  std::vector<double> v(values_);
  for (auto& x : v) x *= c;
  return CubeFunction(n_, std::move(v));
}

bool CubeFunction::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](double x) { return x == 0.0; });
}

double CubeFunction::mean() const {
  return std::accumulate(values_.begin(), values_.end(), 0.0) / static_cast<double>(values_.size());
}

double CubeFunction::mean_abs() const {
  double s = 0.0;
  for (double x : values_) s += std::abs(x);
  return s / static_cast<double>(values_.size());
}

double CubeFunction::mean_square() const {
  double s = 0.0;
  for (double x : values_) s += x * x;
  return s / static_cast<double>(values_.size());
}

// ---------------------------------------------------------------------------
// SubsetSpec

SubsetSpec SubsetSpec::mask(int n, std::vector<std::uint32_t> vertices) {
  require_dimension(n, kMaxMaterializedDimension, "SubsetSpec::mask");
  const std::uint64_t limit = std::uint64_t{1} << n;
  std::sort(vertices.begin(), vertices.end());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] >= limit) {
      throw std::invalid_argument("SubsetSpec::mask: vertex " + std::to_string(vertices[i]) +
                                  " outside [0, 2^" + std::to_string(n) + ")");
    }
    if (i > 0 && vertices[i] == vertices[i - 1]) {
      throw std::invalid_argument("SubsetSpec::mask: duplicate vertex " + std::to_string(vertices[i]));
    }
  }
  return SubsetSpec(MaskSubset{n, std::move(vertices)});
}

SubsetSpec SubsetSpec::ball(int n, int r) {
  require_dimension(n, std::numeric_limits<int>::max(), "SubsetSpec::ball");
  if (r < 0 || r > n) {
    throw std::invalid_argument("SubsetSpec::ball: radius " + std::to_string(r) + " outside [0, n]");
  }
  return SubsetSpec(BallSubset{n, r});
}

SubsetSpec SubsetSpec::subcube(int n, int t) {
  require_dimension(n, std::numeric_limits<int>::max(), "SubsetSpec::subcube");
  if (t < 0 || t > n) {
    throw std::invalid_argument("SubsetSpec::subcube: codimension " + std::to_string(t) +
                                " outside [0, n]");
  }
  return SubsetSpec(SubcubeSubset{n, t});
}

int SubsetSpec::dimension() const {
  return std::visit([](const auto& s) { return s.n; }, spec_);
}

std::uint64_t SubsetSpec::cardinality() const {
  if (dimension() > 62) throw std::overflow_error("SubsetSpec::cardinality: n > 62");
  return std::visit(overloaded{
                        [](const MaskSubset& m) { return static_cast<std::uint64_t>(m.vertices.size()); },
                        [](const BallSubset& b) {
                          std::uint64_t c = 0;
                          for (int k = 0; k <= b.r; ++k) c += binomial_u64(b.n, k);
                          return c;
                        },
                        [](const SubcubeSubset& s) { return std::uint64_t{1} << (s.n - s.t); },
                    },
                    spec_);
}

std::vector<std::uint32_t> SubsetSpec::vertices() const {
  require_dimension(dimension(), kMaxMaterializedDimension, "SubsetSpec::vertices");
  return std::visit(overloaded{
                        [](const MaskSubset& m) { return m.vertices; },
                        [](const BallSubset& b) {
                          std::vector<std::uint32_t> out;
                          const std::uint32_t limit = std::uint32_t{1} << b.n;
                          for (std::uint32_t x = 0; x < limit; ++x) {
                            if (std::popcount(x) <= b.r) out.push_back(x);
                          }
                          return out;
                        },
                        [](const SubcubeSubset& s) {
                          // Fixed coordinates are the low t bits.
                          std::vector<std::uint32_t> out;
                          const std::uint32_t count = std::uint32_t{1} << (s.n - s.t);
                          out.reserve(count);
                          for (std::uint32_t y = 0; y < count; ++y) out.push_back(y << s.t);
                          return out;
                        },
                    },
                    spec_);
}

std::string SubsetSpec::describe() const {
  return std::visit(overloaded{
                        [](const MaskSubset& m) {
                          return "Mask(n=" + std::to_string(m.n) + ", |A|=" +
                                 std::to_string(m.vertices.size()) + ")";
                        },
                        [](const BallSubset& b) {
                          return "Ball(n=" + std::to_string(b.n) + ", r=" + std::to_string(b.r) + ")";
                        },
                        [](const SubcubeSubset& s) {
                          return "Subcube(n=" + std::to_string(s.n) + ", t=" + std::to_string(s.t) + ")";
                        },
                    },
                    spec_);
}

SubsetSpec parse_mask(std::istream& in) {
  std::string line;
  int n = -1;
  std::vector<std::uint32_t> vertices;
  std::size_t lineno = 0;
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return std::string();
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
  };
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty()) continue;
    if (n < 0) {
      if (line.rfind("n=", 0) != 0) {
        throw std::invalid_argument("mask: line " + std::to_string(lineno) + ": expected `n=<int>`");
      }
      std::size_t pos = 0;
      const std::string num = line.substr(2);
      try {
        n = std::stoi(num, &pos);
      } catch (const std::exception&) {
        pos = 0;
      }
      if (pos != num.size() || num.empty()) {
        throw std::invalid_argument("mask: line " + std::to_string(lineno) + ": bad dimension");
      }
      require_dimension(n, kMaxMaterializedDimension, "mask");
      continue;
    }
    std::size_t pos = 0;
    unsigned long long v = 0;
    bool ok = line.find_first_not_of("0123456789") == std::string::npos;
    if (ok) {
      try {
        v = std::stoull(line, &pos);
      } catch (const std::exception&) {
        ok = false;
      }
    }
    if (!ok || pos != line.size() || v >= (1ULL << n)) {
      throw std::invalid_argument("mask: line " + std::to_string(lineno) + ": invalid vertex `" + line + "`");
    }
    vertices.push_back(static_cast<std::uint32_t>(v));
  }
  if (n < 0) throw std::invalid_argument("mask: missing `n=<int>` header");
  return SubsetSpec::mask(n, std::move(vertices));
}

SubsetSpec read_mask_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("mask: cannot open " + path);
  return parse_mask(in);
}

void write_mask(std::ostream& out, const SubsetSpec& subset) {
  out << "n=" << subset.dimension() << '\n';
  for (auto v : subset.vertices()) out << v << '\n';
}

SubsetSpec translated(const SubsetSpec& subset, std::uint32_t shift) {
  auto v = subset.vertices();
  if (shift >= (std::uint32_t{1} << subset.dimension())) {
    throw std::invalid_argument("translated: shift outside the cube");
  }
  for (auto& x : v) x ^= shift;
  return SubsetSpec::mask(subset.dimension(), std::move(v));
}

bool is_subcube(int n, std::span<const std::uint32_t> sorted_vertices) {
  if (sorted_vertices.empty()) return false;
  std::uint32_t all_and = ~std::uint32_t{0};
  std::uint32_t all_or = 0;
  for (auto x : sorted_vertices) {
    all_and &= x;
    all_or |= x;
  }
  const std::uint32_t full = n >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1;
  const std::uint32_t free_bits = (all_or & ~all_and) & full;
  return sorted_vertices.size() == (std::size_t{1} << std::popcount(free_bits));
}

// ---------------------------------------------------------------------------
// Functionals

double d2(const CubeFunction& f) {
  return edge_average(f, [](double a, double b) { return (a - b) * (a - b); });
}

double k2(const CubeFunction& f) {
  return 0.25 * edge_average(f, [](double a, double b) { return (a + b) * (a + b); });
}

double entropy_sq(const CubeFunction& f) {
  if (f.is_zero()) throw std::domain_error("entropy_sq: zero function");
  const double m2 = f.mean_square();
  // Ent(f^2) = E f^2 * E[u log u - u + 1] with u = f^2 / E f^2. Each term is
  // pointwise nonnegative, so near-constant f cannot round below zero.
  double acc = 0.0;
  for (double x : f.values()) {
    const double u = x * x / m2;
    acc += std::max(0.0, xlogx(u) - u + 1.0);
  }
  return m2 * acc / static_cast<double>(f.size());
}

double rho_of(const CubeFunction& f) {
  if (f.is_zero()) throw std::domain_error("rho_of: zero function");
  return entropy_sq(f) / (f.dimension() * f.mean_square());
}

double log_binomial(int n, int k) {
  if (k < 0 || k > n) throw std::invalid_argument("log_binomial: k outside [0, n]");
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

double log_cardinality(const SubsetSpec& subset) {
  return std::visit(overloaded{
                        [](const MaskSubset& m) {
                          if (m.vertices.empty()) {
                            throw std::domain_error("log_cardinality: empty mask");
                          }
                          return std::log(static_cast<double>(m.vertices.size()));
                        },
                        [](const BallSubset& b) {
                          if (b.r == b.n) return b.n * kLog2;
                          std::vector<double> terms;
                          terms.reserve(static_cast<std::size_t>(b.r) + 1);
                          for (int k = 0; k <= b.r; ++k) terms.push_back(log_binomial(b.n, k));
                          return log_sum_exp(terms);
                        },
                        [](const SubcubeSubset& s) { return (s.n - s.t) * kLog2; },
                    },
                    subset.kind());
}

double edge_boundary(const SubsetSpec& subset) {
  return std::visit(
      overloaded{
          [](const MaskSubset& m) {
            std::vector<char> in(std::size_t{1} << m.n, 0);
            for (auto x : m.vertices) in[x] = 1;
            std::uint64_t cut = 0;
            for (auto x : m.vertices) {
              for (int i = 0; i < m.n; ++i) cut += in[x ^ (std::uint32_t{1} << i)] ? 0 : 1;
            }
            return static_cast<double>(cut) / std::ldexp(1.0, m.n - 1);
          },
          [](const BallSubset& b) {
            // Every weight-r vertex has n - r neighbours of weight r + 1.
            if (b.r == b.n) return 0.0;
            return std::exp(log_binomial(b.n, b.r) + std::log(static_cast<double>(b.n - b.r)) -
                            (b.n - 1) * kLog2);
          },
          [](const SubcubeSubset& s) {
            // 2^{n-t} vertices, t cut edges each.
            return 2.0 * s.t * std::ldexp(1.0, -s.t);
          },
      },
      subset.kind());
}

// ---------------------------------------------------------------------------
// Fundamental tone

std::string_view to_string(SpectralMethod m) {
  switch (m) {
    case SpectralMethod::dense:
      return "dense";
    case SpectralMethod::iterative:
      return "iterative";
    case SpectralMethod::radial:
      return "radial";
  }
  return "unknown";
}

SpectralResult lambda_star(int n, std::span<const std::uint32_t> vertices, const SolverConfig& config) {
  require_dimension(n, kMaxMaterializedDimension, "lambda_star");
  if (vertices.empty()) throw std::invalid_argument("lambda_star: empty subset");
  const std::size_t m = vertices.size();
  const double cube_size = std::ldexp(1.0, n);

  SpectralResult out;
  out.cardinality = m;

  auto finish = [&](double top, std::span<const double> vec) {
    out.lambda_star = std::max(0.0, 2.0 * (n - top));
    out.frac_boundary = static_cast<double>(m) / cube_size * out.lambda_star;
    if (!config.want_minimizer) return;
    // W_A is entrywise nonnegative, so |v| is a top eigenvector whenever v
    // is; this also settles sign mixing across components of equal tone.
    double norm2 = 0.0;
    for (double x : vec) norm2 += x * x;
    const double scale = std::sqrt(static_cast<double>(m) / norm2);
    std::vector<double> values(std::size_t{1} << n, 0.0);
    for (std::size_t i = 0; i < m; ++i) values[vertices[i]] = scale * std::abs(vec[i]);
    out.minimizer = CubeFunction(n, std::move(values));
  };

  if (m == 1) {
    out.method = SpectralMethod::dense;
    const double one = 1.0;
    finish(0.0, std::span<const double>(&one, 1));
    return out;
  }

  std::vector<std::int32_t> index(std::size_t{1} << n, -1);
  for (std::size_t i = 0; i < m; ++i) {
    if (i > 0 && vertices[i] <= vertices[i - 1]) {
      throw std::invalid_argument("lambda_star: vertices must be sorted and unique");
    }
    index.at(vertices[i]) = static_cast<std::int32_t>(i);
  }

  // CSR adjacency of the induced subgraph.
  std::vector<std::size_t> offsets(m + 1, 0);
  std::vector<std::uint32_t> neighbours;
  neighbours.reserve(m * static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < m; ++i) {
    for (int b = 0; b < n; ++b) {
      const auto j = index[vertices[i] ^ (std::uint32_t{1} << b)];
      if (j >= 0) neighbours.push_back(static_cast<std::uint32_t>(j));
    }
    offsets[i + 1] = neighbours.size();
  }
  auto apply = [&](std::span<const double> x, std::span<double> y) {
    for (std::size_t i = 0; i < m; ++i) {
      double s = 0.0;
      for (std::size_t p = offsets[i]; p < offsets[i + 1]; ++p) s += x[neighbours[p]];
      y[i] = s;
    }
  };

  if (m <= config.dense_threshold) {
    out.method = SpectralMethod::dense;
    Eigen::MatrixXd w = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m));
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t p = offsets[i]; p < offsets[i + 1]; ++p) {
        w(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(neighbours[p])) = 1.0;
      }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(
        w, config.want_minimizer ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw std::runtime_error("lambda_star: dense eigensolve failed");
    const double top = es.eigenvalues()[static_cast<Eigen::Index>(m) - 1];
    if (config.want_minimizer) {
      const Eigen::VectorXd v = es.eigenvectors().col(static_cast<Eigen::Index>(m) - 1);
      std::vector<double> vec(v.data(), v.data() + v.size());
      std::vector<double> wv(m);
      apply(vec, wv);
      double r2 = 0.0;
      for (std::size_t i = 0; i < m; ++i) r2 += (wv[i] - top * vec[i]) * (wv[i] - top * vec[i]);
      out.residual = std::sqrt(r2);
      finish(top, vec);
    } else {
      finish(top, {});
    }
    return out;
  }

  out.method = SpectralMethod::iterative;
  const auto pair = lanczos_top_eigenpair(apply, m, config.lanczos);
  out.residual = pair.residual;
  finish(pair.value, pair.vector);
  return out;
}

SpectralResult lambda_star(const SubsetSpec& subset, const SolverConfig& config) {
  const auto v = subset.vertices();
  return lambda_star(subset.dimension(), v, config);
}

double frac_boundary(const SubsetSpec& subset, const SolverConfig& config) {
  SolverConfig c = config;
  c.want_minimizer = false;
  return lambda_star(subset, c).frac_boundary;
}

}  // namespace cubesob
