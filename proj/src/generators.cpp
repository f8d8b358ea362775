#include "cubesob/generators.hpp"

#include "cubesob/ball_spectra.hpp"
#include "cubesob/lanczos.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cubesob {
namespace {

constexpr std::array<std::pair<GeneratorKind, std::string_view>, 6> kKindNames{{
    {GeneratorKind::uniform_random_nonneg, "uniform_random_nonneg"},
    {GeneratorKind::signed_gaussian, "signed_gaussian"},
    {GeneratorKind::indicator_of_random_subset, "indicator_of_random_subset"},
    {GeneratorKind::two_valued, "two_valued"},
    {GeneratorKind::ball_minimizer, "ball_minimizer"},
    {GeneratorKind::dictator_like, "dictator_like"},
}};

class Stream {
 public:
  explicit Stream(std::uint64_t state) : state_(state) {}
  double uniform() { return unit_double(state_); }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  std::uint64_t below(std::uint64_t bound) { return splitmix64(state_) % bound; }
  bool coin(double p = 0.5) { return uniform() < p; }
  double gaussian() {
    // Box-Muller; 1 - u keeps the log argument in (0, 1].
    const double u = 1.0 - uniform();
    const double v = uniform();
    return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * std::numbers::pi * v);
  }

 private:
  std::uint64_t state_;
};

// Density spread log-uniformly between one vertex and the whole cube.
double random_density(Stream& s, int n) { return std::exp(-s.uniform() * n * std::log(2.0)); }

std::vector<char> random_subset(Stream& s, int n, std::size_t size) {
  const double q = random_density(s, n);
  std::vector<char> in(size, 0);
  bool any = false;
  for (auto& b : in) {
    b = s.coin(q) ? 1 : 0;
    any = any || b;
  }
  if (!any) in[s.below(size)] = 1;
  return in;
}

}  // namespace

std::string_view to_string(GeneratorKind k) {
  for (const auto& [kind, name] : kKindNames) {
    if (kind == k) return name;
  }
  return "unknown";
}

std::optional<GeneratorKind> parse_generator_kind(std::string_view name) {
  for (const auto& [kind, n] : kKindNames) {
    if (n == name) return kind;
  }
  return std::nullopt;
}

const std::vector<GeneratorKind>& all_generator_kinds() {
  static const std::vector<GeneratorKind> kinds = [] {
    std::vector<GeneratorKind> v;
    for (const auto& [kind, name] : kKindNames) v.push_back(kind);
    return v;
  }();
  return kinds;
}

CubeFunction FunctionGenerator::generate(std::uint64_t index) const {
  if (n < 1 || n > kMaxMaterializedDimension) {
    throw std::invalid_argument("FunctionGenerator: dimension out of range");
  }
  std::uint64_t mix = seed;
  mix ^= splitmix64(mix) + static_cast<std::uint64_t>(kind) * 0xD6E8FEB86659FD93ULL;
  mix ^= splitmix64(mix) + static_cast<std::uint64_t>(n) * 0xA0761D6478BD642FULL;
  mix ^= splitmix64(mix) + index * 0xE7037ED1A0B428DBULL;
  Stream s(splitmix64(mix));

  const std::size_t size = std::size_t{1} << n;
  std::vector<double> v(size, 0.0);

  switch (kind) {
    case GeneratorKind::uniform_random_nonneg: {
      const double q = 0.05 + 0.95 * s.uniform();
      const double power = 1.0 + 4.0 * s.uniform();
      bool any = false;
      for (auto& x : v) {
        if (s.coin(q)) {
          x = std::pow(s.uniform(), power);
          any = any || x > 0.0;
        }
      }
      if (!any) v[s.below(size)] = 1.0;
      break;
    }
    case GeneratorKind::signed_gaussian: {
      const double mean = s.uniform(-2.0, 2.0);
      const double sigma = s.uniform(0.1, 2.0);
      for (auto& x : v) x = mean + sigma * s.gaussian();
      break;
    }
    case GeneratorKind::indicator_of_random_subset: {
      const auto in = random_subset(s, n, size);
      const double c = (s.coin() ? 1.0 : -1.0) * std::exp(s.uniform(-3.0, 3.0));
      for (std::size_t x = 0; x < size; ++x) v[x] = in[x] ? c : 0.0;
      break;
    }
    case GeneratorKind::two_valued: {
      const auto in = random_subset(s, n, size);
      const double a = s.uniform(0.01, 1.0);
      const double b = s.coin(0.3) ? 0.0 : s.uniform(0.0, 1.0);
      for (std::size_t x = 0; x < size; ++x) v[x] = in[x] ? a : b;
      break;
    }
    case GeneratorKind::ball_minimizer: {
      const int r = static_cast<int>(s.below(static_cast<std::uint64_t>(n) + 1));
      const auto shift = static_cast<std::uint32_t>(s.below(size));
      const auto profile = cubesob::ball_minimizer(n, r);
      for (std::size_t x = 0; x < size; ++x) {
        const int w = std::popcount(static_cast<std::uint32_t>(x) ^ shift);
        if (w <= r) v[x] = profile.g[w];
      }
      break;
    }
    case GeneratorKind::dictator_like: {
      const int i = static_cast<int>(s.below(static_cast<std::uint64_t>(n)));
      const double si = s.uniform(-1.0, 1.0);
      const bool junta = n >= 2 && s.coin(1.0 / 3.0);
      int j = i;
      while (junta && j == i) j = static_cast<int>(s.below(static_cast<std::uint64_t>(n)));
      const double sj = junta ? s.uniform(-1.0, 1.0) : 0.0;
      for (std::size_t x = 0; x < size; ++x) {
        const double chi_i = (x >> i) & 1U ? -1.0 : 1.0;
        const double chi_j = (x >> j) & 1U ? -1.0 : 1.0;
        v[x] = (1.0 + si * chi_i) * (1.0 + sj * chi_j);
      }
      if (std::all_of(v.begin(), v.end(), [](double x) { return x == 0.0; })) v[0] = 1.0;
      break;
    }
  }
  return CubeFunction(n, std::move(v));
}

}  // namespace cubesob
