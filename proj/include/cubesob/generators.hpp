#pragma once

#include "cubesob/cube.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cubesob {

enum class GeneratorKind {
  uniform_random_nonneg,
  signed_gaussian,
  indicator_of_random_subset,
  two_valued,
  ball_minimizer,
  dictator_like,
};

std::string_view to_string(GeneratorKind k);
std::optional<GeneratorKind> parse_generator_kind(std::string_view name);
const std::vector<GeneratorKind>& all_generator_kinds();

/// Deterministic stream of test functions. The i-th function depends only on
/// (kind, n, seed, i), so any slice of the stream can be regenerated alone.
struct FunctionGenerator {
  GeneratorKind kind = GeneratorKind::uniform_random_nonneg;
  int n = 1;
  std::uint64_t seed = 0;
  std::uint64_t count = 0;

  CubeFunction generate(std::uint64_t index) const;
};

}  // namespace cubesob
