#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cubesob {

/// Exit codes: 0 success, 1 verification failure (report still written),
/// 2 usage or domain error (nothing written).
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Convenience for tests; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cubesob
