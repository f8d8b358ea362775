#pragma once

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cubesob {

enum class CheckStatus { pass, fail, skipped };

std::string_view to_string(CheckStatus s);

/// One inequality or identity test: `lhs` and `rhs` are the two sides as
/// compared, so margins can be read straight off the record.
struct CheckRecord {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  double lhs = 0.0;
  double rhs = 0.0;
  std::optional<nlohmann::json> witness;
};

struct VerificationReport {
  std::string suite;
  nlohmann::json params = nlohmann::json::object();
  std::uint64_t seed = 0;
  std::vector<CheckRecord> checks;
  /// Suite-specific derived numbers (extremal ratios and the like).
  nlohmann::json statistics = nlohmann::json::object();
  double wall_time_ms = 0.0;

  void add(CheckRecord rec) { checks.push_back(std::move(rec)); }
  void append(const VerificationReport& other);

  std::size_t violations() const;
  std::size_t count(CheckStatus s) const;
  bool passed() const { return violations() == 0; }

  /// First failing record, if any.
  const CheckRecord* first_failure() const;
};

/// Serializes with the schema
/// {suite, params, seed, checks:[{name,status,lhs,rhs,witness?}], violations, wall_time_ms}.
/// With `include_timing == false` the wall time is written as 0 so that
/// repeated runs are byte-identical.
nlohmann::json to_json(const VerificationReport& report, bool include_timing = true);

}  // namespace cubesob
