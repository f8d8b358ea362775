#include "cubesob/report.hpp"

#include <algorithm>
#include <cmath>

namespace cubesob {

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::skipped:
      return "skipped";
  }
  return "unknown";
}

void VerificationReport::append(const VerificationReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

std::size_t VerificationReport::count(CheckStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [s](const CheckRecord& c) { return c.status == s; }));
}

std::size_t VerificationReport::violations() const { return count(CheckStatus::fail); }

const CheckRecord* VerificationReport::first_failure() const {
  for (const auto& c : checks) {
    if (c.status == CheckStatus::fail) return &c;
  }
  return nullptr;
}

namespace {

nlohmann::json number_or_null(double v) {
  if (std::isfinite(v)) return v;
  return nullptr;
}

}  // namespace

nlohmann::json to_json(const VerificationReport& report, bool include_timing) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : report.checks) {
    nlohmann::json j;
    j["name"] = c.name;
    j["status"] = std::string(to_string(c.status));
    j["lhs"] = number_or_null(c.lhs);
    j["rhs"] = number_or_null(c.rhs);
    if (c.witness) j["witness"] = *c.witness;
    checks.push_back(std::move(j));
  }
  nlohmann::json out;
  out["suite"] = report.suite;
  out["params"] = report.params;
  out["seed"] = report.seed;
  out["checks"] = std::move(checks);
  out["violations"] = report.violations();
  if (!report.statistics.empty()) out["statistics"] = report.statistics;
  out["wall_time_ms"] = include_timing ? report.wall_time_ms : 0.0;
  return out;
}

}  // namespace cubesob
