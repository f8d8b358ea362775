#pragma once

#include "cubesob/cube.hpp"
#include "cubesob/generators.hpp"
#include "cubesob/report.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace cubesob {

// Inequality checks on single functions and subsets.
//
// Every check compares two sides that are 2-homogeneous in f, with additive
// slack 1e-9 * n * E f^2. Signed inputs are folded to |f|: this leaves the
// entropy side alone and can only lower D^2, so the folded check implies the
// signed one.

double check_slack(const CubeFunction& f);

/// D^2(f) >= C(rho) Ent(f^2).
CheckRecord check_log_sobolev(const CubeFunction& f);

/// Ent(f^2) <= 2 log 2 K^2(f).
CheckRecord check_ent_k2(const CubeFunction& f);

/// D^2(f) >= 4 K^2(f) phi(Ent(f^2) / K^2(f)).
CheckRecord check_technical(const CubeFunction& f);

/// Two records: Ent(f^2) >= E f^2 log(E f^2 / E^2|f|), and
/// D^2(f) >= C(rho') E f^2 log(E f^2 / E^2|f|) with rho' = log(E f^2 / E^2|f|) / n.
std::vector<CheckRecord> check_functional_isop(const CubeFunction& f);

/// lambda*(A) >= fk_rhs(n, log|A|) with slack 1e-9 n.
CheckRecord check_fk(const SubsetSpec& subset, const SolverConfig& config = {});
CheckRecord check_fk(int n, double lambda_star, double log_cardinality);

// ---------------------------------------------------------------------------
// Generated-function suites

enum class FunctionSuite { logsob, tech, entk, isop };

std::string_view to_string(FunctionSuite s);
std::optional<FunctionSuite> parse_function_suite(std::string_view name);

/// Runs one suite's check(s) on one function.
std::vector<CheckRecord> run_function_check(FunctionSuite suite, const CubeFunction& f);

struct SuiteConfig {
  FunctionSuite suite = FunctionSuite::logsob;
  std::vector<GeneratorKind> kinds;  // empty = all kinds
  int n_min = 1;
  int n_max = 10;
  std::uint64_t seed = 0;
  std::uint64_t count = 1000;
  /// 0 = CUBE_SOBOLEV_THREADS or hardware concurrency.
  int threads = 0;
};

/// Functions are dealt round-robin over the (kind, n) grid, so item i uses
/// combination i mod |grid| and generator index i div |grid|. The report is
/// identical for any thread count.
VerificationReport run_function_suite(const SuiteConfig& config);

/// Regenerates the function named by a suite witness and re-runs its checks.
std::vector<CheckRecord> replay_witness(const nlohmann::json& witness);

/// Worker count from CUBE_SOBOLEV_THREADS (0 or unset = hardware concurrency).
int worker_count(int requested = 0);

/// Checks the technical inequality on every nonzero function with values in
/// {0, 1/steps, ..., 1} on {0,1}^n (n <= 2). At n = 1 each record also
/// demands equality within 1e-10.
VerificationReport exhaustive_grid_technical(int n, int steps);

// ---------------------------------------------------------------------------
// Subset scans

struct ExtremalRow {
  std::uint64_t m = 0;
  double lambda_min = 0.0;
  /// Bit v set iff vertex v belongs to the witness subset.
  std::uint64_t witness_mask = 0;
  bool witness_is_subcube = false;
  std::optional<double> ball_lambda;
  std::optional<double> subcube_lambda;

  double frac_boundary_min(int n) const;
};

struct SubsetScan {
  int n = 0;
  VerificationReport report;
  std::vector<ExtremalRow> table;  // indexed by m - 1
};

/// All 2^{2^n} - 1 nonempty subsets of {0,1}^n (n <= 4): minimal lambda* for
/// each cardinality with a witness, best ball / subcube of that size, and
/// check_fk on every subset.
SubsetScan scan_all_subsets(int n);

/// CSV `m,lambda_min,witness_mask,ball_lambda,subcube_lambda`; absent
/// comparisons are left empty.
void write_extremal_csv(std::ostream& out, const SubsetScan& scan);

struct TightnessRow {
  int n = 0;
  int r = 0;
  double lambda_over_n = 0.0;
  double fk_over_n = 0.0;
  double gap = 0.0;
};

struct TightnessSweep {
  VerificationReport report;
  std::vector<TightnessRow> rows;
};

/// Hamming balls of radius round(ratio n): the normalized gap
/// lambda*(B)/n - fk_rhs/n must be positive and decreasing along n_list.
TightnessSweep tightness_sweep(const std::vector<int>& n_list, double ratio);

void write_tightness_csv(std::ostream& out, const TightnessSweep& sweep);

/// Formats doubles for CSV: shortest round-trip form, locale independent.
std::string format_double(double v);

}  // namespace cubesob
