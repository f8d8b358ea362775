#include "cubesob/verifier.hpp"

#include "cubesob/ball_spectra.hpp"
#include "cubesob/special_functions.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <thread>

namespace cubesob {
namespace {

CheckRecord make_record(std::string name, bool ok, double lhs, double rhs) {
  CheckRecord rec;
  rec.name = std::move(name);
  rec.status = ok ? CheckStatus::pass : CheckStatus::fail;
  rec.lhs = lhs;
  rec.rhs = rhs;
  return rec;
}

CheckRecord skipped(std::string name) {
  CheckRecord rec;
  rec.name = std::move(name);
  rec.status = CheckStatus::skipped;
  return rec;
}

nlohmann::json values_witness(const CubeFunction& f) {
  return {{"n", f.dimension()}, {"values", std::vector<double>(f.values().begin(), f.values().end())}};
}

void attach_values_on_failure(CheckRecord& rec, const CubeFunction& f) {
  if (rec.status == CheckStatus::fail && !rec.witness) rec.witness = values_witness(f);
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

std::string hex_mask(std::uint64_t mask) {
  char buf[32];
  auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), mask, 16);
  return "0x" + std::string(buf, p);
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, p);
}

double check_slack(const CubeFunction& f) { return 1e-9 * f.dimension() * f.mean_square(); }

CheckRecord check_log_sobolev(const CubeFunction& f) {
  if (f.is_zero()) return skipped("log_sobolev");
  const CubeFunction g = f.abs();
  const double ent = entropy_sq(g);
  const double rho = ent / (g.dimension() * g.mean_square());
  const double lhs = d2(g);
  const double rhs = log_sobolev_constant(rho) * ent;
  auto rec = make_record("log_sobolev", lhs >= rhs - check_slack(g), lhs, rhs);
  attach_values_on_failure(rec, f);
  return rec;
}

CheckRecord check_ent_k2(const CubeFunction& f) {
  if (f.is_zero()) return skipped("ent_k2");
  const CubeFunction g = f.abs();
  const double lhs = entropy_sq(g);
  const double rhs = 2.0 * kLog2 * k2(g);
  auto rec = make_record("ent_k2", lhs <= rhs + check_slack(g), lhs, rhs);
  attach_values_on_failure(rec, f);
  return rec;
}

CheckRecord check_technical(const CubeFunction& f) {
  if (f.is_zero()) return skipped("technical");
  const CubeFunction g = f.abs();
  const double k = k2(g);
  const double ent = entropy_sq(g);
  double ratio = ent / k;
  const double lhs = d2(g);
  const double top = 2.0 * kLog2;
  if (ratio > top) {
    if (ratio > top * (1.0 + 1e-12)) {
      // Ent(f^2) <= 2 log 2 K^2(f) is itself a checked inequality; past it
      // phi is undefined, so report a failure.
      auto rec = make_record("technical", false, lhs, std::numeric_limits<double>::quiet_NaN());
      rec.witness = values_witness(f);
      (*rec.witness)["entropy_over_k2"] = ratio;
      return rec;
    }
    ratio = top;
  }
  const double rhs = 4.0 * k * phi(ratio);
  auto rec = make_record("technical", lhs >= rhs - check_slack(g), lhs, rhs);
  attach_values_on_failure(rec, f);
  return rec;
}

std::vector<CheckRecord> check_functional_isop(const CubeFunction& f) {
  if (f.is_zero()) return {skipped("isop_entropy"), skipped("isop_variation")};
  const CubeFunction g = f.abs();
  const int n = g.dimension();
  const double m2 = g.mean_square();
  const double m1 = g.mean_abs();
  double log_ratio = std::log(m2 / (m1 * m1));
  if (log_ratio < 0.0) log_ratio = 0.0;  // Cauchy-Schwarz; rounding only
  const double slack = check_slack(g);
  const double ent = entropy_sq(g);
  const double base = m2 * log_ratio;

  std::vector<CheckRecord> out;
  out.push_back(make_record("isop_entropy", ent >= base - slack, ent, base));
  const double lhs = d2(g);
  const double rhs = log_sobolev_constant(log_ratio / n) * base;
  out.push_back(make_record("isop_variation", lhs >= rhs - slack, lhs, rhs));
  for (auto& rec : out) attach_values_on_failure(rec, f);
  return out;
}

CheckRecord check_fk(int n, double lambda, double log_card) {
  const double rhs = fk_rhs(n, log_card);
  return make_record("fk", lambda >= rhs - 1e-9 * n, lambda, rhs);
}

CheckRecord check_fk(const SubsetSpec& subset, const SolverConfig& config) {
  SolverConfig c = config;
  c.want_minimizer = false;
  const auto res = lambda_star(subset, c);
  auto rec = check_fk(subset.dimension(), res.lambda_star, log_cardinality(subset));
  rec.name = "fk[" + subset.describe() + "]";
  if (rec.status == CheckStatus::fail) rec.witness = nlohmann::json{{"subset", subset.describe()}};
  return rec;
}

// ---------------------------------------------------------------------------

std::string_view to_string(FunctionSuite s) {
  switch (s) {
    case FunctionSuite::logsob:
      return "logsob";
    case FunctionSuite::tech:
      return "tech";
    case FunctionSuite::entk:
      return "entk";
    case FunctionSuite::isop:
      return "isop";
  }
  return "unknown";
}

std::optional<FunctionSuite> parse_function_suite(std::string_view name) {
  for (auto s : {FunctionSuite::logsob, FunctionSuite::tech, FunctionSuite::entk, FunctionSuite::isop}) {
    if (to_string(s) == name) return s;
  }
  return std::nullopt;
}

std::vector<CheckRecord> run_function_check(FunctionSuite suite, const CubeFunction& f) {
  switch (suite) {
    case FunctionSuite::logsob:
      return {check_log_sobolev(f)};
    case FunctionSuite::tech:
      return {check_technical(f)};
    case FunctionSuite::entk:
      return {check_ent_k2(f)};
    case FunctionSuite::isop:
      return check_functional_isop(f);
  }
  return {};
}

int worker_count(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("CUBE_SOBOLEV_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

struct SuiteChunk {
  std::vector<CheckRecord> checks;
  double min_normalized_margin = std::numeric_limits<double>::infinity();
  double min_variation_entropy_ratio = std::numeric_limits<double>::infinity();
};

// Margin in units of n E f^2, oriented so that a passing check is >= -1e-9.
double normalized_margin(const CheckRecord& rec, double scale) {
  if (rec.status == CheckStatus::skipped || !std::isfinite(rec.rhs)) return std::numeric_limits<double>::infinity();
  const double diff = rec.name == "ent_k2" ? rec.rhs - rec.lhs : rec.lhs - rec.rhs;
  return diff / scale;
}

}  // namespace

VerificationReport run_function_suite(const SuiteConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  if (config.n_min < 1 || config.n_max < config.n_min || config.n_max > kMaxMaterializedDimension) {
    throw std::invalid_argument("run_function_suite: invalid dimension range");
  }
  const std::vector<GeneratorKind> kinds = config.kinds.empty() ? all_generator_kinds() : config.kinds;
  const std::uint64_t dims = static_cast<std::uint64_t>(config.n_max - config.n_min + 1);
  const std::uint64_t combos = kinds.size() * dims;

  auto run_range = [&](std::uint64_t begin, std::uint64_t end, SuiteChunk& chunk) {
    for (std::uint64_t i = begin; i < end; ++i) {
      const std::uint64_t c = i % combos;
      const std::uint64_t index = i / combos;
      const GeneratorKind kind = kinds[c % kinds.size()];
      const int n = config.n_min + static_cast<int>(c / kinds.size());
      const FunctionGenerator gen{kind, n, config.seed, config.count};
      const CubeFunction f = gen.generate(index);
      auto records = run_function_check(config.suite, f);
      const double scale = n * f.mean_square();
      for (auto& rec : records) {
        chunk.min_normalized_margin = std::min(chunk.min_normalized_margin, normalized_margin(rec, scale));
        if (rec.status == CheckStatus::fail) {
          nlohmann::json w = values_witness(f);
          w["suite"] = std::string(to_string(config.suite));
          w["kind"] = std::string(to_string(kind));
          w["seed"] = config.seed;
          w["index"] = index;
          rec.witness = std::move(w);
        }
        rec.name = std::string(to_string(config.suite)) + "." + rec.name + "[" + std::string(to_string(kind)) +
                   ",n=" + std::to_string(n) + ",i=" + std::to_string(index) + "]";
        chunk.checks.push_back(std::move(rec));
      }
      if (config.suite == FunctionSuite::logsob && !f.is_zero()) {
        const CubeFunction g = f.abs();
        const double ent = entropy_sq(g);
        if (ent > 1e-12 * scale) {
          chunk.min_variation_entropy_ratio = std::min(chunk.min_variation_entropy_ratio, d2(g) / ent);
        }
      }
    }
  };

  const int workers = static_cast<int>(
      std::min<std::uint64_t>(static_cast<std::uint64_t>(worker_count(config.threads)),
                              std::max<std::uint64_t>(1, config.count)));
  std::vector<SuiteChunk> chunks(static_cast<std::size_t>(workers));
  if (workers == 1) {
    run_range(0, config.count, chunks[0]);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
    const std::uint64_t per = (config.count + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      const std::uint64_t b = std::min<std::uint64_t>(config.count, per * w);
      const std::uint64_t e = std::min<std::uint64_t>(config.count, b + per);
      pool.emplace_back([&, w, b, e] {
        try {
          run_range(b, e, chunks[static_cast<std::size_t>(w)]);
        } catch (...) {
          errors[static_cast<std::size_t>(w)] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  VerificationReport rep;
  rep.suite = std::string(to_string(config.suite));
  rep.seed = config.seed;
  nlohmann::json kind_names = nlohmann::json::array();
  for (auto k : kinds) kind_names.push_back(std::string(to_string(k)));
  rep.params = {{"count", config.count}, {"n_min", config.n_min}, {"n_max", config.n_max}, {"kinds", kind_names}};
  double min_margin = std::numeric_limits<double>::infinity();
  double min_ratio = std::numeric_limits<double>::infinity();
  for (auto& chunk : chunks) {
    for (auto& rec : chunk.checks) rep.checks.push_back(std::move(rec));
    min_margin = std::min(min_margin, chunk.min_normalized_margin);
    min_ratio = std::min(min_ratio, chunk.min_variation_entropy_ratio);
  }
  if (std::isfinite(min_margin)) rep.statistics["min_normalized_margin"] = min_margin;
  if (std::isfinite(min_ratio)) rep.statistics["min_variation_entropy_ratio"] = min_ratio;
  rep.wall_time_ms = elapsed_ms(start);
  return rep;
}

std::vector<CheckRecord> replay_witness(const nlohmann::json& witness) {
  const auto suite = parse_function_suite(witness.at("suite").get<std::string>());
  const auto kind = parse_generator_kind(witness.at("kind").get<std::string>());
  if (!suite || !kind) throw std::invalid_argument("replay_witness: unknown suite or generator");
  const FunctionGenerator gen{*kind, witness.at("n").get<int>(), witness.at("seed").get<std::uint64_t>(), 0};
  return run_function_check(*suite, gen.generate(witness.at("index").get<std::uint64_t>()));
}

VerificationReport exhaustive_grid_technical(int n, int steps) {
  const auto start = std::chrono::steady_clock::now();
  if (n < 1 || n > 2) throw std::invalid_argument("exhaustive_grid_technical: n must be 1 or 2");
  if (steps < 1) throw std::invalid_argument("exhaustive_grid_technical: steps must be >= 1");
  const std::size_t size = std::size_t{1} << n;
  const std::size_t levels = static_cast<std::size_t>(steps) + 1;
  std::size_t total = 1;
  for (std::size_t i = 0; i < size; ++i) total *= levels;

  VerificationReport rep;
  rep.suite = "technical_grid";
  rep.params = {{"n", n}, {"steps", steps}};
  std::vector<double> v(size);
  for (std::size_t code = 1; code < total; ++code) {
    std::size_t c = code;
    for (std::size_t i = 0; i < size; ++i) {
      v[i] = static_cast<double>(c % levels) / steps;
      c /= levels;
    }
    const CubeFunction f(n, v);
    auto rec = check_technical(f);
    rec.name = "technical[code=" + std::to_string(code) + "]";
    if (n == 1 && rec.status == CheckStatus::pass && std::abs(rec.lhs - rec.rhs) > 1e-10) {
      rec.status = CheckStatus::fail;
      rec.witness = values_witness(f);
      (*rec.witness)["reason"] = "one-dimensional equality violated";
    }
    rep.add(std::move(rec));
  }
  rep.wall_time_ms = elapsed_ms(start);
  return rep;
}

// ---------------------------------------------------------------------------

double ExtremalRow::frac_boundary_min(int n) const {
  return static_cast<double>(m) / std::ldexp(1.0, n) * lambda_min;
}

SubsetScan scan_all_subsets(int n) {
  const auto start = std::chrono::steady_clock::now();
  if (n < 1 || n > 4) throw std::invalid_argument("scan_all_subsets: n must be in [1, 4]");
  const std::size_t size = std::size_t{1} << n;
  const std::uint64_t total = (std::uint64_t{1} << size) - 1;

  SubsetScan scan;
  scan.n = n;
  scan.table.resize(size);
  for (std::size_t m = 1; m <= size; ++m) {
    scan.table[m - 1].m = m;
    scan.table[m - 1].lambda_min = std::numeric_limits<double>::infinity();
  }
  for (int r = 0; r <= n; ++r) {
    const auto ball = SubsetSpec::ball(n, r);
    const double lam = ball_lambda_star(n, r);
    auto& slot = scan.table[ball.cardinality() - 1].ball_lambda;
    slot = slot ? std::min(*slot, lam) : lam;
  }
  for (int t = 0; t <= n; ++t) scan.table[(std::size_t{1} << (n - t)) - 1].subcube_lambda = 2.0 * t;

  scan.report.suite = "fk-scan";
  scan.report.params = {{"n", n}};
  scan.report.checks.reserve(static_cast<std::size_t>(total));

  SolverConfig config;
  config.want_minimizer = false;
  std::vector<std::uint32_t> verts;
  verts.reserve(size);
  for (std::uint64_t mask = 1; mask <= total; ++mask) {
    verts.clear();
    for (std::uint32_t v = 0; v < size; ++v) {
      if ((mask >> v) & 1U) verts.push_back(v);
    }
    const double lam = lambda_star(n, verts, config).lambda_star;
    auto rec = check_fk(n, lam, std::log(static_cast<double>(verts.size())));
    rec.name = "fk[mask=" + hex_mask(mask) + "]";
    if (rec.status == CheckStatus::fail) rec.witness = nlohmann::json{{"n", n}, {"mask", mask}, {"vertices", verts}};
    scan.report.add(std::move(rec));

    auto& row = scan.table[verts.size() - 1];
    if (lam < row.lambda_min - 1e-12) {
      row.lambda_min = lam;
      row.witness_mask = mask;
      row.witness_is_subcube = is_subcube(n, verts);
    }
  }
  scan.report.wall_time_ms = elapsed_ms(start);
  return scan;
}

void write_extremal_csv(std::ostream& out, const SubsetScan& scan) {
  out << "m,lambda_min,witness_mask,ball_lambda,subcube_lambda\n";
  for (const auto& row : scan.table) {
    out << row.m << ',' << format_double(row.lambda_min) << ',' << row.witness_mask << ',';
    if (row.ball_lambda) out << format_double(*row.ball_lambda);
    out << ',';
    if (row.subcube_lambda) out << format_double(*row.subcube_lambda);
    out << '\n';
  }
}

TightnessSweep tightness_sweep(const std::vector<int>& n_list, double ratio) {
  const auto start = std::chrono::steady_clock::now();
  if (n_list.empty()) throw std::invalid_argument("tightness_sweep: empty n list");
  if (!(ratio > 0.0 && ratio < 0.5)) throw std::invalid_argument("tightness_sweep: ratio must be in (0, 1/2)");
  for (int n : n_list) {
    if (n < 100) throw std::invalid_argument("tightness_sweep: every n must be >= 100");
  }

  TightnessSweep sweep;
  sweep.report.suite = "tightness";
  sweep.report.params = {{"n_list", n_list}, {"ratio", ratio}};
  for (int n : n_list) {
    TightnessRow row;
    row.n = n;
    row.r = static_cast<int>(std::lround(ratio * n));
    row.lambda_over_n = ball_lambda_star(n, row.r) / n;
    row.fk_over_n = fk_rhs(n, log_cardinality(SubsetSpec::ball(n, row.r))) / n;
    row.gap = row.lambda_over_n - row.fk_over_n;
    auto rec = make_record("gap_positive[n=" + std::to_string(n) + "]", row.gap > 0.0, row.lambda_over_n,
                           row.fk_over_n);
    rec.witness = nlohmann::json{{"n", n}, {"r", row.r}};
    sweep.report.add(std::move(rec));
    sweep.rows.push_back(row);
  }
  if (sweep.rows.size() < 2) {
    sweep.report.add(skipped("gap_decreasing"));
  } else {
    for (std::size_t i = 1; i < sweep.rows.size(); ++i) {
      const auto& a = sweep.rows[i - 1];
      const auto& b = sweep.rows[i];
      auto rec = make_record("gap_decreasing[n=" + std::to_string(a.n) + "->" + std::to_string(b.n) + "]",
                             b.gap < a.gap, b.gap, a.gap);
      rec.witness = nlohmann::json{{"n_from", a.n}, {"n_to", b.n}};
      sweep.report.add(std::move(rec));
    }
  }
  sweep.report.wall_time_ms = elapsed_ms(start);
  return sweep;
}

void write_tightness_csv(std::ostream& out, const TightnessSweep& sweep) {
  out << "n,r,lambda_over_n,fk_over_n,gap\n";
  for (const auto& row : sweep.rows) {
    out << row.n << ',' << row.r << ',' << format_double(row.lambda_over_n) << ','
        << format_double(row.fk_over_n) << ',' << format_double(row.gap) << '\n';
  }
}

}  // namespace cubesob
