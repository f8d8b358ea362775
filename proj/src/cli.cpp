#include "cubesob/cli.hpp"

#include "cubesob/ball_spectra.hpp"
#include "cubesob/code_bounds.hpp"
#include "cubesob/cube.hpp"
#include "cubesob/report.hpp"
#include "cubesob/series_verifier.hpp"
#include "cubesob/special_functions.hpp"
#include "cubesob/verifier.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace cubesob {
namespace {

// Raised for bad input detected after parsing; maps to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CommonOptions {
  std::uint64_t seed = 0;
  std::string out_path;
  std::string format;
  bool reproducible = false;
};

void add_common(CLI::App* cmd, CommonOptions& opt, bool with_seed) {
  if (with_seed) cmd->add_option("--seed", opt.seed, "64-bit seed")->capture_default_str();
  cmd->add_option("--out", opt.out_path, "Write output to this file instead of stdout");
  cmd->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  cmd->add_flag("--reproducible", opt.reproducible, "Write wall_time_ms as 0 for byte-identical reports");
}

void write_text(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot open output file: " + path);
  f << text;
  if (!f) throw UsageError("failed writing output file: " + path);
}

std::string report_csv(const VerificationReport& rep) {
  std::ostringstream s;
  s << "name,status,lhs,rhs\n";
  for (const auto& c : rep.checks) {
    s << c.name << ',' << to_string(c.status) << ',' << format_double(c.lhs) << ',' << format_double(c.rhs) << '\n';
  }
  return s.str();
}

int emit_report(const VerificationReport& rep, const CommonOptions& opt, std::ostream& out) {
  std::string text;
  if (opt.format == "csv") {
    text = report_csv(rep);
  } else {
    text = to_json(rep, !opt.reproducible).dump(2) + "\n";
  }
  write_text(text, opt.out_path, out);
  return rep.passed() ? kExitOk : kExitViolation;
}

std::string format_lambda(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  std::string s(buf);
  if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
  return s;
}

std::vector<double> parse_grid(const std::string& spec) {
  const auto a = spec.find(':');
  const auto b = a == std::string::npos ? std::string::npos : spec.find(':', a + 1);
  if (b == std::string::npos) throw UsageError("grid must be start:end:step");
  double start, end, step;
  try {
    std::size_t used = 0;
    const std::string p0 = spec.substr(0, a), p1 = spec.substr(a + 1, b - a - 1), p2 = spec.substr(b + 1);
    start = std::stod(p0, &used);
    if (used != p0.size()) throw UsageError("bad grid start");
    end = std::stod(p1, &used);
    if (used != p1.size()) throw UsageError("bad grid end");
    step = std::stod(p2, &used);
    if (used != p2.size()) throw UsageError("bad grid step");
  } catch (const std::logic_error&) {
    throw UsageError("grid must be start:end:step with numeric fields");
  }
  return {start, end, step};
}

// Points start, start + step, ... up to end (inclusive within rounding).
std::vector<double> grid_points(double start, double end, double step) {
  if (!(step > 0.0) || !(end >= start) || !std::isfinite(start) || !std::isfinite(end)) {
    throw UsageError("grid needs start <= end and step > 0");
  }
  const double span = (end - start) / step;
  if (span > 1e7) throw UsageError("grid has more than 10^7 points");
  const auto count = static_cast<std::size_t>(std::floor(span + 1e-9)) + 1;
  std::vector<double> pts;
  pts.reserve(count);
  for (std::size_t i = 0; i < count; ++i) pts.push_back(std::min(end, start + static_cast<double>(i) * step));
  return pts;
}

nlohmann::json spectral_json(const SubsetSpec& subset, double lambda, SpectralMethod method,
                             std::optional<double> residual) {
  const int n = subset.dimension();
  const double log_card = log_cardinality(subset);
  nlohmann::json j;
  j["subset"] = subset.describe();
  j["n"] = n;
  j["lambda_star"] = lambda;
  j["frac_boundary"] = lambda > 0.0 ? std::exp(log_card - n * kLog2 + std::log(lambda)) : 0.0;
  j["log_cardinality"] = log_card;
  j["method"] = std::string(to_string(method));
  if (residual) j["residual"] = *residual;
  return j;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Modified log-Sobolev and Faber-Krahn computations on the Hamming cube", "cube-sobolev"};
  app.require_subcommand(1);
  app.footer(
      "Commands:\n"
      "  cfun                        table of C(rho), closed form vs alpha form\n"
      "  lambda-star ball|subcube|mask\n"
      "  verify logsob|tech|entk|isop|fk-scan|series|hprop|tightness\n"
      "  code-bound                  --n --d, or --asymptotic --delta-grid a:b:s\n"
      "  scan-extremal               minimal lambda* per cardinality, n <= 4\n"
      "Exit codes: 0 ok, 1 verification failure, 2 usage or domain error.");

  CommonOptions common;
  std::function<int()> action;

  // cfun
  auto* cfun = app.add_subcommand("cfun", "CSV rho,C_explicit,C_alpha,abs_diff");
  double c_start = 0.0, c_end = kLog2, c_step = 1e-3, abs_tol = Tolerance{}.abs_tol;
  cfun->add_option("--start", c_start)->capture_default_str();
  cfun->add_option("--end", c_end)->capture_default_str();
  cfun->add_option("--step", c_step)->capture_default_str();
  cfun->add_option("--abs-tol", abs_tol, "Bisection residual tolerance")->capture_default_str();
  add_common(cfun, common, false);
  cfun->callback([&] {
    action = [&]() -> int {
      if (!common.format.empty() && common.format != "csv") throw UsageError("cfun writes CSV only");
      if (!(c_start >= 0.0 && c_end <= kLog2 + 1e-15)) throw UsageError("need 0 <= start <= end <= log 2");
      Tolerance tol;
      tol.abs_tol = abs_tol;
      tol.validate();
      std::ostringstream s;
      s << "rho,C_explicit,C_alpha,abs_diff\n";
      bool ok = true;
      for (double rho : grid_points(c_start, std::min(c_end, kLog2), c_step)) {
        const double ce = c_explicit(rho, tol);
        const double ca = c_alpha(rho, tol);
        const double diff = std::abs(ce - ca);
        ok = ok && diff <= 1e-9;
        s << format_double(rho) << ',' << format_double(ce) << ',' << format_double(ca) << ','
          << format_double(diff) << '\n';
      }
      write_text(s.str(), common.out_path, out);
      return ok ? kExitOk : kExitViolation;
    };
  });

  // lambda-star
  auto* ls = app.add_subcommand("lambda-star", "Fundamental tone of a subset");
  ls->require_subcommand(1);
  int ls_n = 0, ls_r = 0, ls_t = 0;
  std::string mask_file, minimizer_path;
  bool ls_json = false;
  auto add_ls_common = [&](CLI::App* c) {
    c->add_flag("--json", ls_json, "Print a JSON record instead of the bare value");
    c->add_option("--out", common.out_path, "Write output to this file instead of stdout");
  };
  auto print_lambda = [&](const nlohmann::json& rec) {
    const std::string text =
        ls_json ? rec.dump(2) + "\n" : format_lambda(rec.at("lambda_star").get<double>()) + "\n";
    write_text(text, common.out_path, out);
    return kExitOk;
  };

  auto* ls_ball = ls->add_subcommand("ball", "Hamming ball of radius r (radial solver)");
  ls_ball->add_option("--n", ls_n)->required();
  ls_ball->add_option("--r", ls_r)->required();
  ls_ball->add_option("--emit-minimizer", minimizer_path, "Write the radial minimizer as CSV k,g_k");
  add_ls_common(ls_ball);
  ls_ball->callback([&] {
    action = [&]() -> int {
      const auto subset = SubsetSpec::ball(ls_n, ls_r);
      const double lam = ball_lambda_star(ls_n, ls_r);
      std::string profile_csv;
      if (!minimizer_path.empty()) {
        const auto p = ball_minimizer(ls_n, ls_r);
        std::ostringstream s;
        s << "k,g_k\n";
        for (int k = 0; k <= p.r; ++k) s << k << ',' << format_double(p.g[k]) << '\n';
        profile_csv = s.str();
      }
      const auto rec = spectral_json(subset, lam, SpectralMethod::radial, std::nullopt);
      if (!minimizer_path.empty()) write_text(profile_csv, minimizer_path, out);
      return print_lambda(rec);
    };
  });

  auto* ls_sub = ls->add_subcommand("subcube", "Subcube with t coordinates fixed");
  ls_sub->add_option("--n", ls_n)->required();
  ls_sub->add_option("--t", ls_t)->required();
  add_ls_common(ls_sub);
  ls_sub->callback([&] {
    action = [&]() -> int {
      const auto subset = SubsetSpec::subcube(ls_n, ls_t);
      SolverConfig config;
      config.want_minimizer = false;
      const auto res = lambda_star(subset, config);
      return print_lambda(spectral_json(subset, res.lambda_star, res.method, res.residual));
    };
  });

  auto* ls_mask = ls->add_subcommand("mask", "Subset listed in a mask file");
  ls_mask->add_option("--file", mask_file)->required();
  add_ls_common(ls_mask);
  ls_mask->callback([&] {
    action = [&]() -> int {
      const auto subset = read_mask_file(mask_file);
      SolverConfig config;
      config.want_minimizer = false;
      const auto res = lambda_star(subset, config);
      return print_lambda(spectral_json(subset, res.lambda_star, res.method, res.residual));
    };
  });

  // verify
  auto* verify = app.add_subcommand("verify", "Run a verification suite and write a JSON report");
  verify->require_subcommand(1);

  SuiteConfig suite_cfg;
  std::vector<std::string> kind_names;
  for (auto suite : {FunctionSuite::logsob, FunctionSuite::tech, FunctionSuite::entk, FunctionSuite::isop}) {
    auto* cmd = verify->add_subcommand(std::string(to_string(suite)), "Generated-function suite");
    cmd->add_option("--count", suite_cfg.count, "Number of functions")->capture_default_str();
    cmd->add_option("--n-min", suite_cfg.n_min)->capture_default_str();
    cmd->add_option("--n-max", suite_cfg.n_max)->capture_default_str();
    cmd->add_option("--kinds", kind_names, "Comma-separated generator kinds (default all)")->delimiter(',');
    cmd->add_option("--threads", suite_cfg.threads, "Worker threads (0 = CUBE_SOBOLEV_THREADS or auto)");
    add_common(cmd, common, true);
    cmd->callback([&, suite] {
      action = [&, suite]() -> int {
        suite_cfg.suite = suite;
        suite_cfg.seed = common.seed;
        for (const auto& name : kind_names) {
          const auto k = parse_generator_kind(name);
          if (!k) throw UsageError("unknown generator kind: " + name);
          suite_cfg.kinds.push_back(*k);
        }
        if (suite_cfg.threads < 0) throw UsageError("--threads must be >= 0");
        auto rep = run_function_suite(suite_cfg);
        return emit_report(rep, common, out);
      };
    });
  }

  int scan_n = 4;
  auto* fk = verify->add_subcommand("fk-scan", "Faber-Krahn bound on every nonempty subset, n <= 4");
  fk->add_option("--n", scan_n)->capture_default_str();
  add_common(fk, common, true);
  fk->callback([&] {
    action = [&]() -> int {
      auto scan = scan_all_subsets(scan_n);
      scan.report.seed = common.seed;
      return emit_report(scan.report, common, out);
    };
  });

  int kmax = 60;
  auto* series = verify->add_subcommand("series", "Exact coefficient properties of F and G");
  series->add_option("--kmax", kmax)->capture_default_str();
  add_common(series, common, true);
  series->callback([&] {
    action = [&]() -> int {
      auto rep = verify_coefficient_properties(kmax);
      rep.seed = common.seed;
      return emit_report(rep, common, out);
    };
  });

  int hprop_kmax = 200;
  auto* hprop = verify->add_subcommand("hprop", "Nonnegativity of the series behind h''");
  std::string hprop_form = "stated";
  hprop->add_option("--kmax", hprop_kmax)->capture_default_str();
  hprop->add_option("--form", hprop_form, "stated: t^3 L2 + (1-t^4) L1 - 2t; with_factor: (1+t^2) t^3 L2 + ...")
      ->check(CLI::IsMember({"stated", "with_factor"}))
      ->capture_default_str();
  add_common(hprop, common, true);
  hprop->callback([&] {
    action = [&]() -> int {
      auto rep = verify_hprop_series(
          hprop_kmax, hprop_form == "stated" ? HpropForm::stated : HpropForm::with_factor);
      rep.seed = common.seed;
      return emit_report(rep, common, out);
    };
  });

  std::vector<int> n_list{500, 1000, 2000, 4000};
  double ratio = 0.11;
  auto* tight = verify->add_subcommand("tightness", "Ball gap lambda*/n - fk_rhs/n along n");
  tight->add_option("--n-list", n_list, "Comma-separated dimensions")->delimiter(',')->capture_default_str();
  tight->add_option("--ratio", ratio, "r/n")->capture_default_str();
  add_common(tight, common, true);
  tight->callback([&] {
    action = [&]() -> int {
      auto sweep = tightness_sweep(n_list, ratio);
      sweep.report.seed = common.seed;
      if (common.format == "csv") {
        std::ostringstream s;
        write_tightness_csv(s, sweep);
        write_text(s.str(), common.out_path, out);
        return sweep.report.passed() ? kExitOk : kExitViolation;
      }
      return emit_report(sweep.report, common, out);
    };
  });

  // code-bound
  auto* cb = app.add_subcommand("code-bound", "Hamming-ball bound on A(n, d)");
  int cb_n = 0, cb_d = 0;
  bool asymptotic = false;
  std::string delta_grid = "0.01:0.49:0.01";
  auto* cb_n_opt = cb->add_option("--n", cb_n);
  auto* cb_d_opt = cb->add_option("--d", cb_d);
  auto* asym_opt = cb->add_flag("--asymptotic", asymptotic, "Rate curve H(1/2 - sqrt(delta(1-delta))) in bits");
  cb->add_option("--delta-grid", delta_grid, "start:end:step")->capture_default_str()->needs(asym_opt);
  asym_opt->excludes(cb_n_opt)->excludes(cb_d_opt);
  cb->add_option("--out", common.out_path, "Write output to this file instead of stdout");
  cb->callback([&] {
    action = [&]() -> int {
      if (asymptotic) {
        const auto g = parse_grid(delta_grid);
        std::ostringstream s;
        s << "delta,rate_bound_bits\n";
        for (double delta : grid_points(g[0], g[1], g[2])) {
          s << format_double(delta) << ',' << format_double(asymptotic_rate_bound(delta)) << '\n';
        }
        write_text(s.str(), common.out_path, out);
        return kExitOk;
      }
      if (cb_n_opt->count() == 0 || cb_d_opt->count() == 0) throw UsageError("code-bound needs --n and --d");
      const auto res = code_size_bound(cb_n, cb_d);
      nlohmann::json j{{"n", res.n},
                       {"d", res.d},
                       {"critical_radius", res.critical_radius},
                       {"log_ball_size", res.log_ball_size},
                       {"log_bound", res.log_bound},
                       {"rate_bound_bits", res.rate_bound_bits},
                       {"reference_radius", res.reference_radius}};
      write_text(j.dump(2) + "\n", common.out_path, out);
      return kExitOk;
    };
  });

  // scan-extremal
  int ex_n = 4;
  auto* ex = app.add_subcommand("scan-extremal",
                                "CSV m,lambda_min,witness_mask,ball_lambda,subcube_lambda over all subsets");
  ex->add_option("--n", ex_n)->capture_default_str();
  ex->add_option("--out", common.out_path, "Write output to this file instead of stdout");
  ex->callback([&] {
    action = [&]() -> int {
      const auto scan = scan_all_subsets(ex_n);
      std::ostringstream s;
      write_extremal_csv(s, scan);
      write_text(s.str(), common.out_path, out);
      return scan.report.passed() ? kExitOk : kExitViolation;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    return action ? action() : kExitUsage;
  } catch (const std::exception& e) {
    // Usage, domain and numerical failures alike: nothing has been written.
    err << "error: " << e.what() << '\n';
  }
  return kExitUsage;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.push_back("cube-sobolev");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace cubesob
