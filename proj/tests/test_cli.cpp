#include "cubesob/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace cubesob;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("cube_sobolev_test_" + name);
}

}  // namespace

TEST_CASE("help lists every command and exits 0") {
  const auto r = run({"--help"});
  CHECK(r.code == 0);
  for (const char* cmd : {"cfun", "lambda-star", "verify", "code-bound", "scan-extremal", "fk-scan", "tightness",
                          "hprop", "series", "logsob", "subcube", "mask"}) {
    CHECK(r.out.find(cmd) != std::string::npos);
  }
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"verify", "series", "--kmax", "-1"}).code == 2);
  CHECK(run({"lambda-star", "ball", "--n", "5"}).code == 2);
  CHECK(run({"lambda-star", "ball", "--n", "5", "--r", "9"}).code == 2);
  CHECK(run({"cfun", "--start", "0", "--end", "0.9"}).code == 2);
  CHECK(run({"code-bound", "--n", "10", "--d", "7"}).code == 2);
  CHECK(run({"code-bound", "--asymptotic", "--delta-grid", "0.1:x:0.1"}).code == 2);
  CHECK(run({"verify", "logsob", "--kinds", "nope"}).code == 2);
  CHECK(run({"verify", "logsob", "--bogus-flag"}).code == 2);
}

TEST_CASE("exit 2 leaves no partial report behind") {
  const auto path = temp_path("partial.json");
  std::filesystem::remove(path);
  CHECK(run({"verify", "series", "--kmax", "2", "--out", path.string()}).code == 2);
  CHECK_FALSE(std::filesystem::exists(path));
}

TEST_CASE("lambda-star prints values") {
  auto r = run({"lambda-star", "subcube", "--n", "8", "--t", "3"});
  CHECK(r.code == 0);
  CHECK(r.out == "6.0\n");
  r = run({"lambda-star", "ball", "--n", "6", "--r", "2", "--json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["lambda_star"].get<double>() == doctest::Approx(4.0));
  CHECK(j["method"] == "radial");

  const auto mask = temp_path("mask.txt");
  {
    std::ofstream f(mask);
    f << "n=3\n0\n1\n2\n3\n";
  }
  r = run({"lambda-star", "mask", "--file", mask.string()});
  CHECK(r.code == 0);
  CHECK(std::stod(r.out) == doctest::Approx(2.0));

  const auto prof = temp_path("profile.csv");
  r = run({"lambda-star", "ball", "--n", "6", "--r", "2", "--emit-minimizer", prof.string()});
  CHECK(r.code == 0);
  std::ifstream in(prof);
  std::string header;
  std::getline(in, header);
  CHECK(header == "k,g_k");
}

TEST_CASE("cfun table rows") {
  auto r = run({"cfun", "--start", "0", "--end", "0", "--step", "1"});
  CHECK(r.code == 0);
  CHECK(r.out == "rho,C_explicit,C_alpha,abs_diff\n0,2,2,0\n");
  r = run({"cfun", "--start", "0", "--end", "0.6931471805599453", "--step", "0.01"});
  CHECK(r.code == 0);
}

TEST_CASE("verify reports: schema and byte-identical reruns") {
  const std::vector<std::string> args{"verify", "entk", "--count", "200", "--n-max", "5", "--seed", "9",
                                      "--reproducible"};
  const auto a = run(args);
  const auto b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const auto j = nlohmann::json::parse(a.out);
  for (const char* key : {"suite", "params", "seed", "checks", "violations", "wall_time_ms"}) CHECK(j.contains(key));
  CHECK(j["seed"] == 9);
  CHECK(j["violations"] == 0);
  CHECK(j["checks"].size() == 200);

  const auto fk = run({"verify", "fk-scan", "--n", "3"});
  CHECK(fk.code == 0);
  CHECK(nlohmann::json::parse(fk.out)["checks"].size() == 255);

  CHECK(run({"verify", "hprop", "--kmax", "20"}).code == 1);
  CHECK(run({"verify", "hprop", "--kmax", "20", "--form", "with_factor"}).code == 0);
  CHECK(run({"verify", "series", "--kmax", "12", "--format", "csv"}).code == 0);
  CHECK(run({"verify", "tightness", "--n-list", "200,400"}).code == 0);
}

TEST_CASE("code-bound and scan-extremal outputs") {
  auto r = run({"code-bound", "--n", "100", "--d", "10"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out).contains("critical_radius"));
  r = run({"code-bound", "--asymptotic", "--delta-grid", "0.1:0.3:0.1"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("delta,rate_bound_bits\n0.1,", 0) == 0);
  r = run({"scan-extremal", "--n", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("m,lambda_min,witness_mask,ball_lambda,subcube_lambda\n", 0) == 0);
}
