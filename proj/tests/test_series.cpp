#include "cubesob/rational_series.hpp"
#include "cubesob/series_verifier.hpp"

#include <doctest.h>

#include <stdexcept>
#include <vector>

using namespace cubesob;

namespace {

using Poly = std::vector<mpq_class>;

// Independent expansion with plain coefficient vectors, degree <= deg.
Poly log_ratio(int deg, int stretch) {
  Poly p(deg + 1, 0);
  for (int j = 1; j * stretch <= deg; j += 2) p[j * stretch] = mpq_class(2, j);
  return p;
}

Poly mul(const Poly& a, const Poly& b) {
  Poly c(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < a.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

Poly poly(int deg, std::initializer_list<std::pair<int, int>> terms) {
  Poly p(deg + 1, 0);
  for (auto [e, c] : terms) {
    if (e <= deg) p[e] += c;
  }
  return p;
}

Poly add(Poly a, const Poly& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

// F / 4 and G / 4 coefficient lists.
std::pair<Poly, Poly> oracle_fg(int deg) {
  const Poly l1 = log_ratio(deg, 1);
  const Poly l2 = log_ratio(deg, 2);
  const Poly f = add(mul(mul(poly(deg, {{0, 3}, {2, 2}, {4, -1}}), l1), l2),
                     mul(poly(deg, {{1, 2}, {3, 2}}), l2));
  const Poly g = add(add(mul(poly(deg, {{1, 2}, {3, -2}}), mul(l1, l1)), mul(poly(deg, {{1, 4}}), mul(l2, l2))),
                     mul(poly(deg, {{2, 4}}), l1));
  Poly fl(f.size()), gl(g.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    fl[i] = f[i] / 4;
    gl[i] = g[i] / 4;
  }
  return {fl, gl};
}

}  // namespace

TEST_CASE("RationalSeries basics") {
  auto p = RationalSeries::polynomial(4, {1, 2});
  CHECK(p.coeff(1) == 2);
  CHECK(p.coeff(4) == 0);
  CHECK_THROWS_AS(p.coeff(5), std::out_of_range);
  auto q = p * RationalSeries::polynomial(2, {0, 1});
  CHECK(q.degree() == 2);
  CHECK(q.coeff(2) == 2);
}

TEST_CASE("coefficient table matches an independent expansion") {
  const int k_max = 25;
  const auto table = coefficient_table(k_max);
  const auto [f, g] = oracle_fg(2 * k_max + 1);
  REQUIRE(table.size() == static_cast<std::size_t>(k_max + 1));
  for (int k = 0; k <= k_max; ++k) {
    CHECK(table[k].ell == f[2 * k + 1]);
    CHECK(table[k].r == g[2 * k + 1]);
  }
  for (int e = 0; e <= 2 * k_max + 1; e += 2) {
    CHECK(f[e] == 0);
    CHECK(g[e] == 0);
  }
  // Spot values from the same oracle, frozen.
  CHECK(table[3].ell == mpq_class(8, 5));
  CHECK(table[3].r == mpq_class(4, 45));
  CHECK(table[4].ell == mpq_class(64, 35));
  CHECK(table[4].r == mpq_class(872, 315));
}

TEST_CASE("truncation is sound: a longer expansion agrees on the common range") {
  const auto a = F_series(10);
  const auto b = F_series(20);
  for (std::size_t e = 0; e <= a.degree(); ++e) CHECK(a.coeff(e) == b.coeff(e));
  const auto c = G_series(10);
  const auto d = G_series(20);
  for (std::size_t e = 0; e <= c.degree(); ++e) CHECK(c.coeff(e) == d.coeff(e));
}

TEST_CASE("closed forms agree with the table") {
  const auto table = coefficient_table(60);
  for (int k = 3; k <= 60; ++k) {
    CHECK(explicit_ell(k) == table[k].ell);
    CHECK(explicit_r(k) == table[k].r);
  }
  CHECK_THROWS_AS(explicit_ell(2), std::invalid_argument);
  CHECK_THROWS_AS(explicit_r(1), std::invalid_argument);
}

TEST_CASE("the printed ell variant agrees only at k = 3") {
  CHECK(printed_ell(3) == explicit_ell(3));
  CHECK(printed_ell(4) == mpq_class(988, 525));
  CHECK(printed_ell(4) != explicit_ell(4));
  for (int k = 5; k <= 12; ++k) CHECK(printed_ell(k) != explicit_ell(k));
}

TEST_CASE("coefficient properties hold and the report notices a perturbation") {
  const auto rep = verify_coefficient_properties(30);
  CHECK(rep.passed());
  CHECK(rep.count(CheckStatus::pass) > 0);

  auto table = coefficient_table(31);
  table[7].r = table[7].ell + 1;  // breaks ell > r at odd k = 7
  const auto bad = verify_coefficient_properties(table);
  CHECK_FALSE(bad.passed());
  REQUIRE(bad.first_failure() != nullptr);
  CHECK(bad.first_failure()->witness.has_value());

  auto neg = coefficient_table(31);
  neg[10].ell = -1;
  CHECK_FALSE(verify_coefficient_properties(neg).passed());

  CHECK_THROWS_AS(verify_coefficient_properties(4), std::invalid_argument);
  CHECK_THROWS_AS(verify_coefficient_properties(-1), std::invalid_argument);
}

TEST_CASE("h-property series: the stated form has negative coefficients") {
  const auto rep = verify_hprop_series(40);
  CHECK_FALSE(rep.passed());
  CHECK(rep.statistics["first_negative_power"] == 7);
  // t^{4j+3}, j = 1..19, within degree 81.
  CHECK(rep.statistics["negative_coefficients"] == 19);
  bool saw_linear = false;
  for (const auto& c : rep.checks) {
    if (c.name == "linear_term_vanishes") {
      saw_linear = true;
      CHECK(c.status == CheckStatus::pass);
    }
    if (c.name == "nonnegative[power=7]") CHECK(c.witness->at("lhs_exact") == "-8/21");
    if (c.name == "nonnegative[power=3]") CHECK(c.witness->at("lhs_exact") == "2/3");
  }
  CHECK(saw_linear);
  CHECK_THROWS_AS(verify_hprop_series(2), std::invalid_argument);
}

TEST_CASE("h-property series: the form with the (1 + t^2) factor is nonnegative") {
  const auto rep = verify_hprop_series(40, HpropForm::with_factor);
  CHECK(rep.passed());
  CHECK(rep.statistics["negative_coefficients"] == 0);
}
