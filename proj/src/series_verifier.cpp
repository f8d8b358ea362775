#include "cubesob/series_verifier.hpp"

#include <stdexcept>
#include <string>

namespace cubesob {
namespace {

std::size_t odd_degree(int k_max) { return 2 * static_cast<std::size_t>(k_max) + 1; }

mpq_class frac(long num, long den) {
  mpq_class q{mpz_class(num), mpz_class(den)};
  q.canonicalize();
  return q;
}

// sum_{m=1}^{upper} 1 / (a m + b)
mpq_class harmonic(int upper, long a, long b) {
  mpq_class s(0);
  for (int m = 1; m <= upper; ++m) s += frac(1, a * m + b);
  return s;
}

std::string str(const mpq_class& q) { return q.get_str(); }

CheckRecord exact_check(std::string name, bool ok, const mpq_class& lhs, const mpq_class& rhs,
                        nlohmann::json witness) {
  CheckRecord rec;
  rec.name = std::move(name);
  rec.status = ok ? CheckStatus::pass : CheckStatus::fail;
  rec.lhs = lhs.get_d();
  rec.rhs = rhs.get_d();
  witness["lhs_exact"] = str(lhs);
  witness["rhs_exact"] = str(rhs);
  rec.witness = std::move(witness);
  return rec;
}

void require_closed_form_index(int k, const char* fn) {
  if (k < 3) {
    throw std::invalid_argument(std::string(fn) + ": closed form needs k >= 3, got " +
                                std::to_string(k));
  }
}

// Pieces shared by explicit_ell and printed_ell; only the sum multiplying
// 4/(2k-1) (odd k) or (8k-20)/((2k-3)(2k+1)) (even k) differs.
mpq_class ell_closed_form(int k, bool as_printed) {
  const long K = k;
  const mpq_class lead = frac(8 * K - 20, (2 * K - 3) * (2 * K + 1));
  const mpq_class odd_weight = frac(3, 2 * K + 1) + frac(2, 2 * K - 1) - frac(1, 2 * K - 3);
  const mpq_class quarter_sum = as_printed ? harmonic(k - 2, 2, 1) : harmonic((k - 1) / 2, 4, -1);
  if (k % 2 == 1) {
    return lead * harmonic((k - 1) / 2, 4, -3) + frac(4, 2 * K - 1) * quarter_sum +
           odd_weight * harmonic((k - 1) / 2, 2, -1) +
           (frac(1, K) + frac(3, K * (2 * K + 1)) + frac(6, (2 * K - 1) * (2 * K + 1)));
  }
  return lead * quarter_sum + frac(4, 2 * K - 1) * harmonic(k / 2, 4, -3) +
         odd_weight * harmonic((k - 2) / 2, 2, -1) +
         (frac(1, K - 1) + frac(6, (2 * K - 1) * (2 * K + 1)) +
          frac(10 * K - 1, (K - 1) * (2 * K - 1) * (2 * K + 1)));
}

}  // namespace

RationalSeries l1_series(int k_max) {
  if (k_max < 1) throw std::invalid_argument("l1_series: k_max must be >= 1");
  const std::size_t d = odd_degree(k_max);
  RationalSeries s(d);
  for (std::size_t p = 1; p <= d; p += 2) s.set_coeff(p, frac(2, static_cast<long>(p)));
  return s;
}

RationalSeries l2_series(int k_max) {
  if (k_max < 1) throw std::invalid_argument("l2_series: k_max must be >= 1");
  const std::size_t d = odd_degree(k_max);
  RationalSeries s(d);
  for (std::size_t j = 1; 2 * j <= d; j += 2) s.set_coeff(2 * j, frac(2, static_cast<long>(j)));
  return s;
}

RationalSeries F_series(int k_max) {
  const std::size_t d = odd_degree(k_max);
  const auto l1 = l1_series(k_max);
  const auto l2 = l2_series(k_max);
  // (3 - x^2)(1 + x^2) = 3 + 2x^2 - x^4
  const auto p1 = RationalSeries::polynomial(d, {3, 0, 2, 0, -1});
  const auto p2 = RationalSeries::polynomial(d, {0, 2, 0, 2});
  return p1 * l1 * l2 + p2 * l2;
}

RationalSeries G_series(int k_max) {
  const std::size_t d = odd_degree(k_max);
  const auto l1 = l1_series(k_max);
  const auto l2 = l2_series(k_max);
  const auto q1 = RationalSeries::polynomial(d, {0, 2, 0, -2});
  const auto q2 = RationalSeries::polynomial(d, {0, 4});
  const auto q3 = RationalSeries::polynomial(d, {0, 0, 4});
  return q1 * l1 * l1 + q2 * l2 * l2 + q3 * l1;
}

std::vector<CoeffPair> coefficient_table(int k_max) {
  const auto f = F_series(k_max);
  const auto g = G_series(k_max);
  std::vector<CoeffPair> table;
  table.reserve(static_cast<std::size_t>(k_max) + 1);
  const mpq_class quarter(1, 4);
  for (int k = 0; k <= k_max; ++k) {
    const std::size_t p = 2 * static_cast<std::size_t>(k) + 1;
    table.push_back({k, f.coeff(p) * quarter, g.coeff(p) * quarter});
  }
  return table;
}

mpq_class explicit_ell(int k) {
  require_closed_form_index(k, "explicit_ell");
  return ell_closed_form(k, false);
}

mpq_class printed_ell(int k) {
  require_closed_form_index(k, "printed_ell");
  return ell_closed_form(k, true);
}

mpq_class explicit_r(int k) {
  require_closed_form_index(k, "explicit_r");
  const long K = k;
  mpq_class r = frac(2 * K + 2, K * (2 * K - 1)) - frac(2, K * (K - 1)) * harmonic(k - 1, 2, -1);
  if (k % 2 == 0) r += frac(8, K) * harmonic(k / 2, 2, -1);
  return r;
}

VerificationReport verify_coefficient_properties(const std::vector<CoeffPair>& table) {
  if (table.size() < 7) {
    throw std::invalid_argument("verify_coefficient_properties: table must reach k = 6");
  }
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i].k != static_cast<int>(i)) {
      throw std::invalid_argument("verify_coefficient_properties: table not indexed by k");
    }
  }
  const int k_max = static_cast<int>(table.size()) - 2;

  VerificationReport rep;
  rep.suite = "series";
  rep.params = {{"k_max", k_max}};

  for (int k = 0; k <= k_max; ++k) {
    const auto& c = table[k];
    const bool ok = sgn(c.ell) >= 0 && sgn(c.r) >= 0;
    rep.add(exact_check("nonnegative[k=" + std::to_string(k) + "]", ok, c.ell, c.r, {{"k", k}}));
  }

  const struct {
    const char* name;
    int k;
    const mpq_class& value;
    mpq_class expected;
  } initial[] = {
      {"ell_1", 0, table[0].ell, 0}, {"r_1", 0, table[0].r, 0},
      {"ell_3", 1, table[1].ell, 4}, {"r_3", 1, table[1].r, 4},
      {"ell_5", 2, table[2].ell, 4}, {"r_5", 2, table[2].r, 4},
  };
  for (const auto& iv : initial) {
    rep.add(exact_check(std::string("initial_value[") + iv.name + "]", iv.value == iv.expected, iv.value,
                        iv.expected, {{"k", iv.k}}));
  }

  for (int k = 3; k <= k_max; k += 2) {
    const auto& a = table[k];
    const auto& b = table[k + 1];
    const std::string tag = "[k=" + std::to_string(k) + "]";
    rep.add(exact_check("odd_dominance" + tag, a.ell > a.r, a.ell, a.r,
                        {{"k", k}, {"margin", str(a.ell - a.r)}}));
    const mpq_class lsum = a.ell + b.ell;
    const mpq_class rsum = a.r + b.r;
    rep.add(exact_check("odd_pair_dominance" + tag, lsum > rsum, lsum, rsum,
                        {{"k", k}, {"margin", str(lsum - rsum)}}));
  }

  for (int k = 3; k <= k_max; ++k) {
    const std::string tag = "[k=" + std::to_string(k) + "]";
    const mpq_class ell = explicit_ell(k);
    const mpq_class r = explicit_r(k);
    rep.add(exact_check("closed_form_ell" + tag, ell == table[k].ell, ell, table[k].ell, {{"k", k}}));
    rep.add(exact_check("closed_form_r" + tag, r == table[k].r, r, table[k].r, {{"k", k}}));
  }
  return rep;
}

VerificationReport verify_coefficient_properties(int k_max) {
  if (k_max < 5) throw std::invalid_argument("verify_coefficient_properties: k_max must be >= 5");
  return verify_coefficient_properties(coefficient_table(k_max + 1));
}

std::string_view to_string(HpropForm f) {
  return f == HpropForm::stated ? "stated" : "with_factor";
}

VerificationReport verify_hprop_series(int k_max, HpropForm form) {
  if (k_max < 3) throw std::invalid_argument("verify_hprop_series: k_max must be >= 3");
  const std::size_t d = odd_degree(k_max);
  const auto l1 = l1_series(k_max);
  const auto l2 = l2_series(k_max);
  const auto cubic = form == HpropForm::stated ? RationalSeries::polynomial(d, {0, 0, 0, 1})
                                               : RationalSeries::polynomial(d, {0, 0, 0, 1, 0, 1});
  const auto one_minus_t4 = RationalSeries::polynomial(d, {1, 0, 0, 0, -1});
  const auto two_t = RationalSeries::polynomial(d, {0, 2});
  const auto lhs = cubic * l2 + one_minus_t4 * l1 - two_t;

  VerificationReport rep;
  rep.suite = "hprop";
  rep.params = {{"k_max", k_max}, {"form", std::string(to_string(form))}};
  const mpq_class zero(0);
  rep.add(exact_check("linear_term_vanishes", lhs.coeff(1) == 0, lhs.coeff(1), zero, {{"power", 1}}));
  std::size_t negatives = 0;
  for (std::size_t p = 0; p <= d; ++p) {
    const bool ok = sgn(lhs.coeff(p)) >= 0;
    if (!ok && negatives++ == 0) rep.statistics["first_negative_power"] = p;
    rep.add(exact_check("nonnegative[power=" + std::to_string(p) + "]", ok, lhs.coeff(p), zero, {{"power", p}}));
  }
  rep.statistics["negative_coefficients"] = negatives;
  return rep;
}

}  // namespace cubesob
