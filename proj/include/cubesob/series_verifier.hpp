#pragma once

#include "cubesob/rational_series.hpp"
#include "cubesob/report.hpp"

#include <gmpxx.h>

#include <string_view>

#include <vector>

namespace cubesob {

// Exact power-series checks behind the convexity of C.
//
// With L1(x) = log((1+x)/(1-x)) and L2(x) = L1(x^2), the convexity of C
// reduces to F(x) > G(x) on (0, 1) where
//
//   F = (3 - x^2)(1 + x^2) L1 L2 + 2x (1 + x^2) L2
//   G = 2x (1 - x^2) L1^2 + 4x L2^2 + 4x^2 L1
//
// Both are odd series, F = 4 sum ell_{2k+1} x^{2k+1}, G = 4 sum r_{2k+1} x^{2k+1}.
// Throughout, a "k_max" argument means "coefficients through x^{2 k_max + 1}".

/// L1 = 2 sum x^{2k+1} / (2k+1), truncated after x^{2 k_max + 1}.
RationalSeries l1_series(int k_max);
/// L2 = L1(x^2), same truncation degree as l1_series(k_max).
RationalSeries l2_series(int k_max);

RationalSeries F_series(int k_max);
RationalSeries G_series(int k_max);

struct CoeffPair {
  int k = 0;
  mpq_class ell;  // coefficient of x^{2k+1} in F / 4
  mpq_class r;    // coefficient of x^{2k+1} in G / 4
};

/// ell_{2k+1}, r_{2k+1} for k = 0..k_max read off the exact expansions.
std::vector<CoeffPair> coefficient_table(int k_max);

/// Closed form for ell_{2k+1}, k >= 3, split by the parity of k.
///
/// The second harmonic-type sum is sum_{m=1}^{floor((k-1)/2)} 1/(4m-1). The
/// commonly printed variant, sum_{m=1}^{k-2} 1/(2m+1), agrees only at k = 3;
/// it is kept as printed_ell for comparison.
mpq_class explicit_ell(int k);
/// Closed form for r_{2k+1}, k >= 3.
mpq_class explicit_r(int k);
/// ell closed form with the sum over 1/(2m+1), m = 1..k-2, as usually printed.
mpq_class printed_ell(int k);

/// Properties of the table, all in exact arithmetic:
///   nonnegativity of every ell, r;
///   ell_1 = r_1 = 0 and ell_3 = r_3 = ell_5 = r_5 = 4;
///   for odd k >= 3: ell > r and ell_{2k+1} + ell_{2k+3} > r_{2k+1} + r_{2k+3};
///   closed forms equal the table entries for 3 <= k.
/// The table must reach one index past the last k checked, since the pair
/// condition looks ahead by one.
VerificationReport verify_coefficient_properties(const std::vector<CoeffPair>& table);
VerificationReport verify_coefficient_properties(int k_max);

/// Which series to expand for the h'' property.
///   stated:      t^3 L2 + (1 - t^4) L1 - 2t, the "even stronger" form whose
///                coefficients are claimed nonnegative. They are not: the
///                coefficient of t^{4j+3} is negative for every j >= 1.
///   with_factor: (1 + t^2) t^3 L2 + (1 - t^4) L1 - 2t, the form the h'' bound
///                actually needs; its coefficients are nonnegative.
enum class HpropForm { stated, with_factor };

std::string_view to_string(HpropForm f);

/// Expands the chosen series exactly through t^{2 k_max + 1} and checks the
/// t coefficient vanishes and every coefficient is >= 0.
VerificationReport verify_hprop_series(int k_max, HpropForm form = HpropForm::stated);

}  // namespace cubesob
