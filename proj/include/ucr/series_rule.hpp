#pragma once

#include <variant>

#include "ucr/params.hpp"

namespace ucr {

// Each family below is written, after removing its z^nu (or z^beta) prefactor
// and normalizing the leading coefficient, as an even entire function
//
//     S(z) = P(z^2),   P(w) = sum_{n>=0} b_n w^n,   b_0 = 1.
//
// The rules give the consecutive ratios b_n / b_{n-1}. For every rule, |ratio|
// is non-increasing in n >= 1, which is what the truncation certificates in
// power_series.hpp rely on.

/// Classical J_nu: P(w) = Gamma(nu+1) (2/z)^nu J_nu(z), w = z^2.
struct ClassicalBesselRule {
  double nu = 0.0;
};

/// Jackson J^(2) or J^(3): P(w) = K^{-1} z^{-nu} J(z) with K = 1/(2^nu c_nu)
/// (kind 2) or 1/c_nu (kind 3).
struct QBesselRule {
  QBesselParams params;
};

/// Wright: P(w) = Gamma(beta) phi(rho, beta, -w), requires rho > 0, beta > 0.
struct WrightRule {
  WrightParams params;
};

using SeriesRule = std::variant<ClassicalBesselRule, QBesselRule, WrightRule>;

/// b_n / b_{n-1} for n >= 1.
[[nodiscard]] double coefficient_ratio(const SeriesRule& rule, int n);

/// log |b_n / b_{n-1}|, accurate even where the ratio underflows.
[[nodiscard]] double log_abs_coefficient_ratio(const SeriesRule& rule, int n);

/// Exponent of the stripped prefactor (nu for q-Bessel and classical, beta for Wright).
[[nodiscard]] double prefactor_exponent(const SeriesRule& rule);

}  // namespace ucr
