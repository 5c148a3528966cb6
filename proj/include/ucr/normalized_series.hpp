#pragma once

#include <complex>

#include "ucr/eval_result.hpp"
#include "ucr/params.hpp"
#include "ucr/series_rule.hpp"

namespace ucr {

// Normalized functions built from a stripped even series S(z) = P(z^2) with
// prefactor exponent p (nu or beta):
//
//   F: f(z) = z S(z)^{1/p}
//   G: g(z) = z S(z)
//   H: h(z) = z P(z)
//
// Both the q-Bessel and the Wright normalizations reduce to these forms.

/// Value or derivative (deriv in {0,1,2}) of the normalized function.
[[nodiscard]] ComplexEval normalized_from_series(const SeriesRule& rule, Norm norm,
                                                 std::complex<double> z, int deriv);

/// 1 + z f''(z)/f'(z): for F it is 1 + (1/p - 1) z S'/S + z T'/T with
/// T = p S + z S'. Returns exactly 1 at z = 0.
[[nodiscard]] std::complex<double> convexity_ratio_from_series(const SeriesRule& rule, Norm norm,
                                                               std::complex<double> z);

}  // namespace ucr
