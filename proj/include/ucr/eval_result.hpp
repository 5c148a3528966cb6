#pragma once

#include <complex>

namespace ucr {

/// Value of a series evaluation together with its accuracy certificate.
///
/// `abs_error_est` bounds the discarded tail (first omitted term scaled by the
/// geometric factor of the monotone term ratios) plus a rounding allowance
/// proportional to the sum of absolute terms.
template <class T>
struct EvalResult {
  T value{};
  double abs_error_est = 0.0;
  int terms_used = 0;
};

using RealEval = EvalResult<double>;
using ComplexEval = EvalResult<std::complex<double>>;

/// Upper limit on terms for any single series evaluation.
inline constexpr int kMaxSeriesTerms = 20000;

/// Relative truncation threshold shared by all series.
inline constexpr double kSeriesRelTol = 1e-15;

}  // namespace ucr
