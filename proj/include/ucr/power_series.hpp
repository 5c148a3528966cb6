#pragma once

#include <array>
#include <complex>

#include "ucr/series_rule.hpp"

namespace ucr {

/// P(w), P'(w), P''(w) for a normalized coefficient rule.
struct PowerSeriesValue {
  std::array<std::complex<double>, 3> d{};
  /// Tail bound plus rounding allowance, one per derivative order.
  std::array<double, 3> err{};
  /// sum of |terms|, the conditioning scale of each derivative series.
  std::array<double, 3> abs_sum{};
  int terms = 0;
};

/// Sums P in w up to derivative order `max_deriv` (<= 2) with compensated
/// accumulation. Each derivative series stops once its next term ratio is
/// below one and the resulting geometric tail bound falls under
/// kSeriesRelTol times the partial sum. Throws NonConvergence when the term
/// budget is exhausted.
[[nodiscard]] PowerSeriesValue eval_power_series(const SeriesRule& rule, std::complex<double> w,
                                                 int max_deriv = 2);

/// Even function S(z) = P(z^2) and its first two z-derivatives.
struct EvenSeriesValue {
  std::complex<double> s, ds, dds;
  double err_s = 0.0, err_ds = 0.0, err_dds = 0.0;
  double scale = 0.0;
  int terms = 0;
};

[[nodiscard]] EvenSeriesValue eval_even_series(const SeriesRule& rule, std::complex<double> z);

}  // namespace ucr
