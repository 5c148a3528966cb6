#pragma once

#include "ucr/radius.hpp"
#include "ucr/target.hpp"

namespace ucr {

/// Minimum of Re Q(z) - |Q(z) - 1| over a sampled circle |z| = r, Q = 1 + z f''/f'.
struct MarginReport {
  double r = 0.0;
  double min_margin = 0.0;
  /// Angle of the minimum, in [0, 2 pi).
  double argmin_angle = 0.0;
  int samples = 0;
};

struct MarginOptions {
  /// Uniform angles on [0, 2 pi); at least 64.
  int samples = 512;
  /// Extra angles spread over one grid step on either side of theta = 0.
  int refine = 64;
};

/// Sampled margin with the angle loop split across OpenMP threads. The
/// reduction runs in fixed order afterwards, so the report is bitwise equal to
/// uc_margin_serial.
[[nodiscard]] MarginReport uc_margin(const UcTarget& target, double r,
                                     const MarginOptions& opts = {});
/// Single-threaded reference for uc_margin.
[[nodiscard]] MarginReport uc_margin_serial(const UcTarget& target, double r,
                                            const MarginOptions& opts = {});

struct OracleOptions {
  /// Absolute bisection tolerance on r.
  double tol = 1e-9;
  /// Margins with |m| below this count as zero (not positive).
  double margin_tol = 1e-10;
  /// The search stops at this fraction of the first critical value.
  double upper_fraction = 0.999;
  MarginOptions margin;
};

/// Largest r with a positive sampled margin, by bisection on (0, upper). The
/// only use of zeros is the coarse first critical value bounding the search.
[[nodiscard]] RadiusResult oracle_radius(const UcTarget& target, const OracleOptions& opts = {});

/// Sampled check of the three circle inequalities behind the radius proofs
/// for a > b > r and lambda in [0, 1]:
///   |z/(b-z) - lambda z/(a-z)|     <= r/(b-r) - lambda r/(a-r)
///   Re(z/(b-z) - lambda z/(a-z))   <= r/(b-r) - lambda r/(a-r)
///   Re(z/(b-z)) <= |z/(b-z)|       <= r/(b-r)
struct CircleInequalityReport {
  double bound_mixed = 0.0;    // r/(b-r) - lambda r/(a-r)
  double bound_single = 0.0;   // r/(b-r)
  double max_abs_mixed = 0.0;
  double max_re_mixed = 0.0;
  double max_re_single = 0.0;
  double max_abs_single = 0.0;
  /// Smallest of the four slacks bound - max (Re <= | | is included as well).
  double min_slack = 0.0;
  /// Rounding allowance applied to min_slack: equality holds at z = r.
  double allowance = 0.0;
  [[nodiscard]] bool holds() const noexcept { return min_slack >= -allowance; }
};

[[nodiscard]] CircleInequalityReport circle_inequalities(double a, double b, double lambda,
                                                         double r, int samples = 512);

}  // namespace ucr
