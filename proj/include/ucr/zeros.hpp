#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ucr/params.hpp"
#include "ucr/series_rule.hpp"

namespace ucr {

/// The named functions whose positive zeros drive the radius computations.
///
///   Function    J^(s) (zeros j, l) or lambda / Psi (zeros zeta)
///   Derivative  dJ^(s)/dz (zeros j') or lambda'
///   AlphaComb   z J^(2)' + (1-nu) J^(2)   (Jackson2 only; zeros of g')
///   BetaComb    z J^(2)' + (2-nu) J^(2)   (Jackson2 only; sqrt of zeros of h')
///   GammaComb   z J^(3)' + (1-nu) J^(3)   (Jackson3 only)
///   DeltaComb   z J^(3)' + (2-nu) J^(3)   (Jackson3 only)
///   PsiPrime    Psi'  (Wright; zeros zeta')
///   GPrime      g'    (Wright; zeros theta)
///   HPrime      h'    (Wright; zeros tau, in the variable of h)
enum class ZeroKind {
  Function,
  Derivative,
  AlphaComb,
  BetaComb,
  GammaComb,
  DeltaComb,
  PsiPrime,
  GPrime,
  HPrime
};

[[nodiscard]] std::string to_string(ZeroKind k);
[[nodiscard]] ZeroKind parse_zero_kind(const std::string& s);

struct ZeroTarget {
  std::variant<QBesselParams, WrightParams> family;
  ZeroKind which = ZeroKind::Function;

  /// Throws DomainError for a kind that does not belong to the family or for
  /// parameters outside the kind's hypotheses.
  void validate() const;
  /// Canonical text form; used as the cache key.
  [[nodiscard]] std::string descriptor() const;
  /// True when the stored zeros are squares of the stripped-series zeros (HPrime).
  [[nodiscard]] bool stores_squares() const noexcept { return which == ZeroKind::HPrime; }
  [[nodiscard]] bool same_family(const ZeroTarget& other) const;
};

/// Ordered positive zeros of a target with certified sign-change brackets.
struct ZeroTable {
  ZeroTarget target;
  std::vector<double> zeros;
  std::vector<std::pair<double, double>> brackets;
  /// |T(x*)| / sum |terms| at each zero, T the stripped target series.
  std::vector<double> residuals;
  /// sigma_k = sum over all zeros of w_n^{-k}, k = 1..K, with w_n the squared
  /// zero (or tau_n itself for HPrime). Taken from the Taylor coefficients.
  std::vector<double> power_sums;
  double tol = 0.0;

  /// w_n: squares of the zeros, or the zeros themselves when stores_squares().
  [[nodiscard]] std::vector<double> squares() const;
};

struct ScanOptions {
  /// Relative bracket width at which bisection stops.
  double tol = 1e-13;
  /// Multiplicative coarse step; each coarse interval is also split once.
  double step_factor = 1.05;
  /// Initial upper bound as a multiple of the first-zero estimate.
  double upper_factor = 64.0;
  /// Number of times the upper bound may be multiplied by upper_factor.
  int max_extensions = 24;
  /// Number of power sums sigma_k stored with the table.
  int power_sum_count = 8;
};

/// Prefactor-free even series whose zeros are those of a target:
///   Plain           T = S
///   Combination     T = (c S + z S') / c   = sum b_n (c + 2n)/c z^{2n}
///   DerivativeShift T = S'(z) / (2 b_1 z) = sum b_{n+1} (n+1)/b_1 z^{2n}
struct StrippedTarget {
  enum class Transform { Plain, Combination, DerivativeShift };
  SeriesRule rule;
  Transform transform = Transform::Plain;
  double c = 1.0;
};

[[nodiscard]] StrippedTarget stripped_target(const ZeroTarget& t);

/// Zeros of a stripped target in the z variable (never squared).
struct RawZeros {
  std::vector<double> zeros;
  std::vector<std::pair<double, double>> brackets;
  std::vector<double> residuals;
  std::vector<double> power_sums;
};

/// Scans a stripped even series on a multiplicative grid from a lower bound of
/// its first zero and bisects every sign change. Function signs are evaluated
/// in MPFR at a precision chosen per point from the largest series term, and
/// each sign is certified against the rounding bound before use.
[[nodiscard]] RawZeros scan_stripped(const StrippedTarget& t, int count,
                                     const ScanOptions& opts = {});

/// The first `count` positive zeros of the target.
[[nodiscard]] ZeroTable scan_and_refine(const ZeroTarget& target, int count,
                                        const ScanOptions& opts = {});

struct InterlacingReport {
  /// chain[k] < chain[k+1] for the chain a_1, b_1, a_2, b_2, ...
  std::vector<bool> links;
  bool all_hold = false;
};

/// Checks a_1 < b_1 < a_2 < b_2 < ... over `window` pairs (0: the shorter
/// table), appending a_{window+1} when present. Throws DomainError when the
/// tables belong to different families or the window exceeds a table.
[[nodiscard]] InterlacingReport interlacing_check(const ZeroTable& a, const ZeroTable& b,
                                                  int window = 0);

/// Values of the stripped target series in double precision (test and
/// diagnostic use; sign scanning uses the MPFR evaluator).
[[nodiscard]] double stripped_value(const StrippedTarget& t, double z);

}  // namespace ucr
