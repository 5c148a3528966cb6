#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ucr/target.hpp"
#include "ucr/zeros.hpp"

namespace ucr {

enum class RadiusMethod { DirectEq, ZeroSum, Oracle };

[[nodiscard]] std::string to_string(RadiusMethod m);

struct RadiusResult {
  double radius = 0.0;
  std::pair<double, double> bracket{0.0, 0.0};
  /// Value of the method's defining function at the radius.
  double residual = 0.0;
  int iterations = 0;
  RadiusMethod method = RadiusMethod::DirectEq;
  /// First critical value bounding the search interval.
  double domain_upper = 0.0;
  /// ZeroSum only: certified bound on the truncated part of the sums at the radius.
  double tail_bound = 0.0;
  /// ZeroSum only: zeros per table.
  int zeros_used = 0;
  bool outside_hypotheses = false;
  std::vector<std::string> warnings;
};

/// Source of zero tables; lets callers put a cache in front of the scanner.
using ZeroProvider = std::function<ZeroTable(const ZeroTarget&, int count)>;

struct RadiusOptions {
  /// Relative width of the final root bracket.
  double tol = 1e-12;
  /// Initial zero count for the sum route; doubled while the tail is too loose.
  int zero_count = 30;
  int max_zero_count = 240;
  /// Power-sum corrections applied to the omitted zeros (at most 7).
  int tail_terms = 6;
  ZeroProvider zeros;
};

/// Value of a zero-sum target function together with its truncation bound.
struct ZeroSumValue {
  double value = 0.0;
  double tail_bound = 0.0;
};

/// The defining decreasing function of one radius problem in both forms.
///
///   f:  1 + 2r f''(r)/f'(r) = 1 - 4(1/p - 1) S(j^2, r^2) - 4 S(j'^2, r^2)
///   g:  1 + 2r g''(r)/g'(r) = 1 - 4 S(theta^2, r^2)
///   h:  1 + 2r h''(r)/h'(r) = 1 - 2 S(tau, r)
///
/// with S(w, s) = sum s / (w_n - s). The direct form evaluates the left-hand
/// sides from the series: J, J', J'' (resp. Psi) for f, the normalized
/// derivatives for g and h.
class RadiusProblem {
public:
  explicit RadiusProblem(UcTarget target, RadiusOptions opts = {});

  [[nodiscard]] const UcTarget& target() const noexcept { return target_; }
  /// First critical value (radius variable).
  [[nodiscard]] double domain_upper();
  /// Direct functional equation at r in (0, domain_upper).
  [[nodiscard]] double direct(double r) const;
  /// Truncated sum over the current zero tables plus power-sum tail.
  [[nodiscard]] ZeroSumValue zero_sum(double r);
  /// Root of the chosen form; ZeroSum escalates the zero count as needed.
  [[nodiscard]] RadiusResult solve(RadiusMethod method);
  [[nodiscard]] int zero_count() const noexcept { return count_; }

private:
  struct Term {
    double coef;
    ZeroKind kind;
  };
  struct Loaded {
    std::vector<double> w;
    std::vector<double> tau;
  };
  const ZeroTable& table(ZeroKind kind);
  void load_tables(int count);
  [[nodiscard]] std::vector<std::string> warnings() const;

  UcTarget target_;
  RadiusOptions opts_;
  std::vector<Term> terms_;
  std::map<ZeroKind, ZeroTable> tables_;
  std::map<ZeroKind, Loaded> loaded_;
  int count_ = 0;
};

/// Both routes for one target.
struct DualRadius {
  RadiusResult direct;
  RadiusResult zero_sum;
  /// |direct.radius - zero_sum.radius|
  double agreement = 0.0;
};

[[nodiscard]] DualRadius radius_uc(const UcTarget& target, const RadiusOptions& opts = {});
[[nodiscard]] RadiusResult radius_uc(const UcTarget& target, RadiusMethod method,
                                     const RadiusOptions& opts = {});

[[nodiscard]] RadiusResult radius_uc_qbessel_f(const QBesselParams& p,
                                               RadiusMethod m = RadiusMethod::DirectEq,
                                               const RadiusOptions& opts = {});
[[nodiscard]] RadiusResult radius_uc_qbessel_g(const QBesselParams& p,
                                               RadiusMethod m = RadiusMethod::DirectEq,
                                               const RadiusOptions& opts = {});
[[nodiscard]] RadiusResult radius_uc_qbessel_h(const QBesselParams& p,
                                               RadiusMethod m = RadiusMethod::DirectEq,
                                               const RadiusOptions& opts = {});
[[nodiscard]] RadiusResult radius_uc_wright_f(const WrightParams& p,
                                              RadiusMethod m = RadiusMethod::DirectEq,
                                              const RadiusOptions& opts = {});
[[nodiscard]] RadiusResult radius_uc_wright_g(const WrightParams& p,
                                              RadiusMethod m = RadiusMethod::DirectEq,
                                              const RadiusOptions& opts = {});
[[nodiscard]] RadiusResult radius_uc_wright_h(const WrightParams& p,
                                              RadiusMethod m = RadiusMethod::DirectEq,
                                              const RadiusOptions& opts = {});

/// Bracketed root of a function that is positive at lo and negative at hi:
/// bisection to rel_tol * hi, then one secant step kept only inside the bracket.
struct RootResult {
  double root = 0.0;
  std::pair<double, double> bracket{0.0, 0.0};
  double value = 0.0;
  int iterations = 0;
};
[[nodiscard]] RootResult solve_decreasing(const std::function<double(double)>& f, double lo,
                                          double hi, double rel_tol);

}  // namespace ucr
