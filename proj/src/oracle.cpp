#include "ucr/oracle.hpp"

#include <cmath>
#include <complex>
#include <exception>
#include <limits>
#include <numbers>
#include <vector>

#include "ucr/errors.hpp"

namespace ucr {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::vector<double> margin_angles(const MarginOptions& o) {
  if (o.samples < 64) throw DomainError("margin sampling needs at least 64 angles");
  if (o.refine < 0) throw DomainError("refinement count must be non-negative");
  std::vector<double> a;
  a.reserve(o.samples + o.refine);
  for (int k = 0; k < o.samples; ++k) a.push_back(kTwoPi * k / o.samples);
  const double step = kTwoPi / o.samples;
  const int half = o.refine / 2;
  for (int j = 0; j < o.refine; ++j) {
    const double t = half > 0 ? step * (j - half) / half : 0.0;
    a.push_back(t < 0.0 ? t + kTwoPi : t);
  }
  return a;
}

double margin_at(const UcTarget& t, double r, double theta) {
  const std::complex<double> q = convexity_ratio(t, std::polar(r, theta));
  return q.real() - std::abs(q - 1.0);
}

MarginReport reduce(double r, const std::vector<double>& angles, const std::vector<double>& m,
                    int samples) {
  MarginReport rep;
  rep.r = r;
  rep.samples = samples;
  rep.min_margin = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < m.size(); ++k) {
    if (m[k] < rep.min_margin) {
      rep.min_margin = m[k];
      rep.argmin_angle = angles[k];
    }
  }
  return rep;
}

void check_r(double r) {
  if (!(r > 0.0) || !std::isfinite(r)) throw DomainError("margin radius must be positive");
}

}  // namespace

MarginReport uc_margin_serial(const UcTarget& target, double r, const MarginOptions& opts) {
  target.validate();
  check_r(r);
  const std::vector<double> angles = margin_angles(opts);
  std::vector<double> m(angles.size());
  for (std::size_t k = 0; k < angles.size(); ++k) m[k] = margin_at(target, r, angles[k]);
  return reduce(r, angles, m, static_cast<int>(angles.size()));
}

MarginReport uc_margin(const UcTarget& target, double r, const MarginOptions& opts) {
  target.validate();
  check_r(r);
  const std::vector<double> angles = margin_angles(opts);
  const long n = static_cast<long>(angles.size());
  std::vector<double> m(angles.size());
  std::exception_ptr failure;
#pragma omp parallel for schedule(static)
  for (long k = 0; k < n; ++k) {
    try {
      m[k] = margin_at(target, r, angles[k]);
    } catch (...) {
#pragma omp critical(ucr_margin_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return reduce(r, angles, m, static_cast<int>(n));
}

RadiusResult oracle_radius(const UcTarget& target, const OracleOptions& opts) {
  target.validate();
  if (!(opts.tol > 0.0) || !(opts.upper_fraction > 0.0 && opts.upper_fraction < 1.0)) {
    throw DomainError("invalid oracle options");
  }
  ScanOptions coarse;
  coarse.tol = 1e-10;
  const ZeroTable crit = scan_and_refine(ZeroTarget{target.family, target.critical_kind()}, 1, coarse);
  const double domain = critical_value(crit, target.norm);
  double lo = 0.0;
  double hi = opts.upper_fraction * domain;

  auto positive = [&](double r) {
    return uc_margin(target, r, opts.margin).min_margin > opts.margin_tol;
  };
  RadiusResult out;
  out.method = RadiusMethod::Oracle;
  out.domain_upper = domain;
  out.outside_hypotheses = target.outside_factorization_hypotheses();
  if (positive(hi)) {
    throw NonBracketing("margin stays positive up to " + std::to_string(hi) +
                        "; the domain upper estimate is too small");
  }
  while (hi - lo > opts.tol) {
    const double mid = 0.5 * (lo + hi);
    (positive(mid) ? lo : hi) = mid;
    ++out.iterations;
  }
  out.radius = 0.5 * (lo + hi);
  out.bracket = {lo, hi};
  out.residual = uc_margin(target, out.radius, opts.margin).min_margin;
  return out;
}

CircleInequalityReport circle_inequalities(double a, double b, double lambda, double r,
                                           int samples) {
  if (!(a > b && b > r && r >= 0.0)) throw DomainError("circle inequalities need a > b > r >= 0");
  if (!(lambda >= 0.0 && lambda <= 1.0)) throw DomainError("lambda must lie in [0, 1]");
  if (samples < 1) throw DomainError("need at least one sample");
  CircleInequalityReport rep;
  rep.bound_single = r / (b - r);
  rep.bound_mixed = rep.bound_single - lambda * r / (a - r);
  double re_le_abs = std::numeric_limits<double>::infinity();
  for (int k = 0; k < samples; ++k) {
    const std::complex<double> z = std::polar(r, kTwoPi * k / samples);
    const std::complex<double> single = z / (b - z);
    const std::complex<double> mixed = single - lambda * z / (a - z);
    rep.max_abs_mixed = std::max(rep.max_abs_mixed, std::abs(mixed));
    rep.max_re_mixed = std::max(rep.max_re_mixed, mixed.real());
    rep.max_re_single = std::max(rep.max_re_single, single.real());
    rep.max_abs_single = std::max(rep.max_abs_single, std::abs(single));
    re_le_abs = std::min(re_le_abs, std::abs(single) - single.real());
  }
  rep.min_slack = std::min({rep.bound_mixed - rep.max_abs_mixed, rep.bound_mixed - rep.max_re_mixed,
                            rep.bound_single - rep.max_abs_single, rep.bound_single - rep.max_re_single,
                            re_le_abs});
  rep.allowance = 16.0 * std::numeric_limits<double>::epsilon() * (1.0 + rep.bound_single);
  return rep;
}

}  // namespace ucr
