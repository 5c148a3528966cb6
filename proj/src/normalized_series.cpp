#include "ucr/normalized_series.hpp"

#include <cmath>
#include <limits>

#include "ucr/errors.hpp"
#include "ucr/power_series.hpp"

namespace ucr {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void require_deriv(int deriv) {
  if (deriv < 0 || deriv > 2) throw DomainError("derivative order must be 0, 1 or 2");
}

void require_nonzero(std::complex<double> den, double err, const char* what) {
  if (!(std::abs(den) > 8.0 * err) || std::abs(den) == 0.0) {
    throw NearCriticalPoint(std::string("denominator ") + what +
                            " vanishes numerically; evaluation point is too close to a zero");
  }
}

}  // namespace

ComplexEval normalized_from_series(const SeriesRule& rule, Norm norm, std::complex<double> z,
                                   int deriv) {
  require_deriv(deriv);
  const double az = std::abs(z);
  ComplexEval out;

  if (norm == Norm::H) {
    const PowerSeriesValue s = eval_power_series(rule, z, 2);
    out.terms_used = s.terms;
    switch (deriv) {
      case 0:
        out.value = z * s.d[0];
        out.abs_error_est = az * s.err[0];
        break;
      case 1:
        out.value = s.d[0] + z * s.d[1];
        out.abs_error_est = s.err[0] + az * s.err[1];
        break;
      default:
        out.value = 2.0 * s.d[1] + z * s.d[2];
        out.abs_error_est = 2.0 * s.err[1] + az * s.err[2];
        break;
    }
    return out;
  }

  const EvenSeriesValue s = eval_even_series(rule, z);
  out.terms_used = s.terms;
  if (norm == Norm::G) {
    switch (deriv) {
      case 0:
        out.value = z * s.s;
        out.abs_error_est = az * s.err_s;
        break;
      case 1:
        out.value = s.s + z * s.ds;
        out.abs_error_est = s.err_s + az * s.err_ds;
        break;
      default:
        out.value = 2.0 * s.ds + z * s.dds;
        out.abs_error_est = 2.0 * s.err_ds + az * s.err_dds;
        break;
    }
    return out;
  }

  const double p = prefactor_exponent(rule);
  if (p == 0.0) throw DomainError("the F normalization requires a nonzero order");
  require_nonzero(s.s, s.err_s, "S");
  const std::complex<double> u = std::exp(std::log(s.s) / p);
  const std::complex<double> L = s.ds / s.s;
  const std::complex<double> dL = s.dds / s.s - L * L;
  std::complex<double> value;
  switch (deriv) {
    case 0: value = z * u; break;
    case 1: value = u * (1.0 + z * L / p); break;
    default: value = (u / p) * (L * (1.0 + z * L / p) + L + z * dL); break;
  }
  const double rel = (s.err_s + az * s.err_ds + az * az * s.err_dds) / std::abs(s.s) *
                     (1.0 + 1.0 / std::abs(p));
  out.value = value;
  out.abs_error_est = std::abs(value) * (rel + 4.0 * kEps);
  return out;
}

std::complex<double> convexity_ratio_from_series(const SeriesRule& rule, Norm norm,
                                                 std::complex<double> z) {
  if (z == std::complex<double>(0.0, 0.0)) return 1.0;

  if (norm == Norm::H) {
    const PowerSeriesValue s = eval_power_series(rule, z, 2);
    const std::complex<double> den = s.d[0] + z * s.d[1];
    require_nonzero(den, s.err[0] + std::abs(z) * s.err[1] + kEps * s.abs_sum[0], "h'");
    return 1.0 + z * (2.0 * s.d[1] + z * s.d[2]) / den;
  }

  const EvenSeriesValue s = eval_even_series(rule, z);
  const double az = std::abs(z);
  if (norm == Norm::G) {
    const std::complex<double> den = s.s + z * s.ds;
    require_nonzero(den, s.err_s + az * s.err_ds + kEps * s.scale, "g'");
    return 1.0 + z * (2.0 * s.ds + z * s.dds) / den;
  }

  const double p = prefactor_exponent(rule);
  if (p == 0.0) throw DomainError("the F normalization requires a nonzero order");
  require_nonzero(s.s, s.err_s + kEps * s.scale, "S");
  const std::complex<double> t = p * s.s + z * s.ds;
  const std::complex<double> dt = (p + 1.0) * s.ds + z * s.dds;
  require_nonzero(t, std::abs(p) * s.err_s + az * s.err_ds + kEps * (std::abs(p) + 1.0) * s.scale,
                  "f'");
  return 1.0 + (1.0 / p - 1.0) * z * s.ds / s.s + z * dt / t;
}

}  // namespace ucr
