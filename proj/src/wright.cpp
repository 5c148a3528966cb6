#include "ucr/wright.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <utility>

#include "ucr/errors.hpp"
#include "ucr/normalized_series.hpp"
#include "ucr/power_series.hpp"
#include "ucr/series_rule.hpp"
#include "ucr/summation.hpp"

namespace ucr {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kCancellationRatio = 16.0;

void require_deriv(int deriv) {
  if (deriv < 0 || deriv > 2) throw DomainError("derivative order must be 0, 1 or 2");
}

// sin(pi x) with exact zeros at the integers.
double sin_pi(double x) {
  const double n = std::round(x);
  const double r = x - n;
  const double s = std::sin(std::numbers::pi * r);
  return (static_cast<long long>(n) % 2 == 0) ? s : -s;
}

// log|1/Gamma(x)| and its sign; sign 0 at the poles of Gamma.
struct LogRGamma {
  double log_abs;
  int sign;
};

LogRGamma log_reciprocal_gamma(double x) {
  if (x > 0.0) return {-std::lgamma(x), 1};
  if (x == std::floor(x)) return {kNegInf, 0};
  // 1/Gamma(x) = Gamma(1-x) sin(pi x) / pi for x < 0.
  const double s = sin_pi(x);
  return {std::lgamma(1.0 - x) + std::log(std::abs(s)) - std::log(std::numbers::pi),
          s > 0.0 ? 1 : -1};
}

// log |z^n / n!| + log |1/Gamma(n rho + beta)|
double log_term(double log_az, int n, const LogRGamma& g) {
  if (g.sign == 0) return kNegInf;
  return n * log_az - std::lgamma(n + 1.0) + g.log_abs;
}

}  // namespace

double reciprocal_gamma(double x) {
  if (x > 0.0 && x < 170.0) return 1.0 / std::tgamma(x);
  const LogRGamma g = log_reciprocal_gamma(x);
  if (g.sign == 0) return 0.0;
  return g.sign * std::exp(g.log_abs);
}

ComplexEval wright_phi(const WrightParams& p, std::complex<double> z, int deriv) {
  p.validate_series();
  require_deriv(deriv);
  const double rho = p.rho;
  const double beta = p.beta + deriv * p.rho;
  ComplexEval out;

  if (z == std::complex<double>(0.0, 0.0)) {
    out.value = reciprocal_gamma(beta);
    out.terms_used = 1;
    return out;
  }

  if (rho == 0.0) {
    // phi(0, beta, z) = e^z / Gamma(beta)
    out.value = std::exp(z) * reciprocal_gamma(beta);
    out.abs_error_est = 4.0 * kEps * std::abs(out.value);
    out.terms_used = 1;
    return out;
  }

  const double az = std::abs(z);
  const double log_az = std::log(az);
  const double theta = std::arg(z);

  CompensatedComplexSum sum;
  double abs_sum = 0.0;
  double tail = 0.0;
  bool converged = false;
  int n = 0;
  auto term_log = [&](int m) { return log_term(log_az, m, log_reciprocal_gamma(m * rho + beta)); };
  for (; n < kMaxSeriesTerms; ++n) {
    const LogRGamma g = log_reciprocal_gamma(n * rho + beta);
    if (g.sign != 0) {
      const double mag = std::exp(log_term(log_az, n, g));
      const std::complex<double> t = std::polar(g.sign * mag, n * theta);
      sum.add(t);
      abs_sum += mag;
    }
    if (n < 2) continue;
    // Next two non-vanishing terms; terms at poles of Gamma are exactly zero.
    auto next_finite = [&](int from) {
      for (int j = from; j < from + 4; ++j) {
        const double l = term_log(j);
        if (std::isfinite(l)) return std::pair<int, double>{j, l};
      }
      return std::pair<int, double>{-1, kNegInf};
    };
    const auto [m1, l1] = next_finite(n + 1);
    if (m1 < 0) {
      converged = true;
      break;
    }
    const auto [m2, l2] = next_finite(m1 + 1);
    if (m2 < 0) continue;
    const double ratio = std::exp((l2 - l1) / (m2 - m1));
    if (!(ratio < 1.0)) continue;
    const double bound = std::exp(l1) / (1.0 - ratio);
    const double partial = std::abs(sum.value());
    if (bound <= kSeriesRelTol * partial || bound < std::numeric_limits<double>::min()) {
      tail = bound;
      converged = true;
      break;
    }
  }
  if (!converged) throw NonConvergence("Wright series did not converge");
  out.value = sum.value();
  out.abs_error_est = tail + 4.0 * kEps * abs_sum;
  out.terms_used = n + 1;
  if (rho > 0.0 && beta > 0.0 && abs_sum > kCancellationRatio * std::abs(out.value)) {
    // Heavy cancellation: the coefficient rule path re-sums in MPFR.
    const PowerSeriesValue ps = eval_power_series(WrightRule{{rho, beta}}, -z, 0);
    const double rg = reciprocal_gamma(beta);
    out.value = ps.d[0] * rg;
    out.abs_error_est = ps.err[0] * rg + 2.0 * kEps * std::abs(out.value);
  }
  return out;
}

ComplexEval lambda_func(const WrightParams& p, std::complex<double> z, int deriv) {
  require_deriv(deriv);
  const std::complex<double> w = -z * z;
  const double az = std::abs(z);
  ComplexEval out;
  if (deriv == 0) return wright_phi(p, w, 0);
  const ComplexEval d1 = wright_phi(p, w, 1);
  if (deriv == 1) {
    out.value = -2.0 * z * d1.value;
    out.abs_error_est = 2.0 * az * d1.abs_error_est;
    out.terms_used = d1.terms_used;
    return out;
  }
  const ComplexEval d2 = wright_phi(p, w, 2);
  out.value = -2.0 * d1.value + 4.0 * z * z * d2.value;
  out.abs_error_est = 2.0 * d1.abs_error_est + 4.0 * az * az * d2.abs_error_est;
  out.terms_used = std::max(d1.terms_used, d2.terms_used);
  return out;
}

RealEval psi_func(const WrightParams& p, double z, int deriv) {
  require_deriv(deriv);
  if (!(z > 0.0)) throw DomainError("psi_func requires z > 0");
  const double b = p.beta;
  const ComplexEval l0 = lambda_func(p, z, 0);
  RealEval out;
  out.terms_used = l0.terms_used;
  const double zb = std::pow(z, b);
  if (deriv == 0) {
    out.value = zb * l0.value.real();
    out.abs_error_est = zb * l0.abs_error_est;
    return out;
  }
  const ComplexEval l1 = lambda_func(p, z, 1);
  if (deriv == 1) {
    out.value = zb * (b / z * l0.value.real() + l1.value.real());
    out.abs_error_est = zb * (std::abs(b) / z * l0.abs_error_est + l1.abs_error_est);
    return out;
  }
  const ComplexEval l2 = lambda_func(p, z, 2);
  out.value = zb * (b * (b - 1.0) / (z * z) * l0.value.real() + 2.0 * b / z * l1.value.real() +
                    l2.value.real());
  out.abs_error_est = zb * (std::abs(b * (b - 1.0)) / (z * z) * l0.abs_error_est +
                            2.0 * std::abs(b) / z * l1.abs_error_est + l2.abs_error_est);
  return out;
}

ComplexEval normalized_wright(const WrightParams& p, Norm norm, std::complex<double> z,
                              int deriv) {
  p.validate_series();
  require_deriv(deriv);
  if (!(p.beta > 0.0)) throw DomainError("normalized Wright functions require beta > 0");
  const double gb = std::tgamma(p.beta);
  const double az = std::abs(z);
  ComplexEval out;

  if (norm == Norm::H) {
    const std::complex<double> w = -z;
    const ComplexEval f0 = wright_phi(p, w, 0);
    out.terms_used = f0.terms_used;
    if (deriv == 0) {
      out.value = gb * z * f0.value;
      out.abs_error_est = gb * az * f0.abs_error_est;
      return out;
    }
    const ComplexEval f1 = wright_phi(p, w, 1);
    if (deriv == 1) {
      out.value = gb * (f0.value - z * f1.value);
      out.abs_error_est = gb * (f0.abs_error_est + az * f1.abs_error_est);
      return out;
    }
    const ComplexEval f2 = wright_phi(p, w, 2);
    out.value = gb * (-2.0 * f1.value + z * f2.value);
    out.abs_error_est = gb * (2.0 * f1.abs_error_est + az * f2.abs_error_est);
    return out;
  }

  const ComplexEval l0 = lambda_func(p, z, 0);
  const ComplexEval l1 = lambda_func(p, z, 1);
  const ComplexEval l2 = lambda_func(p, z, 2);
  out.terms_used = std::max({l0.terms_used, l1.terms_used, l2.terms_used});
  const std::complex<double> s = gb * l0.value;
  const std::complex<double> ds = gb * l1.value;
  const std::complex<double> dds = gb * l2.value;
  if (norm == Norm::G) {
    switch (deriv) {
      case 0:
        out.value = z * s;
        out.abs_error_est = gb * az * l0.abs_error_est;
        break;
      case 1:
        out.value = s + z * ds;
        out.abs_error_est = gb * (l0.abs_error_est + az * l1.abs_error_est);
        break;
      default:
        out.value = 2.0 * ds + z * dds;
        out.abs_error_est = gb * (2.0 * l1.abs_error_est + az * l2.abs_error_est);
        break;
    }
    return out;
  }

  // F: z * (Gamma(beta) lambda)^{1/beta} via log-derivatives.
  const double b = p.beta;
  if (!(std::abs(s) > 8.0 * gb * l0.abs_error_est)) {
    throw NearCriticalPoint("f normalization evaluated at a zero of lambda");
  }
  const std::complex<double> u = std::exp(std::log(s) / b);
  const std::complex<double> L = ds / s;
  const std::complex<double> dL = dds / s - L * L;
  switch (deriv) {
    case 0: out.value = z * u; break;
    case 1: out.value = u * (1.0 + z * L / b); break;
    default: out.value = (u / b) * (L * (1.0 + z * L / b) + L + z * dL); break;
  }
  const double rel =
      gb * (l0.abs_error_est + az * l1.abs_error_est + az * az * l2.abs_error_est) / std::abs(s);
  out.abs_error_est = std::abs(out.value) * (rel * (1.0 + 1.0 / b) + 4.0 * kEps);
  return out;
}

std::complex<double> ratio_one_plus_zfpp_fp_wright(const WrightParams& p, Norm norm,
                                                   std::complex<double> z) {
  p.validate_radius();
  return convexity_ratio_from_series(WrightRule{p}, norm, z);
}

}  // namespace ucr
