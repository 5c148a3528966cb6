#include "ucr/qseries.hpp"

#include <array>
#include <cmath>
#include <limits>

#include "ucr/errors.hpp"
#include "ucr/normalized_series.hpp"
#include "ucr/power_series.hpp"
#include "ucr/summation.hpp"

namespace ucr {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void require_q(double q) {
  if (!std::isfinite(q) || !(q > 0.0 && q < 1.0)) {
    throw DomainError("deformation parameter must satisfy 0 < q < 1 (got q = " + std::to_string(q) +
                      ")");
  }
}

void require_deriv(int deriv) {
  if (deriv < 0 || deriv > 2) throw DomainError("derivative order must be 0, 1 or 2");
}

// Falling factorial x (x-1) ... (x-k+1).
double falling(double x, int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= (x - i);
  return r;
}

}  // namespace

RealEval q_pochhammer(double a, double q, std::optional<long> n) {
  require_q(q);
  RealEval out;
  if (n) {
    if (*n < 0) throw DomainError("q-Pochhammer length must be non-negative");
    double prod = 1.0;
    double aqk = a;
    for (long k = 0; k < *n; ++k) {
      prod *= (1.0 - aqk);
      aqk *= q;
    }
    out.value = prod;
    out.abs_error_est = std::abs(prod) * 2.0 * kEps * static_cast<double>(*n);
    out.terms_used = static_cast<int>(std::max<long>(*n, 1));
    return out;
  }

  // Infinite product. Factors with |a q^k| < eps no longer change the result.
  double aqk = a;
  int k = 0;
  if (a < 1.0) {
    // All factors positive: sum logarithms with compensation.
    CompensatedSum log_sum;
    double abs_logs = 0.0;
    while (std::abs(aqk) >= kEps * 0.5) {
      const double l = std::log1p(-aqk);
      log_sum.add(l);
      abs_logs += std::abs(l);
      aqk *= q;
      if (++k > 10'000'000) throw NonConvergence("q-Pochhammer product did not converge");
    }
    out.value = std::exp(log_sum.value());
    out.abs_error_est =
        out.value * (std::abs(aqk) / (1.0 - q) + 2.0 * kEps * (1.0 + abs_logs / std::max(1, k)));
  } else {
    double prod = 1.0;
    while (std::abs(aqk) >= kEps * 0.5) {
      prod *= (1.0 - aqk);
      aqk *= q;
      if (++k > 10'000'000) throw NonConvergence("q-Pochhammer product did not converge");
    }
    out.value = prod;
    out.abs_error_est = std::abs(prod) * (std::abs(aqk) / (1.0 - q) + 2.0 * kEps * k);
  }
  out.terms_used = std::max(k, 1);
  return out;
}

RealEval c_nu(double nu, double q) {
  QBesselParams{QKind::Jackson2, nu, q}.validate();
  const RealEval num = q_pochhammer(q, q, std::nullopt);
  const RealEval den = q_pochhammer(std::pow(q, nu + 1.0), q, std::nullopt);
  RealEval out;
  out.value = num.value / den.value;
  out.abs_error_est = std::abs(out.value) * (num.abs_error_est / std::abs(num.value) +
                                             den.abs_error_est / std::abs(den.value) + kEps);
  out.terms_used = std::max(num.terms_used, den.terms_used);
  return out;
}

double qbessel_prefactor(const QBesselParams& p) {
  const double c = c_nu(p.nu, p.q).value;
  return p.kind == QKind::Jackson2 ? 1.0 / (std::pow(2.0, p.nu) * c) : 1.0 / c;
}

ComplexEval jackson_qbessel(const QBesselParams& p, std::complex<double> z, int deriv) {
  p.validate();
  require_deriv(deriv);
  const double K = qbessel_prefactor(p);
  const SeriesRule rule = QBesselRule{p};
  const double nu = p.nu;
  ComplexEval out;

  if (z == std::complex<double>(0.0, 0.0)) {
    // Term-wise: coefficient of z^{2n+nu-k} after k differentiations.
    std::complex<double> value = 0.0;
    double b = 1.0;
    for (int n = 0; 2 * n + nu - deriv <= 0.0; ++n) {
      if (n > 0) b *= coefficient_ratio(rule, n);
      const double c = K * b * falling(2.0 * n + nu, deriv);
      const double e = 2.0 * n + nu - deriv;
      if (e == 0.0) {
        value += c;
      } else if (c != 0.0) {
        throw DomainError("J^(s)_nu derivative is singular at z = 0 for this order");
      }
    }
    out.value = value;
    out.terms_used = 1;
    return out;
  }

  const EvenSeriesValue s = eval_even_series(rule, z);
  std::complex<double> bracket;
  double bracket_err = 0.0;
  const double az = std::abs(z);
  switch (deriv) {
    case 0:
      bracket = s.s;
      bracket_err = s.err_s;
      break;
    case 1:
      bracket = nu * s.s + z * s.ds;
      bracket_err = std::abs(nu) * s.err_s + az * s.err_ds;
      break;
    default:
      bracket = nu * (nu - 1.0) * s.s + 2.0 * nu * z * s.ds + z * z * s.dds;
      bracket_err = std::abs(nu * (nu - 1.0)) * s.err_s + 2.0 * std::abs(nu) * az * s.err_ds +
                    az * az * s.err_dds;
      break;
  }
  const std::complex<double> pre = K * std::pow(z, nu - deriv);
  out.value = pre * bracket;
  out.abs_error_est = std::abs(pre) * bracket_err + 4.0 * kEps * std::abs(out.value);
  out.terms_used = s.terms;
  return out;
}

RealEval classical_bessel(double nu, double z) {
  if (!(nu > -1.0)) throw DomainError("classical Bessel order must satisfy nu > -1");
  if (!(z >= 0.0)) throw DomainError("classical_bessel expects z >= 0");
  RealEval out;
  if (z == 0.0) {
    if (nu == 0.0) {
      out.value = 1.0;
    } else if (nu > 0.0) {
      out.value = 0.0;
    } else {
      throw DomainError("J_nu is singular at z = 0 for nu < 0");
    }
    out.terms_used = 1;
    return out;
  }
  const PowerSeriesValue s = eval_power_series(ClassicalBesselRule{nu}, z * z, 0);
  const double pre = std::exp(nu * std::log(0.5 * z) - std::lgamma(nu + 1.0));
  out.value = pre * s.d[0].real();
  out.abs_error_est = pre * s.err[0] + 4.0 * kEps * std::abs(out.value);
  out.terms_used = s.terms;
  return out;
}

ComplexEval normalized_qbessel(const QBesselParams& p, Norm norm, std::complex<double> z,
                               int deriv) {
  p.validate();
  if (norm == Norm::F && p.nu == 0.0) {
    throw DomainError("the f normalization is undefined for nu = 0");
  }
  return normalized_from_series(QBesselRule{p}, norm, z, deriv);
}

std::complex<double> ratio_one_plus_zfpp_fp(const QBesselParams& p, Norm norm,
                                            std::complex<double> z) {
  p.validate();
  if (norm == Norm::F && p.nu == 0.0) {
    throw DomainError("the f normalization is undefined for nu = 0");
  }
  return convexity_ratio_from_series(QBesselRule{p}, norm, z);
}

}  // namespace ucr
