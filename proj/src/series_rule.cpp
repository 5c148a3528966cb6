#include "ucr/series_rule.hpp"

#include <cmath>

namespace ucr {
namespace {

double qbessel_ratio(const QBesselParams& p, int n) {
  const double q = p.q;
  const double denom = (-std::expm1(n * std::log(q))) * (-std::expm1((n + p.nu) * std::log(q)));
  if (p.kind == QKind::Jackson2) {
    return -std::pow(q, 2.0 * n - 1.0 + p.nu) / (4.0 * denom);
  }
  return -std::pow(q, static_cast<double>(n)) / denom;
}

double qbessel_log_ratio(const QBesselParams& p, int n) {
  const double lq = std::log(p.q);
  const double log_denom =
      std::log(-std::expm1(n * lq)) + std::log(-std::expm1((n + p.nu) * lq));
  if (p.kind == QKind::Jackson2) {
    return (2.0 * n - 1.0 + p.nu) * lq - std::log(4.0) - log_denom;
  }
  return n * lq - log_denom;
}

double wright_log_ratio(const WrightParams& p, int n) {
  return std::lgamma((n - 1) * p.rho + p.beta) - std::lgamma(n * p.rho + p.beta) -
         std::log(static_cast<double>(n));
}

}  // namespace

double coefficient_ratio(const SeriesRule& rule, int n) {
  return std::visit(
      [n](const auto& r) -> double {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, ClassicalBesselRule>) {
          return -1.0 / (4.0 * n * (n + r.nu));
        } else if constexpr (std::is_same_v<T, QBesselRule>) {
          return qbessel_ratio(r.params, n);
        } else {
          return -std::exp(wright_log_ratio(r.params, n));
        }
      },
      rule);
}

double log_abs_coefficient_ratio(const SeriesRule& rule, int n) {
  return std::visit(
      [n](const auto& r) -> double {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, ClassicalBesselRule>) {
          return -std::log(4.0 * n * (n + r.nu));
        } else if constexpr (std::is_same_v<T, QBesselRule>) {
          return qbessel_log_ratio(r.params, n);
        } else {
          return wright_log_ratio(r.params, n);
        }
      },
      rule);
}

double prefactor_exponent(const SeriesRule& rule) {
  return std::visit(
      [](const auto& r) -> double {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, ClassicalBesselRule>) {
          return r.nu;
        } else if constexpr (std::is_same_v<T, QBesselRule>) {
          return r.params.nu;
        } else {
          return r.params.beta;
        }
      },
      rule);
}

}  // namespace ucr
