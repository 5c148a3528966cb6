#pragma once

#include <complex>
#include <string>
#include <variant>

#include "ucr/params.hpp"
#include "ucr/zeros.hpp"

namespace ucr {

/// One of the nine normalized functions: a family member plus a normalization.
struct UcTarget {
  std::variant<QBesselParams, WrightParams> family;
  Norm norm = Norm::G;

  /// Hypotheses for radius work: nu > 0 for the q-Bessel f normalization,
  /// nu > -1 otherwise; rho > 0 and beta > 0 for Wright.
  void validate() const;
  [[nodiscard]] bool is_qbessel() const noexcept { return family.index() == 0; }
  /// Prefactor exponent p (nu or beta).
  [[nodiscard]] double exponent() const;
  /// Zeros whose first member bounds the radius search: j', alpha/gamma,
  /// beta/delta, zeta', theta or tau.
  [[nodiscard]] ZeroKind critical_kind() const;
  /// True for q-Bessel g and h with nu in (-1, 0], where the product
  /// representation of the derivative is not covered by the cited lemma.
  [[nodiscard]] bool outside_factorization_hypotheses() const;
  [[nodiscard]] std::string descriptor() const;
};

/// Q(z) = 1 + z f''(z) / f'(z).
[[nodiscard]] std::complex<double> convexity_ratio(const UcTarget& t, std::complex<double> z);

/// First critical value in the radius variable: the first critical zero for f
/// and g, its square (or tau_1 itself) for h.
[[nodiscard]] double critical_value(const ZeroTable& table, Norm norm);

}  // namespace ucr
