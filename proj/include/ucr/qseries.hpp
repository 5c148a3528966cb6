#pragma once

#include <complex>
#include <optional>

#include "ucr/eval_result.hpp"
#include "ucr/params.hpp"
#include "ucr/series_rule.hpp"

namespace ucr {

/// (a;q)_n for finite n, (a;q)_inf when n is empty.
///
/// The infinite product stops once |a q^{k-1}| drops below machine epsilon; the
/// error estimate is |P| |a q^K| / (1 - q), the size of the log of the omitted
/// factors, plus accumulated rounding.
[[nodiscard]] RealEval q_pochhammer(double a, double q, std::optional<long> n);

/// c_nu(q) = (q;q)_inf / (q^{nu+1};q)_inf.
[[nodiscard]] RealEval c_nu(double nu, double q);

/// J^(s)_nu(z;q) and its first two derivatives in z.
///
/// The z^nu prefactor uses the principal branch; for non-integer nu use z on
/// the positive real axis to stay on the real branch. deriv must be 0, 1 or 2.
[[nodiscard]] ComplexEval jackson_qbessel(const QBesselParams& p, std::complex<double> z,
                                          int deriv);

/// Ascending series for the classical J_nu(z), z >= 0.
[[nodiscard]] RealEval classical_bessel(double nu, double z);

/// f, g or h and their derivatives.
///
/// F is evaluated as z * exp(log S(z) / nu) with S the normalized even part, which
/// equals the principal-branch root for |z| below the first zero of J; it never
/// forms (2^nu c_nu J)^{1/nu}. H is computed from the power series in z
/// directly, which coincides with the principal value of the sqrt(z) form.
/// F requires nu != 0.
[[nodiscard]] ComplexEval normalized_qbessel(const QBesselParams& p, Norm norm,
                                             std::complex<double> z, int deriv);

/// 1 + z f''(z) / f'(z) for the requested normalization.
///
/// F uses 1 + (1/nu - 1) z J'/J + z J''/J' written through the stripped series,
/// so no branch of z^nu is involved. Throws NearCriticalPoint when a
/// denominator is numerically zero.
[[nodiscard]] std::complex<double> ratio_one_plus_zfpp_fp(const QBesselParams& p, Norm norm,
                                                          std::complex<double> z);

/// Constant K with J^(s)_nu(z) = K z^nu S(z).
[[nodiscard]] double qbessel_prefactor(const QBesselParams& p);

}  // namespace ucr
