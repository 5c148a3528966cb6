#pragma once

#include <complex>

#include "ucr/eval_result.hpp"
#include "ucr/params.hpp"

namespace ucr {

/// 1/Gamma(x) as an entire function: exactly zero at the non-positive integers.
[[nodiscard]] double reciprocal_gamma(double x);

/// phi(rho, beta, z) = sum z^n / (n! Gamma(n rho + beta)) and its z-derivatives,
/// using d^k/dz^k phi(rho, beta, z) = phi(rho, beta + k rho, z).
///
/// Terms are formed in log-magnitude so that large reciprocal-gamma factors for
/// rho < 0 do not overflow. The tail estimate is certified when rho > 0 and
/// beta > 0 (term ratios are then strictly decreasing).
[[nodiscard]] ComplexEval wright_phi(const WrightParams& p, std::complex<double> z, int deriv);

/// lambda(z) = phi(rho, beta, -z^2) and its derivatives by the chain rule.
[[nodiscard]] ComplexEval lambda_func(const WrightParams& p, std::complex<double> z, int deriv);

/// Psi(z) = z^beta lambda(z) on the positive real axis.
[[nodiscard]] RealEval psi_func(const WrightParams& p, double z, int deriv);

/// f = (z^beta Gamma(beta) phi(rho,beta,-z^2))^{1/beta}, g = z Gamma(beta) phi(rho,beta,-z^2),
/// h = z Gamma(beta) phi(rho,beta,-z). F goes through log-derivatives of
/// Gamma(beta) lambda, never a fractional power of z. Requires beta > 0.
[[nodiscard]] ComplexEval normalized_wright(const WrightParams& p, Norm norm,
                                            std::complex<double> z, int deriv);

/// 1 + z f''/f' for the Wright normalizations; for F this is
/// 1 + z Psi''/Psi' + (1/beta - 1) z Psi'/Psi. Requires rho > 0, beta > 0.
[[nodiscard]] std::complex<double> ratio_one_plus_zfpp_fp_wright(const WrightParams& p, Norm norm,
                                                                 std::complex<double> z);

}  // namespace ucr
