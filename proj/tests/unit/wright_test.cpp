#include <gtest/gtest.h>

#include <cmath>
#include <complex>

#include "support/reference.hpp"
#include "ucr/errors.hpp"
#include "ucr/limits.hpp"
#include "ucr/qseries.hpp"
#include "ucr/wright.hpp"

using namespace ucr;
using cd = std::complex<double>;

TEST(ReciprocalGamma, ZeroAtPoles) {
  for (double x : {0.0, -1.0, -2.0, -7.0}) EXPECT_EQ(reciprocal_gamma(x), 0.0) << x;
  EXPECT_NEAR(reciprocal_gamma(0.5), 1.0 / std::sqrt(M_PI), 1e-15);
  EXPECT_NEAR(reciprocal_gamma(-0.5), -0.5 / std::sqrt(M_PI), 1e-15);
  EXPECT_NEAR(reciprocal_gamma(6.0), 1.0 / 120.0, 1e-17);
}

TEST(WrightPhi, SeriesHead) {
  EXPECT_EQ(wright_phi({1.0, 1.0}, 0.0, 0).value, cd(1.0));
  EXPECT_EQ(wright_phi({1.0, 2.0}, 0.0, 0).value, cd(1.0));
}

TEST(WrightPhi, BesselIdentityAtOneAndAHalf) {
  const double x = 1.5;
  const double got = wright_phi({1.0, 1.0}, -x * x / 4, 0).value.real();
  EXPECT_NEAR(got, ref::d(ref::classical_j(ref::R(0), ref::R(x))), 1e-12);
}

TEST(WrightPhi, AgainstExtendedPrecision) {
  for (double rho : {0.5, 1.0, 2.0}) {
    for (double beta : {0.5, 1.5}) {
      for (double x : {-6.0, -1.0, 0.7}) {
        for (int k = 0; k <= 2; ++k) {
          const double want =
              ref::d(ref::wright_phi(ref::R(rho), ref::R(beta), ref::R(x), k));
          EXPECT_NEAR(wright_phi({rho, beta}, x, k).value.real(), want,
                      1e-14 * std::max(1.0, std::abs(want)))
              << rho << " " << beta << " " << x << " " << k;
        }
      }
    }
  }
}

TEST(WrightPhi, NegativeRhoStaysFinite) {
  const auto r = wright_phi({-0.5, 1.0}, 0.8, 0);
  EXPECT_TRUE(std::isfinite(r.value.real()));
  EXPECT_THROW((void)wright_phi({-1.0, 1.0}, 0.8, 0), DomainError);
}

TEST(Lambda, HeadAndEvenness) {
  for (WrightParams p : {WrightParams{1.0, 1.0}, WrightParams{0.5, 1.5}, WrightParams{2.0, 0.5}}) {
    EXPECT_NEAR(lambda_func(p, 0.0, 0).value.real(), reciprocal_gamma(p.beta), 1e-15);
    EXPECT_EQ(lambda_func(p, 0.0, 1).value.real(), 0.0);
    for (double z : {0.3, 1.2, 2.9}) {
      const double a = lambda_func(p, z, 0).value.real();
      const double b = lambda_func(p, -z, 0).value.real();
      EXPECT_NEAR(a, b, 1e-14 * std::max(1.0, std::abs(a)));
      const cd zc(z, 0.4);
      EXPECT_LT(std::abs(lambda_func(p, zc, 0).value - lambda_func(p, -zc, 0).value),
                1e-14 * std::max(1.0, std::abs(lambda_func(p, zc, 0).value)));
    }
  }
}

TEST(Lambda, UnitArgumentAgainstExtendedPrecision) {
  const double want = ref::d(ref::wright_phi(ref::R(1), ref::R(1), ref::R(-1), 0));
  EXPECT_NEAR(lambda_func({1.0, 1.0}, 1.0, 0).value.real(), want, 1e-13);
}

TEST(Psi, LeadingOrder) {
  const double z = 1e-5;
  EXPECT_NEAR(psi_func({1.0, 1.0}, z, 0).value / z, 1.0, 1e-9);
  for (WrightParams p : {WrightParams{0.5, 1.5}, WrightParams{2.0, 2.0}}) {
    const double lead = p.beta * std::pow(z, p.beta - 1) * reciprocal_gamma(p.beta);
    EXPECT_NEAR(psi_func(p, z, 1).value / lead, 1.0, 1e-8);
  }
}

TEST(Psi, SecondDerivativeMatchesFiniteDifference) {
  const WrightParams p{0.5, 1.5};
  const double z = 0.7;
  for (double h : {1e-3, 5e-4}) {
    const double fd = (psi_func(p, z + h, 1).value - psi_func(p, z - h, 1).value) / (2 * h);
    EXPECT_NEAR(fd, psi_func(p, z, 2).value, 10 * h * h);
  }
}

TEST(Psi, FirstDerivativeMatchesFiniteDifference) {
  const double h = 1e-4;
  for (WrightParams p : {WrightParams{1.0, 2.0}, WrightParams{2.0, 0.5}}) {
    for (double z : {0.4, 1.3, 2.2}) {
      const double fd = (psi_func(p, z + h, 0).value - psi_func(p, z - h, 0).value) / (2 * h);
      EXPECT_NEAR(fd, psi_func(p, z, 1).value, 1e-7);
    }
  }
}

TEST(NormalizedWright, Normalization) {
  for (WrightParams p : {WrightParams{1.0, 1.0}, WrightParams{0.5, 1.5}, WrightParams{2.0, 2.0}}) {
    const double z = 1e-6;
    for (Norm n : {Norm::F, Norm::G, Norm::H}) {
      EXPECT_LT(std::abs(normalized_wright(p, n, z, 0).value.real() / z - 1.0), 1e-5);
    }
    EXPECT_NEAR(normalized_wright(p, Norm::H, 0.0, 1).value.real(), 1.0, 1e-15);
  }
}

TEST(NormalizedWright, GDerivativeAgainstTermwiseSeries) {
  const auto e = ref::wright_even(ref::R(1), ref::R(1));
  const double want = ref::d(ref::normalized(e, 'g', ref::R(0.4)).d1);
  EXPECT_NEAR(normalized_wright({1.0, 1.0}, Norm::G, 0.4, 1).value.real(), want, 1e-12);
}

TEST(NormalizedWright, AllNormsAgainstTermwiseSeries) {
  for (WrightParams p : {WrightParams{0.5, 1.5}, WrightParams{2.0, 0.5}}) {
    const auto e = ref::wright_even(ref::R(p.rho), ref::R(p.beta));
    for (char c : {'f', 'g', 'h'}) {
      const ref::D3 want = ref::normalized(e, c, ref::R(0.6));
      const Norm n = parse_norm(std::string(1, c));
      EXPECT_NEAR(normalized_wright(p, n, 0.6, 0).value.real(), ref::d(want.v), 1e-13);
      EXPECT_NEAR(normalized_wright(p, n, 0.6, 1).value.real(), ref::d(want.d1), 1e-12);
      EXPECT_NEAR(normalized_wright(p, n, 0.6, 2).value.real(), ref::d(want.d2), 1e-11);
    }
  }
}

TEST(NormalizedWright, RatioIsOneAtOrigin) {
  for (Norm n : {Norm::F, Norm::G, Norm::H}) {
    EXPECT_NEAR(ratio_one_plus_zfpp_fp_wright({1.0, 2.0}, n, 0.0).real(), 1.0, 1e-15);
  }
}

TEST(NormalizedWright, RatioAgainstReference) {
  const auto e = ref::wright_even(ref::R(1), ref::R(2));
  for (char c : {'f', 'g', 'h'}) {
    const double want = ref::d(ref::one_plus(e, c, ref::R(0.3)));
    EXPECT_NEAR(ratio_one_plus_zfpp_fp_wright({1.0, 2.0}, parse_norm(std::string(1, c)), 0.3).real(),
                want, 1e-13);
  }
}

TEST(NormalizedWright, RejectsNonPositiveParameters) {
  EXPECT_THROW((void)ratio_one_plus_zfpp_fp_wright({0.0, 1.0}, Norm::G, 0.1), DomainError);
  EXPECT_THROW((void)ratio_one_plus_zfpp_fp_wright({1.0, -0.5}, Norm::G, 0.1), DomainError);
}

TEST(WrightBessel, IdentityOverGrid) {
  double worst = 0.0;
  for (double nu : {0.0, 0.5, 1.0}) {
    for (double x : wright_bessel_grid()) worst = std::max(worst, wright_bessel_point(nu, x).abs_error);
  }
  EXPECT_LT(worst, 1e-10);
}
