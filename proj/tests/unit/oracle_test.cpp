#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <random>

#include "ucr/errors.hpp"
#include "ucr/oracle.hpp"
#include "ucr/radius.hpp"

using namespace ucr;

namespace {

QBesselParams jp(int s, double nu, double q) { return {parse_kind(s), nu, q}; }

const UcTarget kG{jp(2, 1.0, 0.5), Norm::G};
const UcTarget kWh{WrightParams{1.0, 1.0}, Norm::H};

bool bitwise_equal(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

double angle_distance(double a) { return std::min(a, 2 * M_PI - a); }

}  // namespace

TEST(Margin, TendsToOneNearOrigin) {
  for (const UcTarget& t : {kG, kWh, UcTarget{jp(3, 1.5, 0.3), Norm::F}}) {
    EXPECT_NEAR(uc_margin(t, 1e-7).min_margin, 1.0, 1e-6);
  }
}

TEST(Margin, VanishesOnThePositiveAxisAtTheRadius) {
  for (const UcTarget& t : {kG, kWh, UcTarget{WrightParams{1.0, 2.0}, Norm::F}}) {
    const double r = radius_uc(t, RadiusMethod::DirectEq).radius;
    const MarginReport m = uc_margin(t, r);
    EXPECT_LT(std::abs(m.min_margin), 1e-6);
    EXPECT_LE(angle_distance(m.argmin_angle), 2 * M_PI / 512);
  }
}

TEST(Margin, RealAxisValueIsTheDirectEquation) {
  // On z = r the ratio is real and below one, so Re Q - |Q - 1| = 1 + 2 r f''/f'.
  const UcTarget t{WrightParams{0.5, 1.5}, Norm::G};
  RadiusProblem prob(t);
  for (double r : {0.05, 0.15, 0.25}) {
    const std::complex<double> q = convexity_ratio(t, r);
    EXPECT_NEAR(q.real() - std::abs(q - 1.0), prob.direct(r), 1e-13);
    EXPECT_GE(uc_margin(t, r).min_margin, prob.direct(r) - 1e-13);
  }
}

TEST(Margin, PositiveAtHalfRadius) {
  const double r = radius_uc(kG, RadiusMethod::DirectEq).radius;
  EXPECT_GT(uc_margin(kG, 0.5 * r).min_margin, 0.0);
}

TEST(Margin, DecreasesInRadius) {
  const double rstar = radius_uc(kWh, RadiusMethod::DirectEq).radius;
  double prev = 2.0;
  for (int k = 1; k <= 16; ++k) {
    const double m = uc_margin(kWh, rstar * k / 16.0).min_margin;
    EXPECT_LT(m, prev);
    prev = m;
  }
}

TEST(Margin, ParallelIsBitwiseSerial) {
  for (const UcTarget& t : {kG, kWh, UcTarget{jp(3, 0.5, 0.8), Norm::H}}) {
    for (double r : {0.1, 0.3}) {
      const MarginReport a = uc_margin(t, r);
      const MarginReport b = uc_margin_serial(t, r);
      EXPECT_TRUE(bitwise_equal(a.min_margin, b.min_margin));
      EXPECT_TRUE(bitwise_equal(a.argmin_angle, b.argmin_angle));
      EXPECT_EQ(a.samples, b.samples);
    }
  }
}

TEST(Margin, RejectsTooFewSamples) {
  MarginOptions o;
  o.samples = 8;
  EXPECT_THROW((void)uc_margin(kG, 0.1, o), DomainError);
}

TEST(Oracle, MatchesQBesselG) {
  const RadiusResult o = oracle_radius(kG);
  EXPECT_EQ(o.method, RadiusMethod::Oracle);
  EXPECT_NEAR(o.radius, radius_uc_qbessel_g(jp(2, 1.0, 0.5)).radius, 1e-6);
}

TEST(Oracle, MatchesWrightH) {
  EXPECT_NEAR(oracle_radius(kWh).radius, radius_uc_wright_h({1.0, 1.0}).radius, 1e-6);
}

TEST(Oracle, NonBracketingWhenUpperEndIsTooSmall) {
  OracleOptions o;
  o.upper_fraction = 0.1;
  EXPECT_THROW((void)oracle_radius(kG, o), NonBracketing);
}

TEST(CircleInequalities, SpotCheck) {
  const CircleInequalityReport r = circle_inequalities(2.0, 1.0, 0.5, 0.9);
  EXPECT_NEAR(r.bound_mixed, 9.0 - 9.0 / 22.0, 1e-13);
  EXPECT_LE(r.max_abs_mixed, r.bound_mixed + r.allowance);
  EXPECT_TRUE(r.holds());
}

TEST(CircleInequalities, RandomParameters) {
  std::mt19937_64 rng(20261014);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    const double r = 0.05 + 2.0 * u(rng);
    const double b = r * (1.0 + 1e-3 + u(rng));
    const double a = b * (1.0 + 1e-3 + 2.0 * u(rng));
    const double lambda = u(rng);
    const CircleInequalityReport c = circle_inequalities(a, b, lambda, r);
    EXPECT_TRUE(c.holds()) << a << " " << b << " " << lambda << " " << r << " " << c.min_slack;
    EXPECT_LE(c.max_re_single, c.max_abs_single + c.allowance);
  }
}

TEST(CircleInequalities, RejectsBadOrdering) {
  EXPECT_THROW((void)circle_inequalities(1.0, 2.0, 0.5, 0.5), DomainError);
  EXPECT_THROW((void)circle_inequalities(2.0, 1.0, 1.5, 0.5), DomainError);
}
