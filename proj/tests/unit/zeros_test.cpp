#include <gtest/gtest.h>

#include <cmath>

#include "support/reference.hpp"
#include "ucr/errors.hpp"
#include "ucr/qseries.hpp"
#include "ucr/wright.hpp"
#include "ucr/zeros.hpp"

using namespace ucr;

namespace {

QBesselParams jp(int s, double nu, double q) { return {parse_kind(s), nu, q}; }

ZeroTable table(const ZeroTarget& t, int n) { return scan_and_refine(t, n); }

}  // namespace

TEST(Scanner, ClassicalJ0Calibration) {
  StrippedTarget t{ClassicalBesselRule{0.0}};
  const RawZeros z = scan_stripped(t, 3);
  ASSERT_EQ(z.zeros.size(), 3u);
  EXPECT_NEAR(z.zeros[0], 2.404825557695773, 1e-10);
  EXPECT_NEAR(z.zeros[1], 5.520078110286311, 1e-10);
  EXPECT_NEAR(z.zeros[2], 8.653727912911012, 1e-10);
}

TEST(Scanner, JacksonTripleIsIncreasingAndVanishes) {
  const auto p = jp(2, 1.0, 0.5);
  const ZeroTable t = table({p, ZeroKind::Function}, 3);
  ASSERT_EQ(t.zeros.size(), 3u);
  EXPECT_LT(t.zeros[0], t.zeros[1]);
  EXPECT_LT(t.zeros[1], t.zeros[2]);
  for (double z : t.zeros) EXPECT_LT(std::abs(jackson_qbessel(p, z, 0).value.real()), 1e-10);
}

TEST(Scanner, ZerosAgreeWithExtendedPrecisionRoots) {
  for (int s : {2, 3}) {
    for (double q : {0.3, 0.8}) {
      const auto p = jp(s, 1.5, q);
      const ZeroTable t = table({p, ZeroKind::Function}, 5);
      for (double z : t.zeros) {
        auto f = [&](const ref::R& x) {
          return ref::jackson(s, ref::R(1.5), ref::R(q), x, 0, 120);
        };
        const ref::R lo(z * (1 - 1e-9)), hi(z * (1 + 1e-9));
        ASSERT_LT(f(lo) * f(hi), 0) << "no sign change around " << z;
        EXPECT_NEAR(z, ref::d(ref::root(f, lo, hi, 40)), 1e-12 * z);
      }
    }
  }
}

TEST(Scanner, BracketsStraddleSignChanges) {
  const ZeroTarget target{jp(3, 0.5, 0.5), ZeroKind::Derivative};
  const ZeroTable t = table(target, 6);
  const StrippedTarget st = stripped_target(target);
  for (std::size_t i = 0; i < t.zeros.size(); ++i) {
    const auto [lo, hi] = t.brackets[i];
    EXPECT_LE(lo, t.zeros[i]);
    EXPECT_GE(hi, t.zeros[i]);
    EXPECT_LT(stripped_value(st, lo) * stripped_value(st, hi), 0.0);
    EXPECT_LT(t.residuals[i], 1e-10);
  }
}

TEST(Scanner, CombinationZerosAreDerivativeZeros) {
  const auto p = jp(2, 0.5, 0.5);
  const ZeroTable a = table({p, ZeroKind::AlphaComb}, 4);
  for (double z : a.zeros) {
    EXPECT_LT(std::abs(normalized_qbessel(p, Norm::G, z, 1).value.real()), 1e-10);
  }
  const ZeroTable b = table({p, ZeroKind::BetaComb}, 4);
  for (double w : b.squares()) {
    EXPECT_LT(std::abs(normalized_qbessel(p, Norm::H, w, 1).value.real()), 1e-10);
  }
}

TEST(Scanner, WrightKindsAreDerivativeZeros) {
  const WrightParams p{1.0, 1.0};
  for (double z : table({p, ZeroKind::GPrime}, 4).zeros) {
    EXPECT_LT(std::abs(normalized_wright(p, Norm::G, z, 1).value.real()), 1e-10);
  }
  const ZeroTable h = table({p, ZeroKind::HPrime}, 4);
  EXPECT_TRUE(h.target.stores_squares());
  for (double tau : h.zeros) {
    EXPECT_LT(std::abs(normalized_wright(p, Norm::H, tau, 1).value.real()), 1e-10);
  }
  for (double z : table({p, ZeroKind::PsiPrime}, 4).zeros) {
    EXPECT_LT(std::abs(psi_func(p, z, 1).value), 1e-10);
  }
}

TEST(Scanner, PowerSumMatchesFirstCoefficient) {
  // sum 1/j_n^2 = -b_1 = q^2 / (4 (1-q)(1-q^2)) for nu = 1.
  const double q = 0.5;
  const ZeroTable t = table({jp(2, 1.0, q), ZeroKind::Function}, 40);
  const double want = q * q / (4 * (1 - q) * (1 - q * q));
  EXPECT_NEAR(t.power_sums[0], want, 1e-14);
  double partial = 0.0;
  for (double w : t.squares()) partial += 1.0 / w;
  EXPECT_NEAR(partial, want, 1e-14);
}

TEST(Scanner, FirstZeroIncreasesWithOrder) {
  for (int s : {2, 3}) {
    for (double q : {0.3, 0.5, 0.8}) {
      double prev = 0.0;
      for (double nu = -0.5; nu <= 3.0; nu += 0.25) {
        const double z = table({jp(s, nu, q), ZeroKind::Function}, 1).zeros[0];
        EXPECT_GT(z, prev) << "s=" << s << " q=" << q << " nu=" << nu;
        prev = z;
      }
    }
  }
}

TEST(Scanner, ExhaustedRangeIsAnError) {
  ScanOptions opts;
  opts.upper_factor = 1.5;
  opts.max_extensions = 0;
  EXPECT_THROW((void)scan_and_refine({jp(2, 1.0, 0.5), ZeroKind::Function}, 30, opts),
               ScanExhausted);
}

TEST(ZeroTarget, KindMustMatchFamily) {
  EXPECT_THROW((ZeroTarget{jp(3, 1.0, 0.5), ZeroKind::AlphaComb}.validate()), DomainError);
  EXPECT_THROW((ZeroTarget{jp(2, 1.0, 0.5), ZeroKind::GammaComb}.validate()), DomainError);
  EXPECT_THROW((ZeroTarget{jp(2, 1.0, 0.5), ZeroKind::PsiPrime}.validate()), DomainError);
  EXPECT_THROW((ZeroTarget{WrightParams{1, 1}, ZeroKind::BetaComb}.validate()), DomainError);
  EXPECT_THROW((ZeroTarget{jp(2, -0.5, 0.5), ZeroKind::Derivative}.validate()), DomainError);
  EXPECT_NO_THROW((ZeroTarget{jp(3, 1.0, 0.5), ZeroKind::DeltaComb}.validate()));
}

TEST(ZeroTarget, KindNamesRoundTrip) {
  for (ZeroKind k : {ZeroKind::Function, ZeroKind::Derivative, ZeroKind::AlphaComb,
                     ZeroKind::BetaComb, ZeroKind::GammaComb, ZeroKind::DeltaComb,
                     ZeroKind::PsiPrime, ZeroKind::GPrime, ZeroKind::HPrime}) {
    EXPECT_EQ(parse_zero_kind(to_string(k)), k);
  }
  EXPECT_THROW((void)parse_zero_kind("Sideways"), DomainError);
}

TEST(Interlacing, JacksonDerivativeAndFunction) {
  const auto p = jp(2, 1.0, 0.5);
  const ZeroTable d = table({p, ZeroKind::Derivative}, 6);
  const ZeroTable f = table({p, ZeroKind::Function}, 5);
  const InterlacingReport r = interlacing_check(d, f, 5);
  EXPECT_TRUE(r.all_hold);
  EXPECT_EQ(r.links.size(), 10u);
}

TEST(Interlacing, TableAgainstItselfFails) {
  const ZeroTable f = table({jp(2, 1.0, 0.5), ZeroKind::Function}, 5);
  EXPECT_FALSE(interlacing_check(f, f).all_hold);
}

TEST(Interlacing, DifferentFamiliesAreRejected) {
  const ZeroTable a = table({jp(2, 1.0, 0.5), ZeroKind::Function}, 3);
  const ZeroTable b = table({jp(2, 1.0, 0.3), ZeroKind::Function}, 3);
  EXPECT_THROW((void)interlacing_check(a, b), DomainError);
  EXPECT_THROW((void)interlacing_check(a, a, 4), DomainError);
}

TEST(Interlacing, WrightPsiChain) {
  for (WrightParams p : {WrightParams{0.5, 1.0}, WrightParams{1.0, 1.0}}) {
    const ZeroTable dz = table({p, ZeroKind::PsiPrime}, 6);
    const ZeroTable z = table({p, ZeroKind::Function}, 5);
    EXPECT_TRUE(interlacing_check(dz, z, 5).all_hold) << p.rho;
  }
}

TEST(Hadamard, TwentyZeroProductAtHalfFirstZero) {
  for (int s : {2, 3}) {
    const auto p = jp(s, 1.0, 0.3);
    const ZeroTable t = table({p, ZeroKind::Function}, 20);
    const double z = 0.5 * t.zeros[0];
    double prod = 1.0;
    for (double w : t.squares()) prod *= 1.0 - z * z / w;
    const double series = jackson_qbessel(p, z, 0).value.real() / (qbessel_prefactor(p) * z);
    EXPECT_LT(std::abs(prod / series - 1.0), 1e-4) << s;
  }
}
