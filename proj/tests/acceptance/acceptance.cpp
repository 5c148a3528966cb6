// Acceptance harness: one PASS/FAIL line per criterion.
//
//   acceptance            run all criteria
//   acceptance 3 7        run only criteria 3 and 7
//
// Exit status is 0 only when every selected criterion passes.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <limits>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ucr/limits.hpp"
#include "ucr/oracle.hpp"
#include "ucr/qseries.hpp"
#include "ucr/radius.hpp"
#include "ucr/wright.hpp"
#include "ucr/zeros.hpp"

using namespace ucr;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

const std::vector<int> kKinds{2, 3};
const std::vector<double> kNus{0.25, 0.5, 1.0, 1.5, 2.0};
const std::vector<double> kQs{0.3, 0.5, 0.8};
const std::vector<double> kRhos{0.5, 1.0, 2.0};
const std::vector<double> kBetas{0.5, 1.0, 1.5, 2.0};
const std::vector<Norm> kNorms{Norm::F, Norm::G, Norm::H};

std::vector<UcTarget> radius_grid() {
  std::vector<UcTarget> g;
  for (int s : kKinds)
    for (double nu : kNus)
      for (double q : kQs)
        for (Norm n : kNorms) g.push_back({QBesselParams{parse_kind(s), nu, q}, n});
  for (double rho : kRhos)
    for (double beta : kBetas)
      for (Norm n : kNorms) g.push_back({WrightParams{rho, beta}, n});
  return g;
}

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

Outcome dual_route() {
  const auto t0 = Clock::now();
  double worst = 0.0;
  std::string where;
  for (const UcTarget& t : radius_grid()) {
    const DualRadius d = radius_uc(t);
    if (d.agreement > worst) {
      worst = d.agreement;
      where = t.descriptor();
    }
  }
  const double secs = seconds_since(t0);
  const bool ok = worst < 1e-7 && secs < 120.0;
  return {ok, "max |R1 - R2| = " + fmt("%.2e", worst) + " at " + where + " (limit 1e-07), " +
                  std::to_string(radius_grid().size()) + " targets in " + fmt("%.1f", secs) +
                  " s (limit 120 s)"};
}

Outcome oracle_agreement() {
  const auto t0 = Clock::now();
  double worst = 0.0;
  std::string where;
  for (const UcTarget& t : radius_grid()) {
    const double r = radius_uc(t, RadiusMethod::DirectEq).radius;
    const double o = oracle_radius(t).radius;
    if (std::abs(o - r) > worst) {
      worst = std::abs(o - r);
      where = t.descriptor();
    }
  }
  const double secs = seconds_since(t0);
  const bool ok = worst < 1e-6 && secs < 300.0;
  return {ok, "max |oracle - radius| = " + fmt("%.2e", worst) + " at " + where +
                  " (limit 1e-06), " + fmt("%.1f", secs) + " s (limit 300 s)"};
}

Outcome interlacing() {
  int chains = 0, broken = 0;
  double worst_residual = 0.0;
  auto residuals = [&](const ZeroTable& t) {
    for (double r : t.residuals) worst_residual = std::max(worst_residual, r);
  };
  for (int s : kKinds) {
    for (double nu : {0.5, 1.0, 2.0}) {
      for (double q : kQs) {
        const QBesselParams p{parse_kind(s), nu, q};
        const ZeroTable d = scan_and_refine({p, ZeroKind::Derivative}, 6);
        const ZeroTable f = scan_and_refine({p, ZeroKind::Function}, 5);
        residuals(d);
        residuals(f);
        ++chains;
        if (!interlacing_check(d, f, 5).all_hold) ++broken;
      }
    }
  }
  for (double rho : kRhos) {
    for (double beta : kBetas) {
      const WrightParams p{rho, beta};
      const ZeroTable d = scan_and_refine({p, ZeroKind::PsiPrime}, 3);
      const ZeroTable f = scan_and_refine({p, ZeroKind::Function}, 2);
      residuals(d);
      residuals(f);
      ++chains;
      if (!interlacing_check(d, f, 2).all_hold) ++broken;
    }
  }
  const bool ok = broken == 0 && worst_residual < 1e-10;
  return {ok, std::to_string(chains - broken) + "/" + std::to_string(chains) +
                  " chains strictly interlaced, max zero residual " +
                  fmt("%.2e", worst_residual) + " (limit 1e-10)"};
}

Outcome monotonicity() {
  int not_decreasing = 0, bad_start = 0, bad_end = 0, total = 0;
  double worst_start = 0.0, worst_start_fg = 0.0;
  double highest_end = -std::numeric_limits<double>::infinity();
  std::string first_bad;
  for (const UcTarget& t : radius_grid()) {
    RadiusProblem prob(t);
    const double up = prob.domain_upper();
    const std::function<double(double)> forms[] = {
        [&](double r) { return prob.direct(r); },
        [&](double r) { return prob.zero_sum(r).value; }};
    for (const auto& f : forms) {
      ++total;
      bool dec = true;
      double prev = std::numeric_limits<double>::infinity();
      for (int k = 1; k <= 64; ++k) {
        const double v = f(up * k / 65.0);
        dec = dec && v < prev;
        prev = v;
      }
      const double start = std::abs(f(1e-6 * up) - 1.0);
      const double end = f((1 - 1e-6) * up);
      worst_start = std::max(worst_start, start);
      if (t.norm != Norm::H) worst_start_fg = std::max(worst_start_fg, start);
      highest_end = std::max(highest_end, end);
      not_decreasing += !dec;
      bad_start += start >= 1e-8;
      bad_end += end >= -1e3;
      if ((!dec || start >= 1e-8 || end >= -1e3) && first_bad.empty()) first_bad = t.descriptor();
    }
  }
  std::string detail = std::to_string(total - not_decreasing) + "/" + std::to_string(total) +
                       " functions decreasing on 64 points; |F(1e-6 up) - 1| < 1e-08 for " +
                       std::to_string(total - bad_start) + "/" + std::to_string(total) +
                       " (max " + fmt("%.2e", worst_start) + ", max over f and g " +
                       fmt("%.2e", worst_start_fg) + "); F((1-1e-6) up) < -1e3 for " +
                       std::to_string(total - bad_end) + "/" + std::to_string(total) + " (max " +
                       fmt("%.3e", highest_end) + ")";
  if (!first_bad.empty()) detail += "; first failure " + first_bad;
  return {not_decreasing + bad_start + bad_end == 0, detail};
}

Outcome classical_limit() {
  double worst = 0.0;
  bool decreasing = true;
  for (double nu : {0.0, 1.0}) {
    for (double z : {0.5, 1.0, 1.5}) {
      double prev = std::numeric_limits<double>::infinity();
      for (double q : {0.9, 0.95, 0.99}) {
        const double e = q_limit_point(nu, z, q).rel_error;
        decreasing = decreasing && e < prev;
        prev = e;
      }
      worst = std::max(worst, prev);
    }
  }
  return {worst < 5e-2 && decreasing,
          "max relative error at q=0.99: " + fmt("%.3e", worst) + " (limit 5e-02), " +
              (decreasing ? "decreasing" : "NOT decreasing") + " in q on {0.9, 0.95, 0.99}"};
}

Outcome wright_bessel() {
  double worst = 0.0;
  for (double nu : {0.0, 0.5, 1.0})
    for (double x : wright_bessel_grid()) worst = std::max(worst, wright_bessel_point(nu, x).abs_error);
  return {worst < 1e-10, "max |phi(1,nu+1,-x^2/4)(x/2)^nu - J_nu(x)| = " + fmt("%.2e", worst) +
                             " over 100 points x 3 orders (limit 1e-10)"};
}

/// Relative error of the 20-zero product against the prefactor-free series at
/// half the first zero.
double product_error(const ZeroTarget& zt, const std::function<double(double)>& series) {
  const ZeroTable t = scan_and_refine(zt, 20);
  const double z = 0.5 * t.zeros[0];
  double prod = 1.0;
  for (double w : t.squares()) prod *= 1.0 - z * z / w;
  const double s = series(z);
  return std::abs(prod - s) / std::abs(s);
}

Outcome hadamard() {
  double worst = 0.0;
  int failing = 0, total = 0;
  std::string where;
  for (int s : kKinds) {
    for (double nu : kNus) {
      for (double q : kQs) {
        const QBesselParams p{parse_kind(s), nu, q};
        const double K = qbessel_prefactor(p);
        const double e = product_error({p, ZeroKind::Function}, [&](double z) {
          return jackson_qbessel(p, z, 0).value.real() / (K * std::pow(z, nu));
        });
        ++total;
        if (e >= 1e-4) {
          ++failing;
          std::printf("  criterion 7 detail: s=%d nu=%g q=%g relative error %.3e\n", s, nu, q, e);
        }
        if (e > worst) {
          worst = e;
          where = ZeroTarget{p, ZeroKind::Function}.descriptor();
        }
      }
    }
  }
  for (double rho : kRhos) {
    for (double beta : kBetas) {
      const WrightParams p{rho, beta};
      const double g = std::tgamma(beta);
      const double e = product_error({p, ZeroKind::Function}, [&](double z) {
        return g * lambda_func(p, z, 0).value.real();
      });
      ++total;
      if (e >= 1e-4) {
        ++failing;
        std::printf("  criterion 7 detail: rho=%g beta=%g relative error %.3e\n", rho, beta, e);
      }
      if (e > worst) {
        worst = e;
        where = ZeroTarget{p, ZeroKind::Function}.descriptor();
      }
    }
  }
  return {failing == 0, std::to_string(total - failing) + "/" + std::to_string(total) +
                            " products within 1e-04; max relative error " + fmt("%.3e", worst) +
                            " at " + where};
}

Outcome circle_lemma() {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int held = 0;
  double min_slack = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 100; ++i) {
    const double r = 0.01 + 5.0 * u(rng);
    const double b = r * (1.0 + 1e-3 + 2.0 * u(rng));
    const double a = b * (1.0 + 1e-3 + 2.0 * u(rng));
    const double lambda = u(rng);
    const CircleInequalityReport c = circle_inequalities(a, b, lambda, r);
    if (c.holds()) ++held;
    min_slack = std::min(min_slack, c.min_slack);
  }
  return {held == 100, std::to_string(held) + "/100 random (a, b, lambda, r) satisfy all three " +
                           "circle inequalities; min slack " + fmt("%.2e", min_slack) +
                           " (rounding allowance applied at equality)"};
}

struct Criterion {
  int id;
  const char* name;
  Outcome (*run)();
};

const Criterion kCriteria[] = {
    {1, "dual-route agreement", dual_route},
    {2, "oracle agreement", oracle_agreement},
    {3, "interlacing", interlacing},
    {4, "monotonicity and endpoints", monotonicity},
    {5, "classical q-limit", classical_limit},
    {6, "Wright-Bessel identity", wright_bessel},
    {7, "20-zero Hadamard products", hadamard},
    {8, "circle inequalities", circle_lemma},
};

}  // namespace

int main(int argc, char** argv) {
  std::set<int> chosen;
  for (int i = 1; i < argc; ++i) chosen.insert(std::atoi(argv[i]));
  bool all_pass = true;
  for (const Criterion& c : kCriteria) {
    if (!chosen.empty() && !chosen.count(c.id)) continue;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s criterion %d (%s): %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name,
                o.detail.c_str());
    std::fflush(stdout);
    all_pass = all_pass && o.pass;
  }
  return all_pass ? 0 : 1;
}
