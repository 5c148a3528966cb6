#include "ucr/power_series.hpp"

#include <cmath>
#include <limits>

#include "ucr/errors.hpp"
#include "ucr/eval_result.hpp"
#include "ucr/mp_float.hpp"
#include "ucr/mp_ratio.hpp"
#include "ucr/summation.hpp"

namespace ucr {
namespace {

// Above this ratio of sum |terms| to |sum| the double result loses more than
// four bits and the series is summed again in MPFR.
constexpr double kCancellationLimit = 16.0;

// Same truncation index, terms formed and summed at `prec` bits.
std::array<std::complex<double>, 3> resum_mp(const SeriesRule& rule, std::complex<double> w,
                                             int max_deriv, int terms, mpfr_prec_t prec) {
  MpRatioStream ratios(rule, prec);
  const MpFloat wr(w.real(), prec), wi(w.imag(), prec);
  MpFloat b(1.0, prec);
  // w^m for m = n - k, k = 0..2, kept as (re, im) and advanced once per n.
  std::array<MpFloat, 3> pr{MpFloat(1.0, prec), MpFloat(1.0, prec), MpFloat(1.0, prec)};
  std::array<MpFloat, 3> pi{MpFloat(0.0, prec), MpFloat(0.0, prec), MpFloat(0.0, prec)};
  std::array<MpFloat, 3> sr{MpFloat(0.0, prec), MpFloat(0.0, prec), MpFloat(0.0, prec)};
  std::array<MpFloat, 3> si{MpFloat(0.0, prec), MpFloat(0.0, prec), MpFloat(0.0, prec)};
  for (int n = 0; n < terms; ++n) {
    if (n > 0) b *= ratios.next();
    for (int k = 0; k <= max_deriv; ++k) {
      if (n < k) continue;
      if (n > k) {
        MpFloat re = pr[k] * wr - pi[k] * wi;
        pi[k] = pr[k] * wi + pi[k] * wr;
        pr[k] = std::move(re);
      }
      const double f = k == 0 ? 1.0 : k == 1 ? double(n) : double(n) * (n - 1);
      const MpFloat c = b * f;
      sr[k] += c * pr[k];
      si[k] += c * pi[k];
    }
  }
  std::array<std::complex<double>, 3> out{};
  for (int k = 0; k <= max_deriv; ++k) out[k] = {sr[k].to_double(), si[k].to_double()};
  return out;
}

}  // namespace

PowerSeriesValue eval_power_series(const SeriesRule& rule, std::complex<double> w, int max_deriv) {
  if (max_deriv < 0 || max_deriv > 2) {
    throw DomainError("derivative order must be 0, 1 or 2");
  }
  constexpr double eps = std::numeric_limits<double>::epsilon();
  const double aw = std::abs(w);

  // a[k] holds the current term of the k-th derivative series,
  // n!/(n-k)! b_n w^{n-k}; it starts at index n = k.
  std::array<std::complex<double>, 3> term{};
  std::array<CompensatedComplexSum, 3> sum;
  std::array<double, 3> abs_sum{};
  std::array<double, 3> tail{};
  std::array<bool, 3> done{};
  for (int k = max_deriv + 1; k < 3; ++k) done[k] = true;

  std::complex<double> b = 1.0;  // b_n (times nothing)
  const std::array<double, 3> fact{1.0, 1.0, 2.0};

  PowerSeriesValue out;
  int n = 0;
  double ratio_n = 0.0;
  double ratio_next = coefficient_ratio(rule, 1);
  for (; n < kMaxSeriesTerms; ++n) {
    if (n > 0) {
      ratio_n = ratio_next;
      ratio_next = coefficient_ratio(rule, n + 1);
      b *= ratio_n;
    }
    for (int k = 0; k <= max_deriv; ++k) {
      if (done[k] || n < k) continue;
      if (n == k) {
        term[k] = fact[k] * b;
      } else {
        term[k] *= ratio_n * w * (static_cast<double>(n) / (n - k));
      }
      sum[k].add(term[k]);
      abs_sum[k] += std::abs(term[k]);

      const double next_ratio =
          std::abs(ratio_next) * aw * (static_cast<double>(n + 1) / (n + 1 - k));
      if (next_ratio < 1.0) {
        const double bound = std::abs(term[k]) * next_ratio / (1.0 - next_ratio);
        const double partial = std::abs(sum[k].value());
        if (bound <= kSeriesRelTol * partial || bound == 0.0 ||
            (partial == 0.0 && bound < std::numeric_limits<double>::min())) {
          tail[k] = bound;
          done[k] = true;
        }
      }
    }
    if (done[0] && done[1] && done[2]) break;
  }
  if (!(done[0] && done[1] && done[2])) {
    throw NonConvergence("power series did not converge within " + std::to_string(kMaxSeriesTerms) +
                         " terms");
  }
  out.terms = n + 1;
  double worst = 1.0;
  for (int k = 0; k <= max_deriv; ++k) {
    out.d[k] = sum[k].value();
    out.abs_sum[k] = abs_sum[k];
    out.err[k] = tail[k] + 4.0 * eps * abs_sum[k];
    const double mag = std::abs(out.d[k]);
    worst = std::max(worst, mag > 0.0 ? abs_sum[k] / mag : abs_sum[k] > 0.0 ? 1e300 : 1.0);
  }
  if (worst > kCancellationLimit) {
    const double bits = 96.0 + std::min(std::log2(worst), 4096.0);
    const auto prec = static_cast<mpfr_prec_t>(std::ceil(bits / 64.0) * 64.0);
    const auto d = resum_mp(rule, w, max_deriv, out.terms, prec);
    for (int k = 0; k <= max_deriv; ++k) {
      out.d[k] = d[k];
      out.err[k] = tail[k] + 2.0 * eps * std::abs(d[k]) + std::ldexp(abs_sum[k], 8 - int(prec));
    }
  }
  return out;
}

EvenSeriesValue eval_even_series(const SeriesRule& rule, std::complex<double> z) {
  const std::complex<double> w = z * z;
  const PowerSeriesValue p = eval_power_series(rule, w, 2);
  EvenSeriesValue out;
  out.s = p.d[0];
  out.ds = 2.0 * z * p.d[1];
  out.dds = 2.0 * p.d[1] + 4.0 * w * p.d[2];
  const double az = std::abs(z);
  out.err_s = p.err[0];
  out.err_ds = 2.0 * az * p.err[1];
  out.err_dds = 2.0 * p.err[1] + 4.0 * az * az * p.err[2];
  out.scale = p.abs_sum[0];
  out.terms = p.terms;
  return out;
}

}  // namespace ucr
