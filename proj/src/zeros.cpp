#include "ucr/zeros.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <charconv>
#include <limits>
#include <map>

#include "ucr/errors.hpp"
#include "ucr/eval_result.hpp"
#include "ucr/mp_float.hpp"
#include "ucr/mp_ratio.hpp"
#include "ucr/power_series.hpp"

namespace ucr {
namespace {

constexpr mpfr_prec_t kMinPrec = 128;
constexpr mpfr_prec_t kMaxPrec = 1 << 16;
constexpr mpfr_prec_t kPowerSumPrec = 512;
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

mpfr_prec_t round_prec(double bits) {
  const auto b = static_cast<mpfr_prec_t>(std::ceil(std::max(bits, double(kMinPrec)) / 64.0)) * 64;
  return std::min(b, kMaxPrec);
}

// Shortest text that reads back to the same double.
std::string fmt_double(double v) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

// Even series T(x) = sum d_n x^{2n} of a stripped target, evaluated in MPFR.
class StrippedEvaluator {
public:
  explicit StrippedEvaluator(const StrippedTarget& t) : t_(t) {}

  struct Sample {
    int sign = 0;          // 0: not certifiable at the precision cap
    double log2_abs = 0;   // log2 |T(x)|
    double log2_scale = 0; // log2 sum |d_n x^{2n}|
  };

  Sample eval(double x) {
    const double lx = 2.0 * std::log2(x);
    // Locate the largest term: term ratios are non-increasing in n.
    double lmax = 0.0;
    int n = 0;
    while (log2_coef(n + 1) - log2_coef(n) + lx > 0.0) {
      ++n;
      lmax = std::max(lmax, log2_coef(n) + lx * n);
      if (n > kMaxSeriesTerms) throw NonConvergence("stripped series peak not found");
    }
    double extra = 64.0;
    for (;;) {
      const mpfr_prec_t prec = round_prec(lmax + extra + 32.0);
      // Smallest N past the peak whose remaining tail is far below the rounding level.
      int N = n;
      while (true) {
        const double lt = log2_coef(N + 1) + lx * (N + 1);
        const double ratio = log2_coef(N + 1) - log2_coef(N) + lx;
        if (ratio < -1.0 && lt < lmax - static_cast<double>(prec) - 8.0) break;
        if (++N > kMaxSeriesTerms) throw NonConvergence("stripped series did not converge");
      }
      const std::vector<MpFloat>& d = coefs(prec, N + 1);
      MpFloat X(x, prec);
      X *= x;
      MpFloat acc = d[N];
      for (int k = N - 1; k >= 0; --k) {
        mpfr_mul(acc.raw(), acc.raw(), X.raw(), MPFR_RNDN);
        mpfr_add(acc.raw(), acc.raw(), d[k].raw(), MPFR_RNDN);
      }
      double lscale = kNegInf;
      for (int k = 0; k <= N; ++k) {
        const double l = log2_coef(k) + lx * k;
        lscale = lscale > l ? lscale + std::log2(1.0 + std::exp2(l - lscale))
                            : l + std::log2(1.0 + std::exp2(lscale - l));
      }
      const double lerr = lscale + std::log2(16.0 * (N + 2)) - static_cast<double>(prec);
      Sample s;
      s.log2_scale = lscale;
      s.log2_abs = acc.log2_abs();
      if (acc.sign() != 0 && s.log2_abs > lerr + 1.0) {
        s.sign = acc.sign();
        return s;
      }
      if (prec >= kMaxPrec) {
        s.sign = 0;
        return s;
      }
      extra += acc.sign() != 0 ? std::max(64.0, lerr - s.log2_abs + 64.0) : extra;
    }
  }

  /// sigma_k for k = 1..K from Newton's identities on d_1..d_K.
  std::vector<double> power_sums(int K) {
    const std::vector<MpFloat>& d = coefs(kPowerSumPrec, K + 1);
    std::vector<MpFloat> sigma;
    std::vector<double> out;
    for (int n = 1; n <= K; ++n) {
      MpFloat s = d[n] * static_cast<double>(-n);
      for (int k = 1; k < n; ++k) s -= sigma[k - 1] * d[n - k];
      out.push_back(s.to_double());
      sigma.push_back(std::move(s));
    }
    return out;
  }

  double log2_coef(int n) {
    while (static_cast<int>(lb_.size()) <= n + 1) {
      const int k = static_cast<int>(lb_.size());
      lb_.push_back(k == 0 ? 0.0 : lb_.back() + log_abs_coefficient_ratio(t_.rule, k) / std::log(2.0));
    }
    switch (t_.transform) {
      case StrippedTarget::Transform::Plain: return lb_[n];
      case StrippedTarget::Transform::Combination:
        return lb_[n] + std::log2((t_.c + 2.0 * n) / t_.c);
      case StrippedTarget::Transform::DerivativeShift:
        return lb_[n + 1] + std::log2(n + 1.0) - lb_[1];
    }
    return lb_[n];
  }

private:
  const std::vector<MpFloat>& coefs(mpfr_prec_t prec, int count) {
    std::vector<MpFloat>& v = cache_[prec];
    if (static_cast<int>(v.size()) >= count) return v;
    const int target = std::max(count, 2 * static_cast<int>(v.size()));
    v.clear();
    MpRatioStream ratios(t_.rule, prec + 32);
    std::vector<MpFloat> b;
    b.emplace_back(1.0, prec + 32);
    for (int k = 1; k <= target + 1; ++k) b.push_back(b.back() * ratios.next());
    for (int k = 0; k < target; ++k) {
      MpFloat dk(prec);
      switch (t_.transform) {
        case StrippedTarget::Transform::Plain: dk = b[k]; break;
        case StrippedTarget::Transform::Combination: {
          MpFloat f(t_.c, prec + 32);
          f += 2.0 * k;
          dk = b[k] * f / t_.c;
          break;
        }
        case StrippedTarget::Transform::DerivativeShift:
          dk = b[k + 1] * static_cast<double>(k + 1) / b[1];
          break;
      }
      mpfr_prec_round(dk.raw(), prec, MPFR_RNDN);
      v.push_back(std::move(dk));
    }
    return v;
  }

  StrippedTarget t_;
  std::vector<double> lb_;
  std::map<mpfr_prec_t, std::vector<MpFloat>> cache_;
};

bool same_params(const QBesselParams& a, const QBesselParams& b) {
  return a.kind == b.kind && a.nu == b.nu && a.q == b.q;
}
bool same_params(const WrightParams& a, const WrightParams& b) {
  return a.rho == b.rho && a.beta == b.beta;
}

}  // namespace

std::string to_string(ZeroKind k) {
  switch (k) {
    case ZeroKind::Function: return "Function";
    case ZeroKind::Derivative: return "Derivative";
    case ZeroKind::AlphaComb: return "AlphaComb";
    case ZeroKind::BetaComb: return "BetaComb";
    case ZeroKind::GammaComb: return "GammaComb";
    case ZeroKind::DeltaComb: return "DeltaComb";
    case ZeroKind::PsiPrime: return "PsiPrime";
    case ZeroKind::GPrime: return "GPrime";
    case ZeroKind::HPrime: return "HPrime";
  }
  return "?";
}

ZeroKind parse_zero_kind(const std::string& s) {
  for (ZeroKind k : {ZeroKind::Function, ZeroKind::Derivative, ZeroKind::AlphaComb,
                     ZeroKind::BetaComb, ZeroKind::GammaComb, ZeroKind::DeltaComb,
                     ZeroKind::PsiPrime, ZeroKind::GPrime, ZeroKind::HPrime}) {
    std::string name = to_string(k);
    std::string lower = name;
    std::transform(lower.begin(), lower.end(), lower.begin(), ::tolower);
    if (s == name || s == lower) return k;
  }
  throw DomainError("unknown zero kind '" + s + "'");
}

void ZeroTarget::validate() const {
  if (const auto* p = std::get_if<QBesselParams>(&family)) {
    p->validate();
    switch (which) {
      case ZeroKind::Function: return;
      case ZeroKind::Derivative:
        if (p->nu < 0.0) throw DomainError("derivative zeros require nu >= 0");
        return;
      case ZeroKind::AlphaComb:
      case ZeroKind::BetaComb:
        if (p->kind != QKind::Jackson2) throw DomainError(to_string(which) + " belongs to s = 2");
        return;
      case ZeroKind::GammaComb:
      case ZeroKind::DeltaComb:
        if (p->kind != QKind::Jackson3) throw DomainError(to_string(which) + " belongs to s = 3");
        return;
      default: throw DomainError(to_string(which) + " is a Wright target");
    }
  }
  const auto& w = std::get<WrightParams>(family);
  w.validate_radius();
  switch (which) {
    case ZeroKind::Function:
    case ZeroKind::Derivative:
    case ZeroKind::PsiPrime:
    case ZeroKind::GPrime:
    case ZeroKind::HPrime: return;
    default: throw DomainError(to_string(which) + " is a q-Bessel target");
  }
}

std::string ZeroTarget::descriptor() const {
  std::string head;
  if (const auto* p = std::get_if<QBesselParams>(&family)) {
    head = "qbessel:s=" + std::to_string(p->s()) + ":nu=" + fmt_double(p->nu) +
           ":q=" + fmt_double(p->q);
  } else {
    const auto& w = std::get<WrightParams>(family);
    head = "wright:rho=" + fmt_double(w.rho) + ":beta=" + fmt_double(w.beta);
  }
  return head + ":" + to_string(which);
}

bool ZeroTarget::same_family(const ZeroTarget& other) const {
  if (family.index() != other.family.index()) return false;
  return std::visit(
      [&](const auto& a) {
        using T = std::decay_t<decltype(a)>;
        return same_params(a, std::get<T>(other.family));
      },
      family);
}

std::vector<double> ZeroTable::squares() const {
  std::vector<double> w(zeros);
  if (!target.stores_squares()) {
    for (double& x : w) x *= x;
  }
  return w;
}

StrippedTarget stripped_target(const ZeroTarget& t) {
  t.validate();
  using Tr = StrippedTarget::Transform;
  StrippedTarget out;
  if (const auto* p = std::get_if<QBesselParams>(&t.family)) {
    out.rule = QBesselRule{*p};
    switch (t.which) {
      case ZeroKind::Function: break;
      case ZeroKind::Derivative:
        if (p->nu == 0.0) {
          out.transform = Tr::DerivativeShift;
        } else {
          out.transform = Tr::Combination;
          out.c = p->nu;
        }
        break;
      case ZeroKind::AlphaComb:
      case ZeroKind::GammaComb:
        out.transform = Tr::Combination;
        out.c = 1.0;
        break;
      default:
        out.transform = Tr::Combination;
        out.c = 2.0;
        break;
    }
    return out;
  }
  const auto& w = std::get<WrightParams>(t.family);
  out.rule = WrightRule{w};
  switch (t.which) {
    case ZeroKind::Function: break;
    case ZeroKind::Derivative: out.transform = Tr::DerivativeShift; break;
    case ZeroKind::PsiPrime:
      out.transform = Tr::Combination;
      out.c = w.beta;
      break;
    case ZeroKind::GPrime:
      out.transform = Tr::Combination;
      out.c = 1.0;
      break;
    default:  // HPrime: P + w P' in w = x^2
      out.transform = Tr::Combination;
      out.c = 2.0;
      break;
  }
  return out;
}

double stripped_value(const StrippedTarget& t, double z) {
  const double w = z * z;
  const PowerSeriesValue v = eval_power_series(t.rule, w, 1);
  switch (t.transform) {
    case StrippedTarget::Transform::Plain: return v.d[0].real();
    case StrippedTarget::Transform::Combination:
      return (t.c * v.d[0].real() + 2.0 * w * v.d[1].real()) / t.c;
    case StrippedTarget::Transform::DerivativeShift:
      return v.d[1].real() / coefficient_ratio(t.rule, 1);
  }
  return v.d[0].real();
}

RawZeros scan_stripped(const StrippedTarget& t, int count, const ScanOptions& opts) {
  if (count < 1) throw DomainError("zero count must be at least 1");
  if (!(opts.tol > 0.0) || !(opts.step_factor > 1.0) || !(opts.upper_factor > 1.0)) {
    throw DomainError("invalid scan options");
  }
  StrippedEvaluator ev(t);
  RawZeros out;
  const int K = std::max(1, opts.power_sum_count);
  out.power_sums = ev.power_sums(K);

  // sigma_K >= x_1^{-2K} gives a lower bound for the first zero.
  double start = 1e-3;
  if (out.power_sums.back() > 0.0) start = 0.999 * std::pow(out.power_sums.back(), -0.5 / K);
  int guard = 0;
  while (ev.eval(start).sign <= 0) {
    start *= 0.5;
    if (++guard > 200) throw NumericalError("stripped series is not positive near the origin");
  }

  double upper = start * opts.upper_factor;
  int extensions = 0;
  double prev_x = start;
  int prev_s = 1;
  double last_zero = 0.0;
  double last_gap = std::numeric_limits<double>::infinity();

  auto refine = [&](double lo, double hi, int s_lo) {
    int iter = 0;
    while (hi - lo > opts.tol * hi) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      const int s = ev.eval(mid).sign;
      if (s == 0) {
        lo = hi = mid;
        break;
      }
      (s == s_lo ? lo : hi) = mid;
      if (++iter > 400) throw SuspectedDoubleRoot("bisection stagnated");
    }
    double z = 0.5 * (lo + hi);
    if (hi > lo) {
      // Secant polish from the endpoint magnitudes; opposite signs, so the
      // interpolation weight is 1 / (1 + |T(hi)| / |T(lo)|).
      const auto a = ev.eval(lo);
      const auto b = ev.eval(hi);
      if (a.sign != 0 && b.sign != 0) {
        const double t = 1.0 / (1.0 + std::exp2(b.log2_abs - a.log2_abs));
        const double x = lo + t * (hi - lo);
        if (x > lo && x < hi) z = x;
      }
    }
    const auto sample = ev.eval(z);
    out.zeros.push_back(z);
    out.brackets.emplace_back(lo, hi);
    out.residuals.push_back(std::exp2(sample.log2_abs - sample.log2_scale));
    last_gap = z - last_zero;
    last_zero = z;
  };

  while (static_cast<int>(out.zeros.size()) < count) {
    double next = prev_x * opts.step_factor;
    if (!out.zeros.empty()) next = std::min(next, prev_x + 0.25 * last_gap);
    while (next > upper) {
      if (extensions >= opts.max_extensions) {
        throw ScanExhausted("found " + std::to_string(out.zeros.size()) + " of " +
                            std::to_string(count) + " zeros below " + fmt_double(upper));
      }
      upper *= opts.upper_factor;
      ++extensions;
    }
    for (double pt : {0.5 * (prev_x + next), next}) {
      int s = ev.eval(pt).sign;
      if (s == 0) {
        // Value indistinguishable from zero: the point itself is the root.
        out.zeros.push_back(pt);
        out.brackets.emplace_back(pt, pt);
        out.residuals.push_back(0.0);
        last_gap = pt - last_zero;
        last_zero = pt;
        s = -prev_s;
      } else if (s != prev_s) {
        refine(prev_x, pt, prev_s);
      }
      prev_s = s;
      prev_x = pt;
      if (static_cast<int>(out.zeros.size()) >= count) break;
    }
  }
  out.zeros.resize(count);
  out.brackets.resize(count);
  out.residuals.resize(count);
  return out;
}

ZeroTable scan_and_refine(const ZeroTarget& target, int count, const ScanOptions& opts) {
  const StrippedTarget st = stripped_target(target);
  RawZeros raw = scan_stripped(st, count, opts);
  ZeroTable table;
  table.target = target;
  table.tol = opts.tol;
  table.power_sums = std::move(raw.power_sums);
  table.residuals = std::move(raw.residuals);
  table.zeros = std::move(raw.zeros);
  table.brackets = std::move(raw.brackets);
  if (target.stores_squares()) {
    for (double& z : table.zeros) z *= z;
    for (auto& [lo, hi] : table.brackets) {
      lo *= lo;
      hi *= hi;
    }
  }
  return table;
}

InterlacingReport interlacing_check(const ZeroTable& a, const ZeroTable& b, int window) {
  if (!a.target.same_family(b.target)) {
    throw DomainError("interlacing needs tables over the same family and parameters");
  }
  const int na = static_cast<int>(a.zeros.size());
  const int nb = static_cast<int>(b.zeros.size());
  const int n = window > 0 ? window : std::min(na, nb);
  if (n > na || n > nb) throw DomainError("interlacing window exceeds table length");
  std::vector<double> chain;
  for (int k = 0; k < n; ++k) {
    chain.push_back(a.zeros[k]);
    chain.push_back(b.zeros[k]);
  }
  if (na > n) chain.push_back(a.zeros[n]);
  InterlacingReport r;
  for (std::size_t k = 0; k + 1 < chain.size(); ++k) r.links.push_back(chain[k] < chain[k + 1]);
  r.all_hold = !r.links.empty() && std::all_of(r.links.begin(), r.links.end(), [](bool v) { return v; });
  return r;
}

}  // namespace ucr
