#include "ucr/radius.hpp"

#include <algorithm>
#include <cmath>

#include "ucr/errors.hpp"
#include "ucr/qseries.hpp"
#include "ucr/summation.hpp"
#include "ucr/wright.hpp"

namespace ucr {
namespace {

constexpr double kLowerFrac = 1e-9;
constexpr double kDirectGuard = 1e-6;
constexpr double kSumGuard = 1e-9;

double re(const ComplexEval& e) { return e.value.real(); }

double direct_qbessel(const QBesselParams& p, Norm norm, double r) {
  const double nu = p.nu;
  if (norm == Norm::F) {
    const double j0 = re(jackson_qbessel(p, r, 0));
    const double j1 = re(jackson_qbessel(p, r, 1));
    const double j2 = re(jackson_qbessel(p, r, 2));
    return 1.0 + 2.0 * r * ((1.0 / nu - 1.0) * j1 / j0 + j2 / j1);
  }
  const double d1 = re(normalized_qbessel(p, norm, r, 1));
  const double d2 = re(normalized_qbessel(p, norm, r, 2));
  return 1.0 + 2.0 * r * d2 / d1;
}

double direct_wright(const WrightParams& p, Norm norm, double r) {
  if (norm == Norm::F) {
    const double s0 = psi_func(p, r, 0).value;
    const double s1 = psi_func(p, r, 1).value;
    const double s2 = psi_func(p, r, 2).value;
    return 1.0 + 2.0 * r * s2 / s1 + 2.0 * (1.0 / p.beta - 1.0) * r * s1 / s0;
  }
  const double d1 = re(normalized_wright(p, norm, r, 1));
  const double d2 = re(normalized_wright(p, norm, r, 2));
  return 1.0 + 2.0 * r * d2 / d1;
}

ZeroTable default_provider(const ZeroTarget& t, int count) { return scan_and_refine(t, count); }

}  // namespace

std::string to_string(RadiusMethod m) {
  switch (m) {
    case RadiusMethod::DirectEq: return "DirectEq";
    case RadiusMethod::ZeroSum: return "ZeroSum";
    case RadiusMethod::Oracle: return "Oracle";
  }
  return "?";
}

RootResult solve_decreasing(const std::function<double(double)>& f, double lo, double hi,
                            double rel_tol) {
  double flo = f(lo);
  double fhi = f(hi);
  if (!(flo > 0.0) || !(fhi < 0.0)) {
    throw NonBracketing("no sign change on [" + std::to_string(lo) + ", " + std::to_string(hi) +
                        "]: values " + std::to_string(flo) + ", " + std::to_string(fhi));
  }
  RootResult out;
  while (hi - lo > rel_tol * hi) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fm = f(mid);
    ++out.iterations;
    if (fm > 0.0) {
      lo = mid;
      flo = fm;
    } else if (fm < 0.0) {
      hi = mid;
      fhi = fm;
    } else {
      lo = hi = mid;
      flo = fhi = 0.0;
      break;
    }
  }
  out.bracket = {lo, hi};
  double x = 0.5 * (lo + hi);
  if (hi > lo) {
    const double s = lo - flo * (hi - lo) / (fhi - flo);
    if (s > lo && s < hi) x = s;
  }
  out.root = x;
  out.value = f(x);
  ++out.iterations;
  return out;
}

RadiusProblem::RadiusProblem(UcTarget target, RadiusOptions opts)
    : target_(std::move(target)), opts_(std::move(opts)) {
  target_.validate();
  if (!opts_.zeros) opts_.zeros = default_provider;
  if (opts_.zero_count < 1 || opts_.max_zero_count < opts_.zero_count) {
    throw DomainError("invalid zero counts");
  }
  opts_.tail_terms = std::clamp(opts_.tail_terms, 0, 7);
  const ZeroKind crit = target_.critical_kind();
  switch (target_.norm) {
    case Norm::F: {
      const double c = 4.0 * (1.0 / target_.exponent() - 1.0);
      if (c != 0.0) terms_.push_back({c, ZeroKind::Function});
      terms_.push_back({4.0, crit});
      break;
    }
    case Norm::G: terms_.push_back({4.0, crit}); break;
    case Norm::H: terms_.push_back({2.0, crit}); break;
  }
}

void RadiusProblem::load_tables(int count) {
  tables_.clear();
  loaded_.clear();
  for (const Term& t : terms_) {
    ZeroTable tab = opts_.zeros(ZeroTarget{target_.family, t.kind}, count);
    if (static_cast<int>(tab.zeros.size()) < count) {
      throw ScanExhausted("zero provider returned a short table for " + tab.target.descriptor());
    }
    Loaded L;
    L.w = tab.squares();
    // tau_k = sigma_k - sum_{n<=N} w_n^{-k}, k = 1..tail_terms+1
    const int K = std::min<int>(opts_.tail_terms + 1, static_cast<int>(tab.power_sums.size()));
    for (int k = 1; k <= K; ++k) {
      CompensatedSum pk;
      for (double wn : L.w) pk.add(std::pow(wn, -k));
      L.tau.push_back(std::max(0.0, tab.power_sums[k - 1] - pk.value()));
    }
    loaded_[t.kind] = std::move(L);
    tables_.emplace(t.kind, std::move(tab));
  }
  count_ = count;
}

const ZeroTable& RadiusProblem::table(ZeroKind kind) {
  if (tables_.empty()) load_tables(opts_.zero_count);
  return tables_.at(kind);
}

double RadiusProblem::domain_upper() {
  return critical_value(table(target_.critical_kind()), target_.norm);
}

double RadiusProblem::direct(double r) const {
  if (const auto* p = std::get_if<QBesselParams>(&target_.family)) {
    return direct_qbessel(*p, target_.norm, r);
  }
  return direct_wright(std::get<WrightParams>(target_.family), target_.norm, r);
}

ZeroSumValue RadiusProblem::zero_sum(double r) {
  if (tables_.empty()) load_tables(opts_.zero_count);
  const double s = target_.norm == Norm::H ? r : r * r;
  CompensatedSum total;
  total.add(1.0);
  double bound = 0.0;
  for (const Term& t : terms_) {
    const Loaded& L = loaded_.at(t.kind);
    CompensatedSum part;
    for (double wn : L.w) part.add(s / (wn - s));
    // Omitted zeros: sum_{n>N} s/(w_n - s) = sum_k s^k tau_k.
    const int K = static_cast<int>(L.tau.size()) - 1;
    double sk = 1.0;
    for (int k = 1; k <= K; ++k) {
      sk *= s;
      part.add(sk * L.tau[k - 1]);
    }
    if (!L.tau.empty()) bound += std::abs(t.coef) * sk * s * L.tau.back() / (1.0 - s / L.w.back());
    total.add(-t.coef * part.value());
  }
  return {total.value(), bound};
}

std::vector<std::string> RadiusProblem::warnings() const {
  std::vector<std::string> w;
  if (const auto* p = std::get_if<QBesselParams>(&target_.family)) {
    if (p->q > kSoftMaxQ) w.emplace_back("q above 0.99: infinite products converge slowly");
  }
  if (target_.outside_factorization_hypotheses()) {
    w.emplace_back("nu <= 0: derivative product representation not covered by its lemma");
  }
  return w;
}

RadiusResult RadiusProblem::solve(RadiusMethod method) {
  if (method == RadiusMethod::Oracle) throw DomainError("use oracle_radius for the oracle route");
  RadiusResult out;
  out.method = method;
  out.outside_hypotheses = target_.outside_factorization_hypotheses();
  out.warnings = warnings();

  if (method == RadiusMethod::DirectEq) {
    const double upper = domain_upper();
    out.domain_upper = upper;
    const RootResult rr = solve_decreasing([this](double r) { return direct(r); },
                                           kLowerFrac * upper, (1.0 - kDirectGuard) * upper,
                                           opts_.tol);
    out.radius = rr.root;
    out.bracket = rr.bracket;
    out.residual = rr.value;
    out.iterations = rr.iterations;
    return out;
  }

  int count = count_ > 0 ? count_ : opts_.zero_count;
  for (;;) {
    if (count != count_) load_tables(count);
    const double upper = domain_upper();
    const RootResult rr = solve_decreasing([this](double r) { return zero_sum(r).value; },
                                           kLowerFrac * upper, (1.0 - kSumGuard) * upper,
                                           opts_.tol);
    const double tail = zero_sum(rr.root).tail_bound;
    out.domain_upper = upper;
    out.radius = rr.root;
    out.bracket = rr.bracket;
    out.residual = rr.value;
    out.iterations += rr.iterations;
    out.tail_bound = tail;
    out.zeros_used = count;
    if (tail <= 0.1 * opts_.tol || count >= opts_.max_zero_count) return out;
    count = std::min(2 * count, opts_.max_zero_count);
  }
}

DualRadius radius_uc(const UcTarget& target, const RadiusOptions& opts) {
  RadiusProblem prob(target, opts);
  DualRadius d;
  d.direct = prob.solve(RadiusMethod::DirectEq);
  d.zero_sum = prob.solve(RadiusMethod::ZeroSum);
  d.agreement = std::abs(d.direct.radius - d.zero_sum.radius);
  return d;
}

RadiusResult radius_uc(const UcTarget& target, RadiusMethod method, const RadiusOptions& opts) {
  RadiusProblem prob(target, opts);
  return prob.solve(method);
}

RadiusResult radius_uc_qbessel_f(const QBesselParams& p, RadiusMethod m, const RadiusOptions& o) {
  return radius_uc(UcTarget{p, Norm::F}, m, o);
}
RadiusResult radius_uc_qbessel_g(const QBesselParams& p, RadiusMethod m, const RadiusOptions& o) {
  return radius_uc(UcTarget{p, Norm::G}, m, o);
}
RadiusResult radius_uc_qbessel_h(const QBesselParams& p, RadiusMethod m, const RadiusOptions& o) {
  return radius_uc(UcTarget{p, Norm::H}, m, o);
}
RadiusResult radius_uc_wright_f(const WrightParams& p, RadiusMethod m, const RadiusOptions& o) {
  return radius_uc(UcTarget{p, Norm::F}, m, o);
}
RadiusResult radius_uc_wright_g(const WrightParams& p, RadiusMethod m, const RadiusOptions& o) {
  return radius_uc(UcTarget{p, Norm::G}, m, o);
}
RadiusResult radius_uc_wright_h(const WrightParams& p, RadiusMethod m, const RadiusOptions& o) {
  return radius_uc(UcTarget{p, Norm::H}, m, o);
}

}  // namespace ucr
