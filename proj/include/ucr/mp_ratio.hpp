#pragma once

#include <variant>

#include "ucr/mp_float.hpp"
#include "ucr/series_rule.hpp"

namespace ucr {

// Consecutive ratios b_n / b_{n-1} at a fixed working precision.
class MpRatioStream {
public:
  MpRatioStream(const SeriesRule& rule, mpfr_prec_t prec) : rule_(rule), prec_(prec) {
    if (const auto* r = std::get_if<QBesselRule>(&rule_)) {
      q_ = MpFloat(r->params.q, prec);
      qn_ = MpFloat(1.0, prec);
      qnu_ = pow(MpFloat(r->params.q, prec), MpFloat(r->params.nu, prec));
    } else if (const auto* w = std::get_if<WrightRule>(&rule_)) {
      lg_prev_ = lgamma_pos(MpFloat(w->params.beta, prec));
    }
  }

  MpFloat next() {
    ++n_;
    const double n = n_;
    MpFloat one(1.0, prec_);
    if (const auto* c = std::get_if<ClassicalBesselRule>(&rule_)) {
      MpFloat d(c->nu, prec_);
      d += n;
      d *= 4.0 * n;
      return -(one / d);
    }
    if (const auto* r = std::get_if<QBesselRule>(&rule_)) {
      qn_ *= q_;
      const MpFloat a = one - qn_;
      const MpFloat b = one - qn_ * qnu_;
      if (r->params.kind == QKind::Jackson2) {
        MpFloat num = qn_ * qn_ / q_ * qnu_;
        return -(num / (a * b * 4.0));
      }
      return -(qn_ / (a * b));
    }
    const auto& w = std::get<WrightRule>(rule_).params;
    MpFloat arg(w.rho, prec_);
    arg *= n;
    arg += w.beta;
    MpFloat lg = lgamma_pos(arg);
    MpFloat out = exp(lg_prev_ - lg) / n;
    lg_prev_ = std::move(lg);
    return -out;
  }

private:
  SeriesRule rule_;
  mpfr_prec_t prec_;
  int n_ = 0;
  MpFloat q_{64}, qn_{64}, qnu_{64}, lg_prev_{64};
};

}  // namespace ucr
