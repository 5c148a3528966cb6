#include "ucr/target.hpp"

#include "ucr/errors.hpp"
#include "ucr/qseries.hpp"
#include "ucr/wright.hpp"

namespace ucr {

void UcTarget::validate() const {
  if (const auto* p = std::get_if<QBesselParams>(&family)) {
    p->validate();
    if (norm == Norm::F && !(p->nu > 0.0)) {
      throw DomainError("the f normalization requires nu > 0 (got nu = " + std::to_string(p->nu) +
                        ")");
    }
    return;
  }
  std::get<WrightParams>(family).validate_radius();
}

double UcTarget::exponent() const {
  if (const auto* p = std::get_if<QBesselParams>(&family)) return p->nu;
  return std::get<WrightParams>(family).beta;
}

ZeroKind UcTarget::critical_kind() const {
  if (const auto* p = std::get_if<QBesselParams>(&family)) {
    const bool two = p->kind == QKind::Jackson2;
    switch (norm) {
      case Norm::F: return ZeroKind::Derivative;
      case Norm::G: return two ? ZeroKind::AlphaComb : ZeroKind::GammaComb;
      case Norm::H: return two ? ZeroKind::BetaComb : ZeroKind::DeltaComb;
    }
  }
  switch (norm) {
    case Norm::F: return ZeroKind::PsiPrime;
    case Norm::G: return ZeroKind::GPrime;
    case Norm::H: return ZeroKind::HPrime;
  }
  return ZeroKind::Function;
}

bool UcTarget::outside_factorization_hypotheses() const {
  const auto* p = std::get_if<QBesselParams>(&family);
  return p != nullptr && norm != Norm::F && p->nu <= 0.0;
}

std::string UcTarget::descriptor() const {
  std::string d = ZeroTarget{family, ZeroKind::Function}.descriptor();
  d.erase(d.rfind(':'));
  return d + ":norm=" + to_string(norm);
}

std::complex<double> convexity_ratio(const UcTarget& t, std::complex<double> z) {
  if (const auto* p = std::get_if<QBesselParams>(&t.family)) {
    return ratio_one_plus_zfpp_fp(*p, t.norm, z);
  }
  return ratio_one_plus_zfpp_fp_wright(std::get<WrightParams>(t.family), t.norm, z);
}

double critical_value(const ZeroTable& table, Norm norm) {
  if (table.zeros.empty()) throw DomainError("empty zero table");
  return norm == Norm::H ? table.squares().front() : table.zeros.front();
}

}  // namespace ucr
