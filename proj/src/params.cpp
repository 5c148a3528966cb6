#include "ucr/params.hpp"

#include <cmath>

#include "ucr/errors.hpp"

namespace ucr {

void QBesselParams::validate() const {
  if (!std::isfinite(nu) || !(nu > -1.0)) {
    throw DomainError("q-Bessel order must satisfy nu > -1 (got nu = " + std::to_string(nu) + ")");
  }
  if (!std::isfinite(q) || !(q > 0.0 && q < 1.0)) {
    throw DomainError("deformation parameter must satisfy 0 < q < 1 (got q = " + std::to_string(q) +
                      ")");
  }
}

void WrightParams::validate_series() const {
  if (!std::isfinite(rho) || !(rho > -1.0)) {
    throw DomainError("Wright parameter must satisfy rho > -1 (got rho = " + std::to_string(rho) +
                      ")");
  }
  if (!std::isfinite(beta)) {
    throw DomainError("Wright parameter beta must be finite");
  }
}

void WrightParams::validate_radius() const {
  if (!std::isfinite(rho) || !(rho > 0.0)) {
    throw DomainError("Wright radius requires rho > 0 (got rho = " + std::to_string(rho) + ")");
  }
  if (!std::isfinite(beta) || !(beta > 0.0)) {
    throw DomainError("Wright radius requires beta > 0 (got beta = " + std::to_string(beta) + ")");
  }
}

std::string to_string(Norm n) {
  switch (n) {
    case Norm::F: return "f";
    case Norm::G: return "g";
    case Norm::H: return "h";
  }
  return "?";
}

std::string to_string(QKind k) { return k == QKind::Jackson2 ? "2" : "3"; }

Norm parse_norm(std::string_view s) {
  if (s == "f" || s == "F") return Norm::F;
  if (s == "g" || s == "G") return Norm::G;
  if (s == "h" || s == "H") return Norm::H;
  throw DomainError("unknown normalization '" + std::string(s) + "' (expected f, g or h)");
}

QKind parse_kind(int s) {
  if (s == 2) return QKind::Jackson2;
  if (s == 3) return QKind::Jackson3;
  throw DomainError("q-Bessel kind must be 2 or 3 (got " + std::to_string(s) + ")");
}

}  // namespace ucr
