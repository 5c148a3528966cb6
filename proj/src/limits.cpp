#include "ucr/limits.hpp"

#include <cmath>

#include "ucr/qseries.hpp"
#include "ucr/wright.hpp"

namespace ucr {

QLimitPoint q_limit_point(double nu, double z, double q) {
  QLimitPoint p{nu, z, q};
  p.scaled = jackson_qbessel(QBesselParams{QKind::Jackson2, nu, q}, (1.0 - q) * z, 0).value.real();
  p.classical = classical_bessel(nu, z).value;
  p.rel_error = std::abs(p.scaled - p.classical) / std::abs(p.classical);
  return p;
}

WrightBesselPoint wright_bessel_point(double nu, double x) {
  WrightBesselPoint p{nu, x};
  const double phi = wright_phi(WrightParams{1.0, nu + 1.0}, -0.25 * x * x, 0).value.real();
  p.wright = phi * std::pow(0.5 * x, nu);
  p.classical = classical_bessel(nu, x).value;
  p.abs_error = std::abs(p.wright - p.classical);
  return p;
}

std::vector<double> wright_bessel_grid(int n) {
  std::vector<double> xs;
  for (int k = 1; k <= n; ++k) xs.push_back(5.0 * k / n);
  return xs;
}

}  // namespace ucr
