#pragma once

#include <vector>

namespace ucr {

/// J^(2)_nu((1-q) z; q) against the classical J_nu(z).
struct QLimitPoint {
  double nu = 0.0;
  double z = 0.0;
  double q = 0.0;
  double scaled = 0.0;
  double classical = 0.0;
  double rel_error = 0.0;
};

[[nodiscard]] QLimitPoint q_limit_point(double nu, double z, double q);

/// phi(1, nu+1, -x^2/4) (x/2)^nu against J_nu(x).
struct WrightBesselPoint {
  double nu = 0.0;
  double x = 0.0;
  double wright = 0.0;
  double classical = 0.0;
  double abs_error = 0.0;
};

[[nodiscard]] WrightBesselPoint wright_bessel_point(double nu, double x);

/// x_k = 5 k / n for k = 1..n.
[[nodiscard]] std::vector<double> wright_bessel_grid(int n = 100);

}  // namespace ucr
