#pragma once

#include <string>
#include <string_view>

namespace ucr {

/// Jackson's second q-Bessel function, or the third (Hahn-Exton) one.
enum class QKind { Jackson2, Jackson3 };

/// The three normalizations into the class of f(0) = 0, f'(0) = 1 functions.
///   F: power-1/nu (resp. 1/beta) root of the z^nu-type function
///   G: z times the even part
///   H: z times the even part evaluated at sqrt(z)
enum class Norm { F, G, H };

struct QBesselParams {
  QKind kind = QKind::Jackson2;
  double nu = 0.0;
  double q = 0.5;

  /// Throws DomainError unless nu > -1 and 0 < q < 1.
  void validate() const;
  [[nodiscard]] int s() const noexcept { return kind == QKind::Jackson2 ? 2 : 3; }
};

struct WrightParams {
  double rho = 1.0;
  double beta = 1.0;

  /// Bare series evaluation only needs rho > -1.
  void validate_series() const;
  /// Radius work needs rho > 0 and beta > 0.
  void validate_radius() const;
};

[[nodiscard]] std::string to_string(Norm n);
[[nodiscard]] std::string to_string(QKind k);
[[nodiscard]] Norm parse_norm(std::string_view s);
[[nodiscard]] QKind parse_kind(int s);

/// Soft limit for q; above it the infinite products converge slowly.
inline constexpr double kSoftMaxQ = 0.99;

}  // namespace ucr
