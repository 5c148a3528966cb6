#pragma once

#include <mpfr.h>

#include <cmath>
#include <utility>

namespace ucr {

/// Minimal RAII handle over an MPFR number with explicit precision.
///
/// The result of a binary operation takes the larger operand precision. There is
/// no global default precision, so values built on different threads do not
/// interfere.
class MpFloat {
public:
  explicit MpFloat(mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
  MpFloat(double x, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_d(v_, x, MPFR_RNDN);
  }
  MpFloat(const MpFloat& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  MpFloat(MpFloat&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }
  MpFloat& operator=(const MpFloat& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  MpFloat& operator=(MpFloat&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~MpFloat() { mpfr_clear(v_); }

  [[nodiscard]] mpfr_prec_t precision() const noexcept { return mpfr_get_prec(v_); }
  [[nodiscard]] double to_double() const noexcept { return mpfr_get_d(v_, MPFR_RNDN); }
  [[nodiscard]] int sign() const noexcept { return mpfr_sgn(v_); }
  [[nodiscard]] bool is_zero() const noexcept { return mpfr_zero_p(v_) != 0; }
  /// log2 |x| (approximate, from the exponent and leading bits); -inf for 0.
  [[nodiscard]] double log2_abs() const noexcept {
    if (is_zero()) return -1.0 / 0.0;
    long e = 0;
    const double m = mpfr_get_d_2exp(&e, v_, MPFR_RNDN);
    return static_cast<double>(e) + std::log2(m < 0 ? -m : m);
  }

  mpfr_ptr raw() noexcept { return v_; }
  [[nodiscard]] mpfr_srcptr raw() const noexcept { return v_; }

  MpFloat& operator+=(const MpFloat& o) {
    widen(o);
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  MpFloat& operator-=(const MpFloat& o) {
    widen(o);
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  MpFloat& operator*=(const MpFloat& o) {
    widen(o);
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  MpFloat& operator/=(const MpFloat& o) {
    widen(o);
    mpfr_div(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  MpFloat& operator*=(double d) {
    mpfr_mul_d(v_, v_, d, MPFR_RNDN);
    return *this;
  }
  MpFloat& operator/=(double d) {
    mpfr_div_d(v_, v_, d, MPFR_RNDN);
    return *this;
  }
  MpFloat& operator+=(double d) {
    mpfr_add_d(v_, v_, d, MPFR_RNDN);
    return *this;
  }

  friend MpFloat operator+(MpFloat a, const MpFloat& b) { return a += b; }
  friend MpFloat operator-(MpFloat a, const MpFloat& b) { return a -= b; }
  friend MpFloat operator*(MpFloat a, const MpFloat& b) { return a *= b; }
  friend MpFloat operator/(MpFloat a, const MpFloat& b) { return a /= b; }
  friend MpFloat operator*(MpFloat a, double d) { return a *= d; }
  friend MpFloat operator/(MpFloat a, double d) { return a /= d; }
  friend MpFloat operator-(MpFloat a) {
    mpfr_neg(a.v_, a.v_, MPFR_RNDN);
    return a;
  }
  friend bool operator<(const MpFloat& a, const MpFloat& b) { return mpfr_less_p(a.v_, b.v_); }

  friend MpFloat abs(MpFloat a) {
    mpfr_abs(a.v_, a.v_, MPFR_RNDN);
    return a;
  }
  friend MpFloat exp(MpFloat a) {
    mpfr_exp(a.v_, a.v_, MPFR_RNDN);
    return a;
  }
  friend MpFloat log(MpFloat a) {
    mpfr_log(a.v_, a.v_, MPFR_RNDN);
    return a;
  }
  friend MpFloat lgamma_pos(MpFloat a) {
    mpfr_lngamma(a.v_, a.v_, MPFR_RNDN);
    return a;
  }
  friend MpFloat pow(MpFloat a, const MpFloat& b) {
    a.widen(b);
    mpfr_pow(a.v_, a.v_, b.v_, MPFR_RNDN);
    return a;
  }

private:
  void widen(const MpFloat& o) {
    if (mpfr_get_prec(o.v_) > mpfr_get_prec(v_)) mpfr_prec_round(v_, mpfr_get_prec(o.v_), MPFR_RNDN);
  }

  mpfr_t v_;
};

}  // namespace ucr
