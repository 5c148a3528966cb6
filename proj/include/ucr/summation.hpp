#pragma once

#include <cmath>
#include <complex>

namespace ucr {

/// Neumaier's variant of Kahan summation. The running compensation captures
/// the low-order bits lost by each addition.
class CompensatedSum {
public:
  void add(double x) noexcept {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }

  CompensatedSum& operator+=(double x) noexcept {
    add(x);
    return *this;
  }

  [[nodiscard]] double value() const noexcept { return sum_ + comp_; }

private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

/// Componentwise compensated summation of complex terms.
class CompensatedComplexSum {
public:
  void add(std::complex<double> x) noexcept {
    re_.add(x.real());
    im_.add(x.imag());
  }

  CompensatedComplexSum& operator+=(std::complex<double> x) noexcept {
    add(x);
    return *this;
  }

  [[nodiscard]] std::complex<double> value() const noexcept {
    return {re_.value(), im_.value()};
  }

private:
  CompensatedSum re_;
  CompensatedSum im_;
};

template <class T>
struct compensated_accumulator;

template <>
struct compensated_accumulator<double> {
  using type = CompensatedSum;
};

template <>
struct compensated_accumulator<std::complex<double>> {
  using type = CompensatedComplexSum;
};

template <class T>
using compensated_accumulator_t = typename compensated_accumulator<T>::type;

}  // namespace ucr
