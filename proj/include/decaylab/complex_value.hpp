#pragma once

#include <complex>

namespace decaylab {

using Complex = std::complex<double>;

/// A finite point of the complex plane. Construction rejects NaN and Inf
/// components with std::domain_error.
class ComplexValue {
 public:
  ComplexValue() = default;
  ComplexValue(double re, double im);
  ComplexValue(Complex z);  // NOLINT(google-explicit-constructor)

  double re() const noexcept { return z_.real(); }
  double im() const noexcept { return z_.imag(); }
  Complex value() const noexcept { return z_; }
  operator Complex() const noexcept { return z_; }  // NOLINT

  friend bool operator==(const ComplexValue&, const ComplexValue&) = default;

 private:
  Complex z_{0.0, 0.0};
};

}  // namespace decaylab
