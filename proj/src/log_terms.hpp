#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <vector>

namespace decaylab::detail {

using Complex = std::complex<double>;

/// exponent * Log(base) on the principal branch; 0 when exponent == 0 and
/// -inf (real part) when base == 0 with exponent > 0.
inline Complex log_power(Complex base, double exponent) {
  if (exponent == 0.0) return {0.0, 0.0};
  if (base == Complex{0.0, 0.0}) {
    return {exponent > 0.0 ? -std::numeric_limits<double>::infinity() : std::numeric_limits<double>::infinity(), 0.0};
  }
  return exponent * std::log(base);
}

/// Accumulates sum_i coef_i * exp(log_i) with a shared scale so that terms
/// whose individual magnitudes over- or underflow still combine correctly.
class LogTermSum {
 public:
  void add(Complex coef, Complex log_term) {
    if (coef == Complex{0.0, 0.0}) return;
    if (log_term.real() == -std::numeric_limits<double>::infinity()) return;
    if (size_ < inline_.size()) {
      inline_[size_++] = {coef, log_term};
    } else {
      overflow_.push_back({coef, log_term});
    }
  }

  // log|sum| (may be -inf).
  double log_magnitude() const {
    const auto [scale, s] = scaled();
    if (s == Complex{0.0, 0.0}) return -std::numeric_limits<double>::infinity();
    return scale + std::log(std::abs(s));
  }

  Complex value() const {
    const auto [scale, s] = scaled();
    if (s == Complex{0.0, 0.0}) return {0.0, 0.0};
    const double lm = scale + std::log(std::abs(s));
    if (!std::isfinite(lm) || lm > kMaxLog) throw std::overflow_error("function value not representable");
    return std::polar(std::exp(lm), std::arg(s));
  }

 private:
  struct Term {
    Complex coef;
    Complex log;
  };
  static constexpr double kMaxLog = 709.782712893384;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < size_; ++i) f(inline_[i]);
    for (const auto& t : overflow_) f(t);
  }

  std::pair<double, Complex> scaled() const {
    if (size_ == 0) return {0.0, {0.0, 0.0}};
    double m = -std::numeric_limits<double>::infinity();
    for_each([&](const Term& t) { m = std::max(m, t.log.real() + std::log(std::abs(t.coef))); });
    Complex s{0.0, 0.0};
    for_each([&](const Term& t) { s += t.coef * std::exp(t.log - m); });
    return {m, s};
  }

  std::array<Term, 4> inline_{};
  std::size_t size_ = 0;
  std::vector<Term> overflow_;
};

}  // namespace decaylab::detail
