#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace decaylab {

/// A sequence (omega_k)_{k>=1} with omega_p <= omega_k <= omega_q.
class ParamSeq {
 public:
  enum class Kind { constant, periodic, seeded_random };

  static ParamSeq constant(double omega);
  static ParamSeq periodic(std::vector<double> values);
  /// omega_k = omega_p + (omega_q - omega_p) * u_k, u_k the top 53 bits of
  /// splitmix64(seed + k * 0x9E3779B97F4A7C15) scaled to [0, 1).
  static ParamSeq seeded_random(std::uint64_t seed, double omega_p, double omega_q);

  Kind kind() const noexcept { return kind_; }
  double omega_p() const noexcept { return omega_p_; }
  double omega_q() const noexcept { return omega_q_; }
  std::uint64_t seed() const noexcept { return seed_; }
  const std::vector<double>& values() const noexcept { return values_; }
  bool is_constant() const noexcept { return kind_ == Kind::constant; }

  /// omega_k for k >= 1.
  double operator()(std::uint64_t k) const;
  /// omega_1, ..., omega_n
  std::vector<double> take(std::size_t n) const;

  std::string describe() const;

 private:
  ParamSeq() = default;
  Kind kind_ = Kind::constant;
  std::vector<double> values_;
  double omega_p_ = 1.0;
  double omega_q_ = 1.0;
  std::uint64_t seed_ = 0;
};

/// One splitmix64 output for state value z (the increment already applied).
std::uint64_t splitmix64_mix(std::uint64_t z);

}  // namespace decaylab
