#include "decaylab/param_seq.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace decaylab {

std::uint64_t splitmix64_mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

ParamSeq ParamSeq::constant(double omega) {
  if (!(omega > 0.0) || !std::isfinite(omega)) throw std::invalid_argument("ParamSeq: omega must be > 0");
  ParamSeq s;
  s.kind_ = Kind::constant;
  s.values_ = {omega};
  s.omega_p_ = s.omega_q_ = omega;
  return s;
}

ParamSeq ParamSeq::periodic(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("ParamSeq: periodic sequence needs at least one value");
  for (double w : values) {
    if (!(w > 0.0) || !std::isfinite(w)) throw std::invalid_argument("ParamSeq: omega must be > 0");
  }
  ParamSeq s;
  s.kind_ = Kind::periodic;
  s.omega_p_ = *std::min_element(values.begin(), values.end());
  s.omega_q_ = *std::max_element(values.begin(), values.end());
  s.values_ = std::move(values);
  return s;
}

ParamSeq ParamSeq::seeded_random(std::uint64_t seed, double omega_p, double omega_q) {
  if (!(omega_p > 0.0) || !(omega_q >= omega_p) || !std::isfinite(omega_q)) {
    throw std::invalid_argument("ParamSeq: need 0 < omega_p <= omega_q");
  }
  ParamSeq s;
  s.kind_ = Kind::seeded_random;
  s.omega_p_ = omega_p;
  s.omega_q_ = omega_q;
  s.seed_ = seed;
  return s;
}

double ParamSeq::operator()(std::uint64_t k) const {
  if (k == 0) throw std::out_of_range("ParamSeq: indices start at 1");
  switch (kind_) {
    case Kind::constant:
      return values_[0];
    case Kind::periodic:
      return values_[(k - 1) % values_.size()];
    case Kind::seeded_random: {
      const std::uint64_t z = splitmix64_mix(seed_ + k * 0x9E3779B97F4A7C15ULL);
      const double u = static_cast<double>(z >> 11) * 0x1.0p-53;
      return std::min(omega_q_, omega_p_ + (omega_q_ - omega_p_) * u);
    }
  }
  return values_[0];
}

std::vector<double> ParamSeq::take(std::size_t n) const {
  std::vector<double> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = (*this)(k + 1);
  return out;
}

std::string ParamSeq::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::constant:
      os << "constant(" << values_[0] << ")";
      break;
    case Kind::periodic:
      os << "periodic(";
      for (std::size_t i = 0; i < values_.size(); ++i) os << (i ? "," : "") << values_[i];
      os << ")";
      break;
    case Kind::seeded_random:
      os << "seeded_random(seed=" << seed_ << ", " << omega_p_ << ", " << omega_q_ << ")";
      break;
  }
  return os.str();
}

}  // namespace decaylab
