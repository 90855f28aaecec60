#pragma once

#include <cstddef>
#include <vector>

#include "decaylab/param_seq.hpp"
#include "decaylab/spectrum.hpp"

namespace decaylab {

// For a normal operator every function of A has norm sup_{lambda in sigma(A)} |f(lambda)|.
// The kernels below return that supremum over the model's points together
// with the attaining point. Ties go to the lowest index, so results do not
// depend on the thread count.

struct SpectralSup {
  double value = 0.0;
  double log_value = 0.0;  // log of value; -inf when value is 0
  std::size_t index = 0;   // 0-based index of the attaining point
  ComplexValue point;
};

/// Factor |lambda + shift|^{-alpha}.
struct PowerWeight {
  double alpha = 0.0;
  double shift = 0.0;
};

/// sup_lambda prod_{k=1..n} |(lambda-omega_k)/(lambda+omega_k)| |lambda+shift|^{-alpha}
SpectralSup cayley_product_sup(const SpectrumModel& spec, const ParamSeq& params, int n, double alpha,
                               double shift);
/// Same with a product of weights, e.g. |lambda+1|^{-2p} |lambda|^{-beta q}.
SpectralSup cayley_product_sup(const SpectrumModel& spec, const ParamSeq& params, int n,
                               const std::vector<PowerWeight>& weights);

/// sup_lambda e^{-t Re lambda} |lambda|^{-alpha}
SpectralSup semigroup_sup(const SpectrumModel& spec, double t, double alpha);

/// sup_lambda e^{-t Re(1/lambda)} |lambda|^{-alpha}
SpectralSup inverse_semigroup_sup(const SpectrumModel& spec, double t, double alpha);

/// sup_lambda |lambda|^{-alpha}
SpectralSup frac_power_sup(const SpectrumModel& spec, double alpha);

inline double cayley_product_norm(const SpectrumModel& s, const ParamSeq& p, int n, double alpha, double shift) {
  return cayley_product_sup(s, p, n, alpha, shift).value;
}
inline double semigroup_norm(const SpectrumModel& s, double t, double alpha) {
  return semigroup_sup(s, t, alpha).value;
}
inline double inverse_semigroup_norm(const SpectrumModel& s, double t, double alpha) {
  return inverse_semigroup_sup(s, t, alpha).value;
}
inline double frac_power_norm(const SpectrumModel& s, double alpha) { return frac_power_sup(s, alpha).value; }

struct PlancherelSides {
  double lhs = 0.0;     // int_R |lambda|^{-2bq} / |xi + i eta + lambda|^2 d eta
  double rhs = 0.0;     // 2 pi int_0^inf e^{-2 xi t} e^{-2 t Re lambda} |lambda|^{-2bq} dt
  double closed = 0.0;  // pi |lambda|^{-2bq} / (xi + Re lambda)
  bool converged = false;
};

PlancherelSides plancherel_sides(const SpectrumModel& spec, double xi, double beta_q, std::size_t point_index);

/// |lhs - rhs| / |closed|, both sides by quadrature. Throws std::runtime_error
/// when either quadrature misses its tolerance.
double plancherel_residual(const SpectrumModel& spec, double xi, double beta_q, std::size_t point_index);

/// sup over points and xi in (0, 1] of xi^{1-2q} pi |lambda|^{-2 beta q} / (xi + Re lambda).
/// The xi-maximum is taken in closed form per point.
SpectralSup weighted_resolvent_sup(const SpectrumModel& spec, double q, double beta);

namespace reference {

// Straightforward serial versions: every point, every factor, no pruning.
SpectralSup cayley_product_sup(const SpectrumModel& spec, const ParamSeq& params, int n, double alpha,
                               double shift);
SpectralSup cayley_product_sup(const SpectrumModel& spec, const ParamSeq& params, int n,
                               const std::vector<PowerWeight>& weights);
SpectralSup semigroup_sup(const SpectrumModel& spec, double t, double alpha);
SpectralSup inverse_semigroup_sup(const SpectrumModel& spec, double t, double alpha);
SpectralSup frac_power_sup(const SpectrumModel& spec, double alpha);
SpectralSup weighted_resolvent_sup(const SpectrumModel& spec, double q, double beta, int xi_grid = 20000);

}  // namespace reference

}  // namespace decaylab
