#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "decaylab/complex_value.hpp"

namespace decaylab {

/// Finite stand-in for the spectrum of a normal operator A with sigma(A) in the
/// open right half-plane. Only Im >= 0 representatives are stored: every norm
/// below depends on |Im lambda| alone.
struct SpectrumModel {
  std::vector<ComplexValue> points;
  std::string label;
  std::optional<double> beta;        // polynomial stability parameter
  std::optional<double> exp_margin;  // c with Re lambda >= c
  // Constants of the resolvent condition |Im l| >= C (Re l)^{-1/beta} for Re l <= delta.
  std::optional<double> delta;
  std::optional<double> C;
};

/// Throws std::invalid_argument when an invariant fails: empty point list,
/// Re <= 0, a point to the left of exp_margin, or a violated beta condition.
void validate(const SpectrumModel& model);

/// lambda_k = k^{-beta} + i c_im k, k = 1..K  (delta = 1, C = c_im)
SpectrumModel make_poly_stable_spectrum(double beta, std::size_t K, double c_im = 1.0);

/// lambda_k = c + i sqrt(k), k = 1..K
SpectrumModel make_sqrt_spectrum(double c, std::size_t K);

/// Header "# label beta=.. c=.. delta=.. C=.." then one "re im" line per point.
void write_spectrum(std::ostream& os, const SpectrumModel& model);
SpectrumModel read_spectrum(std::istream& is);

}  // namespace decaylab
