#include "decaylab/complex_value.hpp"

#include <cmath>
#include <stdexcept>

namespace decaylab {

ComplexValue::ComplexValue(double re, double im) : z_(re, im) {
  if (!std::isfinite(re) || !std::isfinite(im)) {
    throw std::domain_error("ComplexValue: components must be finite");
  }
}

ComplexValue::ComplexValue(Complex z) : ComplexValue(z.real(), z.imag()) {}

}  // namespace decaylab
