#pragma once

#include <string>
#include <variant>
#include <vector>

#include "decaylab/complex_value.hpp"

namespace decaylab {

// Holomorphic families on the open right half-plane. Every evaluation goes
// through sums of logarithms so that powers with exponents ~1e5 stay finite.

/// (z-1)^n / (z+1)^(n+2p)
struct CayleyPower {
  int n = 1;
  double p = 0.5;
};

/// (z-1+c)^n / (z+1+c)^(n+alpha)
struct CayleyShifted {
  int n = 1;
  double alpha = 0.0;
  double c = 1.0;
};

/// (z+omega_p+c)^(-alpha) * prod_k (z-omega_k+c)/(z+omega_k+c), with every
/// omega_k in [omega_p, omega_q]. n is omegas.size().
struct VariableCayley {
  std::vector<double> omegas;
  double alpha = 0.0;
  double omega_p = 1.0;
  double omega_q = 1.0;
  double c = 1.0;
};

/// z e^(-t/z) / (z+1)^(alpha+1)
struct InverseGen {
  double t = 1.0;
  double alpha = 0.0;
};

/// z e^(-t/z) / (z+1)^(2p+1)
struct InverseGenPoly {
  double t = 1.0;
  double p = 0.5;
};

using FunctionFamily =
    std::variant<CayleyPower, CayleyShifted, VariableCayley, InverseGen, InverseGenPoly>;

/// Throws std::invalid_argument when a parameter is outside its range.
void validate(const FunctionFamily& family);

std::string describe(const FunctionFamily& family);

/// log|f(z)|; -inf exactly at zeros of f. Requires Re z > 0 (std::domain_error).
double eval_log_magnitude(const FunctionFamily& family, ComplexValue z);

/// f(z) with principal-branch powers. Throws std::overflow_error when |f(z)|
/// is not representable.
Complex eval(const FunctionFamily& family, ComplexValue z);

/// f'(z) from the closed-form derivative decompositions.
Complex eval_derivative(const FunctionFamily& family, ComplexValue z);

namespace detail {
// Same as eval_derivative without parameter validation or the Re z check; for
// inner loops that validated the family once up front.
Complex eval_derivative_unchecked(const FunctionFamily& family, Complex z);
}  // namespace detail

}  // namespace decaylab
