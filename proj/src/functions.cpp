#include "decaylab/functions.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "log_terms.hpp"

namespace decaylab {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

Complex checked_point(ComplexValue z) {
  if (!(z.re() > 0.0)) throw std::domain_error("evaluation point must satisfy Re z > 0");
  return z.value();
}

double log_abs(Complex w) { return std::log(std::abs(w)); }

// n*log|a| - m*log|b|, with the convention 0*log 0 = 0.
double ratio_log_magnitude(Complex a, double n, Complex b, double m) {
  const double num = n == 0.0 ? 0.0 : n * log_abs(a);
  return num - m * log_abs(b);
}

}  // namespace

void validate(const FunctionFamily& family) {
  std::visit(overloaded{
                 [](const CayleyPower& f) {
                   require(f.n >= 1, "CayleyPower: n must be a positive integer");
                   require(f.p > 0.0 && std::isfinite(f.p), "CayleyPower: p must be > 0");
                 },
                 [](const CayleyShifted& f) {
                   require(f.n >= 1, "CayleyShifted: n must be a positive integer");
                   require(f.alpha >= 0.0 && std::isfinite(f.alpha), "CayleyShifted: alpha must be >= 0");
                   require(f.c > 0.0 && std::isfinite(f.c), "CayleyShifted: c must be > 0");
                 },
                 [](const VariableCayley& f) {
                   require(!f.omegas.empty(), "VariableCayley: need at least one omega");
                   require(f.alpha >= 0.0 && std::isfinite(f.alpha), "VariableCayley: alpha must be >= 0");
                   require(f.omega_p > 0.0 && f.omega_p <= f.omega_q && std::isfinite(f.omega_q),
                           "VariableCayley: need 0 < omega_p <= omega_q");
                   require(f.c > 0.0 && std::isfinite(f.c), "VariableCayley: c must be > 0");
                   for (double w : f.omegas) {
                     require(w >= f.omega_p && w <= f.omega_q, "VariableCayley: omega_k outside [omega_p, omega_q]");
                   }
                 },
                 [](const InverseGen& f) {
                   require(f.t > 0.0 && std::isfinite(f.t), "InverseGen: t must be > 0");
                   require(f.alpha >= 0.0 && std::isfinite(f.alpha), "InverseGen: alpha must be >= 0");
                 },
                 [](const InverseGenPoly& f) {
                   require(f.t > 0.0 && std::isfinite(f.t), "InverseGenPoly: t must be > 0");
                   require(f.p > 0.0 && std::isfinite(f.p), "InverseGenPoly: p must be > 0");
                 },
             },
             family);
}

std::string describe(const FunctionFamily& family) {
  std::ostringstream os;
  std::visit(overloaded{
                 [&](const CayleyPower& f) { os << "CayleyPower{n=" << f.n << ", p=" << f.p << "}"; },
                 [&](const CayleyShifted& f) {
                   os << "CayleyShifted{n=" << f.n << ", alpha=" << f.alpha << ", c=" << f.c << "}";
                 },
                 [&](const VariableCayley& f) {
                   os << "VariableCayley{n=" << f.omegas.size() << ", alpha=" << f.alpha << ", omega_p=" << f.omega_p
                      << ", omega_q=" << f.omega_q << ", c=" << f.c << "}";
                 },
                 [&](const InverseGen& f) { os << "InverseGen{t=" << f.t << ", alpha=" << f.alpha << "}"; },
                 [&](const InverseGenPoly& f) { os << "InverseGenPoly{t=" << f.t << ", p=" << f.p << "}"; },
             },
             family);
  return os.str();
}

double eval_log_magnitude(const FunctionFamily& family, ComplexValue point) {
  validate(family);
  const Complex z = checked_point(point);
  return std::visit(
      overloaded{
          [&](const CayleyPower& f) { return ratio_log_magnitude(z - 1.0, f.n, z + 1.0, f.n + 2.0 * f.p); },
          [&](const CayleyShifted& f) {
            return ratio_log_magnitude(z - 1.0 + f.c, f.n, z + 1.0 + f.c, f.n + f.alpha);
          },
          [&](const VariableCayley& f) {
            double acc = f.alpha == 0.0 ? 0.0 : -f.alpha * log_abs(z + f.omega_p + f.c);
            for (double w : f.omegas) acc += log_abs(z - w + f.c) - log_abs(z + w + f.c);
            return acc;
          },
          [&](const InverseGen& f) {
            return log_abs(z) - f.t * z.real() / std::norm(z) - (f.alpha + 1.0) * log_abs(z + 1.0);
          },
          [&](const InverseGenPoly& f) {
            return log_abs(z) - f.t * z.real() / std::norm(z) - (2.0 * f.p + 1.0) * log_abs(z + 1.0);
          },
      },
      family);
}

namespace {

Complex log_value(const FunctionFamily& family, Complex z) {
  using detail::log_power;
  return std::visit(
      overloaded{
          [&](const CayleyPower& f) { return log_power(z - 1.0, f.n) - (f.n + 2.0 * f.p) * std::log(z + 1.0); },
          [&](const CayleyShifted& f) {
            return log_power(z - 1.0 + f.c, f.n) - (f.n + f.alpha) * std::log(z + 1.0 + f.c);
          },
          [&](const VariableCayley& f) {
            Complex acc = log_power(z + f.omega_p + f.c, -f.alpha);
            for (double w : f.omegas) acc += log_power(z - w + f.c, 1.0) - std::log(z + w + f.c);
            return acc;
          },
          [&](const InverseGen& f) { return std::log(z) - f.t / z - (f.alpha + 1.0) * std::log(z + 1.0); },
          [&](const InverseGenPoly& f) { return std::log(z) - f.t / z - (2.0 * f.p + 1.0) * std::log(z + 1.0); },
      },
      family);
}

// f' for z e^{-t/z} (z+1)^{-(a+1)}:
//   (t / (z (z+1)^{a+1}) - a z / (z+1)^{a+2} + 1 / (z+1)^{a+2}) e^{-t/z}
void inverse_generator_terms(double t, double a, Complex z, detail::LogTermSum& sum) {
  const Complex lz = std::log(z);
  const Complex lz1 = std::log(z + 1.0);
  const Complex e = -t / z;
  sum.add(t, -lz - (a + 1.0) * lz1 + e);
  sum.add(-a, lz - (a + 2.0) * lz1 + e);
  sum.add(1.0, -(a + 2.0) * lz1 + e);
}

// f' for (z-w+c)^n (z+w+c)^{-(n+a)}:
//   -a (z-w+c)^n / (z+w+c)^{n+a+1} + 2 n w (z-w+c)^{n-1} / (z+w+c)^{n+a+1}
void shifted_cayley_terms(int n, double a, double w, double c, Complex z, detail::LogTermSum& sum) {
  using detail::log_power;
  const Complex lo = z - w + c;
  const double den = n + a + 1.0;
  const Complex lhi = std::log(z + w + c);
  sum.add(-a, log_power(lo, n) - den * lhi);
  sum.add(2.0 * n * w, log_power(lo, n - 1) - den * lhi);
}

}  // namespace

Complex eval(const FunctionFamily& family, ComplexValue point) {
  validate(family);
  const Complex z = checked_point(point);
  detail::LogTermSum sum;
  sum.add(1.0, log_value(family, z));
  return sum.value();
}

Complex eval_derivative(const FunctionFamily& family, ComplexValue point) {
  validate(family);
  return detail::eval_derivative_unchecked(family, checked_point(point));
}

Complex detail::eval_derivative_unchecked(const FunctionFamily& family, Complex z) {
  detail::LogTermSum sum;
  std::visit(overloaded{
                 // (z-1)^n (z+1)^{-(n+2p)} is the shifted family with w = 1, c = 0.
                 [&](const CayleyPower& f) { shifted_cayley_terms(f.n, 2.0 * f.p, 1.0, 0.0, z, sum); },
                 [&](const CayleyShifted& f) { shifted_cayley_terms(f.n, f.alpha, 1.0, f.c, z, sum); },
                 [&](const VariableCayley& f) {
                   using detail::log_power;
                   // -a (z+w_p+c)^{-a-1} prod_k r_k
                   //   + 2 (z+w_p+c)^{-a} sum_l w_l (z+w_l+c)^{-2} prod_{k != l} r_k
                   const std::size_t n = f.omegas.size();
                   std::vector<Complex> prefix(n + 1), suffix(n + 1);
                   prefix[0] = 0.0;
                   for (std::size_t k = 0; k < n; ++k) {
                     const double w = f.omegas[k];
                     prefix[k + 1] = prefix[k] + log_power(z - w + f.c, 1.0) - std::log(z + w + f.c);
                   }
                   suffix[n] = 0.0;
                   for (std::size_t k = n; k-- > 0;) {
                     const double w = f.omegas[k];
                     suffix[k] = suffix[k + 1] + log_power(z - w + f.c, 1.0) - std::log(z + w + f.c);
                   }
                   const Complex lp = std::log(z + f.omega_p + f.c);
                   sum.add(-f.alpha, -(f.alpha + 1.0) * lp + prefix[n]);
                   for (std::size_t l = 0; l < n; ++l) {
                     const double w = f.omegas[l];
                     sum.add(2.0 * w, -f.alpha * lp - 2.0 * std::log(z + w + f.c) + prefix[l] + suffix[l + 1]);
                   }
                 },
                 [&](const InverseGen& f) { inverse_generator_terms(f.t, f.alpha, z, sum); },
                 [&](const InverseGenPoly& f) { inverse_generator_terms(f.t, 2.0 * f.p, z, sum); },
             },
             family);
  return sum.value();
}

}  // namespace decaylab
