#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "decaylab/functions.hpp"

namespace decaylab {

enum class NormMode { bound, exact };

const char* to_string(NormMode mode);
NormMode parse_norm_mode(const std::string& text);  // "bound" | "exact"

/// psi_q(xi) = xi^q on (0, 1), 1 on [1, inf). q = nullopt means psi = 1.
double psi(std::optional<double> q, double xi);
double psi(double q, double xi);

struct InnerSupInfo {
  double argmax_eta = 0.0;
  bool converged = true;
};

/// sup_{eta in R} |f'(xi + i eta)|.
///   bound: the termwise g/h decomposition with closed-form suprema (an upper bound);
///   exact: numerical maximization of |f'| over eta.
double inner_sup(const FunctionFamily& family, double xi, NormMode mode, InnerSupInfo* info = nullptr);

/// Exact-mode maximizer for an arbitrary derivative. eta_scale hints where the
/// maximum may sit (the search covers [0, ~1e4 (1 + xi + eta_scale)]).
double inner_sup_exact(const std::function<Complex(Complex)>& derivative, double xi, double eta_scale,
                       InnerSupInfo* info = nullptr);

struct QuadConfig {
  double rel_tol = 1e-6;
  double abs_floor = 1e-14;
  int max_depth = 40;
  std::optional<double> tail_start;  // initial upper end; automatic when empty
  std::vector<double> breakpoints;   // extra xi breakpoints
};

struct NormResult {
  double value = 0.0;           // quadrature over [lower, upper]
  double error_estimate = 0.0;  // quadrature error
  double tail_bound = 0.0;      // analytic bound on the two truncated tails
  double lower = 0.0;
  double upper = 0.0;
  int evaluations = 0;
  bool converged = false;  // error_estimate + tail_bound <= rel_tol * value
};

/// Description of a B0-type integrand for the generic driver: the integrand
/// sup_eta |f'(xi + i eta)| and majorants for the two truncated tails.
struct NormIntegrand {
  std::function<double(double)> sup;
  // Bound on int_X^inf sup(xi) d xi, X >= 1 (psi = 1 there).
  std::function<double(double)> upper_tail;
  // Bound on int_0^eps psi(xi) sup(xi) d xi, eps <= 1.
  std::function<double(double, std::optional<double>)> lower_tail;
  std::vector<double> breakpoints;
};

/// int_0^inf psi_q(xi) sup(xi) d xi by adaptive Gauss-Kronrod in u = log xi,
/// with the truncation points pushed out until both tails are below
/// 0.1 rel_tol of the value.
NormResult b0q_norm(const NormIntegrand& integrand, std::optional<double> q, const QuadConfig& cfg = {});

/// ||f||_{B0,q} (q in (0, 1/2)) or ||f||_{B0} (q = nullopt).
NormResult b0q_norm(const FunctionFamily& family, std::optional<double> q, NormMode mode,
                    const QuadConfig& cfg = {});

/// The integrand description used by b0q_norm for a family.
NormIntegrand make_integrand(const FunctionFamily& family, NormMode mode);

}  // namespace decaylab
