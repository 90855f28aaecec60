#pragma once

#include <functional>
#include <vector>

namespace decaylab {

struct QuadResult {
  double value = 0.0;
  double error = 0.0;  // QUADPACK's absolute error estimate
  int intervals = 0;
  int evaluations = 0;
  bool converged = false;
};

struct QuadOptions {
  double abs_tol = 1e-14;
  double rel_tol = 1e-10;
  int max_depth = 40;        // refinement budget: up to 100 subintervals per level
  int max_intervals = 5000;  // hard cap on subintervals
};

/// Adaptive Gauss-Kronrod (GSL QAG, 15 points) per segment of pts, with the
/// error budget split by a rough first pass;
/// no subinterval straddles a point. Converged means GSL succeeded and
/// error <= max(abs_tol, rel_tol * |value|).
QuadResult integrate(const std::function<double(double)>& f, const std::vector<double>& pts,
                     const QuadOptions& opt = {});

inline QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                            const QuadOptions& opt = {}) {
  return integrate(f, std::vector<double>{a, b}, opt);
}

/// Integral over [a, inf) (GSL QAGIU after x = a + scale * y); scale should be
/// the length over which f varies near a.
QuadResult integrate_to_infinity(const std::function<double(double)>& f, double a, double scale = 1.0,
                                 const QuadOptions& opt = {});

}  // namespace decaylab
