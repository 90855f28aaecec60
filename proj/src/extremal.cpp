#include "decaylab/extremal.hpp"

#include <stdexcept>

namespace decaylab {
namespace {

void require_positive(double x, const char* what) {
  if (!(x > 0.0) || !std::isfinite(x)) throw std::invalid_argument(what);
}

// 0 * log 0 = 0
double xlogy(double x, double y) { return x == 0.0 ? 0.0 : x * std::log(y); }

// log sqrt(g(xi, s)) for g = ((xi-w+c)^2 + s)^n / ((xi+w+c)^2 + s)^(n+a+1)
double half_log_g(int n, double a, double w, double c, double xi, double s) {
  const double lo = (xi - w + c) * (xi - w + c) + s;
  const double hi = (xi + w + c) * (xi + w + c) + s;
  return 0.5 * (xlogy(n, lo) - (n + a + 1.0) * std::log(hi));
}

// sqrt(g(xi, 0)) = |xi-w+c|^n / (xi+w+c)^(n+a+1)
SupResult boundary_result(int n, double a, double w, double c, double xi) {
  SupResult r;
  r.value = std::exp(half_log_g(n, a, w, c, xi, 0.0));
  r.argmax_s = 0.0;
  r.boundary_zero = true;
  return r;
}

SupResult brute_force_g(int n, double a, double w, double c, double xi) {
  // Scale by the value at the analytic stationary point so deep underflow in
  // one region does not zero the whole grid; the search itself is blind.
  const double lo = (xi - w + c) * (xi - w + c);
  const double hi = (xi + w + c) * (xi + w + c);
  const double s_star = std::max(0.0, (n * hi - (n + a + 1.0) * lo) / (a + 1.0));
  const double scale = std::max(half_log_g(n, a, w, c, xi, 0.0), half_log_g(n, a, w, c, xi, s_star));
  auto f = [&](double s) { return std::exp(half_log_g(n, a, w, c, xi, s) - scale); };
  double cutoff = std::max(10.0 * s_star, 1e3 * (1.0 + xi * xi));
  SupResult r = brute_force_sup(f, cutoff, 1e-8);
  for (int i = 0; i < 20 && r.cutoff_too_small; ++i) {
    cutoff *= 1e3;
    r = brute_force_sup(f, cutoff, 1e-8);
  }
  r.value *= std::exp(scale);
  r.fallback = true;
  return r;
}

}  // namespace

CriticalInterval cayley_critical_interval(int n, double p) {
  if (n < 0) throw std::invalid_argument("cayley_critical_interval: n must be >= 0");
  require_positive(p, "cayley_critical_interval: p must be > 0");
  const double q = 2.0 * p + 1.0;
  const double mid = 1.0 + 2.0 * n / q;
  const double rad = 2.0 * std::sqrt(static_cast<double>(n) * (n + q)) / q;
  // mid - rad cancels badly for large n; use xi0 = 1/xi1.
  const double xi1 = mid + rad;
  return {1.0 / xi1, xi1};
}

double cayley_critical_s(int n, double p, double xi) {
  return -xi * xi - 1.0 + 2.0 * (1.0 + 2.0 * n / (2.0 * p + 1.0)) * xi;
}

SupResult sup_g_cayley(int n, double p, double xi) {
  if (n < 0) throw std::invalid_argument("sup_g_cayley: n must be >= 0");
  require_positive(p, "sup_g_cayley: p must be > 0");
  require_positive(xi, "sup_g_cayley: xi must be > 0");
  const auto [xi0, xi1] = cayley_critical_interval(n, p);
  if (xi < xi0 || xi > xi1) return boundary_result(n, 2.0 * p, 1.0, 0.0, xi);
  const double q = 2.0 * p + 1.0;
  // g(xi, s1) = (n/(n+q))^n (q/(4(n+q)))^q xi^{-q}
  const double log_g = xlogy(n, n / (n + q)) + q * std::log(q / (4.0 * (n + q))) - q * std::log(xi);
  SupResult r;
  r.value = std::exp(0.5 * log_g);
  r.argmax_s = std::max(0.0, cayley_critical_s(n, p, xi));
  r.boundary_zero = r.argmax_s == 0.0;
  return r;
}

SupResult sup_h_cayley(int n, double p, double xi) {
  if (n < 1) throw std::invalid_argument("sup_h_cayley: n must be >= 1");
  return sup_g_cayley(n - 1, p + 0.5, xi);
}

double exp_threshold(int n, double alpha, double omega, double c) {
  return 4.0 * omega * c * n / (alpha + 1.0) - (omega - c) * (omega - c);
}

double exp_critical_s(int n, double alpha, double omega, double c, double xi) {
  const double b = 2.0 * omega * n / (alpha + 1.0) + omega - c;
  return -xi * xi + 2.0 * b * xi + exp_threshold(n, alpha, omega, c);
}

double exp_critical_xi1(int n, double alpha, double omega, double c) {
  const double b = 2.0 * omega * n / (alpha + 1.0) + omega - c;
  return b + 2.0 * omega * std::sqrt(static_cast<double>(n) * (n + alpha + 1.0)) / (alpha + 1.0);
}

SupResult sup_g_exp(int n, double alpha, double omega, double c, double xi) {
  if (n < 0) throw std::invalid_argument("sup_g_exp: n must be >= 0");
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) throw std::invalid_argument("sup_g_exp: alpha must be >= 0");
  require_positive(omega, "sup_g_exp: omega must be > 0");
  require_positive(c, "sup_g_exp: c must be > 0");
  require_positive(xi, "sup_g_exp: xi must be > 0");
  if (!(exp_threshold(n, alpha, omega, c) > 0.0)) return brute_force_g(n, alpha, omega, c, xi);
  if (xi > exp_critical_xi1(n, alpha, omega, c)) return boundary_result(n, alpha, omega, c, xi);
  const double a1 = alpha + 1.0;
  // (xi-w+c)^2 + s1 = 4 w n (xi+c)/(a+1),  (xi+w+c)^2 + s1 = 4 w (n+a+1)(xi+c)/(a+1)
  const double log_g = xlogy(n, n / (n + a1)) + a1 * std::log(a1 / (4.0 * omega * (n + a1))) - a1 * std::log(xi + c);
  SupResult r;
  r.value = std::exp(0.5 * log_g);
  r.argmax_s = std::max(0.0, exp_critical_s(n, alpha, omega, c, xi));
  r.boundary_zero = r.argmax_s == 0.0;
  return r;
}

SupResult sup_h_exp(int n, double alpha, double omega, double c, double xi) {
  if (n < 1) throw std::invalid_argument("sup_h_exp: n must be >= 1");
  return sup_g_exp(n - 1, alpha + 1.0, omega, c, xi);
}

double inverse_critical_tau(double zeta, double alpha) {
  const double a = 2.0 * alpha + 1.0;
  const double b = 2.0 * zeta - 1.0;
  return (b + std::sqrt(b * b + 8.0 * zeta * a)) / (2.0 * a);
}

double sup_bound_inv(double t, double alpha, double xi) {
  require_positive(t, "sup_bound_inv: t must be > 0");
  require_positive(xi, "sup_bound_inv: xi must be > 0");
  if (!(alpha > 0.5) || !std::isfinite(alpha)) throw std::invalid_argument("sup_bound_inv: alpha must be > 1/2");
  const double cz = t * xi / (2.0 * alpha + 1.0);
  return std::exp(-alpha * std::log1p(cz) - 0.5 * std::log(cz));
}

double inverse_critical_tau2(double zeta, double p) {
  const double a = p + 0.5;
  return (zeta + std::sqrt(zeta * zeta + 4.0 * a * zeta)) / (2.0 * a);
}

double sup_bound_inv_h(double t, double p, double xi) {
  require_positive(t, "sup_bound_inv_h: t must be > 0");
  require_positive(p, "sup_bound_inv_h: p must be > 0");
  require_positive(xi, "sup_bound_inv_h: xi must be > 0");
  const double a = p + 0.5;
  const double near = std::exp(-a * std::log1p(t * xi / a));
  const double far = std::exp(-(2.0 * p + 1.0) * std::log(xi));
  return std::min(near, far);
}

double omega_ratio(double zeta, double s, double omega) {
  return ((zeta - omega) * (zeta - omega) + s) / ((zeta + omega) * (zeta + omega) + s);
}

bool omega_monotone_check(double zeta, double s, double omega_p, double omega_q) {
  if (!(omega_p > 0.0) || omega_q < omega_p) throw std::invalid_argument("omega_monotone_check: need 0 < omega_p <= omega_q");
  const double ref = omega_ratio(zeta, s, omega_p);
  constexpr int kGrid = 4096;
  for (int i = 1; i <= kGrid; ++i) {
    const double w = omega_p + (omega_q - omega_p) * i / kGrid;
    if (omega_ratio(zeta, s, w) > ref * (1.0 + 1e-12)) return false;
  }
  return true;
}

}  // namespace decaylab
