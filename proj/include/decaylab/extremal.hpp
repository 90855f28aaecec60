#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>
#include <vector>

namespace decaylab {

enum class SupMethod { closed_form, brute_force };

/// Supremum over s >= 0 of one of the auxiliary functions that control
/// sup_eta |f'(xi + i eta)|.
struct SupResult {
  double value = 0.0;
  double argmax_s = 0.0;
  bool boundary_zero = false;  // supremum attained at s = 0
  SupMethod method = SupMethod::closed_form;
  bool fallback = false;          // closed form not applicable, brute force used
  bool cutoff_too_small = false;  // brute force: f(cutoff) not negligible
};

/// Roots of s1(xi) = 0 for the (n, p) Cayley auxiliary function. They satisfy
/// xi0 * xi1 = 1, and s1 >= 0 exactly on [xi0, xi1].
struct CriticalInterval {
  double xi0;
  double xi1;
};
CriticalInterval cayley_critical_interval(int n, double p);

/// Interior critical point s1 = -xi^2 - 1 + 2 (1 + 2n/(2p+1)) xi.
double cayley_critical_s(int n, double p, double xi);

/// sup_{s>=0} sqrt(g_{n,p}(xi, s)),
///   g_{n,p}(xi, s) = ((xi-1)^2 + s)^n / ((xi+1)^2 + s)^(n+2p+1).
SupResult sup_g_cayley(int n, double p, double xi);

/// sup_{s>=0} sqrt(h_{n,p}(xi, s)), with h the (n-1)-numerator companion of g.
/// Equal to sup_g_cayley(n-1, p+1/2, xi); n = 1 is allowed.
SupResult sup_h_cayley(int n, double p, double xi);

/// Threshold quantity 4 omega c n / (alpha+1) - (omega-c)^2; the closed form
/// for the exponential family is used only when it is positive.
double exp_threshold(int n, double alpha, double omega, double c);

/// Interior critical point s1 for the exponential family and its largest
/// nonnegative root xi1(n).
double exp_critical_s(int n, double alpha, double omega, double c, double xi);
double exp_critical_xi1(int n, double alpha, double omega, double c);

/// sup_{s>=0} sqrt(g_{n,alpha}(xi, s)),
///   g_{n,alpha}(xi, s) = ((xi-omega+c)^2 + s)^n / ((xi+omega+c)^2 + s)^(n+alpha+1).
/// Falls back to brute force (fallback = true) when exp_threshold <= 0.
SupResult sup_g_exp(int n, double alpha, double omega, double c, double xi);

/// h_{n,alpha} companion: sup_g_exp(n-1, alpha+1, ...); n = 1 is allowed.
SupResult sup_h_exp(int n, double alpha, double omega, double c, double xi);

/// Positive root of -(2a+1) tau^2 + (2 zeta - 1) tau + 2 zeta = 0.
double inverse_critical_tau(double zeta, double alpha);

/// Upper bound 1 / ((c zeta + 1)^alpha sqrt(c zeta)), zeta = t xi, c = 1/(2 alpha + 1),
/// for sup_{s>=0} e^{-t xi/(xi^2+s)} / (((xi+1)^2+s)^alpha sqrt(xi^2+s)).
/// Requires alpha > 1/2, t > 0, xi > 0.
double sup_bound_inv(double t, double alpha, double xi);

/// Positive root tau2 of w_zeta'(tau) = 0 for w_zeta(tau) = e^{-zeta/tau} / (tau+1)^(p+1/2).
double inverse_critical_tau2(double zeta, double p);

/// Upper bound for sup_{s>=0} e^{-t xi/(xi^2+s)} sqrt(xi^2+s) / ((xi+1)^2+s)^(p+1):
/// min(1/(c2 zeta + 1)^(p+1/2), xi^-(2p+1)) with c2 = 1/(p+1/2), zeta = t xi.
double sup_bound_inv_h(double t, double p, double xi);

/// phi_{zeta,s}(omega) = ((zeta-omega)^2 + s) / ((zeta+omega)^2 + s)
double omega_ratio(double zeta, double s, double omega);

/// True iff phi_{zeta,s}(omega) <= phi_{zeta,s}(omega_p) on a fine grid of [omega_p, omega_q].
bool omega_monotone_check(double zeta, double s, double omega_p, double omega_q);

// ---------------------------------------------------------------------------
// Brute-force oracle.

struct BruteForceOptions {
  int grid_points = 400;      // geometric points in [lo, cutoff], plus s = 0
  double lo_fraction = 1e-14; // lo = cutoff * lo_fraction
  int refine_candidates = 4;  // local grid maxima refined by golden section
  double s_tol = 1e-10;       // absolute golden-section tolerance in s
  double s_rel_tol = 1e-13;   // relative golden-section tolerance in s
  int max_iterations = 300;
};

namespace detail {

template <class F>
std::pair<double, double> golden_max(F& f, double a, double b, const BruteForceOptions& opt) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  for (int i = 0; i < opt.max_iterations; ++i) {
    if (std::abs(b - a) <= opt.s_tol + opt.s_rel_tol * std::abs(b)) break;
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return fc >= fd ? std::pair{c, fc} : std::pair{d, fd};
}

}  // namespace detail

/// sup_{s in [0, cutoff]} f(s) by a geometric grid followed by golden-section
/// refinement of the best local grid maxima. tol is the relative level below
/// which f(cutoff) must lie for the tail to count as dominated.
template <class F>
SupResult brute_force_sup(F&& f, double cutoff, double tol, const BruteForceOptions& opt = {}) {
  SupResult out;
  out.method = SupMethod::brute_force;
  const int m = std::max(opt.grid_points, 3);
  std::vector<double> s(static_cast<std::size_t>(m) + 1);
  std::vector<double> v(s.size());
  s[0] = 0.0;
  const double lo = cutoff * opt.lo_fraction;
  const double ratio = std::log(cutoff / lo) / (m - 1);
  for (int i = 0; i < m; ++i) s[static_cast<std::size_t>(i) + 1] = lo * std::exp(ratio * i);
  s.back() = cutoff;
  for (std::size_t i = 0; i < s.size(); ++i) {
    v[i] = f(s[i]);
    if (!std::isfinite(v[i])) v[i] = -std::numeric_limits<double>::infinity();
  }

  std::vector<std::size_t> peaks;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const bool left_ok = i == 0 || v[i] >= v[i - 1];
    const bool right_ok = i + 1 == s.size() || v[i] >= v[i + 1];
    if (left_ok && right_ok) peaks.push_back(i);
  }
  std::sort(peaks.begin(), peaks.end(), [&](std::size_t a, std::size_t b) { return v[a] > v[b]; });
  if (peaks.size() > static_cast<std::size_t>(opt.refine_candidates)) peaks.resize(opt.refine_candidates);

  double best_s = 0.0;
  double best_v = v[0];
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i] > best_v) {
      best_v = v[i];
      best_s = s[i];
    }
  }
  for (std::size_t idx : peaks) {
    const double a = idx == 0 ? s[0] : s[idx - 1];
    const double b = idx + 1 == s.size() ? s[idx] : s[idx + 1];
    if (b <= a) continue;
    const auto [sm, vm] = detail::golden_max(f, a, b, opt);
    if (vm > best_v) {
      best_v = vm;
      best_s = sm;
    }
  }
  if (!(best_v > 0.0)) {
    out.value = 0.0;
    out.argmax_s = 0.0;
    out.boundary_zero = true;
    return out;
  }
  out.value = best_v;
  out.argmax_s = best_s;
  out.boundary_zero = best_s == 0.0;
  out.cutoff_too_small = v.back() > best_v * tol;
  return out;
}

}  // namespace decaylab
