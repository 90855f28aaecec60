#include "decaylab/spectral.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "decaylab/parallel.hpp"
#include "decaylab/quadrature.hpp"

namespace decaylab {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

struct Best {
  double log_value = kNegInf;
  std::size_t index = std::numeric_limits<std::size_t>::max();

  void offer(double v, std::size_t i) {
    if (std::isnan(v)) v = kNegInf;
    if (v > log_value || (v == log_value && i < index)) {
      log_value = v;
      index = i;
    }
  }
};

// Deterministic parallel argmax of logv(i) over i in [0, count).
template <class F>
Best parallel_argmax(std::size_t count, F&& logv) {
  Best global;
  const auto n = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel num_threads(thread_count())
  {
    Best local;
#pragma omp for schedule(static) nowait
    for (std::ptrdiff_t i = 0; i < n; ++i) local.offer(logv(static_cast<std::size_t>(i)), static_cast<std::size_t>(i));
#pragma omp critical(decaylab_argmax)
    global.offer(local.log_value, local.index);
  }
  return global;
}

SpectralSup finish(const SpectrumModel& spec, const Best& b) {
  SpectralSup r;
  r.index = b.index;
  r.point = spec.points[b.index];
  r.log_value = b.log_value;
  r.value = std::exp(b.log_value);
  return r;
}

void require_nonnegative(double x, const char* what) {
  if (!(x >= 0.0) || !std::isfinite(x)) throw std::invalid_argument(what);
}

// log |(lambda - w)/(lambda + w)| = 1/2 log(1 - 4 w Re lambda / |lambda + w|^2)
inline double log_cayley_factor(double x, double y, double w) {
  const double d = (x + w) * (x + w) + y * y;
  return 0.5 * std::log1p(-4.0 * w * x / d);
}

inline double half_log_norm(double x, double y) { return 0.5 * std::log(x * x + y * y); }

}  // namespace

SpectralSup cayley_product_sup(const SpectrumModel& spec, const ParamSeq& params, int n, double alpha,
                               double shift) {
  return cayley_product_sup(spec, params, n, std::vector<PowerWeight>{{alpha, shift}});
}

SpectralSup cayley_product_sup(const SpectrumModel& spec, const ParamSeq& params, int n,
                               const std::vector<PowerWeight>& weights) {
  validate(spec);
  if (n < 0) throw std::invalid_argument("cayley_product_sup: n must be >= 0");
  for (const auto& w : weights) {
    require_nonnegative(w.alpha, "cayley_product_sup: alpha must be >= 0");
    require_nonnegative(w.shift, "cayley_product_sup: shift must be >= 0");
  }
  const auto& pts = spec.points;
  auto weight = [&](std::size_t i) {
    double acc = 0.0;
    for (const auto& w : weights) {
      if (w.alpha != 0.0) acc -= w.alpha * half_log_norm(pts[i].re() + w.shift, pts[i].im());
    }
    return acc;
  };

  if (params.is_constant() || n == 0) {
    const double w = params(1);
    return finish(spec, parallel_argmax(pts.size(), [&](std::size_t i) {
                    const double f = n == 0 ? 0.0 : n * log_cayley_factor(pts[i].re(), pts[i].im(), w);
                    return f + weight(i);
                  }));
  }

  // Variable parameters: an O(1) upper bound per point prunes the O(n) exact sums.
  //  (a) phi(w) = |(l-w)/(l+w)| is quasi-convex in w, so each factor <= max(phi(w_min), phi(w_max));
  //  (b) log1p(-u) <= -u gives sum <= -2 Re l sum(w) / ((Re l + w_max)^2 + Im l^2).
  const std::vector<double> omegas = params.take(static_cast<std::size_t>(n));
  const auto [wmin_it, wmax_it] = std::minmax_element(omegas.begin(), omegas.end());
  const double wmin = *wmin_it;
  const double wmax = *wmax_it;
  double wsum = 0.0;
  for (double w : omegas) wsum += w;

  std::vector<double> bound(pts.size());
  const auto count = static_cast<std::ptrdiff_t>(pts.size());
#pragma omp parallel for schedule(static) num_threads(thread_count())
  for (std::ptrdiff_t ii = 0; ii < count; ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    const double x = pts[i].re();
    const double y = pts[i].im();
    const double a = n * std::max(log_cayley_factor(x, y, wmin), log_cayley_factor(x, y, wmax));
    const double b = -2.0 * x * wsum / ((x + wmax) * (x + wmax) + y * y);
    bound[i] = std::min(a, b) + weight(i);
  }

  auto exact = [&](std::size_t i, double threshold) {
    const double x = pts[i].re();
    const double y = pts[i].im();
    const double wt = weight(i);
    double acc = 0.0;
    for (double w : omegas) {
      acc += log_cayley_factor(x, y, w);
      // every factor is <= 0, so the partial sum only falls
      if (acc + wt < threshold) return kNegInf;
    }
    return acc + wt;
  };

  Best seed;
  for (std::size_t i = 0; i < pts.size(); ++i) seed.offer(bound[i], i);
  const double start = exact(seed.index, kNegInf);
  if (start == kNegInf) {
    // a point coincides with every omega factor's zero; fall back to the full scan
    return finish(spec, parallel_argmax(pts.size(), [&](std::size_t i) { return exact(i, kNegInf); }));
  }
  const double slack = 1e-9 * (1.0 + std::abs(start));
  std::vector<std::size_t> cand;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (bound[i] >= start - slack) cand.push_back(i);
  }
  std::stable_sort(cand.begin(), cand.end(), [&](std::size_t a, std::size_t b) { return bound[a] > bound[b]; });

  // Abort threshold: a value attained by some point, shaved by the slack so a
  // tie with the eventual maximum is never discarded.
  const double threshold = start - slack;
  Best global;
  global.offer(start, seed.index);
  const auto m = static_cast<std::ptrdiff_t>(cand.size());
#pragma omp parallel num_threads(thread_count())
  {
    Best local;
#pragma omp for schedule(dynamic, 16) nowait
    for (std::ptrdiff_t j = 0; j < m; ++j) {
      const std::size_t i = cand[static_cast<std::size_t>(j)];
      const double floor = std::max(threshold, local.log_value - slack);
      local.offer(exact(i, floor), i);
    }
#pragma omp critical(decaylab_argmax)
    global.offer(local.log_value, local.index);
  }
  return finish(spec, global);
}

SpectralSup semigroup_sup(const SpectrumModel& spec, double t, double alpha) {
  validate(spec);
  require_nonnegative(t, "semigroup_sup: t must be >= 0");
  require_nonnegative(alpha, "semigroup_sup: alpha must be >= 0");
  const auto& pts = spec.points;
  return finish(spec, parallel_argmax(pts.size(), [&](std::size_t i) {
                  const double w = alpha == 0.0 ? 0.0 : -alpha * half_log_norm(pts[i].re(), pts[i].im());
                  return -t * pts[i].re() + w;
                }));
}

SpectralSup inverse_semigroup_sup(const SpectrumModel& spec, double t, double alpha) {
  validate(spec);
  require_nonnegative(t, "inverse_semigroup_sup: t must be >= 0");
  require_nonnegative(alpha, "inverse_semigroup_sup: alpha must be >= 0");
  const auto& pts = spec.points;
  return finish(spec, parallel_argmax(pts.size(), [&](std::size_t i) {
                  const double x = pts[i].re();
                  const double y = pts[i].im();
                  const double w = alpha == 0.0 ? 0.0 : -alpha * half_log_norm(x, y);
                  return -t * x / (x * x + y * y) + w;
                }));
}

SpectralSup frac_power_sup(const SpectrumModel& spec, double alpha) {
  validate(spec);
  if (!std::isfinite(alpha)) throw std::invalid_argument("frac_power_sup: alpha must be finite");
  const auto& pts = spec.points;
  return finish(spec, parallel_argmax(pts.size(), [&](std::size_t i) {
                  return alpha == 0.0 ? 0.0 : -alpha * half_log_norm(pts[i].re(), pts[i].im());
                }));
}

PlancherelSides plancherel_sides(const SpectrumModel& spec, double xi, double beta_q, std::size_t point_index) {
  validate(spec);
  if (point_index >= spec.points.size()) throw std::out_of_range("plancherel: point index out of range");
  if (!(xi > 0.0)) throw std::invalid_argument("plancherel: xi must be > 0");
  require_nonnegative(beta_q, "plancherel: beta_q must be >= 0");
  const double x = spec.points[point_index].re();
  const double y = spec.points[point_index].im();
  const double weight = std::exp(-2.0 * beta_q * half_log_norm(x, y));
  const double b = xi + x;

  QuadOptions opt;
  opt.abs_tol = 0.0;
  opt.rel_tol = 1e-13;
  opt.max_depth = 60;
  auto resolvent = [&](double eta) { return weight / (b * b + (eta + y) * (eta + y)); };
  // eta >= -y and eta <= -y (mirrored)
  const QuadResult right = integrate_to_infinity(resolvent, -y, b, opt);
  const QuadResult left = integrate_to_infinity([&](double s) { return resolvent(-y - (s + y)); }, -y, b, opt);
  const QuadResult time = integrate_to_infinity([&](double t) { return weight * std::exp(-2.0 * b * t); }, 0.0,
                                                1.0 / b, opt);
  PlancherelSides s;
  s.lhs = right.value + left.value;
  s.rhs = 2.0 * std::numbers::pi * time.value;
  s.closed = std::numbers::pi * weight / b;
  s.converged = right.converged && left.converged && time.converged;
  return s;
}

double plancherel_residual(const SpectrumModel& spec, double xi, double beta_q, std::size_t point_index) {
  const PlancherelSides s = plancherel_sides(spec, xi, beta_q, point_index);
  if (!s.converged) throw std::runtime_error("plancherel_residual: quadrature did not converge");
  return std::abs(s.lhs - s.rhs) / std::abs(s.closed);
}

SpectralSup weighted_resolvent_sup(const SpectrumModel& spec, double q, double beta) {
  validate(spec);
  if (!(q > 0.0 && q < 0.5)) throw std::invalid_argument("weighted_resolvent_sup: q must lie in (0, 1/2)");
  if (!(beta > 0.0)) throw std::invalid_argument("weighted_resolvent_sup: beta must be > 0");
  if (!spec.beta || std::abs(*spec.beta - beta) > 1e-12 * beta) {
    throw std::invalid_argument("weighted_resolvent_sup: model beta missing or inconsistent");
  }
  const double a = 1.0 - 2.0 * q;
  const auto& pts = spec.points;
  // xi^a / (xi + x) increases up to xi = a x / (1 - a) and decreases after.
  return finish(spec, parallel_argmax(pts.size(), [&](std::size_t i) {
                  const double x = pts[i].re();
                  const double xi = std::min(1.0, a * x / (1.0 - a));
                  return std::log(std::numbers::pi) - 2.0 * beta * q * half_log_norm(x, pts[i].im()) +
                         a * std::log(xi) - std::log(xi + x);
                }));
}

}  // namespace decaylab
