#include "decaylab/bnorm.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "decaylab/extremal.hpp"
#include "decaylab/quadrature.hpp"

namespace decaylab {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

double weight_exponent(std::optional<double> q) { return q ? *q : 0.0; }

// int_X^inf (xi + b)^{-e} d xi for e > 0
double power_tail(double x, double b, double e) { return std::pow(x + b, -e) / e; }

}  // namespace

const char* to_string(NormMode mode) { return mode == NormMode::bound ? "bound" : "exact"; }

NormMode parse_norm_mode(const std::string& text) {
  if (text == "bound") return NormMode::bound;
  if (text == "exact") return NormMode::exact;
  throw std::invalid_argument("mode must be 'bound' or 'exact', got '" + text + "'");
}

double psi(double q, double xi) {
  if (!(q > 0.0)) throw std::invalid_argument("psi: q must be > 0");
  if (!(xi > 0.0)) throw std::invalid_argument("psi: xi must be > 0");
  return xi < 1.0 ? std::pow(xi, q) : 1.0;
}

double psi(std::optional<double> q, double xi) { return q ? psi(*q, xi) : 1.0; }

double inner_sup_exact(const std::function<Complex(Complex)>& derivative, double xi, double eta_scale,
                       InnerSupInfo* info) {
  if (!(xi > 0.0)) throw std::invalid_argument("inner_sup: xi must be > 0");
  auto mag = [&](double eta) { return std::abs(derivative(Complex(xi, eta))); };

  constexpr int kGrid = 240;
  const double lo = 1e-4 * std::min(1.0, xi);
  const double hi = 1e4 * (1.0 + xi + eta_scale);
  std::vector<double> eta(kGrid + 1);
  std::vector<double> val(kGrid + 1);
  eta[0] = 0.0;
  const double step = std::log(hi / lo) / (kGrid - 1);
  for (int i = 0; i < kGrid; ++i) eta[i + 1] = lo * std::exp(step * i);
  for (int i = 0; i <= kGrid; ++i) val[i] = mag(eta[i]);

  std::vector<int> peaks;
  for (int i = 0; i <= kGrid; ++i) {
    const bool l = i == 0 || val[i] >= val[i - 1];
    const bool r = i == kGrid || val[i] > val[i + 1];
    if (l && r) peaks.push_back(i);
  }
  std::sort(peaks.begin(), peaks.end(), [&](int a, int b) { return val[a] > val[b]; });
  if (peaks.size() > 3) peaks.resize(3);

  int best_i = static_cast<int>(std::max_element(val.begin(), val.end()) - val.begin());
  double best_eta = eta[best_i];
  double best = val[best_i];
  BruteForceOptions opt;
  opt.s_tol = 0.0;
  opt.s_rel_tol = 1e-9;
  for (int i : peaks) {
    if (i == kGrid) continue;
    const double a = i == 0 ? 0.0 : eta[i - 1];
    const double b = eta[i + 1];
    const auto [e, v] = detail::golden_max(mag, a, b, opt);
    if (v > best) {
      best = v;
      best_eta = e;
    }
  }

  // The families have real coefficients, so |f'(xi+i eta)| = |f'(xi-i eta)|;
  // the search above relies on it, so check it where it matters.
  if (best_eta > 0.0) {
    const double mirror = mag(-best_eta);
    if (std::abs(mirror - best) > 1e-8 * best) {
      throw std::logic_error("inner_sup: |f'| is not symmetric in eta");
    }
  }
  if (info) {
    info->argmax_eta = best_eta;
    info->converged = best_i != kGrid;
  }
  return best;
}

double inner_sup(const FunctionFamily& family, double xi, NormMode mode, InnerSupInfo* info) {
  validate(family);
  if (!(xi > 0.0)) throw std::invalid_argument("inner_sup: xi must be > 0");
  if (mode == NormMode::exact) {
    const double scale = std::visit(
        overloaded{
            [&](const CayleyPower& f) { return std::sqrt(f.n * (1.0 + xi)); },
            [&](const CayleyShifted& f) { return std::sqrt(f.n * (1.0 + xi)); },
            [&](const VariableCayley& f) { return f.omega_q * std::sqrt(f.omegas.size() * (1.0 + xi)); },
            [&](const InverseGen& f) { return std::sqrt(f.t * (1.0 + xi)); },
            [&](const InverseGenPoly& f) { return std::sqrt(f.t * (1.0 + xi)); },
        },
        family);
    return inner_sup_exact([&](Complex z) { return detail::eval_derivative_unchecked(family, z); }, xi,
                           scale, info);
  }
  if (info) *info = InnerSupInfo{};
  return std::visit(
      overloaded{
          [&](const CayleyPower& f) {
            return 2.0 * f.p * sup_g_cayley(f.n, f.p, xi).value + 2.0 * f.n * sup_h_cayley(f.n, f.p, xi).value;
          },
          [&](const CayleyShifted& f) {
            return f.alpha * sup_g_exp(f.n, f.alpha, 1.0, f.c, xi).value +
                   2.0 * f.n * sup_h_exp(f.n, f.alpha, 1.0, f.c, xi).value;
          },
          [&](const VariableCayley& f) {
            // Every factor is dominated by the omega_p factor only when c^2 >= omega_p omega_q.
            if (f.c * f.c < f.omega_p * f.omega_q) {
              throw std::domain_error("inner_sup: bound mode for VariableCayley needs c^2 >= omega_p omega_q");
            }
            const int n = static_cast<int>(f.omegas.size());
            return f.alpha * sup_g_exp(n, f.alpha, f.omega_p, f.c, xi).value +
                   2.0 * f.omega_q * n * sup_h_exp(n, f.alpha, f.omega_p, f.c, xi).value;
          },
          [&](const InverseGen& f) {
            if (!(f.alpha > 0.0)) throw std::domain_error("inner_sup: bound mode for InverseGen needs alpha > 0");
            return f.t * sup_bound_inv(f.t, 0.5 * (f.alpha + 1.0), xi) + f.alpha * std::pow(xi + 1.0, -(f.alpha + 1.0)) +
                   std::pow(xi + 1.0, -(f.alpha + 2.0));
          },
          [&](const InverseGenPoly& f) {
            return (f.t + 1.0) * sup_bound_inv(f.t, f.p + 0.5, xi) + 2.0 * f.p * sup_bound_inv_h(f.t, f.p, xi);
          },
      },
      family);
}

NormIntegrand make_integrand(const FunctionFamily& family, NormMode mode) {
  validate(family);
  if (mode == NormMode::bound) inner_sup(family, 1.0, mode);  // surfaces domain errors up front
  NormIntegrand in;
  in.sup = [family, mode](double xi) { return inner_sup(family, xi, mode); };
  std::visit(
      overloaded{
          [&](const CayleyPower& f) {
            const auto [xi0, xi1] = cayley_critical_interval(f.n, f.p);
            in.breakpoints = {xi0, 1.0, xi1};
            const double n = f.n;
            const double p = f.p;
            // |f'| <= 2p (xi+1)^{-(2p+1)} + 2n (xi+1)^{-(2p+2)}, and <= 2p + 2n everywhere
            in.upper_tail = [n, p](double x) {
              return 2.0 * p * power_tail(x, 1.0, 2.0 * p) + 2.0 * n * power_tail(x, 1.0, 2.0 * p + 1.0);
            };
            in.lower_tail = [n, p](double eps, std::optional<double> q) {
              const double e = weight_exponent(q) + 1.0;
              return (2.0 * p + 2.0 * n) * std::pow(eps, e) / e;
            };
          },
          [&](const CayleyShifted& f) {
            in.breakpoints = {1.0};
            if (exp_threshold(f.n, f.alpha, 1.0, f.c) > 0.0) {
              in.breakpoints.push_back(exp_critical_xi1(f.n, f.alpha, 1.0, f.c));
            }
            const double n = f.n;
            const double a = f.alpha;
            const double b = 1.0 + f.c;
            in.upper_tail = [n, a, b](double x) {
              const double first = a > 0.0 ? a * power_tail(x, b, a) : 0.0;
              return first + 2.0 * n * power_tail(x, b, a + 1.0);
            };
            in.lower_tail = [n, a, b](double eps, std::optional<double> q) {
              const double e = weight_exponent(q) + 1.0;
              return (a * std::pow(b, -(a + 1.0)) + 2.0 * n * std::pow(b, -(a + 2.0))) * std::pow(eps, e) / e;
            };
          },
          [&](const VariableCayley& f) {
            const int nn = static_cast<int>(f.omegas.size());
            in.breakpoints = {1.0};
            if (exp_threshold(nn, f.alpha, f.omega_p, f.c) > 0.0) {
              in.breakpoints.push_back(exp_critical_xi1(nn, f.alpha, f.omega_p, f.c));
            }
            const double n = nn;
            const double a = f.alpha;
            const double b = f.omega_p + f.c;
            const double wq = f.omega_q;
            in.upper_tail = [n, a, b, wq](double x) {
              const double first = a > 0.0 ? a * power_tail(x, b, a) : 0.0;
              return first + 2.0 * n * wq * power_tail(x, b, a + 1.0);
            };
            in.lower_tail = [n, a, b, wq](double eps, std::optional<double> q) {
              const double e = weight_exponent(q) + 1.0;
              return (a * std::pow(b, -(a + 1.0)) + 2.0 * n * wq * std::pow(b, -(a + 2.0))) * std::pow(eps, e) / e;
            };
          },
          [&](const InverseGen& f) {
            const double t = f.t;
            const double a = f.alpha;
            in.breakpoints = {1.0 / t, 1.0, t};
            if (mode == NormMode::exact) {
              // |f'| <= t xi^{-(a+2)} + a (xi+1)^{-(a+1)} + (xi+1)^{-(a+2)}
              in.upper_tail = [t, a](double x) {
                const double mid = a > 0.0 ? a * power_tail(x, 1.0, a) : 0.0;
                return t * power_tail(x, 0.0, a + 1.0) + mid + power_tail(x, 1.0, a + 1.0);
              };
            } else {
              // t sup g <= t (c t xi)^{-(a/2+1)}, c = 1/(a+2)
              in.upper_tail = [t, a](double x) {
                const double ct = t / (a + 2.0);
                return t * std::pow(ct, -(0.5 * a + 1.0)) * power_tail(x, 0.0, 0.5 * a) +
                       a * power_tail(x, 1.0, a) + power_tail(x, 1.0, a + 1.0);
              };
            }
            // |f'| <= sqrt(t (a+2) / xi) + a + 1
            in.lower_tail = [t, a](double eps, std::optional<double> q) {
              const double w = weight_exponent(q);
              return std::sqrt(t * (a + 2.0)) * std::pow(eps, w + 0.5) / (w + 0.5) +
                     (a + 1.0) * std::pow(eps, w + 1.0) / (w + 1.0);
            };
          },
          [&](const InverseGenPoly& f) {
            const double t = f.t;
            const double p = f.p;
            in.breakpoints = {1.0 / t, 1.0, t};
            if (mode == NormMode::exact) {
              in.upper_tail = [t, p](double x) {
                return t * power_tail(x, 0.0, 2.0 * p + 1.0) + 2.0 * p * power_tail(x, 1.0, 2.0 * p) +
                       power_tail(x, 1.0, 2.0 * p + 1.0);
              };
            } else {
              // (t+1) sup g <= (t+1) (c t xi)^{-(p+1)}, c = 1/(2p+2); 2p sup h <= 2p xi^{-(2p+1)}
              in.upper_tail = [t, p](double x) {
                const double ct = t / (2.0 * p + 2.0);
                return (t + 1.0) * std::pow(ct, -(p + 1.0)) * power_tail(x, 0.0, p) +
                       2.0 * p * power_tail(x, 0.0, 2.0 * p);
              };
            }
            in.lower_tail = [t, p](double eps, std::optional<double> q) {
              const double w = weight_exponent(q);
              const double ct = t / (2.0 * p + 2.0);
              return (t + 1.0) / std::sqrt(ct) * std::pow(eps, w + 0.5) / (w + 0.5) +
                     (2.0 * p + 1.0) * std::pow(eps, w + 1.0) / (w + 1.0);
            };
          },
      },
      family);
  return in;
}

NormResult b0q_norm(const NormIntegrand& in, std::optional<double> q, const QuadConfig& cfg) {
  if (!(cfg.rel_tol > 0.0)) throw std::invalid_argument("b0q_norm: rel_tol must be > 0");
  if (cfg.max_depth < 10) throw std::invalid_argument("b0q_norm: max_depth must be >= 10");
  if (q && !(*q > 0.0 && *q < 0.5)) throw std::invalid_argument("b0q_norm: q must lie in (0, 1/2)");

  std::vector<double> bps = in.breakpoints;
  bps.insert(bps.end(), cfg.breakpoints.begin(), cfg.breakpoints.end());
  bps.push_back(1.0);
  bps.erase(std::remove_if(bps.begin(), bps.end(), [](double x) { return !(x > 0.0) || !std::isfinite(x); }),
            bps.end());
  std::sort(bps.begin(), bps.end());
  bps.erase(std::unique(bps.begin(), bps.end()), bps.end());

  double lower = std::min(1e-3, bps.front() * 1e-3);
  double upper = cfg.tail_start ? *cfg.tail_start : bps.back() * 1e3;
  if (!(upper > bps.back())) upper = bps.back() * 10.0;

  auto integrand = [&](double u) {
    const double xi = std::exp(u);
    return psi(q, xi) * in.sup(xi) * xi;
  };
  // u-breakpoints: the given ones plus unit steps so long ranges start subdivided
  auto nodes = [](double ua, double ub, const std::vector<double>& inner) {
    std::vector<double> pts{ua};
    for (double x : inner) {
      const double u = std::log(x);
      if (u > ua && u < ub) pts.push_back(u);
    }
    pts.push_back(ub);
    std::sort(pts.begin(), pts.end());
    std::vector<double> out{pts.front()};
    for (std::size_t i = 1; i < pts.size(); ++i) {
      const double gap = pts[i] - pts[i - 1];
      const int pieces = std::max(1, static_cast<int>(std::ceil(gap / 2.0)));
      for (int k = 1; k <= pieces; ++k) out.push_back(pts[i - 1] + gap * k / pieces);
    }
    return out;
  };

  QuadOptions opt;
  opt.abs_tol = cfg.abs_floor;
  opt.rel_tol = 0.5 * cfg.rel_tol;
  opt.max_depth = cfg.max_depth;

  NormResult r;
  QuadResult main = integrate(integrand, nodes(std::log(lower), std::log(upper), bps), opt);
  r.value = main.value;
  r.error_estimate = main.error;
  r.evaluations = main.evaluations;
  bool ok = main.converged;

  for (int round = 0; round < 8; ++round) {
    const double target = std::max(cfg.abs_floor, 0.05 * cfg.rel_tol * std::abs(r.value));
    const bool hi_ok = in.upper_tail(upper) <= target;
    const bool lo_ok = in.lower_tail(lower, q) <= target;
    if (hi_ok && lo_ok) break;
    QuadOptions ext = opt;
    ext.abs_tol = std::max(cfg.abs_floor, 0.1 * cfg.rel_tol * std::abs(r.value));
    ext.rel_tol = 0.0;
    if (!hi_ok) {
      double next = upper;
      for (int i = 0; i < 400 && in.upper_tail(next) > 0.5 * target && next < 1e300; ++i) next *= 10.0;
      const QuadResult piece = integrate(integrand, nodes(std::log(upper), std::log(next), {}), ext);
      r.value += piece.value;
      r.error_estimate += piece.error;
      r.evaluations += piece.evaluations;
      ok = ok && piece.converged;
      upper = next;
    }
    if (!lo_ok) {
      double next = lower;
      for (int i = 0; i < 400 && in.lower_tail(next, q) > 0.5 * target && next > 1e-300; ++i) next *= 0.1;
      const QuadResult piece = integrate(integrand, nodes(std::log(next), std::log(lower), {}), ext);
      r.value += piece.value;
      r.error_estimate += piece.error;
      r.evaluations += piece.evaluations;
      ok = ok && piece.converged;
      lower = next;
    }
  }
  r.lower = lower;
  r.upper = upper;
  r.tail_bound = in.upper_tail(upper) + in.lower_tail(lower, q);
  r.converged = ok && r.error_estimate + r.tail_bound <= cfg.rel_tol * std::abs(r.value) + cfg.abs_floor;
  return r;
}

NormResult b0q_norm(const FunctionFamily& family, std::optional<double> q, NormMode mode, const QuadConfig& cfg) {
  return b0q_norm(make_integrand(family, mode), q, cfg);
}

}  // namespace decaylab
