#include "decaylab/quadrature.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_integration.h>

#include <algorithm>
#include <cmath>
#include <exception>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace decaylab {
namespace {

// GSL reports failures through status codes here; its default handler aborts.
void quiet_gsl() {
  static std::once_flag once;
  std::call_once(once, [] { gsl_set_error_handler_off(); });
}

struct Workspace {
  explicit Workspace(std::size_t n) : w(gsl_integration_workspace_alloc(n)) {
    if (!w) throw std::bad_alloc();
  }
  ~Workspace() { gsl_integration_workspace_free(w); }
  Workspace(const Workspace&) = delete;
  Workspace& operator=(const Workspace&) = delete;
  gsl_integration_workspace* w;
};

// Calls f from GSL; an exception is parked and rethrown once GSL returns.
struct Thunk {
  explicit Thunk(const std::function<double(double)>& fn) : f(fn) {}
  const std::function<double(double)>& f;
  int evaluations = 0;
  std::exception_ptr error;

  static double call(double x, void* p) {
    auto* t = static_cast<Thunk*>(p);
    ++t->evaluations;
    if (t->error) return 0.0;
    try {
      return t->f(x);
    } catch (...) {
      t->error = std::current_exception();
      return 0.0;
    }
  }
};

std::size_t budget(const QuadOptions& opt) {
  if (opt.max_depth < 1 || opt.max_intervals < 1) throw std::invalid_argument("integrate: bad refinement budget");
  return static_cast<std::size_t>(std::min(opt.max_intervals, 100 * opt.max_depth));
}

QuadResult finish(int status, double value, double error, const Workspace& ws, const Thunk& t,
                  const QuadOptions& opt) {
  if (t.error) std::rethrow_exception(t.error);
  QuadResult r;
  r.value = value;
  r.error = error;
  r.intervals = static_cast<int>(ws.w->size);
  r.evaluations = t.evaluations;
  r.converged = status == GSL_SUCCESS && std::isfinite(value) &&
                error <= std::max(opt.abs_tol, opt.rel_tol * std::abs(value));
  return r;
}

}  // namespace

QuadResult integrate(const std::function<double(double)>& f, const std::vector<double>& pts,
                     const QuadOptions& opt) {
  if (pts.size() < 2) throw std::invalid_argument("integrate: need at least two points");
  std::vector<double> knots;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i > 0 && !(pts[i] >= pts[i - 1])) throw std::invalid_argument("integrate: points must be nondecreasing");
    if (knots.empty() || pts[i] > knots.back()) knots.push_back(pts[i]);
  }
  if (knots.size() < 2) {
    QuadResult r;
    r.converged = true;
    return r;
  }
  quiet_gsl();
  Workspace ws(budget(opt));
  Thunk t(f);
  gsl_function g{&Thunk::call, &t};
  const std::size_t m = knots.size() - 1;

  // Rough 21-point pass to split the error budget, then QAG (no extrapolation:
  // the integrands have kinks, which trip QUADPACK's roundoff detection) per segment.
  std::vector<double> rough(m);
  double total = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    double v = 0.0, e = 0.0, ra = 0.0, rb = 0.0;
    gsl_integration_qk21(&g, knots[i], knots[i + 1], &v, &e, &ra, &rb);
    rough[i] = std::abs(v);
    total += rough[i];
  }
  const double target = std::max(opt.abs_tol, opt.rel_tol * total);
  double value = 0.0, error = 0.0, share_sum = 0.0;
  std::vector<double> share(m);
  for (std::size_t i = 0; i < m; ++i) {
    share[i] = std::max(total > 0.0 ? rough[i] / total : 0.0, 1e-3 / static_cast<double>(m));
    share_sum += share[i];
  }
  int status = GSL_SUCCESS;
  std::size_t intervals = 0;
  for (std::size_t i = 0; i < m && !t.error; ++i) {
    double v = 0.0, e = 0.0;
    const int st = gsl_integration_qag(&g, knots[i], knots[i + 1], target * share[i] / share_sum, 0.0, ws.w->limit,
                                       GSL_INTEG_GAUSS15, ws.w, &v, &e);
    if (st != GSL_SUCCESS) status = st;
    value += v;
    error += e;
    intervals += ws.w->size;
  }
  QuadResult r = finish(status, value, error, ws, t, opt);
  r.intervals = static_cast<int>(intervals);
  return r;
}

QuadResult integrate_to_infinity(const std::function<double(double)>& f, double a, double scale,
                                 const QuadOptions& opt) {
  if (!(scale > 0.0)) throw std::invalid_argument("integrate_to_infinity: scale must be > 0");
  quiet_gsl();
  Workspace ws(budget(opt));
  // QAGIU maps [0, inf) with x = (1-u)/u; rescaling puts f's variation near x ~ 1
  const std::function<double(double)> h = [&](double y) { return scale * f(a + scale * y); };
  Thunk t(h);
  gsl_function g{&Thunk::call, &t};
  double value = 0.0, error = 0.0;
  const int status = gsl_integration_qagiu(&g, 0.0, opt.abs_tol, opt.rel_tol, ws.w->limit, ws.w, &value, &error);
  return finish(status, value, error, ws, t, opt);
}

}  // namespace decaylab
