#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "decaylab/spectral.hpp"

namespace decaylab::reference {
namespace {

template <class F>
SpectralSup scan(const SpectrumModel& spec, F&& logv) {
  validate(spec);
  SpectralSup best;
  best.log_value = -std::numeric_limits<double>::infinity();
  bool any = false;
  for (std::size_t i = 0; i < spec.points.size(); ++i) {
    double v = logv(spec.points[i].value());
    if (std::isnan(v)) v = -std::numeric_limits<double>::infinity();
    if (!any || v > best.log_value) {
      best.log_value = v;
      best.index = i;
      any = true;
    }
  }
  best.point = spec.points[best.index];
  best.value = std::exp(best.log_value);
  return best;
}

double log_abs(Complex z) { return std::log(std::abs(z)); }

}  // namespace

SpectralSup cayley_product_sup(const SpectrumModel& spec, const ParamSeq& params, int n, double alpha,
                               double shift) {
  return reference::cayley_product_sup(spec, params, n, std::vector<PowerWeight>{{alpha, shift}});
}

SpectralSup cayley_product_sup(const SpectrumModel& spec, const ParamSeq& params, int n,
                               const std::vector<PowerWeight>& weights) {
  if (n < 0) throw std::invalid_argument("reference::cayley_product_sup: n must be >= 0");
  const std::vector<double> omegas = params.take(static_cast<std::size_t>(n));
  return scan(spec, [&](Complex l) {
    double acc = 0.0;
    for (const auto& w : weights) {
      if (w.alpha < 0.0 || w.shift < 0.0) throw std::invalid_argument("reference::cayley_product_sup");
      if (w.alpha != 0.0) acc -= w.alpha * log_abs(l + w.shift);
    }
    for (double w : omegas) acc += log_abs(l - w) - log_abs(l + w);
    return acc;
  });
}

SpectralSup semigroup_sup(const SpectrumModel& spec, double t, double alpha) {
  return scan(spec, [&](Complex l) { return -t * l.real() - (alpha == 0.0 ? 0.0 : alpha * log_abs(l)); });
}

SpectralSup inverse_semigroup_sup(const SpectrumModel& spec, double t, double alpha) {
  return scan(spec, [&](Complex l) { return -t * (1.0 / l).real() - (alpha == 0.0 ? 0.0 : alpha * log_abs(l)); });
}

SpectralSup frac_power_sup(const SpectrumModel& spec, double alpha) {
  return scan(spec, [&](Complex l) { return alpha == 0.0 ? 0.0 : -alpha * log_abs(l); });
}

SpectralSup weighted_resolvent_sup(const SpectrumModel& spec, double q, double beta, int xi_grid) {
  if (xi_grid < 2) throw std::invalid_argument("reference::weighted_resolvent_sup: grid too small");
  // geometric xi-grid on [1e-8, 1]
  std::vector<double> xs(static_cast<std::size_t>(xi_grid));
  for (int j = 0; j < xi_grid; ++j) xs[j] = std::pow(1e-8, 1.0 - static_cast<double>(j) / (xi_grid - 1));
  return scan(spec, [&](Complex l) {
    double best = -std::numeric_limits<double>::infinity();
    for (double xi : xs) {
      best = std::max(best, (1.0 - 2.0 * q) * std::log(xi) + std::log(std::numbers::pi) -
                                2.0 * beta * q * log_abs(l) - std::log(xi + l.real()));
    }
    return best;
  });
}

}  // namespace decaylab::reference
