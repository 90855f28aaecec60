#include "decaylab/rates.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace decaylab {

void validate(const NormSequence& seq) {
  if (seq.index.size() != seq.value.size()) throw std::invalid_argument("NormSequence: length mismatch");
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (!(seq.index[i] > 0.0) || !std::isfinite(seq.index[i])) {
      throw std::invalid_argument("NormSequence: indices must be positive and finite");
    }
    if (!(seq.value[i] > 0.0) || !std::isfinite(seq.value[i])) {
      throw std::invalid_argument("NormSequence: values must be positive and finite");
    }
    if (i > 0 && !(seq.index[i] > seq.index[i - 1])) {
      throw std::invalid_argument("NormSequence: indices must increase strictly");
    }
  }
}

RateFit fit_power_law(const NormSequence& seq, bool with_log) {
  validate(seq);
  if (seq.size() < 8) throw std::invalid_argument("fit_power_law: need at least 8 samples");
  const double lo = std::log(seq.index.front());
  const double hi = std::log(seq.index.back());
  if (hi - lo < 2.0 * std::log(10.0) - 1e-12) {
    throw std::invalid_argument("fit_power_law: indices must span at least two decades");
  }
  const double mid = 0.5 * (lo + hi);
  std::vector<std::size_t> rows;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (std::log(seq.index[i]) >= mid - 1e-12) rows.push_back(i);
  }
  const int cols = with_log ? 3 : 2;
  if (static_cast<int>(rows.size()) < cols + 1) throw std::invalid_argument("fit_power_law: fit window too small");

  Eigen::MatrixXd A(rows.size(), cols);
  Eigen::VectorXd b(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const double ln = std::log(seq.index[rows[r]]);
    A(r, 0) = 1.0;
    A(r, 1) = ln;
    if (with_log) {
      if (!(ln > 0.0)) throw std::invalid_argument("fit_power_law: log-factor fit needs indices > 1");
      A(r, 2) = std::log(ln);
    }
    b(r) = std::log(seq.value[rows[r]]);
  }
  const Eigen::VectorXd x = A.colPivHouseholderQr().solve(b);
  const Eigen::VectorXd res = A * x - b;

  RateFit fit;
  fit.intercept = x(0);
  fit.exponent = -x(1);
  fit.log_power = with_log ? x(2) : 0.0;
  fit.residual_rms = std::sqrt(res.squaredNorm() / static_cast<double>(rows.size()));
  fit.index_lo = seq.index[rows.front()];
  fit.index_hi = seq.index[rows.back()];
  fit.samples = rows.size();
  return fit;
}

EnvelopeResult envelope_check_detailed(const NormSequence& seq, const std::function<double(double)>& envelope,
                                       double margin) {
  validate(seq);
  if (!(margin >= 1.0)) throw std::invalid_argument("envelope_check: margin must be >= 1");
  if (seq.size() < 2) throw std::invalid_argument("envelope_check: need at least two samples");
  EnvelopeResult r;
  r.burn_in = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(0.1 * static_cast<double>(seq.size()))));
  auto ratio = [&](std::size_t i) {
    const double e = envelope(seq.index[i]);
    if (!(e > 0.0)) throw std::invalid_argument("envelope_check: envelope must be positive");
    return seq.value[i] / e;
  };
  for (std::size_t i = 0; i < r.burn_in; ++i) r.constant = std::max(r.constant, ratio(i));
  for (std::size_t i = r.burn_in; i < seq.size(); ++i) r.max_ratio = std::max(r.max_ratio, ratio(i) / r.constant);
  r.pass = r.max_ratio <= margin * (1.0 + 1e-12);
  return r;
}

bool envelope_check(const NormSequence& seq, const std::function<double(double)>& envelope, double margin) {
  return envelope_check_detailed(seq, envelope, margin).pass;
}

double f_alpha_envelope(double alpha, double n) {
  if (!(n > 1.0)) throw std::invalid_argument("f_alpha_envelope: n must be > 1");
  return alpha == 0.0 ? std::log(n) : std::pow(n, -0.5 * alpha);
}

}  // namespace decaylab
