#pragma once

#include <functional>
#include <string>
#include <vector>

namespace decaylab {

struct NormSequence {
  std::vector<double> index;  // strictly increasing, > 0
  std::vector<double> value;  // > 0
  std::string axis_label = "n";

  void push_back(double i, double v) {
    index.push_back(i);
    value.push_back(v);
  }
  std::size_t size() const noexcept { return index.size(); }
};

/// Throws std::invalid_argument unless indices increase strictly and all entries are positive and finite.
void validate(const NormSequence& seq);

struct RateFit {
  double exponent = 0.0;   // v ~ n^{-exponent} (log n)^{log_power}
  double log_power = 0.0;  // 0 unless fitted with_log
  double intercept = 0.0;
  double residual_rms = 0.0;
  double index_lo = 0.0;  // fit window
  double index_hi = 0.0;
  std::size_t samples = 0;
};

/// Least squares of log v on {1, log n} or {1, log n, log log n} over the
/// samples whose log-index lies in the upper half of the log-index range.
/// Needs >= 8 samples spanning >= 2 decades (std::invalid_argument otherwise).
RateFit fit_power_law(const NormSequence& seq, bool with_log);

struct EnvelopeResult {
  bool pass = false;
  double constant = 0.0;   // max value/envelope over the burn-in
  double max_ratio = 0.0;  // max value/(constant * envelope) after the burn-in
  std::size_t burn_in = 0;
};

/// value <= margin * constant * envelope(index) for every sample after the
/// burn-in (first 10%, at least one sample); constant = max ratio on the burn-in.
EnvelopeResult envelope_check_detailed(const NormSequence& seq, const std::function<double(double)>& envelope,
                                       double margin);
bool envelope_check(const NormSequence& seq, const std::function<double(double)>& envelope, double margin);

/// F_alpha(n): log n for alpha = 0, n^{-alpha/2} otherwise.
double f_alpha_envelope(double alpha, double n);

}  // namespace decaylab
