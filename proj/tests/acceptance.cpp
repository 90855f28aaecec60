// Acceptance run: every registry experiment at its defaults, criteria re-derived
// from the returned tables. One PASS/FAIL line per criterion; exit 1 if any fail.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "decaylab/experiments.hpp"
#include "decaylab/rates.hpp"

using namespace decaylab;

namespace {

struct Verdict {
  bool pass = true;
  std::vector<std::string> lines;

  void add(bool ok, const std::string& text) {
    pass = pass && ok;
    lines.push_back(std::string(ok ? "ok   " : "FAIL ") + text);
  }
};

std::string fmt(const char* f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

std::map<std::string, ExperimentResult> cache;

const ExperimentResult& result(const std::string& name) {
  auto it = cache.find(name);
  if (it != cache.end()) return it->second;
  ExperimentConfig cfg;
  cfg.experiment = name;
  std::fprintf(stderr, "running %s ...\n", name.c_str());
  return cache.emplace(name, run_experiment(cfg)).first->second;
}

const Table* table(const ExperimentResult& r, const std::string& name) {
  for (const auto& t : r.tables) {
    if (t.name == name) return &t;
  }
  return nullptr;
}

NormSequence seq(const Table& t) {
  NormSequence s;
  s.index = t.index;
  s.value = t.value;
  return s;
}

bool no_numerical_failure(Verdict& v, const ExperimentResult& r) {
  if (r.numerical_failure) v.add(false, r.experiment + ": numerical failure: " + r.failure);
  return !r.numerical_failure;
}

// exponent min(p,q) +- tol, and log power ~ 1 when p = q
void regime_rates(Verdict& v, const ExperimentResult& r, const std::string& prefix) {
  const std::vector<std::pair<double, double>> regimes = {{0.1, 0.3}, {0.25, 0.25}, {0.4, 0.2}};
  for (const auto& [p, q] : regimes) {
    char name[64];
    std::snprintf(name, sizeof name, "%sp%g_q%g", prefix.c_str(), p, q);
    const Table* t = table(r, name);
    if (!t) {
      v.add(false, std::string(name) + ": table missing");
      continue;
    }
    const bool with_log = p == q;
    const RateFit f = fit_power_law(seq(*t), with_log);
    const double target = std::min(p, q);
    v.add(std::abs(f.exponent - target) <= 0.05,
          std::string(name) + ": exponent " + fmt("%.4f", f.exponent) + " vs " + fmt("%g", target) + " +- 0.05");
    if (with_log) {
      v.add(std::abs(f.log_power - 1.0) < 0.5,
            std::string(name) + ": log power " + fmt("%.4f", f.log_power) + " vs 1 (|lp - 1| < 0.5)");
    }
  }
}

Verdict a1() {
  Verdict v;
  const auto& r = result("prop-fn-norm");
  if (no_numerical_failure(v, r)) regime_rates(v, r, "fn_norm_");
  return v;
}

Verdict a2() {
  Verdict v;
  const auto& r = result("thm-ct-poly");
  if (!no_numerical_failure(v, r)) return v;
  for (double beta : {1.0, 2.0}) {
    const Table* t = table(r, "cayley_beta" + fmt("%g", beta));
    if (!t) {
      v.add(false, "beta " + fmt("%g", beta) + ": table missing");
      continue;
    }
    const double e = fit_power_law(seq(*t), false).exponent;
    const double target = 1.0 / (2.0 + beta);
    v.add(std::abs(e - target) <= 0.05, "beta " + fmt("%g", beta) + ": exponent " + fmt("%.4f", e) + " vs " +
                                             fmt("%.4f", target) + " +- 0.05 (n up to " +
                                             fmt("%g", t->index.back()) + ")");
  }
  return v;
}

Verdict a3() {
  Verdict v;
  const auto& r = result("rem-optimality");
  if (!no_numerical_failure(v, r)) return v;
  const Table* t = table(r, "cayley_sqrt_alpha1");
  const Table* pt = table(r, "point_lower_bound_ratio");
  if (!t || !pt) {
    v.add(false, "tables missing");
    return v;
  }
  const EnvelopeResult up =
      envelope_check_detailed(seq(*t), [](double n) { return f_alpha_envelope(1.0, n); }, r.tolerance);
  v.add(up.pass, "upper envelope n^-1/2: max ratio " + fmt("%.4f", up.max_ratio) + " (margin " +
                     fmt("%g", r.tolerance) + ")");
  // independent recomputation of |f_{n,1}(i sqrt n)| at c = 1
  double worst = INFINITY;
  int count = 0;
  for (std::size_t i = 0; i < t->index.size(); ++i) {
    const double n = t->index[i];
    const auto ni = static_cast<unsigned long long>(n);
    if ((ni & (ni - 1)) != 0) continue;
    const double f2 = std::pow(n / (4.0 + n), n) / (4.0 + n);
    worst = std::min(worst, t->value[i] / std::sqrt(f2));
    ++count;
  }
  v.add(count > 0 && worst >= 0.9 && pt->index.size() == static_cast<std::size_t>(count),
        "lower bound value >= 0.9 |f_{n,1}(i sqrt n)|: min ratio " + fmt("%.4f", worst) + " over " +
            fmt("%g", count) + " dyadic n");
  return v;
}

Verdict a4() {
  Verdict v;
  const auto& r = result("thm-ct-exp-var");
  if (!no_numerical_failure(v, r)) return v;
  for (double alpha : {0.0, 1.0, 2.0}) {
    for (int seed = 1; seed <= 3; ++seed) {
      const std::string name = "cayley_var_alpha" + fmt("%g", alpha) + "_seed" + std::to_string(seed);
      const Table* t = table(r, name);
      if (!t) {
        v.add(false, name + ": table missing");
        continue;
      }
      const EnvelopeResult e =
          envelope_check_detailed(seq(*t), [alpha](double n) { return f_alpha_envelope(alpha, n); }, r.tolerance);
      v.add(e.pass, name + ": max ratio " + fmt("%.4f", e.max_ratio) + " (margin " + fmt("%g", r.tolerance) + ")");
    }
  }
  return v;
}

Verdict a5() {
  Verdict v;
  const auto& r = result("thm-inv-bounded");
  if (no_numerical_failure(v, r)) {
    for (double alpha : {0.5, 1.0}) {
      const std::string name = "inv_semigroup_alpha" + fmt("%g", alpha);
      const Table* t = table(r, name);
      if (!t) {
        v.add(false, name + ": table missing");
        continue;
      }
      const auto top = std::max_element(t->value.begin(), t->value.end());
      const auto at = static_cast<std::size_t>(top - t->value.begin());
      // |lambda_1|^{-alpha} = 2^{-alpha/2} bounds every value (t >= 0, Re(1/lambda) > 0)
      const double cap = std::pow(2.0, -alpha / 2.0);
      v.add(std::isfinite(*top) && *top <= cap * (1.0 + 1e-12),
            name + ": sup over t-grid " + fmt("%.5f", *top) + " <= " + fmt("%.5f", cap) + " at t = " +
                fmt("%g", t->index[at]));
      bool interior = false;
      for (const auto& c : r.checks) {
        if (c.at("name") == name + " attained at an interior spectral point") interior = c.at("pass").get<bool>();
      }
      v.add(interior, name + ": attaining spectral point " + fmt("%g", t->point[at].re()) + " + " +
                          fmt("%g", t->point[at].im()) + "i lies inside the model");
    }
  }
  const auto& f = result("prop-ft-norm");
  if (no_numerical_failure(v, f)) {
    for (double alpha : {0.5, 1.0}) {
      const std::string name = "ft_bounded_alpha" + fmt("%g", alpha);
      const Table* t = table(f, name);
      if (!t) {
        v.add(false, name + ": table missing");
        continue;
      }
      const double hi = *std::max_element(t->value.begin(), t->value.end());
      const double lo = *std::min_element(t->value.begin(), t->value.end());
      v.add((hi - lo) / hi < 0.2, name + ": ||f_t||_B0 over t in {1,10,100,1000} in [" + fmt("%.4f", lo) + ", " +
                                      fmt("%.4f", hi) + "], variation " + fmt("%.3f", (hi - lo) / hi) + " (< 0.2)");
    }
  }
  return v;
}

Verdict a6() {
  Verdict v;
  const auto& r = result("thm-inv-poly");
  if (no_numerical_failure(v, r)) {
    const Table* t = table(r, "inv_semigroup_alpha1");
    if (!t) {
      v.add(false, "inv_semigroup_alpha1: table missing");
    } else {
      const RateFit f = fit_power_law(seq(*t), true);
      v.add(f.exponent >= 1.0 / 3.0 - 0.05, "inverse semigroup: exponent " + fmt("%.4f", f.exponent) +
                                                " (log power " + fmt("%.3f", f.log_power) + ") >= 1/3 - 0.05");
    }
  }
  const auto& f = result("prop-ft-norm");
  if (no_numerical_failure(v, f)) regime_rates(v, f, "ftp_norm_");
  return v;
}

Verdict a7() {
  Verdict v;
  const auto& r = result("lemma-suite");
  if (!no_numerical_failure(v, r)) return v;
  const Table* ext = table(r, "extremal_rel_error");
  const Table* inv = table(r, "inverse_bound_margin");
  if (!ext || !inv) {
    v.add(false, "tables missing");
    return v;
  }
  const double worst = *std::max_element(ext->value.begin(), ext->value.end());
  v.add(ext->value.size() == 500 && worst <= 1e-8,
        fmt("%g", static_cast<double>(ext->value.size())) + " extremal cases: worst relative error " +
            fmt("%.3g", worst) + " (<= 1e-8)");
  const double margin = *std::min_element(inv->value.begin(), inv->value.end());
  v.add(margin >= 1.0, fmt("%g", static_cast<double>(inv->value.size())) +
                           " inverse-bound cases: min bound/sup " + fmt("%.4f", margin) + " (>= 1)");
  for (const char* name : {"omega-monotonicity under c^2 >= omega_p omega_q",
                           "monotonicity fails for zeta = 0.5, omega in [1, 4]"}) {
    bool ok = false;
    for (const auto& c : r.checks) {
      if (c.at("name") == name) ok = c.at("pass").get<bool>();
    }
    v.add(ok, name);
  }
  return v;
}

Verdict a8() {
  Verdict v;
  const auto& r = result("lemma-suite");
  if (no_numerical_failure(v, r)) {
    const Table* pl = table(r, "plancherel_residual");
    if (!pl) {
      v.add(false, "plancherel_residual: table missing");
    } else {
      const double worst = *std::max_element(pl->value.begin(), pl->value.end());
      v.add(pl->value.size() == 100 && worst < 1e-8,
            fmt("%g", static_cast<double>(pl->value.size())) + " Plancherel cases: worst residual " +
                fmt("%.3g", worst) + " (< 1e-8)");
    }
  }
  const auto& f = result("prop-frac-normalize");
  if (!no_numerical_failure(v, f)) return v;
  const std::vector<std::pair<std::string, double>> series = {
      {"semigroup_A-1", 1.0}, {"semigroup_q0.5", 0.5}, {"semigroup_q1", 1.0}, {"semigroup_q2", 2.0}};
  for (const auto& [name, target] : series) {
    const Table* t = table(f, name);
    if (!t) {
      v.add(false, name + ": table missing");
      continue;
    }
    const double e = fit_power_law(seq(*t), false).exponent;
    v.add(std::abs(e - target) <= 0.05,
          name + ": exponent " + fmt("%.4f", e) + " vs " + fmt("%g", target) + " +- 0.05");
  }
  return v;
}

Verdict a9() {
  Verdict v;
  const auto& r = result("prop-fn-norm");
  if (!no_numerical_failure(v, r)) return v;
  for (const char* tag : {"p0.1_q0.3", "p0.25_q0.25", "p0.4_q0.2"}) {
    const std::string name = std::string("op_ratio_") + tag;
    const Table* t = table(r, name);
    if (!t) {
      v.add(false, name + ": table missing");
      continue;
    }
    const double mid = std::sqrt(t->index.front() * t->index.back());
    double lo = INFINITY, hi = 0.0;
    for (std::size_t i = 0; i < t->index.size(); ++i) {
      if (t->index[i] < mid) continue;
      lo = std::min(lo, t->value[i]);
      hi = std::max(hi, t->value[i]);
    }
    v.add(hi / lo < 10.0, name + ": max/min over n >= " + fmt("%g", mid) + " is " + fmt("%.3f", hi / lo) +
                              " (< 10)");
  }
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, Verdict (*)()>> criteria = {
      {"A1", a1}, {"A2", a2}, {"A3", a3}, {"A4", a4}, {"A5", a5},
      {"A6", a6}, {"A7", a7}, {"A8", a8}, {"A9", a9}};
  std::vector<std::pair<const char*, Verdict>> done;
  for (const auto& [id, fn] : criteria) done.emplace_back(id, fn());

  int failed = 0;
  for (const auto& [id, v] : done) {
    for (const auto& line : v.lines) std::printf("   %s %s\n", id, line.c_str());
  }
  std::printf("\n");
  for (const auto& [id, v] : done) {
    std::printf("%s %s\n", id, v.pass ? "PASS" : "FAIL");
    failed += v.pass ? 0 : 1;
  }
  std::printf("%d of %zu criteria pass\n", static_cast<int>(done.size()) - failed, done.size());
  return failed == 0 ? 0 : 1;
}
