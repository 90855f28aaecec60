#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "decaylab/bnorm.hpp"
#include "decaylab/quadrature.hpp"

using namespace decaylab;

namespace {

// Independent B0,q oracle: central differences of the direct formula, a dense
// eta grid with local refinement, and the trapezoid rule in u = log xi.
template <class F>
double oracle_inner(F&& f, double xi, double eta_hi) {
  auto mag = [&](double eta) {
    const Complex z(xi, eta);
    // the step shrinks like |z|^2 near 0, where exp(-t/z) varies on that scale
    const double h = 1e-3 * std::abs(z) * std::min(1.0, std::abs(z));
    return std::abs((8.0 * (f(z + h) - f(z - h)) - (f(z + 2.0 * h) - f(z - 2.0 * h))) / (12.0 * h));
  };
  constexpr int m = 1500;
  double best = mag(0.0), best_eta = 0.0, step = std::log(eta_hi / 1e-6) / (m - 1);
  for (int i = 0; i < m; ++i) {
    const double e = 1e-6 * std::exp(step * i);
    const double v = mag(e);
    if (v > best) best = v, best_eta = e;
  }
  // ternary refinement on the bracketing cells
  double a = best_eta * std::exp(-step), b = best_eta * std::exp(step);
  if (best_eta == 0.0) a = 0.0, b = 1e-6;
  for (int it = 0; it < 100; ++it) {
    const double c = a + (b - a) / 3.0, d = b - (b - a) / 3.0;
    (mag(c) < mag(d) ? a : b) = (mag(c) < mag(d) ? c : d);
  }
  return std::max(best, mag(0.5 * (a + b)));
}

template <class F>
double oracle_norm(F&& f, std::optional<double> q, double eta_scale) {
  const double ua = -40.0, ub = 40.0, h = 0.02;
  double acc = 0.0;
  const int m = static_cast<int>((ub - ua) / h);
  for (int i = 0; i <= m; ++i) {
    const double xi = std::exp(ua + h * i);
    const double w = (i == 0 || i == m) ? 0.5 : 1.0;
    acc += w * psi(q, xi) * oracle_inner(f, xi, 1e3 * (1.0 + xi + eta_scale)) * xi;
  }
  return acc * h;
}

}  // namespace

TEST_SUITE("quadrature") {
  TEST_CASE("finite and infinite intervals") {
    const QuadResult a = integrate([](double x) { return std::sqrt(x); }, 0.0, 1.0);
    CHECK(a.converged);
    CHECK(a.value == doctest::Approx(2.0 / 3.0).epsilon(1e-10));
    const QuadResult b = integrate_to_infinity([](double x) { return std::exp(-x); }, 0.0);
    CHECK(b.value == doctest::Approx(1.0).epsilon(1e-10));
    const QuadResult c = integrate_to_infinity([](double x) { return 1.0 / (1.0 + x * x); }, 0.0);
    CHECK(c.value == doctest::Approx(std::numbers::pi / 2.0).epsilon(1e-9));
    const QuadResult d = integrate([](double x) { return std::abs(x - 0.3); }, std::vector<double>{0.0, 0.3, 1.0});
    CHECK(d.value == doctest::Approx(0.5 * (0.09 + 0.49)).epsilon(1e-13));
  }

  TEST_CASE("error estimate brackets the truth") {
    QuadOptions opt;
    opt.rel_tol = 1e-6;
    const QuadResult r = integrate([](double x) { return std::cos(30.0 * x); }, 0.0, 1.0, opt);
    CHECK(std::abs(r.value - std::sin(30.0) / 30.0) <= r.error + 1e-15);
  }
}

TEST_SUITE("bnorm") {
  TEST_CASE("psi weight") {
    CHECK(psi(0.5, 0.25) == doctest::Approx(0.5));
    CHECK(psi(0.3, 2.0) == 1.0);
    CHECK(psi(1.0, 1.0) == 1.0);
    CHECK(psi(std::nullopt, 1e-9) == 1.0);
    CHECK_THROWS_AS(psi(0.0, 1.0), std::invalid_argument);
    CHECK(parse_norm_mode("bound") == NormMode::bound);
    CHECK_THROWS_AS(parse_norm_mode("fast"), std::invalid_argument);
  }

  TEST_CASE("reference function 1/(z+1)") {
    // sup_eta |f'(xi+i eta)| = (xi+1)^{-2}, integral 1
    const double exact_sup =
        inner_sup_exact([](Complex z) { return -1.0 / ((z + 1.0) * (z + 1.0)); }, 0.7, 1.0);
    CHECK(exact_sup == doctest::Approx(1.0 / (1.7 * 1.7)).epsilon(1e-12));
    NormIntegrand in;
    in.sup = [](double xi) { return 1.0 / ((xi + 1.0) * (xi + 1.0)); };
    in.upper_tail = [](double x) { return 1.0 / (x + 1.0); };
    in.lower_tail = [](double eps, std::optional<double>) { return eps; };
    const NormResult r = b0q_norm(in, std::nullopt);
    CHECK(r.converged);
    CHECK(r.value + r.tail_bound >= 1.0 - 1e-9);
    CHECK(r.value == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(r.error_estimate + r.tail_bound <= 1e-6 * r.value);
  }

  TEST_CASE("exact inner sup against an eta grid") {
    const FunctionFamily f = CayleyPower{2, 0.5};
    InnerSupInfo info;
    const double v = inner_sup(f, 1.0, NormMode::exact, &info);
    CHECK(info.converged);
    auto direct = [](Complex z) { return (z - 1.0) * (z - 1.0) / std::pow(z + 1.0, 3.0); };
    double best = 0.0;
    for (int i = 0; i <= 1000000; ++i) {
      const double eta = 1e-3 * i;
      const Complex z(1.0, eta);
      // f' = 2(z-1)/(z+1)^3 - 3(z-1)^2/(z+1)^4
      best = std::max(best, std::abs(2.0 * (z - 1.0) / std::pow(z + 1.0, 3.0) - 3.0 * (z - 1.0) * (z - 1.0) / std::pow(z + 1.0, 4.0)));
    }
    (void)direct;
    CHECK(v >= best * (1.0 - 1e-12));
    CHECK(v == doctest::Approx(best).epsilon(1e-8));
  }

  TEST_CASE("bound >= exact >= |f'(xi)|") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int k = 0; k < 100; ++k) {
      FunctionFamily f;
      switch (k % 5) {
        case 0: f = CayleyPower{1 + static_cast<int>(500 * u(rng)), 0.05 + u(rng)}; break;
        case 1: f = CayleyShifted{1 + static_cast<int>(500 * u(rng)), 2.0 * u(rng), 0.5 + u(rng)}; break;
        case 2: {
          VariableCayley v{{}, 2.0 * u(rng), 0.5, 2.0, 1.0 + u(rng)};
          for (int i = 0; i < 1 + static_cast<int>(50 * u(rng)); ++i) v.omegas.push_back(0.5 + 1.5 * u(rng));
          f = v;
          break;
        }
        case 3: f = InverseGen{std::pow(10.0, -2.0 + 5.0 * u(rng)), 0.05 + 2.0 * u(rng)}; break;
        default: f = InverseGenPoly{std::pow(10.0, -2.0 + 5.0 * u(rng)), 0.05 + u(rng)}; break;
      }
      const double xi = std::pow(10.0, -3.0 + 6.0 * u(rng));
      const double exact = inner_sup(f, xi, NormMode::exact);
      const double bound = inner_sup(f, xi, NormMode::bound);
      CHECK(exact >= std::abs(eval_derivative(f, {xi, 0.0})) * (1.0 - 1e-12));
      CHECK(bound >= exact * (1.0 - 1e-9));
    }
  }

  TEST_CASE("bound-mode preconditions") {
    CHECK_THROWS_AS(inner_sup(VariableCayley{{0.5, 2.0}, 1.0, 0.5, 2.0, 0.5}, 1.0, NormMode::bound), std::domain_error);
    CHECK_THROWS_AS(inner_sup(InverseGen{1.0, 0.0}, 1.0, NormMode::bound), std::domain_error);
    CHECK_NOTHROW(inner_sup(InverseGen{1.0, 0.0}, 1.0, NormMode::exact));
    CHECK_THROWS_AS(b0q_norm(CayleyPower{2, 0.5}, 0.5, NormMode::exact), std::invalid_argument);
    QuadConfig bad;
    bad.max_depth = 5;
    CHECK_THROWS_AS(b0q_norm(CayleyPower{2, 0.5}, 0.25, NormMode::exact, bad), std::invalid_argument);
  }

  TEST_CASE("norms against the independent oracle") {
    {
      const CayleyPower fam{8, 0.5};
      auto f = [](Complex z) { return std::pow(z - 1.0, 8) / std::pow(z + 1.0, 9.0); };
      const NormResult r = b0q_norm(fam, 0.25, NormMode::exact);
      CHECK(r.converged);
      CHECK(r.value == doctest::Approx(oracle_norm(f, 0.25, std::sqrt(8.0))).epsilon(1e-4));
    }
    {
      const InverseGen fam{10.0, 1.0};
      auto f = [](Complex z) { return z * std::exp(-10.0 / z) / std::pow(z + 1.0, 2.0); };
      const NormResult r = b0q_norm(fam, std::nullopt, NormMode::exact);
      CHECK(r.converged);
      CHECK(r.value == doctest::Approx(oracle_norm(f, std::nullopt, std::sqrt(10.0))).epsilon(1e-4));
    }
  }

  TEST_CASE("weight ordering and bound mode dominance") {
    for (const FunctionFamily& f : {FunctionFamily{CayleyPower{64, 0.3}}, FunctionFamily{InverseGenPoly{30.0, 0.2}},
                                    FunctionFamily{CayleyShifted{40, 1.0, 1.0}}}) {
      const double off = b0q_norm(f, std::nullopt, NormMode::exact).value;
      const double q1 = b0q_norm(f, 0.1, NormMode::exact).value;
      const double q4 = b0q_norm(f, 0.4, NormMode::exact).value;
      CHECK(off >= q1);
      CHECK(q1 >= q4);
      const NormResult b = b0q_norm(f, 0.1, NormMode::bound);
      CHECK(b.converged);
      CHECK(b.value >= q1 * (1.0 - 1e-6));
    }
  }

  TEST_CASE("tolerance self-consistency") {
    const FunctionFamily f = CayleyPower{256, 0.25};
    QuadConfig loose, tight;
    loose.rel_tol = 1e-6;
    tight.rel_tol = 5e-7;
    const NormResult a = b0q_norm(f, 0.25, NormMode::exact, loose);
    const NormResult b = b0q_norm(f, 0.25, NormMode::exact, tight);
    CHECK(a.converged);
    CHECK(b.converged);
    CHECK(std::abs(a.value - b.value) <= a.error_estimate + a.tail_bound);
  }

  TEST_CASE("norms decay in n") {
    double prev = INFINITY;
    for (int n : {16, 64, 256, 1024}) {
      const double v = b0q_norm(CayleyPower{n, 0.25}, 0.25, NormMode::exact).value;
      CHECK(std::isfinite(v));
      CHECK(v < prev);
      prev = v;
    }
  }
}
