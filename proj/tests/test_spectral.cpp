#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "decaylab/functions.hpp"
#include "decaylab/parallel.hpp"
#include "decaylab/param_seq.hpp"
#include "decaylab/spectral.hpp"
#include "decaylab/spectrum.hpp"

using namespace decaylab;

namespace {

SpectrumModel single(double re, double im) {
  SpectrumModel m;
  m.points = {ComplexValue(re, im)};
  m.label = "single";
  return m;
}

SpectrumModel random_model(std::mt19937_64& rng, std::size_t count) {
  std::uniform_real_distribution<double> lre(-4.0, 1.0), lim(-2.0, 3.0);
  SpectrumModel m;
  m.label = "random";
  for (std::size_t i = 0; i < count; ++i) m.points.emplace_back(std::pow(10.0, lre(rng)), std::pow(10.0, lim(rng)));
  return m;
}

void same(const SpectralSup& a, const SpectralSup& b, double rel = 1e-12) {
  CHECK(a.index == b.index);
  CHECK(a.value == doctest::Approx(b.value).epsilon(rel));
}

}  // namespace

TEST_SUITE("spectrum") {
  TEST_CASE("model construction") {
    const SpectrumModel p = make_poly_stable_spectrum(1.0, 3, 1.0);
    REQUIRE(p.points.size() == 3);
    CHECK(p.points[0] == ComplexValue(1.0, 1.0));
    CHECK(p.points[1] == ComplexValue(0.5, 2.0));
    CHECK(p.points[2].re() == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(p.points[2].im() == 3.0);
    CHECK(p.beta == 1.0);
    validate(p);

    const SpectrumModel s = make_sqrt_spectrum(1.0, 2);
    REQUIRE(s.points.size() == 2);
    CHECK(s.points[0] == ComplexValue(1.0, 1.0));
    CHECK(s.points[1].im() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK(s.exp_margin == 1.0);
    validate(s);
  }

  TEST_CASE("validation") {
    SpectrumModel empty;
    CHECK_THROWS_AS(validate(empty), std::invalid_argument);
    CHECK_THROWS_AS(validate(single(0.0, 1.0)), std::invalid_argument);
    CHECK_THROWS_AS(validate(single(-1.0, 1.0)), std::invalid_argument);

    SpectrumModel margin = make_sqrt_spectrum(1.0, 5);
    margin.points.emplace_back(0.5, 3.0);  // left of Re >= 1
    CHECK_THROWS_AS(validate(margin), std::invalid_argument);

    SpectrumModel poly = make_poly_stable_spectrum(1.0, 10);
    poly.points.emplace_back(0.01, 1.0);  // |Im| = 1 < C (Re)^{-1} = 100
    CHECK_THROWS_AS(validate(poly), std::invalid_argument);

    CHECK_THROWS(make_poly_stable_spectrum(0.0, 3));
    CHECK_THROWS(make_sqrt_spectrum(-1.0, 3));
  }

  TEST_CASE("file round trip") {
    const SpectrumModel a = make_poly_stable_spectrum(1.5, 50, 2.0);
    std::stringstream ss;
    write_spectrum(ss, a);
    const SpectrumModel b = read_spectrum(ss);
    REQUIRE(b.points.size() == a.points.size());
    for (std::size_t i = 0; i < a.points.size(); ++i) CHECK(b.points[i] == a.points[i]);
    CHECK(b.beta == a.beta);
    CHECK(b.delta == a.delta);
    CHECK(b.C == a.C);
    CHECK(b.label == a.label);

    const SpectrumModel c = make_sqrt_spectrum(0.7, 20);
    std::stringstream st;
    write_spectrum(st, c);
    const SpectrumModel d = read_spectrum(st);
    CHECK(d.exp_margin == c.exp_margin);
    CHECK(d.points.back() == c.points.back());
  }
}

TEST_SUITE("param_seq") {
  TEST_CASE("splitmix64 reference value") {
    CHECK(splitmix64_mix(0x9E3779B97F4A7C15ULL) == 0xE220A8397B1DCDAFULL);
  }

  TEST_CASE("seeded sequences: range, determinism, documented mapping") {
    const ParamSeq a = ParamSeq::seeded_random(42, 0.5, 2.0);
    const ParamSeq b = ParamSeq::seeded_random(42, 0.5, 2.0);
    const ParamSeq c = ParamSeq::seeded_random(43, 0.5, 2.0);
    const auto va = a.take(10000), vb = b.take(10000), vc = c.take(10000);
    CHECK(va == vb);
    CHECK(va != vc);
    for (double w : va) {
      CHECK(w >= 0.5);
      CHECK(w <= 2.0);
    }
    const ParamSeq z = ParamSeq::seeded_random(0, 1.0, 2.0);
    CHECK(z(1) == 1.0 + static_cast<double>(0xE220A8397B1DCDAFULL >> 11) * 0x1.0p-53);
    CHECK(a(7) == va[6]);
  }

  TEST_CASE("constant and periodic") {
    const ParamSeq k = ParamSeq::constant(1.5);
    CHECK(k(1) == 1.5);
    CHECK(k(1000000) == 1.5);
    const ParamSeq p = ParamSeq::periodic({1.0, 2.0, 3.0});
    CHECK(p(1) == 1.0);
    CHECK(p(3) == 3.0);
    CHECK(p(4) == 1.0);
    CHECK(p.omega_p() == 1.0);
    CHECK(p.omega_q() == 3.0);
    CHECK_THROWS(ParamSeq::constant(0.0));
    CHECK_THROWS(ParamSeq::seeded_random(1, 2.0, 1.0));
    CHECK_THROWS(ParamSeq::periodic({}));
  }
}

TEST_SUITE("spectral") {
  TEST_CASE("scalar kernel examples") {
    const ParamSeq one = ParamSeq::constant(1.0);
    CHECK(cayley_product_norm(single(1.0, 0.0), one, 3, 0.0, 0.0) == 0.0);
    CHECK(cayley_product_norm(single(2.0, 0.0), one, 1, 0.0, 0.0) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    CHECK(semigroup_norm(single(2.0, 0.0), 1.0, 1.0) == doctest::Approx(std::exp(-2.0) / 2.0).epsilon(1e-14));
    CHECK(inverse_semigroup_norm(single(1.0, 1.0), 2.0, 0.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
    CHECK(frac_power_norm(single(1.0, 2.0), 2.0) == doctest::Approx(0.2).epsilon(1e-14));

    const SpectrumModel s = make_sqrt_spectrum(1.0, 50);
    CHECK(semigroup_norm(s, 0.0, 0.0) == 1.0);
    CHECK(inverse_semigroup_norm(s, 0.0, 0.0) == 1.0);
    CHECK(frac_power_norm(s, 0.0) == 1.0);
  }

  TEST_CASE("sqrt model realises |f_{n,a}(i sqrt n)|") {
    // |f_{4,1}(2i)|^2 = ((0^2+4)/(2^2+4))^4 / (2^2+4) = 1/128; f is evaluated on Re z > 0 only
    const double lower = std::sqrt(1.0 / 128.0);
    CHECK(std::exp(eval_log_magnitude(CayleyShifted{4, 1.0, 1.0}, ComplexValue(1e-9, 2.0))) ==
          doctest::Approx(lower).epsilon(1e-6));
    const SpectralSup r = cayley_product_sup(make_sqrt_spectrum(1.0, 4), ParamSeq::constant(1.0), 4, 1.0, 1.0);
    CHECK(r.value >= lower * (1.0 - 1e-12));
    CHECK(r.index == 3);
  }

  TEST_CASE("agrees with the function module pointwise") {
    std::mt19937_64 rng(7);
    const SpectrumModel m = random_model(rng, 40);
    for (int n : {1, 5, 30}) {
      for (double p : {0.5, 1.0}) {
        double best = -INFINITY;
        for (const auto& l : m.points) best = std::max(best, eval_log_magnitude(CayleyPower{n, p}, l));
        const SpectralSup r = cayley_product_sup(m, ParamSeq::constant(1.0), n, 2.0 * p, 1.0);
        CHECK(r.log_value == doctest::Approx(best).epsilon(1e-12));
      }
    }
  }

  TEST_CASE("Plancherel identity for basis vectors") {
    const PlancherelSides a = plancherel_sides(single(1.0, 0.0), 1.0, 0.0, 0);
    CHECK(a.lhs == doctest::Approx(std::numbers::pi / 2.0).epsilon(1e-9));
    CHECK(a.rhs == doctest::Approx(std::numbers::pi / 2.0).epsilon(1e-9));
    CHECK(plancherel_residual(single(1.0, 0.0), 1.0, 0.0, 0) < 1e-8);
    const PlancherelSides b = plancherel_sides(single(1.0, 1.0), 1.0, 0.0, 0);
    CHECK(b.lhs == doctest::Approx(std::numbers::pi / 2.0).epsilon(1e-9));
    CHECK(plancherel_residual(single(1.0, 1.0), 1.0, 0.0, 0) < 1e-8);
    const PlancherelSides c = plancherel_sides(single(2.0, 0.0), 0.5, 1.0, 0);
    CHECK(c.lhs == doctest::Approx(std::numbers::pi / 10.0).epsilon(1e-9));
    CHECK(c.rhs == doctest::Approx(std::numbers::pi / 10.0).epsilon(1e-9));
    CHECK(plancherel_residual(single(2.0, 0.0), 0.5, 1.0, 0) < 1e-8);
    CHECK_THROWS_AS(plancherel_residual(single(2.0, 0.0), 0.5, 1.0, 1), std::out_of_range);
    CHECK_THROWS_AS(plancherel_residual(single(2.0, 0.0), 0.0, 1.0, 0), std::invalid_argument);
  }

  TEST_CASE("weighted resolvent supremum") {
    SpectrumModel one = single(1.0, 0.0);
    one.beta = 1.0;
    CHECK(weighted_resolvent_sup(one, 0.25, 1.0).value == doctest::Approx(std::numbers::pi / 2.0).epsilon(1e-14));
    CHECK_THROWS_AS(weighted_resolvent_sup(single(1.0, 0.0), 0.25, 1.0), std::invalid_argument);  // beta unset

    // same |lambda|, larger real part: never larger
    SpectrumModel left = single(0.6, 0.8), right = single(0.8, 0.6);
    left.beta = right.beta = 1.0;
    CHECK(weighted_resolvent_sup(right, 0.3, 1.0).value <= weighted_resolvent_sup(left, 0.3, 1.0).value);

    const double v2 = weighted_resolvent_sup(make_poly_stable_spectrum(1.0, 100), 0.25, 1.0).value;
    const double v4 = weighted_resolvent_sup(make_poly_stable_spectrum(1.0, 10000), 0.25, 1.0).value;
    CHECK(std::abs(v4 - v2) / v4 < 0.05);

    // with xi* ~ Re lambda the per-point value is flat in k for large k, so the argmax is not unique
    const SpectrumModel m = make_poly_stable_spectrum(1.0, 300);
    CHECK(weighted_resolvent_sup(m, 0.2, 1.0).value ==
          doctest::Approx(reference::weighted_resolvent_sup(m, 0.2, 1.0).value).epsilon(1e-6));
    const SpectrumModel m2 = make_poly_stable_spectrum(2.0, 300);
    CHECK(weighted_resolvent_sup(m2, 0.2, 2.0).value ==
          doctest::Approx(reference::weighted_resolvent_sup(m2, 0.2, 2.0).value).epsilon(1e-6));
  }

  TEST_CASE("supremum invariants") {
    std::mt19937_64 rng(11);
    SpectrumModel m = random_model(rng, 200);
    const ParamSeq one = ParamSeq::constant(1.0);
    for (double t : {0.1, 1.0, 10.0}) {
      for (const auto& l : m.points) {
        // pointwise factorisation: e^{-t Re l} |l|^{-a} = e^{-t Re l} * |l|^{-a}
        CHECK(semigroup_norm(single(l.re(), l.im()), t, 1.5) ==
              doctest::Approx(semigroup_norm(single(l.re(), l.im()), t, 0.0) *
                              frac_power_norm(single(l.re(), l.im()), 1.5))
                  .epsilon(1e-13));
      }
      CHECK(semigroup_norm(m, t, 1.5) <= semigroup_norm(m, t, 0.0) * frac_power_norm(m, 1.5) * (1 + 1e-14));
      CHECK(inverse_semigroup_norm(m, t, 0.0) <= 1.0);
    }
    // adding a point never lowers a norm; removing the attaining one changes it
    const SpectralSup base = cayley_product_sup(m, one, 9, 1.0, 1.0);
    SpectrumModel more = m;
    more.points.emplace_back(3.0, 40.0);
    CHECK(cayley_product_sup(more, one, 9, 1.0, 1.0).value >= base.value);
    SpectrumModel less = m;
    less.points.erase(less.points.begin() + static_cast<std::ptrdiff_t>(base.index));
    CHECK(cayley_product_sup(less, one, 9, 1.0, 1.0).value < base.value);
    CHECK(base.point == m.points[base.index]);
  }

  TEST_CASE("parallel kernels match the serial reference") {
    std::mt19937_64 rng(3);
    for (int rep = 0; rep < 5; ++rep) {
      const SpectrumModel m = random_model(rng, 5000);
      const ParamSeq one = ParamSeq::constant(1.0);
      same(cayley_product_sup(m, one, 17, 1.0, 1.0), reference::cayley_product_sup(m, one, 17, 1.0, 1.0));
      const std::vector<PowerWeight> ws{{0.6, 1.0}, {0.25, 0.0}};
      same(cayley_product_sup(m, one, 40, ws), reference::cayley_product_sup(m, one, 40, ws));
      same(semigroup_sup(m, 3.0, 0.7), reference::semigroup_sup(m, 3.0, 0.7));
      same(inverse_semigroup_sup(m, 30.0, 1.0), reference::inverse_semigroup_sup(m, 30.0, 1.0));
      same(frac_power_sup(m, 0.5), reference::frac_power_sup(m, 0.5));
    }
  }

  TEST_CASE("variable parameters: pruned search equals the full scan") {
    const SpectrumModel s = make_sqrt_spectrum(1.0, 20000);
    const SpectrumModel p = make_poly_stable_spectrum(1.0, 3000);
    for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
      const ParamSeq w = ParamSeq::seeded_random(seed, 0.5, 2.0);
      for (int n : {1, 16, 300}) {
        for (double alpha : {0.0, 1.0, 2.0}) {
          same(cayley_product_sup(s, w, n, alpha, 1.0), reference::cayley_product_sup(s, w, n, alpha, 1.0));
        }
        same(cayley_product_sup(p, w, n, 1.0, 0.0), reference::cayley_product_sup(p, w, n, 1.0, 0.0));
      }
    }
    const ParamSeq per = ParamSeq::periodic({0.5, 1.0, 2.0});
    same(cayley_product_sup(s, per, 100, 1.0, 1.0), reference::cayley_product_sup(s, per, 100, 1.0, 1.0));
  }

  TEST_CASE("results do not depend on the thread count") {
    const SpectrumModel s = make_sqrt_spectrum(1.0, 50000);
    const SpectrumModel p = make_poly_stable_spectrum(1.0, 50000);
    const ParamSeq w = ParamSeq::seeded_random(9, 0.5, 2.0);
    std::vector<SpectralSup> runs[2];
    int idx = 0;
    for (int threads : {1, 4}) {
      set_thread_count(threads);
      CHECK(thread_count() == threads);
      runs[idx].push_back(cayley_product_sup(s, w, 64, 1.0, 1.0));
      runs[idx].push_back(cayley_product_sup(p, ParamSeq::constant(1.0), 256, 1.0, 0.0));
      runs[idx].push_back(inverse_semigroup_sup(p, 100.0, 0.5));
      runs[idx].push_back(semigroup_sup(p, 100.0, 1.0));
      ++idx;
    }
    set_thread_count(0);
    for (std::size_t i = 0; i < runs[0].size(); ++i) {
      CHECK(runs[0][i].index == runs[1][i].index);
      CHECK(runs[0][i].value == runs[1][i].value);
    }
  }

  TEST_CASE("kernel preconditions") {
    const SpectrumModel s = make_sqrt_spectrum(1.0, 4);
    CHECK_THROWS_AS(cayley_product_sup(s, ParamSeq::constant(1.0), -1, 0.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(cayley_product_sup(s, ParamSeq::constant(1.0), 1, -1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(semigroup_sup(s, -1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(inverse_semigroup_sup(s, 1.0, -0.5), std::invalid_argument);
    CHECK_THROWS_AS(semigroup_sup(SpectrumModel{}, 1.0, 0.0), std::invalid_argument);
  }
}
