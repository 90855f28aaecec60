#include <benchmark/benchmark.h>

#include "decaylab/param_seq.hpp"
#include "decaylab/spectral.hpp"
#include "decaylab/spectrum.hpp"

using namespace decaylab;

namespace {

const SpectrumModel& poly_model() {
  static const SpectrumModel m = make_poly_stable_spectrum(1.0, 1000000);
  return m;
}

const SpectrumModel& sqrt_model() {
  static const SpectrumModel m = make_sqrt_spectrum(1.0, 1000000);
  return m;
}

void BM_CayleyConstant_Parallel(benchmark::State& st) {
  const auto n = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(cayley_product_sup(poly_model(), ParamSeq::constant(1.0), n, 1.0, 0.0));
}
void BM_CayleyConstant_Serial(benchmark::State& st) {
  const auto n = static_cast<int>(st.range(0));
  for (auto _ : st) {
    benchmark::DoNotOptimize(reference::cayley_product_sup(poly_model(), ParamSeq::constant(1.0), n, 1.0, 0.0));
  }
}

// the serial reference is O(K n); keep its model small
void BM_CayleyVariable_Parallel(benchmark::State& st) {
  const auto n = static_cast<int>(st.range(0));
  const SpectrumModel m = make_sqrt_spectrum(1.0, 20000);
  const ParamSeq w = ParamSeq::seeded_random(1, 0.5, 2.0);
  for (auto _ : st) benchmark::DoNotOptimize(cayley_product_sup(m, w, n, 1.0, 0.0));
}
void BM_CayleyVariable_Serial(benchmark::State& st) {
  const auto n = static_cast<int>(st.range(0));
  const SpectrumModel m = make_sqrt_spectrum(1.0, 20000);
  const ParamSeq w = ParamSeq::seeded_random(1, 0.5, 2.0);
  for (auto _ : st) benchmark::DoNotOptimize(reference::cayley_product_sup(m, w, n, 1.0, 0.0));
}

void BM_InverseSemigroup_Parallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(inverse_semigroup_sup(poly_model(), 100.0, 1.0));
}
void BM_InverseSemigroup_Serial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(reference::inverse_semigroup_sup(poly_model(), 100.0, 1.0));
}

void BM_Semigroup_Parallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(semigroup_sup(sqrt_model(), 10.0, 1.0));
}
void BM_Semigroup_Serial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(reference::semigroup_sup(sqrt_model(), 10.0, 1.0));
}

}  // namespace

BENCHMARK(BM_CayleyConstant_Parallel)->Arg(16)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CayleyConstant_Serial)->Arg(16)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CayleyVariable_Parallel)->Arg(256)->Arg(4096)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CayleyVariable_Serial)->Arg(256)->Arg(4096)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_InverseSemigroup_Parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_InverseSemigroup_Serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Semigroup_Parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Semigroup_Serial)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
