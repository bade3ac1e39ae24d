// Serial reference vs OpenMP for the kernels that carry a `parallel` switch.

#include "lymanfield/field.hpp"
#include "lymanfield/friedrichs.hpp"

#include <benchmark/benchmark.h>

using namespace lymanfield;

namespace {

const DecaySpectrum &synthetic() {
  static const DecaySpectrum s = DecaySpectrum::synthetic(0.05, 0.3);
  return s;
}

void BM_RadialIntegrals(benchmark::State &state) {
  FieldOptions opt;
  opt.parallel = state.range(0) != 0;
  const DimensionlessParams d{0.05, 0.3, 5.0, static_cast<double>(state.range(1))};
  for (auto _ : state)
    benchmark::DoNotOptimize(radial_integrals(d, opt));
}
BENCHMARK(BM_RadialIntegrals)
    ->ArgNames({"parallel", "r_prime"})
    ->ArgsProduct({{0, 1}, {1000, 10000, 100000}})
    ->Unit(benchmark::kMillisecond);

void BM_RadialScan(benchmark::State &state) {
  FieldOptions opt;
  opt.parallel = state.range(0) != 0;
  std::vector<double> r;
  for (int i = 0; i < 9; ++i)
    r.push_back(1e3 * std::pow(10.0, 0.25 * i));
  for (auto _ : state)
    benchmark::DoNotOptimize(
        radial_scan(r, 1.2, 0.0, 5.0, FieldMode::Dimensionless, synthetic(), opt));
}
BENCHMARK(BM_RadialScan)->ArgNames({"parallel"})->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
