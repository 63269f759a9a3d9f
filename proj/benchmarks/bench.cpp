#include <benchmark/benchmark.h>

#include <cmath>
#include <limits>

#include "sqlem/curves.hpp"
#include "sqlem/lemniscate_functions.hpp"
#include "sqlem/numerics.hpp"
#include "sqlem/relations.hpp"

namespace {

void BM_integrate_smooth(benchmark::State& state) {
  for (auto _ : state) {
    const auto r = sqlem::integrate([](double x) { return std::sin(x); },
                                    {0.0, 3.141592653589793});
    benchmark::DoNotOptimize(r.value);
  }
}
BENCHMARK(BM_integrate_smooth);

void BM_integrate_singular(benchmark::State& state) {
  for (auto _ : state) {
    const auto r = sqlem::integrate(
        [](double s, double sc) {
          const double one_minus_s = sc < 0.0 ? -sc : 1.0 - s;
          return 1.0 / std::sqrt(one_minus_s * (1.0 + s) * (1.0 + s * s));
        },
        {0.0, 1.0});
    benchmark::DoNotOptimize(r.value);
  }
}
BENCHMARK(BM_integrate_singular);

void BM_integrate_improper(benchmark::State& state) {
  for (auto _ : state) {
    const auto r = sqlem::integrate(
        [](double t) { return 1.0 / std::sqrt(1.0 + t * t * t * t); },
        {0.0, std::numeric_limits<double>::infinity()});
    benchmark::DoNotOptimize(r.value);
  }
}
BENCHMARK(BM_integrate_improper);

void BM_sl(benchmark::State& state) {
  double u = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sqlem::sl(u));
    u += 1e-3;
    if (u > 1.3) u = 0.1;
  }
}
BENCHMARK(BM_sl);

void BM_slh(benchmark::State& state) {
  double t = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sqlem::slh(t));
    t += 1e-3;
    if (t > 1.8) t = 0.1;
  }
}
BENCHMARK(BM_slh);

void BM_theorem1_residual(benchmark::State& state) {
  double alpha = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sqlem::theorem1_residual(alpha));
    alpha += 1e-3;
    if (alpha > 0.7) alpha = 0.1;
  }
}
BENCHMARK(BM_theorem1_residual);

}  // namespace

BENCHMARK_MAIN();
