#include <cmath>
#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "cmc/catalog.hpp"
#include "cmc/geometry.hpp"
#include "cmc/linalg.hpp"
#include "cmc/quadrature.hpp"

namespace {

cmc::ModelSpec model_for(int64_t index) {
  switch (index) {
    case 0: return cmc::Unduloid{1.0, 0.5};
    case 1: return cmc::EuclideanProduct{4, 2, 1.0};
    default: return cmc::SphereProduct{6, 0.7};
  }
}

void BM_ShapeData(benchmark::State& state) {
  const cmc::ImmersionChart chart = cmc::build_chart(model_for(state.range(0)));
  const auto u = cmc::sample_grid(chart, 3).front();
  for (auto _ : state) benchmark::DoNotOptimize(cmc::shape_data_at(chart, u));
}
BENCHMARK(BM_ShapeData)->Arg(0)->Arg(1)->Arg(2);

void BM_SimonsResidual(benchmark::State& state) {
  const cmc::ImmersionChart chart = cmc::build_chart(model_for(state.range(0)));
  const auto u = cmc::sample_grid(chart, 3).front();
  for (auto _ : state) benchmark::DoNotOptimize(cmc::simons_residual(chart, u, 1e-3));
}
BENCHMARK(BM_SimonsResidual)->Arg(0)->Arg(1)->Arg(2)->Unit(benchmark::kMicrosecond);

void BM_Jacobi(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937 rng(1);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  cmc::SymMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m(i, j) = d(rng);
  for (auto _ : state) benchmark::DoNotOptimize(cmc::jacobi_eigen(m));
}
BENCHMARK(BM_Jacobi)->RangeMultiplier(2)->Range(2, 16);

void BM_UnduloidProfile(benchmark::State& state) {
  const double tol = std::pow(10.0, -static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cmc::unduloid_profile(1.0, 0.9, 2.5, tol));
}
BENCHMARK(BM_UnduloidProfile)->DenseRange(6, 12, 3)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
