#include <benchmark/benchmark.h>

#include <cmath>
#include <map>

#include "azimuth/bounds.hpp"
#include "azimuth/family.hpp"
#include "azimuth/moments.hpp"
#include "azimuth/quadrature.hpp"

namespace {

azimuth::AngularState wide_angular() {
  return azimuth::AngularState({{-6, {0.2, 0.1}},
                                {-2, {-0.4, 0.3}},
                                {0, {0.5, 0.0}},
                                {1, {0.1, -0.6}},
                                {3, {0.3, 0.2}},
                                {6, {-0.1, 0.25}}});
}

azimuth::LandauState wide_landau() {
  return azimuth::LandauState({{0, {0.3, 0.1}},
                               {1, {-0.2, 0.4}},
                               {3, {0.5, 0.0}},
                               {4, {0.0, -0.3}},
                               {6, {0.25, 0.2}}});
}

void BM_ClosedFormMomentsAngular(benchmark::State& state) {
  const azimuth::AngularState psi = wide_angular();
  for (auto _ : state) {
    benchmark::DoNotOptimize(azimuth::moments(psi));
  }
}
BENCHMARK(BM_ClosedFormMomentsAngular);

void BM_ClosedFormMomentsLandau(benchmark::State& state) {
  const azimuth::LandauState psi = wide_landau();
  for (auto _ : state) {
    benchmark::DoNotOptimize(azimuth::moments(psi));
  }
}
BENCHMARK(BM_ClosedFormMomentsLandau);

void BM_OracleMomentsAngular(benchmark::State& state) {
  const azimuth::AngularState psi = wide_angular();
  azimuth::QuadratureSpec spec;
  spec.check_convergence = state.range(0) != 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(azimuth::oracle_moments(psi, spec));
  }
}
BENCHMARK(BM_OracleMomentsAngular)->Arg(0)->Arg(1);

void BM_OracleMomentsLandau(benchmark::State& state) {
  const azimuth::LandauState psi = wide_landau();
  azimuth::QuadratureSpec spec;
  spec.check_convergence = state.range(0) != 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(azimuth::oracle_moments(psi, spec));
  }
}
BENCHMARK(BM_OracleMomentsLandau)->Arg(0)->Arg(1);

void BM_Report(benchmark::State& state) {
  const azimuth::AngularState psi = wide_angular();
  for (auto _ : state) {
    benchmark::DoNotOptimize(azimuth::report(psi));
  }
}
BENCHMARK(BM_Report);

void BM_Sweep(benchmark::State& state) {
  const int n_points = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(azimuth::sweep(-1.0, 1.0, n_points));
  }
  state.SetItemsProcessed(state.iterations() * n_points);
}
BENCHMARK(BM_Sweep)->Arg(401)->Arg(10000);

void BM_FindCrossings(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        azimuth::find_crossings(azimuth::SweepQuantity::product, 0.5, 10000));
  }
}
BENCHMARK(BM_FindCrossings);

}  // namespace

BENCHMARK_MAIN();
