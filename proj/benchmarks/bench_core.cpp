#include <benchmark/benchmark.h>

#include "critorbit/critorbit.hpp"

using namespace critorbit;

namespace {

void BM_XcMul(benchmark::State& state) {
  XComplex acc(1.0);
  const XComplex factor(Complex(1.7, -0.3));
  for (auto _ : state) {
    acc = xc_mul(acc, factor);
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_XcMul);

void BM_XcAdd(benchmark::State& state) {
  const XComplex a = XComplex::from_parts(Complex(1.25, 0.5), 40);
  const XComplex b = XComplex::from_parts(Complex(-1.5, 0.75), 12);
  for (auto _ : state) benchmark::DoNotOptimize(xc_add(a, b));
}
BENCHMARK(BM_XcAdd);

void BM_IterateOrbit(benchmark::State& state) {
  const MapSpec m = MapSpec::unicritical(2, Complex(0.0, 1.0));
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(iterate_orbit(m, 0.0, n, 0.0));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_IterateOrbit)->Arg(1000)->Arg(10000);

void BM_Obstruction(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const OrbitRecord orbit = iterate_orbit(MapSpec::unicritical(2, -2.0), 0.0, n, 0.0);
  const VectorFieldSpec v(Polynomial({1.0, 0.5}));
  for (auto _ : state) benchmark::DoNotOptimize(obstruction_sequence(orbit, v, n));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Obstruction)->Arg(1000)->Arg(10000);

void BM_MuFunctional(benchmark::State& state) {
  const OrbitRecord orbit = iterate_orbit(MapSpec::unicritical(2, Complex(0.0, 1.0)), 0.0, 1000, 0.0);
  const VectorFieldSpec v = VectorFieldSpec::monomial(2);
  for (auto _ : state) benchmark::DoNotOptimize(mu_functional(orbit, v, 1e-14));
}
BENCHMARK(BM_MuFunctional);

void BM_PolyRoots(benchmark::State& state) {
  std::vector<Complex> coeffs(static_cast<std::size_t>(state.range(0)) + 1);
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] = Complex(1.0 / (1.0 + i), 0.1 * i);
  const Polynomial p(coeffs);
  for (auto _ : state) benchmark::DoNotOptimize(poly_roots(p));
}
BENCHMARK(BM_PolyRoots)->Arg(8)->Arg(32);

void BM_FindCycles(benchmark::State& state) {
  const MapSpec m = MapSpec::unicritical(2, Complex(-0.12, 0.75));
  const auto seeds = default_cycle_seeds(m, 500);
  for (auto _ : state) benchmark::DoNotOptimize(find_cycles(m, static_cast<int>(state.range(0)), seeds));
}
BENCHMARK(BM_FindCycles)->Arg(3)->Arg(6);

void BM_Scan(benchmark::State& state) {
  ScanConfig cfg;
  cfg.nx = 32;
  cfg.ny = 32;
  cfg.orbit_length = 500;
  cfg.worker_count = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(scan_parameters(cfg));
  state.SetItemsProcessed(state.iterations() * 32 * 32);
}
BENCHMARK(BM_Scan)->Arg(1)->Arg(4)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
