#include <benchmark/benchmark.h>

#include <numbers>

#include "deficitlab/catalog.hpp"
#include "deficitlab/deficit.hpp"
#include "deficitlab/random.hpp"

using namespace deficitlab;

static void BM_HermitianEigensystem4x4(benchmark::State& state) {
    Rng rng(1);
    const ComplexMatrix m = randomHermitian(4, rng);
    for (auto _ : state) benchmark::DoNotOptimize(hermitianEigensystem(m));
}
BENCHMARK(BM_HermitianEigensystem4x4);

static void BM_HermitianEigensystem9x9(benchmark::State& state) {
    Rng rng(2);
    const ComplexMatrix m = randomHermitian(9, rng);
    for (auto _ : state) benchmark::DoNotOptimize(hermitianEigensystem(m));
}
BENCHMARK(BM_HermitianEigensystem9x9);

static void BM_LuedersDephase(benchmark::State& state) {
    const DensityOperator rho = catalogState("rhoMix", 0.5);
    const RankOnePOVM m = basisToPOVM({std::numbers::pi / 3.0, 0.7});
    for (auto _ : state) benchmark::DoNotOptimize(luedersDephase(rho, m));
}
BENCHMARK(BM_LuedersDephase);

static void BM_OneWayDeficitProjective(benchmark::State& state) {
    const DensityOperator rho = catalogState("rhoMix", 0.5);
    DeficitSettings s;
    s.nTheta = static_cast<std::size_t>(state.range(0));
    s.nPhi = 2 * s.nTheta;
    for (auto _ : state) benchmark::DoNotOptimize(oneWayDeficitProjective(rho, s));
}
BENCHMARK(BM_OneWayDeficitProjective)->Arg(16)->Arg(64)->Arg(128);

static void BM_EntanglementReport(benchmark::State& state) {
    Rng rng(3);
    const DensityOperator rho = randomDensity(2, 2, rng);
    for (auto _ : state) benchmark::DoNotOptimize(entanglementReport(rho));
}
BENCHMARK(BM_EntanglementReport);

BENCHMARK_MAIN();
