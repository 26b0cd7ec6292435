#include <benchmark/benchmark.h>

#include "periwave/elliptic.hpp"
#include "periwave/evolution.hpp"
#include "periwave/families.hpp"
#include "periwave/functionals.hpp"
#include "periwave/spectral.hpp"

using namespace periwave;

static void BM_jacobi(benchmark::State& state) {
    double x = 0.0;
    for (auto _ : state) {
        x += 1e-3;
        benchmark::DoNotOptimize(ell::jacobi(x, 0.8));
    }
}
BENCHMARK(BM_jacobi);

static void BM_construct(benchmark::State& state) {
    FamilyId f = FamilyId::parse("mkdv_dnsn");
    const int N = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(construct(f, 0.5, 30.0, N));
}
BENCHMARK(BM_construct)->Arg(256)->Arg(1024);

static void BM_residual(benchmark::State& state) {
    WaveProfile p = construct(FamilyId::parse("mkdv_dnsn"), 0.5, 30.0, 512);
    for (auto _ : state) benchmark::DoNotOptimize(residual(p));
}
BENCHMARK(BM_residual);

static void BM_galerkin_spectrum(benchmark::State& state) {
    FamilyId f = FamilyId::parse("mkdv_dnoidal");
    WaveProfile p = construct(f, 0.5, 6.2832, 256);
    const int N_t = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(eigs(assemble(p, f.symbol(), N_t), 8));
}
BENCHMARK(BM_galerkin_spectrum)->Arg(64)->Arg(128);

static void BM_theta(benchmark::State& state) {
    WaveProfile p = construct(FamilyId::parse("mkdv_dnsn"), 0.5, 30.0, 256);
    for (auto _ : state) benchmark::DoNotOptimize(floquet_theta(p));
}
BENCHMARK(BM_theta);

static void BM_evolve_period(benchmark::State& state) {
    FamilyId f = FamilyId::parse("mkdv_dnoidal");
    WaveProfile p = construct(f, 0.5, 6.2832, 256);
    EvolutionConfig cfg;
    cfg.dt = 1e-3;
    cfg.T = p.L / p.c;
    for (auto _ : state)
        benchmark::DoNotOptimize(integrate(p.samples, f, p.L, cfg));
}
BENCHMARK(BM_evolve_period)->Unit(benchmark::kMillisecond);

static void BM_rho(benchmark::State& state) {
    WaveProfile p = construct(FamilyId::parse("mkdv_dnoidal"), 0.5, 6.2832, 256);
    auto v = translate(p.samples, 0.37, p.L);
    for (auto _ : state) benchmark::DoNotOptimize(rho(p.samples, v, 1.0, p.L));
}
BENCHMARK(BM_rho);

BENCHMARK_MAIN();
