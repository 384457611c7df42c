#include <benchmark/benchmark.h>

#include "cactus/crystals.hpp"
#include "cactus/qexact.hpp"
#include "cactus/uqsl2.hpp"

namespace {

void BM_QuantumIntQuotient(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const cactus::QRational q = cactus::QRational::q();
    for (auto _ : state) {
        cactus::QRational num = cactus::QRational::q_power(n) - cactus::QRational::q_power(-n);
        benchmark::DoNotOptimize(num / (q - q.inverse()));
    }
}
BENCHMARK(BM_QuantumIntQuotient)->Arg(4)->Arg(16)->Arg(64);

void BM_BraidingMatrix(benchmark::State& state) {
    const auto m = cactus::irreducible(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(cactus::braiding_matrix(m, m));
}
BENCHMARK(BM_BraidingMatrix)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_Unitarize(benchmark::State& state) {
    const auto m = cactus::irreducible(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(cactus::unitarize(m, m));
}
BENCHMARK(BM_Unitarize)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_VerifyKt07(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(cactus::verify_kt07(n, n));
}
BENCHMARK(BM_VerifyKt07)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_Decompose(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(cactus::decompose({n, n, n}));
}
BENCHMARK(BM_Decompose)->RangeMultiplier(2)->Range(1, 8);

void BM_CheckCoboundary(benchmark::State& state) {
    const auto triples = cactus::chain_triples(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(cactus::check_coboundary(triples));
}
BENCHMARK(BM_CheckCoboundary)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_CactusAction(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(cactus::check_cactus_action(4, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_CactusAction)->DenseRange(1, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
