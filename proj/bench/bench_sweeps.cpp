#include <benchmark/benchmark.h>

#include "zorbit/sweep.hpp"

using namespace zorbit;

namespace {

const ModelContext& ctx_d62() {
    static const ModelContext ctx(ModelSpec::make(Family::D, 6, 2));
    return ctx;
}

const ModelContext& ctx_a52() {
    static const ModelContext ctx(ModelSpec::make(Family::A, 5, 2));
    return ctx;
}

void BM_DimFormula(benchmark::State& st, Exec ex) {
    for (auto _ : st) benchmark::DoNotOptimize(dim_formula_sweep(ctx_d62(), ex));
}

void BM_Resolve(benchmark::State& st, Exec ex) {
    ReportConfig cfg;
    cfg.samples = 5;
    for (auto _ : st) benchmark::DoNotOptimize(resolve_sweep(ctx_a52(), cfg, ex));
}

void BM_LieConstancy(benchmark::State& st, Exec ex) {
    auto s = ModelSpec::make(Family::D, 6, 2);
    for (auto _ : st) benchmark::DoNotOptimize(lie_constancy_sweep(s, {3, 5, 7, 11}, 4, 1, ex));
}

}  // namespace

BENCHMARK_CAPTURE(BM_DimFormula, serial, Exec::serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_DimFormula, parallel, Exec::parallel)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Resolve, serial, Exec::serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Resolve, parallel, Exec::parallel)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_LieConstancy, serial, Exec::serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_LieConstancy, parallel, Exec::parallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
