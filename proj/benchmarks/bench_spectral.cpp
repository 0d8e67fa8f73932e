#include <benchmark/benchmark.h>

#include <cmath>

#include "toepblock/matrix.hpp"
#include "toepblock/spectral.hpp"

using namespace toepblock;

namespace {

InputSpec bench_spec() {
    InputSpec spec;
    spec.dist = Distribution::Gaussian;
    spec.seed = 31337;
    return spec;
}

void BM_BuildBlockMatrix(benchmark::State& state) {
    const int s = static_cast<int>(state.range(0));
    const InputSpec spec = bench_spec();
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_block_matrix(Model::TBT, s, s, spec).data().data());
    }
}
BENCHMARK(BM_BuildBlockMatrix)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_Eigenvalues(benchmark::State& state) {
    const int s = static_cast<int>(state.range(0));
    const SymmetricMatrix m = build_block_matrix(Model::TBT, s, s, bench_spec());
    for (auto _ : state) {
        benchmark::DoNotOptimize(eigenvalues_symmetric(m).eigenvalues.back());
    }
}
BENCHMARK(BM_Eigenvalues)->Arg(8)->Arg(16)->Arg(24)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_TraceMoment(benchmark::State& state) {
    const int s = static_cast<int>(state.range(0));
    const SymmetricMatrix m = build_block_matrix(Model::TBI, s, s, bench_spec());
    const double scale = std::sqrt(static_cast<double>(s) * s);
    for (auto _ : state) {
        benchmark::DoNotOptimize(trace_moment(m, 8, scale));
    }
}
BENCHMARK(BM_TraceMoment)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
