#include <benchmark/benchmark.h>

#include "toepblock/counting.hpp"
#include "toepblock/theory.hpp"

using namespace toepblock;

namespace {

void BM_CountCrossingT2(benchmark::State& state) {
    const Word w{"abab"};
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(count_pi_star(LinkKind::SymToeplitz, n, w).count);
    }
}
BENCHMARK(BM_CountCrossingT2)->Arg(40)->Arg(80)->Arg(160)->Arg(320);

void BM_CountCrossingT3(benchmark::State& state) {
    const Word w{"abcabc"};
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(count_pi_star(LinkKind::SymToeplitz, n, w).count);
    }
}
BENCHMARK(BM_CountCrossingT3)->Arg(40)->Arg(80)->Arg(160);

void BM_CountWignerT3(benchmark::State& state) {
    const Word w{"abcabc"};
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(count_pi_star(LinkKind::Wigner, n, w).count);
    }
}
BENCHMARK(BM_CountWignerT3)->Arg(40)->Arg(80)->Arg(160);

void BM_CountComposite(benchmark::State& state) {
    const Word w{"abab"};
    const int s = static_cast<int>(state.range(0));
    const Link link = make_link(LinkKind::CompositeTBI, s, s);
    for (auto _ : state) {
        benchmark::DoNotOptimize(count_pi_star(link, w).count);
    }
}
BENCHMARK(BM_CountComposite)->Arg(4)->Arg(8)->Arg(16);

void BM_SignedClass(benchmark::State& state) {
    const Word w{"abab"};
    const SignVector l0{{-1, -1}};
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(count_pi_star_signed(LinkKind::SymToeplitz, n, w, l0).count);
    }
}
BENCHMARK(BM_SignedClass)->Arg(40)->Arg(80)->Arg(160);

void BM_PFit(benchmark::State& state) {
    const Word w{"abab"};
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            estimate_p(LinkKind::SymToeplitz, w, {20, 40, 80, 160}).p_hat);
    }
}
BENCHMARK(BM_PFit);

void BM_TheoryTbtFixedK(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            theoretical_moments(Model::TBT, Regime::FixedK, 3, k).beta2t.back());
    }
}
BENCHMARK(BM_TheoryTbtFixedK)->Arg(4)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
