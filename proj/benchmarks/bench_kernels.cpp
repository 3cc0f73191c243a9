#include "hardyafd/kernels/kernels.hpp"

#include <benchmark/benchmark.h>

using namespace hafd;
using namespace hafd::kernels;

static void BM_PhiEval(benchmark::State& state) {
    const int a = static_cast<int>(state.range(0));
    const DictElement e(MultiIndex({a, a}), TubePoint({cplx{0.2, 0.7}, cplx{-0.4, 1.3}}));
    const cplx w[] = {cplx{0.5, 0.1}, cplx{0.0, 0.2}};
    for (auto _ : state) benchmark::DoNotOptimize(phi_eval(e, w));
}
BENCHMARK(BM_PhiEval)->Arg(0)->Arg(3);

static void BM_IpPhiPhi(benchmark::State& state) {
    const int a = static_cast<int>(state.range(0));
    const DictElement e1(MultiIndex({a, 0}), TubePoint({cplx{0.2, 0.7}, cplx{-0.4, 1.3}}));
    const DictElement e2(MultiIndex({0, a}), TubePoint({cplx{1.0, 0.3}, cplx{0.6, 0.9}}));
    for (auto _ : state) benchmark::DoNotOptimize(ip_phi_phi(e1, e2));
}
BENCHMARK(BM_IpPhiPhi)->Arg(0)->Arg(4);

static void BM_NormalizedCorrelation(benchmark::State& state) {
    const TubePoint w({cplx{0.1, 0.5}});
    const DictElement e(MultiIndex({2}), TubePoint({cplx{-0.3, 0.8}}));
    for (auto _ : state) benchmark::DoNotOptimize(ip_kernel_phi_normalized(w, e));
}
BENCHMARK(BM_NormalizedCorrelation);
