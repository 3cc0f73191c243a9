#include "hardyafd/afd/afd.hpp"
#include "hardyafd/signal/hardy.hpp"

#include <benchmark/benchmark.h>

using namespace hafd;
using namespace hafd::afd;

namespace {

KernelSumTarget kernels_target() {
    using kernels::DictElement;
    using kernels::MultiIndex;
    using kernels::TubePoint;
    return KernelSumTarget({{DictElement(MultiIndex({0}), TubePoint({I})), cplx{1.0}},
                            {DictElement(MultiIndex({0}), TubePoint({cplx{1.0, 2.0}})), cplx{0.5}},
                            {DictElement(MultiIndex({0}), TubePoint({cplx{-2.0, 1.0}})), cplx{0.25}}});
}

SpectralTarget spectral_target() {
    const std::size_t n[] = {1024};
    const double half[] = {16.0};
    signal::BoundarySamples s{numerics::Grid::centered(n, half), {}};
    for (std::size_t k = 0; k < 1024; ++k) {
        const double x = s.grid.axis(0).at(k);
        s.values.push_back(cplx{2.0 / (1.0 + x * x) + std::exp(-(x - 3.0) * (x - 3.0))});
    }
    return SpectralTarget(signal::hardy_project(s, signal::OctantSignature::first(1)));
}

} // namespace

static void BM_LatticeScanSelect(benchmark::State& state) {
    const auto f = spectral_target();
    const auto cfg = SearchConfig::box(1, -6.0, 6.0, 0.05, 10.0, static_cast<std::size_t>(state.range(0)), 32);
    OrthoSystem sys(1);
    const Residual r{f, sys, {}};
    for (auto _ : state) benchmark::DoNotOptimize(msp_select(r, cfg));
}
BENCHMARK(BM_LatticeScanSelect)->Arg(32)->Arg(128)->Unit(benchmark::kMillisecond);

static void BM_AfdRun(benchmark::State& state) {
    const auto f = kernels_target();
    const auto cfg = SearchConfig::box(1, -6.0, 6.0, 0.05, 10.0, 64, 32);
    const auto terms = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(afd_run(f, terms, 0.0, cfg));
}
BENCHMARK(BM_AfdRun)->Arg(1)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_Preorthogonalize(benchmark::State& state) {
    OrthoSystem sys(1);
    for (int k = 0; k < state.range(0); ++k) {
        sys.accept(sys.preorthogonalize(
            kernels::DictElement(kernels::MultiIndex({0}), kernels::TubePoint({cplx{4.0 * k, 1.0 + 0.1 * k}}))));
    }
    const kernels::DictElement e(kernels::MultiIndex({0}), kernels::TubePoint({cplx{-1.0, 0.4}}));
    for (auto _ : state) benchmark::DoNotOptimize(sys.preorthogonalize(e));
}
BENCHMARK(BM_Preorthogonalize)->Arg(4)->Arg(16);
