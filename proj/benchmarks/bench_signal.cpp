#include "hardyafd/numerics/dft.hpp"
#include "hardyafd/signal/hardy.hpp"

#include <benchmark/benchmark.h>

#include <cmath>

using namespace hafd;

namespace {

signal::BoundarySamples lorentzian(std::size_t n, std::size_t dim) {
    std::vector<std::size_t> counts(dim, n);
    std::vector<double> half(dim, 16.0);
    signal::BoundarySamples s{numerics::Grid::centered(counts, half), {}};
    for (std::size_t k = 0; k < s.grid.size(); ++k) {
        cplx v{1.0};
        for (double x : s.grid.point(k)) v *= 2.0 / (1.0 + x * x);
        s.values.push_back(v);
    }
    return s;
}

} // namespace

static void BM_DftForward(benchmark::State& state) {
    const auto s = lorentzian(static_cast<std::size_t>(state.range(0)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(numerics::dft_forward(s.grid, s.values));
}
BENCHMARK(BM_DftForward)->Arg(1024)->Arg(65536);

static void BM_HardySplit(benchmark::State& state) {
    const auto s = lorentzian(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1)));
    for (auto _ : state) benchmark::DoNotOptimize(signal::hardy_split(s));
}
BENCHMARK(BM_HardySplit)->Args({4096, 1})->Args({128, 2})->Unit(benchmark::kMillisecond);

static void BM_EvalF(benchmark::State& state) {
    const auto rep = signal::hardy_project(lorentzian(4096, 1), signal::OctantSignature::first(1));
    const cplx z[] = {cplx{0.3, 0.5}};
    for (auto _ : state) benchmark::DoNotOptimize(signal::eval_F(rep, z));
}
BENCHMARK(BM_EvalF);
