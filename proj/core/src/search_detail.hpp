#pragma once

#include "hardyafd/afd/search.hpp"

#include <functional>
#include <thread>

namespace hafd::afd::detail {

struct Refined {
    kernels::TubePoint z;
    double value;
};

/// Nelder-Mead over (x_j, log y_j) maximizing f, started at `start`.
Refined refine_simplex(const kernels::TubePoint& start, const std::function<double(const kernels::TubePoint&)>& f,
                       const SearchConfig& cfg);

kernels::TubePoint lattice_point(const std::vector<std::vector<cplx>>& axes, std::size_t flat);
std::size_t lattice_size(const std::vector<std::vector<cplx>>& axes);

/// Indices of the k largest values, ties broken by lower index.
std::vector<std::size_t> top_indices(const std::vector<double>& v, std::size_t k);

template <class Fn>
void parallel_for(std::size_t n, unsigned workers, Fn fn) {
    if (workers <= 1 || n < 2 * workers) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    const std::size_t chunk = (n + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        const std::size_t lo = w * chunk;
        const std::size_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &fn] {
            for (std::size_t i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

} // namespace hafd::afd::detail
