#include "hardyafd/numerics/dft.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>

namespace hafd::numerics {

namespace {

// fftw planning is not thread-safe; execution is.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

void fft_inplace(std::vector<cplx>& data, const Grid& grid, int sign) {
    std::vector<int> dims;
    for (const Axis& a : grid.axes()) dims.push_back(static_cast<int>(a.count));
    auto* buf = reinterpret_cast<fftw_complex*>(data.data());
    fftw_plan plan;
    {
        std::lock_guard lock(planner_mutex());
        plan = fftw_plan_dft(static_cast<int>(dims.size()), dims.data(), buf, buf, sign, FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    {
        std::lock_guard lock(planner_mutex());
        fftw_destroy_plan(plan);
    }
}

// Phase e^{sign 2 pi i a t} per axis, indexed by stored frequency position.
std::vector<std::vector<cplx>> phases(const Grid& grid, double sign) {
    std::vector<std::vector<cplx>> out;
    for (const Axis& a : grid.axes()) {
        const double dt = 1.0 / a.extent();
        std::vector<cplx> ph(a.count);
        const auto half = static_cast<std::ptrdiff_t>(a.count / 2);
        for (std::size_t k = 0; k < a.count; ++k) {
            const double t = static_cast<double>(static_cast<std::ptrdiff_t>(k) - half) * dt;
            // reduce a*t modulo 1 before scaling to keep the phase accurate
            double frac = a.start * t;
            frac -= std::round(frac);
            ph[k] = std::polar(1.0, sign * 2.0 * pi * frac);
        }
        out.push_back(std::move(ph));
    }
    return out;
}

// Map between stored (ascending) frequency position and fft bin, per axis.
std::size_t bin_of(std::size_t k, std::size_t n) { return (k + n / 2) % n; }

void check(const Grid& grid, std::size_t n_values) {
    if (grid.dim() == 0) throw DimensionMismatch("empty grid");
    if (!grid.power_of_two()) throw DomainError("transform grid must have power-of-two counts");
    if (n_values != grid.size()) throw DimensionMismatch("sample count does not match grid");
}

} // namespace

double Spectrum::step(std::size_t axis) const { return 1.0 / sample_grid.axis(axis).extent(); }

double Spectrum::frequency(std::size_t axis, std::size_t k) const {
    const auto n = static_cast<std::ptrdiff_t>(sample_grid.axis(axis).count);
    return static_cast<double>(static_cast<std::ptrdiff_t>(k) - n / 2) * step(axis);
}

Spectrum dft_forward(const Grid& grid, std::span<const cplx> samples) {
    check(grid, samples.size());
    std::vector<cplx> work(samples.begin(), samples.end());
    fft_inplace(work, grid, FFTW_FORWARD);

    double scale = 1.0;
    for (const Axis& a : grid.axes()) scale *= a.spacing;
    const auto ph = phases(grid, -1.0);

    Spectrum out{grid, std::vector<cplx>(work.size())};
    if (grid.dim() == 1) {
        const std::size_t n = grid.axis(0).count;
        for (std::size_t k = 0; k < n; ++k) out.values[k] = scale * ph[0][k] * work[bin_of(k, n)];
    } else {
        const std::size_t n0 = grid.axis(0).count;
        const std::size_t n1 = grid.axis(1).count;
        for (std::size_t k0 = 0; k0 < n0; ++k0) {
            const std::size_t b0 = bin_of(k0, n0);
            for (std::size_t k1 = 0; k1 < n1; ++k1) {
                out.values[k0 * n1 + k1] = scale * ph[0][k0] * ph[1][k1] * work[b0 * n1 + bin_of(k1, n1)];
            }
        }
    }
    return out;
}

std::vector<cplx> dft_inverse(const Spectrum& spectrum) {
    const Grid& grid = spectrum.sample_grid;
    check(grid, spectrum.values.size());
    double scale = 1.0;
    for (std::size_t j = 0; j < grid.dim(); ++j) scale *= spectrum.step(j);
    const auto ph = phases(grid, 1.0);

    std::vector<cplx> work(spectrum.values.size());
    if (grid.dim() == 1) {
        const std::size_t n = grid.axis(0).count;
        for (std::size_t k = 0; k < n; ++k) work[bin_of(k, n)] = scale * ph[0][k] * spectrum.values[k];
    } else {
        const std::size_t n0 = grid.axis(0).count;
        const std::size_t n1 = grid.axis(1).count;
        for (std::size_t k0 = 0; k0 < n0; ++k0) {
            const std::size_t b0 = bin_of(k0, n0);
            for (std::size_t k1 = 0; k1 < n1; ++k1) {
                work[b0 * n1 + bin_of(k1, n1)] = scale * ph[0][k0] * ph[1][k1] * spectrum.values[k0 * n1 + k1];
            }
        }
    }
    fft_inplace(work, grid, FFTW_BACKWARD);
    return work;
}

} // namespace hafd::numerics
