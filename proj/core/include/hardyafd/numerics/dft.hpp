#pragma once

#include "hardyafd/common.hpp"
#include "hardyafd/numerics/grid.hpp"

#include <span>
#include <vector>

namespace hafd::numerics {

/// Samples of the continuous Fourier transform
///
///     f(t) = \int g(x) e^{-2 pi i x.t} dx
///
/// on the dual grid t_m = m / (N h), m = -N/2 .. N/2-1 per axis, stored in
/// ascending frequency order, row-major like the sample grid.
struct Spectrum {
    Grid sample_grid;
    std::vector<cplx> values;

    double step(std::size_t axis) const;
    /// Frequency of stored index k on `axis` (k = 0 is -N/2).
    double frequency(std::size_t axis, std::size_t k) const;
};

/// f_m = prod(h_j) * sum_k g(x_k) e^{-2 pi i x_k.t_m}. Requires a power-of-two grid.
Spectrum dft_forward(const Grid& grid, std::span<const cplx> samples);

/// g(x_k) = prod(dt_j) * sum_m f_m e^{2 pi i x_k.t_m}; exact inverse of dft_forward.
std::vector<cplx> dft_inverse(const Spectrum& spectrum);

} // namespace hafd::numerics
