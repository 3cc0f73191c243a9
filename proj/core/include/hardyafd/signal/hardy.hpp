#pragma once

#include "hardyafd/kernels/tube_point.hpp"
#include "hardyafd/numerics/grid.hpp"
#include "hardyafd/signal/spectral_rep.hpp"

#include <span>
#include <vector>

namespace hafd::signal {

struct BoundarySamples {
    numerics::Grid grid;
    std::vector<cplx> values;
    bool declared_real = false;

    /// Throws on size mismatch, non-finite values, or a declared-real signal with imaginary parts.
    void validate() const;
};

struct ProjectOptions {
    /// Zero-padding factor per axis (power of two). 0 picks the largest
    /// factor <= 16 keeping the padded transform at most 2^22 points.
    std::size_t pad_factor = 0;
};

std::size_t default_pad_factor(const numerics::Grid& grid);

/// Restricts the spectrum of `s` to the closed octant of `sigma`. Frequencies on
/// a coordinate hyperplane (t_j = 0, and the Nyquist bin) get weight 1/2 per side.
SpectralRep hardy_project(const BoundarySamples& s, const OctantSignature& sigma, const ProjectOptions& opt = {});

/// All 2^n components from a single transform, ordered as OctantSignature::all.
std::vector<SpectralRep> hardy_split(const BoundarySamples& s, const ProjectOptions& opt = {});

/// Sum of the components' boundary values on the original sample window.
BoundarySamples reconstruct(std::span<const SpectralRep> components);

/// Boundary values of one projected component on its sample window.
BoundarySamples boundary_values(const SpectralRep& r);

/// F(z) for z strictly inside T_{Gamma_sigma}.
cplx eval_F(const SpectralRep& r, std::span<const cplx> z);

/// d^alpha_x F(z) = int (2 pi i t)^alpha e^{2 pi i z.t} f(t) dt.
cplx eval_dF(const SpectralRep& r, const kernels::MultiIndex& alpha, std::span<const cplx> z);

/// d^alpha_x F on the tensor lattice axis_points[0] x axis_points[1],
/// flattened row-major.
std::vector<cplx> eval_dF_lattice(const SpectralRep& r, const kernels::MultiIndex& alpha,
                                  const std::vector<std::vector<cplx>>& axis_points);

double norm_F(const SpectralRep& r);

} // namespace hafd::signal
