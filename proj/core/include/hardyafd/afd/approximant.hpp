#pragma once

#include "hardyafd/kernels/tube_point.hpp"
#include "hardyafd/numerics/grid.hpp"
#include "hardyafd/signal/octant.hpp"

#include <Eigen/Dense>

#include <string>
#include <string_view>
#include <vector>

namespace hafd::afd {

/// One selected element in native octant coordinates: Im(z_j) has the sign of sigma_j.
struct Atom {
    kernels::MultiIndex alpha;
    std::vector<cplx> z;
    cplx coeff; ///< <F, B_k>
};

/// F* = sum_k coeff_k B_k with B_k = sum_l bmatrix(l, k) phi^sigma_l, where
/// phi^sigma_{alpha,b}(w) = (-1)^{m_sigma} (-1/(2 pi i))^n prod alpha_j! / (w_j - conj(b_j))^(alpha_j+1)
/// is the dictionary element of the sigma-octant tube.
struct Approximant {
    std::size_t dim = 1;
    signal::OctantSignature sigma = signal::OctantSignature::first(1);
    std::vector<Atom> atoms;
    Eigen::MatrixXcd bmatrix;
    std::vector<double> residual_history; ///< entry 0 is ||F||

    /// d = bmatrix * coeffs: weights of the atoms themselves.
    Eigen::VectorXcd weights() const;
    /// F*(w) for w in the closed sigma-octant tube.
    cplx evaluate(std::span<const cplx> w) const;
    /// F* on the real grid points (boundary values), row-major.
    std::vector<cplx> evaluate_grid(const numerics::Grid& grid) const;

    std::string to_json() const;
    /// A missing "bmatrix" means the identity (coefficients on the atoms directly).
    static Approximant from_json(std::string_view text);
};

/// phi^sigma_{alpha,b}(w).
cplx native_phi(const signal::OctantSignature& sigma, const kernels::MultiIndex& alpha, std::span<const cplx> b,
                std::span<const cplx> w);

/// Converts a first-octant result (after reflection by sigma) to native atoms.
Approximant make_approximant(const signal::OctantSignature& sigma, const std::vector<kernels::DictElement>& elements,
                             const Eigen::MatrixXcd& bmatrix, const std::vector<cplx>& coeffs,
                             std::vector<double> residual_history);

/// The model of the mirrored octant for real input: atoms conj(z), coefficients
/// and bmatrix conjugated, so model + mirror = 2 Re(model) on the real grid.
Approximant conjugate_model(const Approximant& model);

} // namespace hafd::afd
