#pragma once

#include "hardyafd/afd/approximant.hpp"
#include "hardyafd/afd/ortho_system.hpp"
#include "hardyafd/afd/search.hpp"
#include "hardyafd/afd/target.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hafd::afd {

struct StepRecord {
    std::size_t m = 0;
    double residual = 0.0;       ///< from ||g_{m}||^2 = ||g_{m-1}||^2 - |c_m|^2
    double residual_exact = 0.0; ///< ||F - F*_m|| from closed-form Gram sums
    /// (||F||^2 - sum |c_k|^2 - ||g_m||^2) / ||F||^2 with the exact residual
    double energy_error = 0.0;
    double objective = 0.0;
};

struct RunResult {
    Approximant model;
    OrthoSystem system{1};
    std::vector<cplx> coeffs;
    std::vector<StepRecord> steps;
    std::string stop_reason;
};

/// ||F - sum_l d_l phi_l||^2 = ||F||^2 - 2 Re sum conj(d_l) <F, phi_l> + sum d_i conj(d_j) <phi_i, phi_j>.
double residual_squared(const Target& f, const std::vector<kernels::DictElement>& elements, const Eigen::VectorXcd& d);

/// Pre-orthogonal greedy loop: stops after max_terms, when the residual is at
/// most stop_tol, or when the residual is numerically zero.
RunResult afd_run(const Target& f, std::size_t max_terms, double stop_tol, const SearchConfig& cfg);

struct Interpolation {
    Approximant model;             ///< Gram-Schmidt form
    Eigen::VectorXcd gram_weights; ///< d solving G^T d = <F, phi> by a pivoted factorization
    std::vector<kernels::DictElement> elements;
    double condition = 0.0;
};

/// Orthogonal projection onto span{phi at the points}; repeated points are escalated.
/// Throws IllConditioned naming the closest pair when cond(G) > max_condition.
Interpolation project_interpolate(const Target& f, std::span<const kernels::TubePoint> points,
                                  double merge_eps = 0.0, double max_condition = 1e12);

/// Evaluates sum_l d_l phi_l(w) in first-octant coordinates.
cplx combination_value(const std::vector<kernels::DictElement>& elements, const Eigen::VectorXcd& d,
                       std::span<const cplx> w);

/// Matching pursuit over normalized psi_{alpha,z}, |alpha| <= cfg.order_cap.
RunResult mp_run(const Target& f, std::size_t max_terms, const SearchConfig& cfg);

/// |<F, phi_{0,z}>| / ||phi_{0,z}||.
double normalized_correlation(const Target& f, const kernels::TubePoint& z);

struct RateRow {
    std::size_t m;
    double residual;
    double residual_exact;
    double bound;
    bool ok;
};

struct RateReport {
    double m_total = 0.0; ///< M = sum |c_j|
    std::vector<kernels::TubePoint> atoms;
    std::vector<cplx> coeffs;
    std::vector<RateRow> rows;
    std::size_t violations = 0;
};

struct RateOptions {
    double x_extent = 4.0;
    double y_lo = 0.5;
    double y_hi = 2.0;
    double min_separation = 0.5;
    /// multiplies every synthesized coefficient
    double scale = 1.0;
};

/// F = sum_j c_j phi_{w_j}/||phi_{w_j}|| with random well-separated w_j and
/// |c_j| = magnitudes[j], random phases; reports residual_m against M / sqrt(m).
RateReport rate_harness(std::size_t dim, std::size_t atom_count, std::span<const double> magnitudes,
                        std::size_t max_terms, const SearchConfig& cfg, std::uint64_t seed,
                        const RateOptions& opt = {});

} // namespace hafd::afd
