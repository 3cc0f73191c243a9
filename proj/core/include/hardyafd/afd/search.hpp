#pragma once

#include "hardyafd/afd/ortho_system.hpp"
#include "hardyafd/afd/target.hpp"
#include "hardyafd/numerics/grid.hpp"

#include <vector>

namespace hafd::afd {

struct AxisRange {
    double lo;
    double hi;
    std::size_t count;
};

struct SearchConfig {
    std::vector<AxisRange> x; ///< per axis, uniform
    std::vector<AxisRange> y; ///< per axis, log-spaced, first-octant coordinates
    int refine_iterations = 200;
    double refine_tol = 1e-6;
    std::size_t refine_starts = 3;
    double degeneracy = 1e-10;
    int order_cap = 8;
    /// Points closer than this count as the same point; 0 means 1e-6 x lattice spacing.
    double merge_radius = 0.0;
    double zero_threshold = 1e-14;
    /// 0: hardware concurrency, further capped by AFD_THREADS.
    unsigned threads = 0;

    /// 32 x-points over the grid extent and 16 log-spaced y in [spacing, extent] per axis.
    static SearchConfig for_grid(const numerics::Grid& grid, std::size_t nx = 32, std::size_t ny = 16);
    static SearchConfig box(std::size_t dim, double x_lo, double x_hi, double y_lo, double y_hi, std::size_t nx = 32,
                            std::size_t ny = 16);

    std::size_t dim() const { return x.size(); }
    void validate() const;
    double merge_eps() const;
    /// Per-axis lattice points x + iy, x-major.
    std::vector<std::vector<cplx>> lattice() const;
    unsigned worker_count() const;
};

/// Current residual g_m = F - sum_k c_k B_k.
struct Residual {
    const Target& target;
    const OrthoSystem& system;
    std::vector<cplx> coeffs; ///< c_k = <F, B_k>
};

/// |<g_m, B_candidate>| for phi_e; 0 when e is degenerate against the system.
double correlation_objective(const Residual& r, const kernels::DictElement& e);
/// Same with <F, phi_e> already known.
double correlation_objective(const Residual& r, const kernels::DictElement& e, cplx f_phi);

/// Objective at z with alpha chosen by escalation against the selected points.
double correlation_objective_at(const Residual& r, const kernels::TubePoint& z, const SearchConfig& cfg);

struct Selection {
    kernels::DictElement element;
    double objective = 0.0;
    double lattice_best = 0.0;
};

/// Lattice scan plus simplex refinement. Throws ResidualZero when every lattice
/// value is below zero_threshold * max(1, ||F||).
Selection msp_select(const Residual& r, const SearchConfig& cfg);

} // namespace hafd::afd
