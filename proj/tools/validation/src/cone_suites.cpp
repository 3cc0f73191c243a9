#include "suites.hpp"

#include "hardyafd/cones/cones.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

namespace hafd::validation::detail {

using cones::Cone2D;
using cones::PolygonalCone;

namespace {

std::vector<double> point_in(const PolygonalCone& cone, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    std::uniform_real_distribution<double> v(0.2, 2.0);
    for (;;) {
        std::vector<double> y(cone.dim());
        for (auto& c : y) c = cone.dim() == 1 ? v(rng) : u(rng);
        if (cone.dim() == 2) y[1] = v(rng);
        if (cone.contains(y)) return y;
    }
}

} // namespace

Report cones_suite(const Options& opt) {
    Report rep{"cones", {}, {}};
    std::mt19937_64 rng(opt.seed + 10);
    std::uniform_real_distribution<double> log_kappa(std::log(0.3), std::log(3.0));
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    double involution_mismatch = 0.0;
    for (int c = 0; c < 20; ++c) {
        const Cone2D cone(std::exp(log_kappa(rng)));
        const double y2 = 0.5 + 1.5 * unit(rng);
        const double y1 = (2.0 * unit(rng) - 1.0) * 0.9 * cone.kappa() * y2;
        const double y[2] = {y1, y2};
        const double closed = cone_szego_diag(cone, y);
        const double quad = cone_szego_diag_quadrature(cone, y);
        const double poly = cone_szego_diag(PolygonalCone::from_kappa(cone.kappa()), y);
        const std::string tag = "kernel_case" + std::to_string(c);
        add_row(rep, tag + "_closed_vs_quadrature", std::abs(closed - quad) / closed, 1e-5);
        add_row(rep, tag + "_simplicial_piece", std::abs(closed - poly) / closed, 1e-12);
        if (!(dual_cone(dual_cone(cone)) == cone)) involution_mismatch += 1.0;
    }
    add_row(rep, "dual_involution_mismatches", involution_mismatch, 0.0);

    const std::vector<PolygonalCone> family{
        PolygonalCone::first_octant(1),
        PolygonalCone::first_octant(2),
        PolygonalCone::from_kappa(0.7),
        PolygonalCone::from_kappa(2.0),
        PolygonalCone::from_dual_rays({Eigen::Vector2d(1.0, -0.3), Eigen::Vector2d(0.6, 0.8), Eigen::Vector2d(-0.3, 1.0)}),
    };
    std::size_t printed_fail = 0;
    std::size_t corrected_fail = 0;
    double worst_corrected = 0.0;
    for (int c = 0; c < 20; ++c) {
        const PolygonalCone& cone = family[static_cast<std::size_t>(c) % family.size()];
        const auto y = point_in(cone, rng);
        std::vector<cplx> z;
        for (double yj : y) z.emplace_back(2.0 * unit(rng) - 1.0, yj);
        const double p = c % 4 == 3 ? std::numeric_limits<double>::infinity() : 1.2 + 2.8 * unit(rng);
        numerics::QuadratureSpec spec;
        spec.rel_tol = 1e-6;
        const auto b = cones::poisson_lp_bound_check(cone, z, p, spec);
        std::ostringstream tag;
        tag << "poisson_case" << c << "_n" << cone.dim() << "_p" << (std::isinf(p) ? std::string("inf") : std::to_string(p));
        rep.rows.push_back({rep.suite, tag.str(), b.lhs / b.rhs, 1.0, b.ok});
        if (!b.ok) ++printed_fail;
        if (!b.ok_corrected) ++corrected_fail;
        worst_corrected = std::max(worst_corrected, b.lhs / b.rhs_corrected);
    }
    std::ostringstream note;
    note << "Poisson bound with constant 2^{-n/p} K^{1-1/p}: " << printed_fail << "/20 cases violated; "
         << "with (4^n K)^{1-1/p}: " << corrected_fail << "/20 violated, worst lhs/rhs " << worst_corrected;
    rep.note = note.str();
    return rep;
}

} // namespace hafd::validation::detail
