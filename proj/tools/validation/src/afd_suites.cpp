#include "suites.hpp"

#include "hardyafd/afd/afd.hpp"
#include "hardyafd/afd/escalation.hpp"
#include "hardyafd/kernels/kernels.hpp"
#include "hardyafd/numerics/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace hafd::validation::detail {

using afd::KernelSumTarget;
using afd::SearchConfig;
using kernels::DictElement;
using kernels::MultiIndex;
using kernels::TubePoint;

namespace {

KernelSumTarget random_kernel_sum(std::mt19937_64& rng, std::size_t n, std::size_t atoms) {
    std::normal_distribution<double> g;
    std::vector<std::pair<DictElement, cplx>> terms;
    for (std::size_t k = 0; k < atoms; ++k) {
        const TubePoint b = random_point(rng, n, 3.0, 0.4, 2.0);
        const auto alpha = MultiIndex::zero(n);
        terms.emplace_back(DictElement(alpha, b), cplx{g(rng), g(rng)} / kernels::phi_norm(alpha, b.ys()));
    }
    return KernelSumTarget(std::move(terms));
}

SearchConfig search_box(std::size_t n) {
    return n == 1 ? SearchConfig::box(1, -6.0, 6.0, 0.05, 10.0, 64, 32) : SearchConfig::box(2, -5.0, 5.0, 0.1, 8.0, 20, 12);
}

std::vector<TubePoint> separated_points(std::mt19937_64& rng, std::size_t n, std::size_t count, double sep) {
    std::vector<TubePoint> pts;
    while (pts.size() < count) {
        TubePoint p = random_point(rng, n, 3.0, 0.3, 2.0);
        const bool far = std::all_of(pts.begin(), pts.end(), [&](const TubePoint& q) { return kernels::distance(p, q) >= sep; });
        if (far) pts.push_back(std::move(p));
    }
    return pts;
}

/// Classical Gram-Schmidt in coefficient space from a Gram matrix G(i, j) = <phi_i, phi_j>.
Eigen::MatrixXcd gram_schmidt(const Eigen::MatrixXcd& g) {
    const Eigen::Index m = g.rows();
    Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(m, m);
    for (Eigen::Index k = 0; k < m; ++k) {
        Eigen::VectorXcd v = Eigen::VectorXcd::Zero(m);
        v[k] = 1.0;
        for (Eigen::Index j = 0; j < k; ++j) {
            cplx proj{};
            for (Eigen::Index l = 0; l < m; ++l) proj += std::conj(c(l, j)) * g(k, l);
            v -= proj * c.col(j);
        }
        const double nrm2 = (v.transpose() * g * v.conjugate())(0, 0).real();
        c.col(k) = v / std::sqrt(nrm2);
    }
    return c;
}

} // namespace

Report interp_suite(const Options& opt) {
    Report rep{"interp", {}, {}};
    std::mt19937_64 rng(opt.seed + 3);
    for (int c = 0; c < 5; ++c) {
        const std::size_t n = c % 2 == 0 ? 1 : 2;
        const auto f = random_kernel_sum(rng, n, 4);
        const std::size_t count = 3 + static_cast<std::size_t>(rng() % 6);
        const auto nodes = separated_points(rng, n, count, 0.4);
        const auto ip = afd::project_interpolate(f, nodes);
        double scale = 0.0;
        for (const auto& z : nodes) scale = std::max(scale, std::abs(f.value(z)));
        double err_weights = 0.0;
        double err_model = 0.0;
        for (const auto& z : nodes) {
            const cplx want = f.value(z);
            err_weights = std::max(err_weights, std::abs(afd::combination_value(ip.elements, ip.gram_weights, z.coords()) - want));
            err_model = std::max(err_model, std::abs(ip.model.evaluate(z.coords()) - want));
        }
        const std::string tag = "n" + std::to_string(n) + "_nodes" + std::to_string(count) + "_set" + std::to_string(c);
        add_row(rep, tag + "_gram_weights", err_weights / scale, 1e-8);
        add_row(rep, tag + "_orthonormal_model", err_model / scale, 1e-8);
    }
    return rep;
}

Report energy_suite(const Options& opt) {
    Report rep{"energy", {}, {}};
    std::mt19937_64 rng(opt.seed + 4);
    for (int c = 0; c < 5; ++c) {
        const std::size_t n = c % 2 == 0 ? 1 : 2;
        const auto f = random_kernel_sum(rng, n, 5);
        const auto run = afd::afd_run(f, 10, 0.0, search_box(n));
        for (const auto& s : run.steps) {
            add_row(rep, "n" + std::to_string(n) + "_f" + std::to_string(c) + "_m" + std::to_string(s.m),
                    std::abs(s.energy_error), 1e-8);
        }
    }
    return rep;
}

Report single_suite(const Options& opt) {
    Report rep{"single", {}, {}};
    std::mt19937_64 rng(opt.seed + 5);
    for (int c = 0; c < 3; ++c) {
        const std::size_t n = c == 1 ? 2 : 1;
        const TubePoint b = random_point(rng, n, 3.0, 0.3, 3.0);
        const auto f = KernelSumTarget::normalized_kernel(b);
        const auto run = afd::afd_run(f, 1, 0.0, search_box(n));
        const std::string tag = "n" + std::to_string(n) + "_case" + std::to_string(c);
        if (run.steps.empty()) {
            add_row(rep, tag + "_selected", 1.0, 0.0);
            continue;
        }
        add_row(rep, tag + "_residual", run.steps.front().residual_exact, 1e-4);
        add_row(rep, tag + "_distance", kernels::distance(run.system.elements().front().z, b), 1e-3);
    }
    return rep;
}

Report rate_suite(const Options& opt) {
    Report rep{"rate", {}, {}};
    std::uniform_real_distribution<double> mag(0.2, 1.0);
    for (std::uint64_t s = 0; s < 10; ++s) {
        const std::uint64_t seed = opt.seed + s;
        std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
        std::vector<double> mags(10);
        for (auto& m : mags) m = mag(rng);
        const auto r = afd::rate_harness(1, 10, mags, 20, search_box(1), seed);
        double worst = 0.0;
        for (const auto& row : r.rows) worst = std::max(worst, std::max(row.residual, row.residual_exact) / row.bound);
        add_row(rep, "seed" + std::to_string(seed) + "_max_residual_over_bound", worst, 1.0);
        add_row(rep, "seed" + std::to_string(seed) + "_violations", static_cast<double>(r.violations), 0.0);
    }
    return rep;
}

Report escalation_suite(const Options&) {
    Report rep{"escalation", {}, {}};
    const TubePoint z({cplx{0.3, 0.7}});
    afd::OrthoSystem sys(1);
    double alpha_mismatch = 0.0;
    for (int k = 0; k < 4; ++k) {
        const auto pts = sys.points();
        const auto esc = afd::escalate_order(pts, z, 1e-9, 8);
        if (esc.alpha[0] != k) alpha_mismatch += 1.0;
        sys.accept(sys.preorthogonalize(DictElement(esc.alpha, esc.point)));
    }
    add_row(rep, "n1_orders_0123", alpha_mismatch, 0.0);

    // Gram oracle by quadrature
    Eigen::MatrixXcd g(4, 4);
    numerics::QuadratureSpec spec;
    spec.rel_tol = 1e-13;
    spec.abs_tol = 1e-300;
    spec.tail_radius = z.y(0);
    spec.max_depth = 30;
    const auto domain = numerics::Domain::line(numerics::Interval::real_line({z.x(0) - z.y(0), z.x(0), z.x(0) + z.y(0)}));
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            const DictElement ei(MultiIndex({i}), z);
            const DictElement ej(MultiIndex({j}), z);
            g(i, j) = numerics::integrate_nd(
                [&](std::span<const double> x) {
                    const cplx w[1] = {{x[0], 0.0}};
                    return kernels::phi_eval(ei, w) * std::conj(kernels::phi_eval(ej, w));
                },
                domain, spec);
        }
    }
    const Eigen::MatrixXcd oracle = gram_schmidt(g);
    const double scale = oracle.cwiseAbs().maxCoeff();
    add_row(rep, "n1_gram_schmidt_vs_oracle", (sys.coeffs() - oracle).cwiseAbs().maxCoeff() / scale, 1e-8);
    add_row(rep, "n1_orthonormality", sys.orthonormality_error(), 1e-8);

    const int want[4] = {0, 1, 1, 2};
    double threshold_mismatch = 0.0;
    for (std::size_t l = 1; l <= 4; ++l) {
        if (afd::order_for_occurrence(2, l) != want[l - 1]) threshold_mismatch += 1.0;
    }
    add_row(rep, "n2_thresholds_l1234", threshold_mismatch, 0.0);

    const TubePoint z2({cplx{0.1, 0.5}, cplx{-0.4, 1.2}});
    const std::vector<std::vector<int>> order{{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}};
    afd::OrthoSystem sys2(2);
    double seq_mismatch = 0.0;
    for (const auto& a : order) {
        const auto pts = sys2.points();
        const auto esc = afd::escalate_order(pts, z2, 1e-9, 8);
        if (esc.alpha.values() != a) seq_mismatch += 1.0;
        sys2.accept(sys2.preorthogonalize(DictElement(esc.alpha, esc.point)));
    }
    add_row(rep, "n2_graded_sequence", seq_mismatch, 0.0);
    add_row(rep, "n2_orthonormality", sys2.orthonormality_error(), 1e-8);
    return rep;
}

Report mp_suite(const Options& opt) {
    Report rep{"mp", {}, {}};
    std::mt19937_64 rng(opt.seed + 11);
    double worst_alpha0 = 0.0;
    for (int c = 0; c < 3; ++c) {
        const auto f = random_kernel_sum(rng, 1, 5);
        SearchConfig cfg = search_box(1);
        cfg.order_cap = 3;
        const auto mp = afd::mp_run(f, 10, cfg);
        const auto af = afd::afd_run(f, 10, 0.0, cfg);
        const std::string tag = "input" + std::to_string(c);
        double energy = 0.0;
        for (const auto& s : mp.steps) energy = std::max(energy, std::abs(s.energy_error));
        add_row(rep, tag + "_mp_energy_identity", energy, 1e-8);
        const std::size_t steps = std::min(mp.steps.size(), af.steps.size());
        for (std::size_t m = 0; m < steps; ++m) {
            const double ratio = af.steps[m].residual_exact / mp.steps[m].residual_exact;
            add_row(rep, tag + "_afd_over_mp_m" + std::to_string(m + 1), ratio, 1.0 + 1e-9);
        }
        // same comparison with MP restricted to undifferentiated kernels
        cfg.order_cap = 0;
        const auto mp0 = afd::mp_run(f, 10, cfg);
        for (std::size_t m = 0; m < std::min(mp0.steps.size(), af.steps.size()); ++m) {
            worst_alpha0 = std::max(worst_alpha0, af.steps[m].residual_exact / mp0.steps[m].residual_exact);
        }
    }
    rep.note = "worst AFD/MP residual ratio when MP only uses order-0 kernels: " + std::to_string(worst_alpha0);
    return rep;
}

} // namespace hafd::validation::detail
