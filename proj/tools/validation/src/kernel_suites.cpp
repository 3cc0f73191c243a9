#include "suites.hpp"

#include "hardyafd/kernels/kernels.hpp"
#include "hardyafd/numerics/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace hafd::validation::detail {

using kernels::DictElement;
using kernels::MultiIndex;
using kernels::TubePoint;

namespace {

numerics::QuadratureSpec tight_spec(double scale, std::size_t n) {
    numerics::QuadratureSpec s;
    s.rel_tol = n == 1 ? 1e-11 : 1e-9;
    s.abs_tol = 1e-300;
    s.tail_radius = scale;
    s.max_depth = 24;
    return s;
}

/// R^n with break points around the given centres.
numerics::Domain real_space(std::size_t n, const std::vector<const TubePoint*>& centres) {
    std::vector<numerics::Interval> axes;
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<double> br;
        for (const TubePoint* p : centres) {
            br.push_back(p->x(j) - p->y(j));
            br.push_back(p->x(j));
            br.push_back(p->x(j) + p->y(j));
        }
        std::sort(br.begin(), br.end());
        axes.push_back(numerics::Interval::real_line(br));
    }
    return n == 1 ? numerics::Domain::line(axes[0]) : numerics::Domain::product(axes[0], axes[1]);
}

double max_y(const std::vector<const TubePoint*>& pts) {
    double m = 0.0;
    for (const TubePoint* p : pts) {
        for (std::size_t j = 0; j < p->dim(); ++j) m = std::max(m, p->y(j));
    }
    return m;
}

MultiIndex random_alpha(std::mt19937_64& rng, std::size_t n, int max_order) {
    std::uniform_int_distribution<int> order(0, max_order);
    const int h = order(rng);
    if (n == 1) return MultiIndex({h});
    std::uniform_int_distribution<int> split(0, h);
    const int a = split(rng);
    return MultiIndex({a, h - a});
}

std::vector<cplx> real_point(std::span<const double> x) {
    std::vector<cplx> w(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) w[j] = {x[j], 0.0};
    return w;
}

} // namespace

Report norms_suite(const Options& opt) {
    Report rep{"norms", {}, {}};
    std::mt19937_64 rng(opt.seed + 1);
    for (int c = 0; c < 50; ++c) {
        const std::size_t n = c % 2 == 0 ? 1 : 2;
        const DictElement e(random_alpha(rng, n, 4), random_point(rng, n, 2.0, 0.3, 3.0));
        const std::vector<const TubePoint*> centres{&e.z};
        const double quad = numerics::integrate_nd(
                                [&](std::span<const double> x) {
                                    return cplx{std::norm(kernels::phi_eval(e, real_point(x))), 0.0};
                                },
                                real_space(n, centres), tight_spec(max_y(centres), n))
                                .real();
        const auto ys = e.z.ys();
        const double closed = kernels::phi_norm_squared(e.alpha, ys);
        const double printed = kernels::phi_norm_squared_uncorrected(e.alpha, ys);
        const double want_ratio = std::pow(2.0 * pi, -static_cast<double>(n));
        const std::string tag = "n" + std::to_string(n) + "_case" + std::to_string(c);
        add_row(rep, tag + "_closed_vs_quadrature", std::abs(closed - quad) / quad, 1e-6);
        add_row(rep, tag + "_printed_ratio", std::abs(quad / printed - want_ratio) / want_ratio, 1e-6);
    }
    return rep;
}

Report ip_suite(const Options& opt) {
    Report rep{"ip", {}, {}};
    std::mt19937_64 rng(opt.seed + 2);
    for (int c = 0; c < 50; ++c) {
        const std::size_t n = c % 2 == 0 ? 1 : 2;
        const DictElement e1(random_alpha(rng, n, 3), random_point(rng, n, 1.5, 0.4, 2.5));
        const DictElement e2(random_alpha(rng, n, 3), random_point(rng, n, 1.5, 0.4, 2.5));
        const std::vector<const TubePoint*> centres{&e1.z, &e2.z};
        const cplx quad = numerics::integrate_nd(
            [&](std::span<const double> x) {
                const auto w = real_point(x);
                return kernels::phi_eval(e1, w) * std::conj(kernels::phi_eval(e2, w));
            },
            real_space(n, centres), tight_spec(max_y(centres), n));
        const cplx closed = kernels::ip_phi_phi(e1, e2);
        add_row(rep, "n" + std::to_string(n) + "_case" + std::to_string(c), relative_error(closed, quad), 1e-6);
    }
    return rep;
}

} // namespace hafd::validation::detail
