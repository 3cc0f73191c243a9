#include "suites.hpp"

#include "hardyafd/afd/afd.hpp"
#include "hardyafd/signal/hardy.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

namespace hafd::validation::detail {

using signal::BoundarySamples;

namespace {

double relative_l2(std::span<const cplx> got, std::span<const cplx> want) {
    double num = 0.0;
    double den = 0.0;
    for (std::size_t k = 0; k < got.size(); ++k) {
        num += std::norm(got[k] - want[k]);
        den += std::norm(want[k]);
    }
    return std::sqrt(num / den);
}

BoundarySamples random_bumps(std::mt19937_64& rng, const numerics::Grid& grid, int bumps) {
    std::uniform_real_distribution<double> centre(-2.0, 2.0);
    std::uniform_real_distribution<double> width(0.4, 1.2);
    std::normal_distribution<double> amp;
    struct Bump {
        std::vector<double> c;
        double w;
        cplx a;
    };
    std::vector<Bump> bs;
    for (int b = 0; b < bumps; ++b) {
        Bump u{{}, width(rng), {amp(rng), amp(rng)}};
        for (std::size_t j = 0; j < grid.dim(); ++j) u.c.push_back(centre(rng));
        bs.push_back(std::move(u));
    }
    BoundarySamples s{grid, std::vector<cplx>(grid.size()), false};
    for (std::size_t k = 0; k < grid.size(); ++k) {
        const auto x = grid.point(k);
        for (const auto& u : bs) {
            double r2 = 0.0;
            for (std::size_t j = 0; j < x.size(); ++j) r2 += (x[j] - u.c[j]) * (x[j] - u.c[j]);
            s.values[k] += u.a * std::exp(-r2 / (2.0 * u.w * u.w));
        }
    }
    return s;
}

} // namespace

Report hardy_suite(const Options& opt) {
    Report rep{"hardy", {}, {}};
    std::mt19937_64 rng(opt.seed + 8);

    const std::size_t c1[1] = {512};
    const double l1[1] = {16.0};
    const auto s1 = random_bumps(rng, numerics::Grid::centered(c1, l1), 4);
    const auto r1 = signal::reconstruct(signal::hardy_split(s1));
    add_row(rep, "n1_roundtrip", relative_l2(r1.values, s1.values), 1e-8);

    const std::size_t c2[2] = {128, 128};
    const double l2[2] = {8.0, 8.0};
    const auto s2 = random_bumps(rng, numerics::Grid::centered(c2, l2), 3);
    const auto r2 = signal::reconstruct(signal::hardy_split(s2));
    add_row(rep, "n2_roundtrip", relative_l2(r2.values, s2.values), 1e-8);

    const std::size_t cw[1] = {4096};
    const double lw[1] = {64.0};
    const auto grid = numerics::Grid::centered(cw, lw);
    BoundarySamples lorentz{grid, std::vector<cplx>(grid.size()), true};
    std::vector<cplx> want(grid.size());
    for (std::size_t k = 0; k < grid.size(); ++k) {
        const double x = grid.point(k)[0];
        lorentz.values[k] = 2.0 / (1.0 + x * x);
        want[k] = I / (x + I);
    }
    const auto plus = signal::boundary_values(signal::hardy_project(lorentz, signal::OctantSignature::parse("+")));
    double central = 0.0;
    double full = 0.0;
    for (std::size_t k = 0; k < grid.size(); ++k) {
        const double e = std::abs(plus.values[k] - want[k]);
        full = std::max(full, e);
        if (std::abs(grid.point(k)[0]) <= lw[0] / 2.0) central = std::max(central, e);
    }
    add_row(rep, "witness_max_abs_central_half", central, 1e-4);
    // the Lorentzian tails cut off at the window edge dominate the error near the edges
    std::ostringstream note;
    note << "witness over the full window: max abs error " << full << ", relative L2 error "
         << relative_l2(plus.values, want);
    rep.note = note.str();
    return rep;
}

Report bvc_suite(const Options&) {
    Report rep{"bvc", {}, {}};
    // F(z) = int_0^T sin^2(pi t / T) e^{2 pi i z t} dt
    const double period = 0.25;
    const std::size_t nodes = std::size_t{1} << 20;
    const signal::FreqAxis axis{0.0, period / static_cast<double>(nodes), nodes + 1};
    const auto rep_f = signal::SpectralRep::from_density(signal::OctantSignature::first(1), {axis},
                                                         [&](std::span<const double> t) {
                                                             const double s = std::sin(pi * t[0] / period);
                                                             return cplx{s * s, 0.0};
                                                         });
    const afd::SpectralTarget f(rep_f);
    struct Path {
        const char* name;
        kernels::TubePoint (*at)(double);
    };
    const Path paths[3] = {
        {"y_to_zero", [](double s) { return kernels::TubePoint({cplx{0.0, 1.0 / s}}); }},
        {"y_to_infinity", [](double s) { return kernels::TubePoint({cplx{0.0, s}}); }},
        {"x_to_infinity", [](double s) { return kernels::TubePoint({cplx{s, 1.0}}); }},
    };
    for (const auto& p : paths) {
        const double start = afd::normalized_correlation(f, p.at(1.0));
        const double end = afd::normalized_correlation(f, p.at(std::ldexp(1.0, 12)));
        add_row(rep, std::string(p.name) + "_end_over_start", end / start, 0.05);
    }
    return rep;
}

} // namespace hafd::validation::detail
