#include "hardyafd/afd/afd.hpp"

#include "hardyafd/kernels/kernels.hpp"

#include <cmath>
#include <random>

namespace hafd::afd {

using kernels::DictElement;
using kernels::MultiIndex;
using kernels::TubePoint;

RateReport rate_harness(std::size_t dim, std::size_t atom_count, std::span<const double> magnitudes,
                        std::size_t max_terms, const SearchConfig& cfg, std::uint64_t seed, const RateOptions& opt) {
    if (atom_count == 0) throw DomainError("rate harness needs at least one atom");
    if (magnitudes.size() != atom_count) throw DimensionMismatch("one magnitude per atom expected");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ux(-opt.x_extent, opt.x_extent);
    std::uniform_real_distribution<double> uy(std::log(opt.y_lo), std::log(opt.y_hi));
    std::uniform_real_distribution<double> phase(0.0, 2.0 * pi);

    RateReport rep;
    std::vector<std::pair<DictElement, cplx>> terms;
    std::size_t tries = 0;
    while (rep.atoms.size() < atom_count) {
        if (++tries > 100000) throw DomainError("cannot place atoms with the requested separation");
        std::vector<cplx> z(dim);
        for (auto& c : z) c = {ux(rng), std::exp(uy(rng))};
        const TubePoint p(std::move(z));
        bool ok = true;
        for (const auto& q : rep.atoms) ok = ok && kernels::distance(p, q) >= opt.min_separation;
        if (!ok) continue;
        rep.atoms.push_back(p);
    }
    for (std::size_t j = 0; j < atom_count; ++j) {
        const cplx c = opt.scale * std::polar(magnitudes[j], phase(rng));
        rep.coeffs.push_back(c);
        rep.m_total += std::abs(c);
        const auto alpha = MultiIndex::zero(dim);
        terms.emplace_back(DictElement(alpha, rep.atoms[j]), c / kernels::phi_norm(alpha, rep.atoms[j].ys()));
    }
    const KernelSumTarget f(std::move(terms));
    const RunResult run = afd_run(f, max_terms, 0.0, cfg);

    double last = std::sqrt(f.norm_squared());
    double last_exact = last;
    for (std::size_t m = 1; m <= max_terms; ++m) {
        if (m <= run.steps.size()) {
            last = run.steps[m - 1].residual;
            last_exact = run.steps[m - 1].residual_exact;
        }
        const double bound = rep.m_total / std::sqrt(static_cast<double>(m));
        const bool ok = last <= bound && last_exact <= bound;
        rep.rows.push_back({m, last, last_exact, bound, ok});
        if (!ok) ++rep.violations;
    }
    return rep;
}

} // namespace hafd::afd
