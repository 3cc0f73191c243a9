#include "hardyafd/afd/afd.hpp"

#include "hardyafd/afd/errors.hpp"
#include "hardyafd/afd/escalation.hpp"
#include "hardyafd/kernels/kernels.hpp"
#include "search_detail.hpp"

#include <cmath>
#include <string>

namespace hafd::afd {

using kernels::DictElement;
using kernels::MultiIndex;
using kernels::TubePoint;

namespace {

struct MpState {
    const Target& target;
    std::vector<DictElement> elements;
    std::vector<double> norms;  ///< ||phi_l||
    std::vector<cplx> coeffs;   ///< a_l on psi_l = phi_l / ||phi_l||

    /// <R F, phi_e> = <F, phi_e> - sum_l a_l <psi_l, phi_e>
    cplx residual_inner(const DictElement& e, cplx f_phi) const {
        cplx s = f_phi;
        for (std::size_t l = 0; l < elements.size(); ++l) s -= coeffs[l] * kernels::ip_phi_phi(elements[l], e) / norms[l];
        return s;
    }
    double objective(const DictElement& e, cplx f_phi) const {
        return std::abs(residual_inner(e, f_phi)) / kernels::phi_norm(e.alpha, e.z.ys());
    }
    double objective(const DictElement& e) const { return objective(e, target.inner_phi(e.alpha, e.z)); }
};

std::vector<MultiIndex> indices_up_to(std::size_t n, int cap) {
    std::vector<MultiIndex> out;
    for (int h = 0; h <= cap; ++h) {
        const std::size_t count = binomial(static_cast<std::size_t>(h) + n - 1, n - 1);
        for (std::size_t r = 0; r < count; ++r) out.push_back(graded_lex(n, h, r));
    }
    return out;
}

} // namespace

RunResult mp_run(const Target& f, std::size_t max_terms, const SearchConfig& cfg) {
    cfg.validate();
    if (cfg.dim() != f.dim()) throw DimensionMismatch("search lattice and target differ in dimension");
    const std::size_t n = f.dim();
    const auto axes = cfg.lattice();
    const std::size_t total = detail::lattice_size(axes);
    const auto alphas = indices_up_to(n, cfg.order_cap);
    const unsigned workers = cfg.worker_count();

    MpState st{f, {}, {}, {}};
    RunResult out;
    out.system = OrthoSystem(n, cfg.degeneracy);
    const double norm2 = f.norm_squared();
    double r2 = norm2;
    double captured = 0.0;
    std::vector<double> history{std::sqrt(norm2)};
    out.stop_reason = "max_terms";

    for (std::size_t m = 1; m <= max_terms; ++m) {
        // scan every order on the lattice; values[a * total + i]
        std::vector<double> values(alphas.size() * total, 0.0);
        for (std::size_t a = 0; a < alphas.size(); ++a) {
            const auto f_phi = f.inner_phi_lattice(alphas[a], axes);
            detail::parallel_for(total, workers, [&](std::size_t i) {
                values[a * total + i] = st.objective(DictElement(alphas[a], detail::lattice_point(axes, i)), f_phi[i]);
            });
        }
        const auto top = detail::top_indices(values, std::max<std::size_t>(1, cfg.refine_starts));
        const double lattice_best = values[top.front()];
        if (lattice_best < cfg.zero_threshold * std::max(1.0, std::sqrt(norm2))) {
            out.stop_reason = "residual_zero";
            break;
        }
        DictElement best(alphas[top.front() / total], detail::lattice_point(axes, top.front() % total));
        double best_value = lattice_best;
        for (std::size_t idx : top) {
            const MultiIndex& alpha = alphas[idx / total];
            const std::function<double(const TubePoint&)> obj = [&](const TubePoint& z) {
                return st.objective(DictElement(alpha, z));
            };
            const auto refined = detail::refine_simplex(detail::lattice_point(axes, idx % total), obj, cfg);
            if (refined.value > best_value) {
                const DictElement e(alpha, refined.z);
                const double v = st.objective(e);
                if (v > best_value) {
                    best = e;
                    best_value = v;
                }
            }
        }
        const double nrm = kernels::phi_norm(best.alpha, best.z.ys());
        const cplx a = st.residual_inner(best, f.inner_phi(best.alpha, best.z)) / nrm;
        st.elements.push_back(best);
        st.norms.push_back(nrm);
        st.coeffs.push_back(a);
        captured += std::norm(a);
        r2 = std::max(0.0, r2 - std::norm(a));

        Eigen::VectorXcd d(static_cast<Eigen::Index>(st.coeffs.size()));
        for (std::size_t l = 0; l < st.coeffs.size(); ++l) d[static_cast<Eigen::Index>(l)] = st.coeffs[l] / st.norms[l];
        const double exact2 = residual_squared(f, st.elements, d);
        StepRecord rec;
        rec.m = m;
        rec.residual = std::sqrt(r2);
        rec.residual_exact = std::sqrt(std::max(exact2, 0.0));
        rec.energy_error = norm2 > 0.0 ? (norm2 - captured - exact2) / norm2 : 0.0;
        rec.objective = best_value;
        out.steps.push_back(rec);
        history.push_back(rec.residual);
    }

    const auto k = static_cast<Eigen::Index>(st.elements.size());
    Eigen::MatrixXcd bm = Eigen::MatrixXcd::Zero(k, k);
    for (Eigen::Index l = 0; l < k; ++l) bm(l, l) = 1.0 / st.norms[static_cast<std::size_t>(l)];
    out.coeffs = st.coeffs;
    out.model = make_approximant(f.sigma(), st.elements, bm, st.coeffs, history);
    return out;
}

} // namespace hafd::afd
