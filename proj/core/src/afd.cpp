#include "hardyafd/afd/afd.hpp"

#include "hardyafd/afd/errors.hpp"
#include "hardyafd/afd/escalation.hpp"
#include "hardyafd/kernels/kernels.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <sstream>

namespace hafd::afd {

using kernels::DictElement;
using kernels::MultiIndex;
using kernels::TubePoint;

namespace {

double residual_squared(double norm2, const Eigen::VectorXcd& f_phi, const Eigen::MatrixXcd& gram,
                        const Eigen::VectorXcd& d) {
    if (d.size() == 0) return norm2;
    const double cross = (d.conjugate().cwiseProduct(f_phi)).sum().real();
    const double quad = (d.transpose() * gram * d.conjugate())(0, 0).real();
    return norm2 - 2.0 * cross + quad;
}

Eigen::VectorXcd to_eigen(const std::vector<cplx>& v) {
    Eigen::VectorXcd out(static_cast<Eigen::Index>(v.size()));
    for (std::size_t k = 0; k < v.size(); ++k) out[static_cast<Eigen::Index>(k)] = v[k];
    return out;
}

std::string describe(const TubePoint& p) {
    std::ostringstream s;
    s.precision(6);
    s << '(';
    for (std::size_t k = 0; k < p.dim(); ++k) s << (k ? ", " : "") << p.x(k) << (p.y(k) < 0 ? "" : "+") << p.y(k) << 'i';
    s << ')';
    return s.str();
}

} // namespace

double residual_squared(const Target& f, const std::vector<DictElement>& elements, const Eigen::VectorXcd& d) {
    const auto m = static_cast<Eigen::Index>(elements.size());
    if (d.size() != m) throw DimensionMismatch("weight count does not match element count");
    Eigen::VectorXcd f_phi(m);
    Eigen::MatrixXcd g(m, m);
    for (Eigen::Index i = 0; i < m; ++i) {
        const auto& ei = elements[static_cast<std::size_t>(i)];
        f_phi[i] = f.inner_phi(ei.alpha, ei.z);
        for (Eigen::Index j = 0; j < m; ++j) g(i, j) = kernels::ip_phi_phi(ei, elements[static_cast<std::size_t>(j)]);
    }
    return residual_squared(f.norm_squared(), f_phi, g, d);
}

cplx combination_value(const std::vector<DictElement>& elements, const Eigen::VectorXcd& d, std::span<const cplx> w) {
    cplx s{};
    for (std::size_t l = 0; l < elements.size(); ++l) s += d[static_cast<Eigen::Index>(l)] * kernels::phi_eval(elements[l], w);
    return s;
}

RunResult afd_run(const Target& f, std::size_t max_terms, double stop_tol, const SearchConfig& cfg) {
    cfg.validate();
    if (cfg.dim() != f.dim()) throw DimensionMismatch("search lattice and target differ in dimension");
    RunResult out;
    out.system = OrthoSystem(f.dim(), cfg.degeneracy);
    const double norm2 = f.norm_squared();
    double r2 = norm2;
    std::vector<double> history{std::sqrt(norm2)};
    std::vector<cplx> f_phi;
    double captured = 0.0;
    out.stop_reason = "max_terms";

    for (std::size_t m = 1; m <= max_terms; ++m) {
        if (std::sqrt(r2) <= stop_tol) {
            out.stop_reason = "tolerance";
            break;
        }
        Selection sel;
        try {
            sel = msp_select(Residual{f, out.system, out.coeffs}, cfg);
        } catch (const ResidualZero&) {
            out.stop_reason = "residual_zero";
            break;
        }
        const Candidate cand = out.system.preorthogonalize(sel.element);
        if (cand.degenerate) {
            out.stop_reason = "degenerate";
            break;
        }
        const cplx fp = f.inner_phi(sel.element.alpha, sel.element.z);
        cplx f_beta = std::conj(cand.coeffs[static_cast<Eigen::Index>(f_phi.size())]) * fp;
        for (std::size_t l = 0; l < f_phi.size(); ++l) f_beta += std::conj(cand.coeffs[static_cast<Eigen::Index>(l)]) * f_phi[l];
        const cplx c = f_beta / cand.beta_norm;

        out.system.accept(cand);
        f_phi.push_back(fp);
        out.coeffs.push_back(c);
        captured += std::norm(c);
        r2 = std::max(0.0, r2 - std::norm(c));

        const Eigen::VectorXcd d = out.system.coeffs() * to_eigen(out.coeffs);
        const double exact2 = residual_squared(norm2, to_eigen(f_phi), out.system.gram(), d);
        StepRecord rec;
        rec.m = m;
        rec.residual = std::sqrt(r2);
        rec.residual_exact = std::sqrt(std::max(exact2, 0.0));
        rec.energy_error = norm2 > 0.0 ? (norm2 - captured - exact2) / norm2 : 0.0;
        rec.objective = sel.objective;
        out.steps.push_back(rec);
        history.push_back(rec.residual);
    }
    out.model = make_approximant(f.sigma(), out.system.elements(), out.system.coeffs(), out.coeffs, history);
    return out;
}

Interpolation project_interpolate(const Target& f, std::span<const TubePoint> points, double merge_eps,
                                  double max_condition) {
    if (points.empty()) throw DomainError("interpolation needs at least one point");
    Interpolation out;
    std::vector<TubePoint> seen;
    for (const auto& p : points) {
        if (p.dim() != f.dim()) throw DimensionMismatch("interpolation point has wrong dimension");
        const Escalation esc = escalate_order(seen, p, merge_eps, 64);
        out.elements.emplace_back(esc.alpha, esc.point);
        seen.push_back(esc.point);
    }
    const auto m = static_cast<Eigen::Index>(out.elements.size());
    Eigen::MatrixXcd g(m, m);
    Eigen::VectorXcd b(m);
    for (Eigen::Index i = 0; i < m; ++i) {
        const auto& ei = out.elements[static_cast<std::size_t>(i)];
        b[i] = f.inner_phi(ei.alpha, ei.z);
        for (Eigen::Index j = 0; j < m; ++j) g(i, j) = kernels::ip_phi_phi(ei, out.elements[static_cast<std::size_t>(j)]);
    }
    // interpolation: <F*, phi_k> = <F, phi_k>  <=>  sum_l d_l G(l, k) = b_k
    const Eigen::MatrixXcd a = g.transpose();
    const Eigen::LDLT<Eigen::MatrixXcd> ldlt(a);
    // the LDLT reciprocal condition estimate misses exactly singular Gram matrices
    const Eigen::VectorXd sv = Eigen::JacobiSVD<Eigen::MatrixXcd>(a).singularValues();
    const double smin = sv[sv.size() - 1];
    out.condition = smin > 0.0 ? sv[0] / smin : std::numeric_limits<double>::infinity();
    if (ldlt.info() != Eigen::Success || !(out.condition <= max_condition)) {
        std::size_t bi = 0, bj = 1;
        double worst = -1.0;
        for (Eigen::Index i = 0; i < m; ++i) {
            for (Eigen::Index j = i + 1; j < m; ++j) {
                const double c = std::abs(g(i, j)) / std::sqrt(g(i, i).real() * g(j, j).real());
                if (c > worst) {
                    worst = c;
                    bi = static_cast<std::size_t>(i);
                    bj = static_cast<std::size_t>(j);
                }
            }
        }
        std::ostringstream msg;
        msg << "Gram matrix ill-conditioned (condition estimate " << out.condition << "); near-duplicate points "
            << bi << ' ' << describe(out.elements[bi].z) << " and " << bj << ' '
            << describe(out.elements[std::min<std::size_t>(bj, out.elements.size() - 1)].z);
        throw IllConditioned(msg.str(), bi, bj);
    }
    out.gram_weights = ldlt.solve(b);

    OrthoSystem sys(f.dim(), 1e-14);
    std::vector<cplx> coeffs;
    const double norm2 = f.norm_squared();
    double r2 = norm2;
    std::vector<double> history{std::sqrt(norm2)};
    for (Eigen::Index k = 0; k < m; ++k) {
        const Candidate cand = sys.preorthogonalize(out.elements[static_cast<std::size_t>(k)]);
        cplx f_beta{};
        for (Eigen::Index l = 0; l <= k; ++l) f_beta += std::conj(cand.coeffs[l]) * b[l];
        const cplx c = f_beta / cand.beta_norm;
        sys.accept(cand);
        coeffs.push_back(c);
        r2 = std::max(0.0, r2 - std::norm(c));
        history.push_back(std::sqrt(r2));
    }
    out.model = make_approximant(f.sigma(), sys.elements(), sys.coeffs(), coeffs, history);
    return out;
}

double normalized_correlation(const Target& f, const TubePoint& z) {
    const auto alpha = MultiIndex::zero(z.dim());
    return std::abs(f.inner_phi(alpha, z)) / kernels::phi_norm(alpha, z.ys());
}

} // namespace hafd::afd
