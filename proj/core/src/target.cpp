#include "hardyafd/afd/target.hpp"

#include "hardyafd/kernels/kernels.hpp"
#include "hardyafd/signal/hardy.hpp"

#include <cmath>

namespace hafd::afd {

using kernels::DictElement;
using kernels::MultiIndex;
using kernels::TubePoint;

std::vector<cplx> Target::inner_phi_lattice(const MultiIndex& alpha,
                                            const std::vector<std::vector<cplx>>& axis_points) const {
    if (axis_points.size() != dim()) throw DimensionMismatch("lattice has wrong dimension");
    std::vector<cplx> out;
    if (dim() == 1) {
        for (const cplx& z : axis_points[0]) out.push_back(inner_phi(alpha, TubePoint({z})));
    } else {
        for (const cplx& z0 : axis_points[0]) {
            for (const cplx& z1 : axis_points[1]) out.push_back(inner_phi(alpha, TubePoint({z0, z1})));
        }
    }
    return out;
}

KernelSumTarget::KernelSumTarget(std::vector<std::pair<DictElement, cplx>> terms) : terms_(std::move(terms)) {
    if (terms_.empty()) throw DomainError("kernel sum needs at least one term");
    dim_ = terms_.front().first.dim();
    double s = 0.0;
    for (const auto& [ei, ai] : terms_) {
        if (ei.dim() != dim_) throw DimensionMismatch("kernel sum terms differ in dimension");
        for (const auto& [ej, aj] : terms_) s += (ai * std::conj(aj) * kernels::ip_phi_phi(ei, ej)).real();
    }
    norm2_ = std::max(s, 0.0);
}

KernelSumTarget KernelSumTarget::normalized_kernel(const TubePoint& b, cplx scale) {
    const auto alpha = MultiIndex::zero(b.dim());
    const double nrm = kernels::phi_norm(alpha, b.ys());
    return KernelSumTarget({{DictElement(alpha, b), scale / nrm}});
}

cplx KernelSumTarget::inner_phi(const MultiIndex& alpha, const TubePoint& u) const {
    const DictElement e(alpha, u);
    cplx s{};
    for (const auto& [ej, aj] : terms_) s += aj * kernels::ip_phi_phi(ej, e);
    return s;
}

cplx KernelSumTarget::evaluate(std::span<const cplx> w) const {
    cplx s{};
    for (const auto& [ej, aj] : terms_) s += aj * kernels::phi_eval(ej, w);
    return s;
}

SpectralTarget::SpectralTarget(signal::SpectralRep rep) : rep_(std::move(rep)) {
    const double n = signal::norm_F(rep_);
    norm2_ = n * n;
}

namespace {

// prod_j sigma_j^alpha_j: d^alpha of F(sigma u) with respect to u.
double reflection_sign(const signal::OctantSignature& sigma, const MultiIndex& alpha) {
    double s = 1.0;
    for (std::size_t j = 0; j < alpha.dim(); ++j) {
        if (sigma[j] < 0 && alpha[j] % 2 == 1) s = -s;
    }
    return s;
}

} // namespace

cplx SpectralTarget::inner_phi(const MultiIndex& alpha, const TubePoint& u) const {
    const auto w = rep_.sigma().reflect(u.coords());
    return reflection_sign(rep_.sigma(), alpha) * signal::eval_dF(rep_, alpha, w);
}

std::vector<cplx> SpectralTarget::inner_phi_lattice(const MultiIndex& alpha,
                                                    const std::vector<std::vector<cplx>>& axis_points) const {
    if (axis_points.size() != dim()) throw DimensionMismatch("lattice has wrong dimension");
    std::vector<std::vector<cplx>> reflected(axis_points);
    for (std::size_t j = 0; j < dim(); ++j) {
        for (cplx& z : reflected[j]) z *= static_cast<double>(rep_.sigma()[j]);
    }
    auto out = signal::eval_dF_lattice(rep_, alpha, reflected);
    const double s = reflection_sign(rep_.sigma(), alpha);
    if (s < 0) {
        for (cplx& v : out) v = -v;
    }
    return out;
}

} // namespace hafd::afd
