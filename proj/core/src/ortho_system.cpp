#include "hardyafd/afd/ortho_system.hpp"

#include "hardyafd/afd/errors.hpp"
#include "hardyafd/kernels/kernels.hpp"

#include <cmath>

namespace hafd::afd {

OrthoSystem::OrthoSystem(std::size_t dim, double degeneracy) : dim_(dim), degeneracy_(degeneracy) {
    if (!(degeneracy > 0.0 && degeneracy < 1.0)) throw DomainError("degeneracy threshold must lie in (0, 1)");
}

std::vector<kernels::TubePoint> OrthoSystem::points() const {
    std::vector<kernels::TubePoint> p;
    for (const auto& e : elements_) p.push_back(e.z);
    return p;
}

Eigen::VectorXcd OrthoSystem::overlaps(const kernels::DictElement& e) const {
    const auto m = static_cast<Eigen::Index>(size());
    Eigen::VectorXcd row(m);
    for (Eigen::Index l = 0; l < m; ++l) row[l] = kernels::ip_phi_phi(e, elements_[static_cast<std::size_t>(l)]);
    return c_.adjoint() * row;
}

Candidate OrthoSystem::preorthogonalize(const kernels::DictElement& e) const {
    if (e.dim() != dim_) throw DimensionMismatch("candidate has wrong dimension");
    const auto m = static_cast<Eigen::Index>(size());
    Candidate c;
    c.element = e;
    c.gram_row.resize(m + 1);
    for (Eigen::Index l = 0; l < m; ++l) c.gram_row[l] = kernels::ip_phi_phi(e, elements_[static_cast<std::size_t>(l)]);
    const double phi2 = kernels::phi_norm_squared(e.alpha, e.z.ys());
    c.gram_row[m] = phi2;
    c.phi_norm = std::sqrt(phi2);

    c.overlaps = c_.adjoint() * c.gram_row.head(m);
    c.remaining = 1.0 - c.overlaps.squaredNorm() / phi2;
    c.degenerate = !(c.remaining >= degeneracy_);

    // G extended by the candidate; G(i, j) = <phi_i, phi_j>
    Eigen::MatrixXcd gx(m + 1, m + 1);
    gx.topLeftCorner(m, m) = g_;
    gx.block(m, 0, 1, m) = c.gram_row.head(m).transpose();
    gx.block(0, m, m, 1) = c.gram_row.head(m).conjugate();
    gx(m, m) = phi2;

    Eigen::MatrixXcd cx = Eigen::MatrixXcd::Zero(m + 1, m);
    cx.topRows(m) = c_;
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(m + 1);
    v[m] = 1.0;
    v -= cx * c.overlaps;
    // second pass against round-off: <beta, B_k> = sum_l conj(C(l,k)) <beta, phi_l>
    if (m > 0) {
        const Eigen::VectorXcd beta_phi = gx.transpose() * v;
        const Eigen::VectorXcd again = cx.adjoint() * beta_phi;
        v -= cx * again;
    }
    const double b2 = (v.transpose() * gx * v.conjugate())(0, 0).real();
    c.beta_norm = std::sqrt(std::max(b2, 0.0));
    c.coeffs = v;
    return c;
}

void OrthoSystem::accept(const Candidate& cand) {
    if (cand.degenerate || !(cand.beta_norm > 0.0)) {
        throw DegenerateCandidate("candidate is degenerate: remaining fraction " + std::to_string(cand.remaining));
    }
    const auto m = static_cast<Eigen::Index>(size());
    if (cand.coeffs.size() != m + 1) throw DimensionMismatch("candidate was built for another system state");

    Eigen::MatrixXcd g(m + 1, m + 1);
    g.topLeftCorner(m, m) = g_;
    g.block(m, 0, 1, m) = cand.gram_row.head(m).transpose();
    g.block(0, m, m, 1) = cand.gram_row.head(m).conjugate();
    g(m, m) = cand.gram_row[m];
    g_ = std::move(g);

    Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(m + 1, m + 1);
    c.topLeftCorner(m, m) = c_;
    c.col(m) = cand.coeffs / cand.beta_norm;
    c_ = std::move(c);
    elements_.push_back(cand.element);
}

double OrthoSystem::orthonormality_error() const {
    // <B_j, B_k> = sum_{i,l} C(i,j) conj(C(l,k)) G(i,l)
    const Eigen::MatrixXcd b = c_.transpose() * g_ * c_.conjugate();
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(b.rows(), b.cols());
    return size() == 0 ? 0.0 : (b - id).cwiseAbs().maxCoeff();
}

} // namespace hafd::afd
