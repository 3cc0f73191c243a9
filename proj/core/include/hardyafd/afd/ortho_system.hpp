#pragma once

#include "hardyafd/kernels/tube_point.hpp"

#include <Eigen/Dense>

#include <vector>

namespace hafd::afd {

/// beta = phi_e - sum_k <phi_e, B_k> B_k, written in the basis of the selected
/// elements followed by phi_e.
struct Candidate {
    kernels::DictElement element;
    Eigen::VectorXcd coeffs;   ///< beta in the basis (phi_1..phi_m, phi_e)
    Eigen::VectorXcd overlaps; ///< <phi_e, B_k>
    Eigen::VectorXcd gram_row; ///< <phi_e, phi_l>, l = 1..m, then ||phi_e||^2
    double phi_norm = 0.0;
    double beta_norm = 0.0;
    /// 1 - sum_k |<phi_e/||phi_e||, B_k>|^2
    double remaining = 0.0;
    bool degenerate = false;
};

/// Orthonormal family B_k = sum_l C(l, k) phi_l built by Gram-Schmidt over
/// closed-form inner products.
class OrthoSystem {
public:
    explicit OrthoSystem(std::size_t dim, double degeneracy = 1e-10);

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return elements_.size(); }
    double degeneracy() const { return degeneracy_; }
    const std::vector<kernels::DictElement>& elements() const { return elements_; }
    std::vector<kernels::TubePoint> points() const;
    /// Column k holds B_k in the phi basis (upper triangular).
    const Eigen::MatrixXcd& coeffs() const { return c_; }
    /// G(i, j) = <phi_i, phi_j>.
    const Eigen::MatrixXcd& gram() const { return g_; }

    /// <phi_e, B_k> for all k, from the closed-form row <phi_e, phi_l>.
    Eigen::VectorXcd overlaps(const kernels::DictElement& e) const;
    Candidate preorthogonalize(const kernels::DictElement& e) const;
    /// Appends B = beta/||beta||. Throws DegenerateCandidate when flagged.
    void accept(const Candidate& c);

    /// max |<B_j, B_k> - delta_jk|.
    double orthonormality_error() const;

private:
    std::size_t dim_;
    double degeneracy_;
    std::vector<kernels::DictElement> elements_;
    Eigen::MatrixXcd c_;
    Eigen::MatrixXcd g_;
};

} // namespace hafd::afd
