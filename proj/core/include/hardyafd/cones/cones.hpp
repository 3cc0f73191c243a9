#pragma once

#include "hardyafd/common.hpp"
#include "hardyafd/numerics/quadrature.hpp"

#include <Eigen/Dense>

#include <functional>
#include <string>
#include <span>
#include <vector>

namespace hafd::cones {

/// Gamma^kappa = {y in R^2 : |y_1| < kappa y_2}.
class Cone2D {
public:
    explicit Cone2D(double kappa);
    double kappa() const { return kappa_; }
    bool contains(std::span<const double> y) const;
    bool operator==(const Cone2D&) const = default;

private:
    friend Cone2D dual_cone(const Cone2D& c);
    Cone2D(double kappa, double inverse) : kappa_(kappa), inverse_(inverse) {}

    double kappa_;
    double inverse_; ///< kept so that taking the dual twice returns the same object
};

/// Gamma^{kappa,*} = Gamma^{1/kappa}.
Cone2D dual_cone(const Cone2D& c);

/// Cone whose dual is tiled by the simplicial pieces Q_k^{-T} closure(Gamma_1);
/// piece k contributes (1/|det Q_k|) prod_j -1/(2 pi i (Q_k^{-1}(w - conj z))_j) to the kernel.
class PolygonalCone {
public:
    explicit PolygonalCone(std::vector<Eigen::MatrixXd> pieces);

    static PolygonalCone first_octant(std::size_t n);
    /// One piece, Q = [[-kappa, kappa], [1, 1]].
    static PolygonalCone from_kappa(double kappa);
    /// Dual cone spanned by consecutive rays r_0, r_1, ..., r_N (counter-clockwise); N pieces.
    static PolygonalCone from_dual_rays(const std::vector<Eigen::Vector2d>& rays);

    std::size_t dim() const { return dim_; }
    const std::vector<Eigen::MatrixXd>& pieces() const { return q_; }
    const std::vector<Eigen::MatrixXd>& inverses() const { return q_inv_; }
    std::vector<double> determinants() const;
    bool contains(std::span<const double> y) const;
    /// Angular range of the dual cone (2-D only), used by direct quadrature.
    std::pair<double, double> dual_angles() const;

private:
    std::size_t dim_;
    std::vector<Eigen::MatrixXd> q_;
    std::vector<Eigen::MatrixXd> q_inv_;
};

cplx cone_szego(const PolygonalCone& cone, std::span<const cplx> w, std::span<const cplx> z);

/// kappa / (8 pi^2 (kappa^2 y_2^2 - y_1^2)).
double cone_szego_diag(const Cone2D& cone, std::span<const double> y);
/// Sum over pieces of (1/|det Q_k|) prod_j 1 / (4 pi (Q_k^{-1} y)_j).
double cone_szego_diag(const PolygonalCone& cone, std::span<const double> y);

/// int_{Gamma*} e^{-4 pi y.t} dt by iterated quadrature over the dual cone.
double cone_szego_diag_quadrature(const Cone2D& cone, std::span<const double> y,
                                  const numerics::QuadratureSpec& spec = {});
/// Same in polar coordinates over the dual's angular range.
double cone_szego_diag_quadrature(const PolygonalCone& cone, std::span<const double> y,
                                  const numerics::QuadratureSpec& spec = {});

struct PoissonBound {
    double lhs = 0.0;           ///< ||P_y(x - .)||_p, P = |K(., conj z)|^2 / K(z, conj z)
    double rhs = 0.0;           ///< 2^{-n/p} K(z, conj z)^{1 - 1/p}
    double rhs_corrected = 0.0; ///< (4^n K(z, conj z))^{1 - 1/p}
    bool ok = false;            ///< lhs <= rhs (1 + 1e-6)
    bool ok_corrected = false;  ///< lhs <= rhs_corrected (1 + 1e-6)
};

/// p in (1, inf]; pass std::numeric_limits<double>::infinity() for the sup norm.
PoissonBound poisson_lp_bound_check(const PolygonalCone& cone, std::span<const cplx> z, double p,
                                    const numerics::QuadratureSpec& spec = {});

enum class PathKind { boundary, scale, xinf };

PathKind parse_path_kind(const std::string& name);
std::string to_string(PathKind kind);

/// boundary: y = (kappa (1 - 2^-k), 1); scale: y = 2^k (0, 1); xinf: x = (2^k, 0), y = (0, 1).
struct BvcPath {
    PathKind kind = PathKind::boundary;
    double p = 2.0;
    std::size_t steps = 12; ///< k = 0..steps

    std::vector<std::vector<cplx>> points(const Cone2D& cone) const;
    double parameter(std::size_t k) const;
};

struct BvcRow {
    std::size_t step;
    double parameter;
    double ratio; ///< |F(z)| / K(z, conj z)^{1/p}
    double k_diag;
};

std::vector<BvcRow> bvc_diagnostic(const std::function<cplx(std::span<const cplx>)>& f, const Cone2D& cone,
                                   const BvcPath& path);

/// F = sum_j c_j K_Gamma(., conj z_j): a Hardy function on the cone tube.
class ConeKernelSum {
public:
    ConeKernelSum(PolygonalCone cone, std::vector<std::vector<cplx>> points, std::vector<cplx> coeffs);
    cplx operator()(std::span<const cplx> w) const;

private:
    PolygonalCone cone_;
    std::vector<std::vector<cplx>> points_;
    std::vector<cplx> coeffs_;
};

} // namespace hafd::cones
