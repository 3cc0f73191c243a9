#include "hardyafd/cones/cones.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hafd::cones {

Cone2D::Cone2D(double kappa) : kappa_(kappa), inverse_(1.0 / kappa) {
    if (!(kappa > 0.0) || !std::isfinite(kappa) || !std::isfinite(inverse_)) {
        throw DomainError("cone aperture kappa must be positive and finite");
    }
}

bool Cone2D::contains(std::span<const double> y) const {
    if (y.size() != 2) throw DimensionMismatch("Gamma^kappa lives in R^2");
    return std::abs(y[0]) < kappa_ * y[1];
}

Cone2D dual_cone(const Cone2D& c) { return Cone2D(c.inverse_, c.kappa_); }

PolygonalCone::PolygonalCone(std::vector<Eigen::MatrixXd> pieces) : q_(std::move(pieces)) {
    if (q_.empty()) throw DomainError("polygonal cone needs at least one piece");
    dim_ = static_cast<std::size_t>(q_.front().rows());
    for (const auto& q : q_) {
        if (q.rows() != q.cols() || static_cast<std::size_t>(q.rows()) != dim_) {
            throw DimensionMismatch("cone pieces must be square of equal size");
        }
        Eigen::FullPivLU<Eigen::MatrixXd> lu(q);
        if (!lu.isInvertible()) throw DomainError("cone piece generator is singular");
        q_inv_.push_back(lu.inverse());
    }
}

PolygonalCone PolygonalCone::first_octant(std::size_t n) {
    return PolygonalCone({Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n))});
}

PolygonalCone PolygonalCone::from_kappa(double kappa) {
    const Cone2D c(kappa);
    Eigen::MatrixXd q(2, 2);
    q << -c.kappa(), c.kappa(), 1.0, 1.0;
    return PolygonalCone({q});
}

PolygonalCone PolygonalCone::from_dual_rays(const std::vector<Eigen::Vector2d>& rays) {
    if (rays.size() < 2) throw DomainError("need at least two dual rays");
    std::vector<Eigen::MatrixXd> pieces;
    for (std::size_t k = 0; k + 1 < rays.size(); ++k) {
        Eigen::Matrix2d d;
        d.col(0) = rays[k];
        d.col(1) = rays[k + 1];
        if (!(d.determinant() > 0.0)) throw DomainError("dual rays must turn counter-clockwise");
        pieces.emplace_back(d.inverse().transpose());
    }
    return PolygonalCone(std::move(pieces));
}

std::vector<double> PolygonalCone::determinants() const {
    std::vector<double> d;
    for (const auto& q : q_) d.push_back(q.determinant());
    return d;
}

bool PolygonalCone::contains(std::span<const double> y) const {
    if (y.size() != dim_) throw DimensionMismatch("point has wrong dimension for this cone");
    const Eigen::Map<const Eigen::VectorXd> v(y.data(), static_cast<Eigen::Index>(y.size()));
    for (const auto& qi : q_inv_) {
        if (!((qi * v).minCoeff() > 0.0)) return false;
    }
    return true;
}

std::pair<double, double> PolygonalCone::dual_angles() const {
    if (dim_ != 2) throw DimensionMismatch("angular range needs a planar cone");
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (const auto& qi : q_inv_) {
        const Eigen::MatrixXd d = qi.transpose();
        for (Eigen::Index c = 0; c < 2; ++c) {
            const double a = std::atan2(d(1, c), d(0, c));
            lo = std::min(lo, a);
            hi = std::max(hi, a);
        }
    }
    return {lo, hi};
}

namespace {

/// Kernel evaluation with the piece data unpacked once; n <= 2.
class KernelEval {
public:
    explicit KernelEval(const PolygonalCone& cone) : n_(cone.dim()) {
        if (n_ > 2) throw DimensionMismatch("cone kernels are implemented for n <= 2");
        for (std::size_t k = 0; k < cone.pieces().size(); ++k) {
            Piece p;
            const auto& qi = cone.inverses()[k];
            for (std::size_t i = 0; i < n_; ++i) {
                for (std::size_t j = 0; j < n_; ++j) {
                    p.inv[i][j] = qi(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
                }
            }
            p.scale = 1.0 / std::abs(cone.pieces()[k].determinant());
            pieces_.push_back(p);
        }
    }

    /// K(w, conj z) given d = w - conj z.
    cplx operator()(const cplx* d) const {
        const cplx c = -1.0 / (2.0 * pi * I);
        cplx total{};
        for (const auto& p : pieces_) {
            cplx term = p.scale;
            for (std::size_t i = 0; i < n_; ++i) {
                cplx u{};
                for (std::size_t j = 0; j < n_; ++j) u += p.inv[i][j] * d[j];
                term *= c / u;
            }
            total += term;
        }
        return total;
    }

private:
    struct Piece {
        double inv[2][2] = {};
        double scale = 1.0;
    };
    std::size_t n_;
    std::vector<Piece> pieces_;
};

void require_inside(const PolygonalCone& cone, std::span<const cplx> z) {
    double y[2] = {};
    for (std::size_t j = 0; j < z.size(); ++j) y[j] = z[j].imag();
    if (!cone.contains(std::span<const double>(y, z.size()))) throw DomainError("kernel parameter outside the cone tube");
}

} // namespace

cplx cone_szego(const PolygonalCone& cone, std::span<const cplx> w, std::span<const cplx> z) {
    const std::size_t n = cone.dim();
    if (w.size() != n || z.size() != n) throw DimensionMismatch("points have wrong dimension for this cone");
    require_inside(cone, z);
    cplx d[2] = {};
    for (std::size_t j = 0; j < n; ++j) d[j] = w[j] - std::conj(z[j]);
    return KernelEval(cone)(d);
}

double cone_szego_diag(const Cone2D& cone, std::span<const double> y) {
    if (!cone.contains(y)) throw DomainError("y is not inside the cone");
    const double k = cone.kappa();
    return k / (8.0 * pi * pi * (k * k * y[1] * y[1] - y[0] * y[0]));
}

double cone_szego_diag(const PolygonalCone& cone, std::span<const double> y) {
    if (!cone.contains(y)) throw DomainError("y is not inside the cone");
    const Eigen::Map<const Eigen::VectorXd> v(y.data(), static_cast<Eigen::Index>(y.size()));
    double total = 0.0;
    for (const auto& q : cone.pieces()) {
        const Eigen::VectorXd u = q.partialPivLu().solve(v);
        double term = 1.0 / std::abs(q.determinant());
        for (Eigen::Index j = 0; j < u.size(); ++j) term /= 4.0 * pi * u[j];
        total += term;
    }
    return total;
}

double cone_szego_diag_quadrature(const Cone2D& cone, std::span<const double> y, const numerics::QuadratureSpec& spec) {
    if (!cone.contains(y)) throw DomainError("y is not inside the cone");
    const double kd = dual_cone(cone).kappa();
    const double y0 = y[0];
    const double y1 = y[1];
    // t = r (kd s, 1) with s in [-1, 1] outer and r >= 0 inner; dt = kd r ds dr
    auto rate = [=](double s) { return 4.0 * pi * (y0 * kd * s + y1); };
    auto f = [=](std::span<const double> p) { return cplx{kd * p[1] * std::exp(-rate(p[0]) * p[1]), 0.0}; };
    const auto domain = numerics::Domain::nested({-1.0, 1.0}, [=](double s) {
        const double scale = 1.0 / rate(s);
        return numerics::Interval::half_line(0.0, {scale, 4.0 * scale, 16.0 * scale});
    });
    return numerics::integrate_nd(f, domain, spec).real();
}

double cone_szego_diag_quadrature(const PolygonalCone& cone, std::span<const double> y,
                                  const numerics::QuadratureSpec& spec) {
    if (!cone.contains(y)) throw DomainError("y is not inside the cone");
    const auto [lo, hi] = cone.dual_angles();
    const double y0 = y[0];
    const double y1 = y[1];
    auto f = [=](std::span<const double> p) {
        const double a = y0 * std::cos(p[0]) + y1 * std::sin(p[0]);
        return cplx{p[1] * std::exp(-4.0 * pi * p[1] * a), 0.0};
    };
    const auto domain = numerics::Domain::product({lo, hi}, numerics::Interval::half_line(0.0));
    return numerics::integrate_nd(f, domain, spec).real();
}

PoissonBound poisson_lp_bound_check(const PolygonalCone& cone, std::span<const cplx> z, double p,
                                    const numerics::QuadratureSpec& spec) {
    if (!(p > 1.0)) throw DomainError("p must exceed 1");
    const std::size_t n = cone.dim();
    if (z.size() != n || n > 2) throw DimensionMismatch("Poisson check supports n <= 2");
    require_inside(cone, z);
    std::vector<double> y(n);
    std::vector<double> x(n);
    for (std::size_t j = 0; j < n; ++j) {
        x[j] = z[j].real();
        y[j] = z[j].imag();
    }
    const double kd = cone_szego_diag(cone, y);
    const KernelEval kernel(cone);
    auto poisson_at = [&](std::span<const double> xi) {
        cplx d[2] = {};
        for (std::size_t j = 0; j < n; ++j) d[j] = xi[j] - std::conj(z[j]);
        return std::norm(kernel(d)) / kd;
    };

    PoissonBound out;
    const double inv_p = std::isinf(p) ? 0.0 : 1.0 / p;
    if (std::isinf(p)) {
        out.lhs = poisson_at(x);
    } else {
        // integrate in the coordinates v = Q_0^{-1}(xi - x) of the first piece, where the
        // kernel's ridges are axis aligned; dxi = |det Q_0| dv
        const Eigen::MatrixXd& q0 = cone.pieces().front();
        const Eigen::Map<const Eigen::VectorXd> yv(y.data(), static_cast<Eigen::Index>(n));
        const Eigen::VectorXd eta = cone.inverses().front() * yv;
        const double jac = std::abs(q0.determinant());
        numerics::QuadratureSpec s = spec;
        s.tail_radius = eta.cwiseAbs().maxCoeff();
        auto f = [&](std::span<const double> v) {
            double xi[2] = {};
            for (std::size_t i = 0; i < n; ++i) {
                xi[i] = x[i];
                for (std::size_t j = 0; j < n; ++j) {
                    xi[i] += q0(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) * v[j];
                }
            }
            return cplx{jac * std::pow(poisson_at(std::span<const double>(xi, n)), p), 0.0};
        };
        auto axis = [&](Eigen::Index j) {
            const double e = std::abs(eta[j]);
            return numerics::Interval::real_line({-e, 0.0, e});
        };
        double integral = 0.0;
        if (cone.pieces().size() == 1) {
            // one piece: P(Q_0 v) is a product over v_j of |1 / (2 pi (v_j + i eta_j))|^2
            integral = jac * std::pow(1.0 / (jac * jac * kd), p);
            for (Eigen::Index j = 0; j < static_cast<Eigen::Index>(n); ++j) {
                const double e = eta[j];
                integral *= numerics::integrate(
                                [&](double v) { return cplx{std::pow(4.0 * pi * pi * (v * v + e * e), -p), 0.0}; },
                                axis(j), s)
                                .value.real();
            }
        } else {
            const numerics::Domain domain =
                n == 1 ? numerics::Domain::line(axis(0)) : numerics::Domain::product(axis(0), axis(1));
            integral = numerics::integrate_nd(f, domain, s).real();
        }
        out.lhs = std::pow(integral, inv_p);
    }
    const double dn = static_cast<double>(n);
    out.rhs = std::pow(2.0, -dn * inv_p) * std::pow(kd, 1.0 - inv_p);
    out.rhs_corrected = std::pow(std::pow(4.0, dn) * kd, 1.0 - inv_p);
    out.ok = out.lhs <= out.rhs * (1.0 + 1e-6);
    out.ok_corrected = out.lhs <= out.rhs_corrected * (1.0 + 1e-6);
    return out;
}

PathKind parse_path_kind(const std::string& name) {
    if (name == "boundary") return PathKind::boundary;
    if (name == "scale") return PathKind::scale;
    if (name == "xinf") return PathKind::xinf;
    throw ParseError("unknown path '" + name + "' (expected boundary, scale or xinf)");
}

std::string to_string(PathKind kind) {
    switch (kind) {
    case PathKind::boundary: return "boundary";
    case PathKind::scale: return "scale";
    case PathKind::xinf: return "xinf";
    }
    return "?";
}

double BvcPath::parameter(std::size_t k) const {
    const double s = std::ldexp(1.0, static_cast<int>(k));
    return kind == PathKind::boundary ? 1.0 / s : s;
}

std::vector<std::vector<cplx>> BvcPath::points(const Cone2D& cone) const {
    std::vector<std::vector<cplx>> out;
    for (std::size_t k = 0; k <= steps; ++k) {
        const double t = parameter(k);
        switch (kind) {
        case PathKind::boundary: out.push_back({{0.0, cone.kappa() * (1.0 - t)}, {0.0, 1.0}}); break;
        case PathKind::scale: out.push_back({{0.0, 0.0}, {0.0, t}}); break;
        case PathKind::xinf: out.push_back({{t, 0.0}, {0.0, 1.0}}); break;
        }
    }
    return out;
}

std::vector<BvcRow> bvc_diagnostic(const std::function<cplx(std::span<const cplx>)>& f, const Cone2D& cone,
                                   const BvcPath& path) {
    if (!(path.p > 1.0)) throw DomainError("p must exceed 1");
    std::vector<BvcRow> rows;
    const auto pts = path.points(cone);
    for (std::size_t k = 0; k < pts.size(); ++k) {
        const double y[2] = {pts[k][0].imag(), pts[k][1].imag()};
        const double kd = cone_szego_diag(cone, y);
        const double ratio = std::abs(f(pts[k])) / std::pow(kd, 1.0 / path.p);
        rows.push_back({k, path.parameter(k), ratio, kd});
    }
    return rows;
}

ConeKernelSum::ConeKernelSum(PolygonalCone cone, std::vector<std::vector<cplx>> points, std::vector<cplx> coeffs)
    : cone_(std::move(cone)), points_(std::move(points)), coeffs_(std::move(coeffs)) {
    if (points_.size() != coeffs_.size()) throw DimensionMismatch("one coefficient per kernel expected");
}

cplx ConeKernelSum::operator()(std::span<const cplx> w) const {
    cplx s{};
    for (std::size_t j = 0; j < points_.size(); ++j) s += coeffs_[j] * cone_szego(cone_, w, points_[j]);
    return s;
}

} // namespace hafd::cones
