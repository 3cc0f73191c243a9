#include "hardyafd/kernels/tube_point.hpp"

#include <cmath>
#include <numeric>

namespace hafd::kernels {

TubePoint::TubePoint(std::vector<cplx> z) : z_(std::move(z)) {
    if (z_.empty()) throw DimensionMismatch("tube point needs at least one coordinate");
    for (const cplx& c : z_) {
        if (!(c.imag() > 0.0) || !std::isfinite(c.real()) || !std::isfinite(c.imag())) {
            throw DomainError("tube point must have finite x and every y_j > 0");
        }
    }
}

TubePoint TubePoint::from_xy(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw DimensionMismatch("x and y differ in length");
    std::vector<cplx> z(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) z[k] = {x[k], y[k]};
    return TubePoint(std::move(z));
}

std::vector<double> TubePoint::ys() const {
    std::vector<double> y(z_.size());
    for (std::size_t k = 0; k < z_.size(); ++k) y[k] = z_[k].imag();
    return y;
}

double distance(const TubePoint& a, const TubePoint& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("tube points differ in dimension");
    double s = 0.0;
    for (std::size_t k = 0; k < a.dim(); ++k) s += std::norm(a.z(k) - b.z(k));
    return std::sqrt(s);
}

MultiIndex::MultiIndex(std::vector<int> alpha) : alpha_(std::move(alpha)) {
    for (int a : alpha_) {
        if (a < 0) throw DomainError("multi-index entries must be non-negative");
    }
}

int MultiIndex::order() const { return std::accumulate(alpha_.begin(), alpha_.end(), 0); }

DictElement::DictElement(MultiIndex a, TubePoint p) : alpha(std::move(a)), z(std::move(p)) {
    if (alpha.dim() != z.dim()) throw DimensionMismatch("multi-index and point differ in dimension");
}

} // namespace hafd::kernels
