#pragma once

#include "hardyafd/common.hpp"

#include <span>
#include <vector>

namespace hafd::kernels {

/// z = x + iy with every y_j > 0 (tube over the first octant).
class TubePoint {
public:
    TubePoint() = default;
    explicit TubePoint(std::vector<cplx> z);
    static TubePoint from_xy(std::span<const double> x, std::span<const double> y);

    std::size_t dim() const { return z_.size(); }
    cplx z(std::size_t k) const { return z_[k]; }
    double x(std::size_t k) const { return z_[k].real(); }
    double y(std::size_t k) const { return z_[k].imag(); }
    std::span<const cplx> coords() const { return z_; }
    std::vector<double> ys() const;

    bool operator==(const TubePoint&) const = default;

private:
    std::vector<cplx> z_;
};

/// Euclidean distance in C^n.
double distance(const TubePoint& a, const TubePoint& b);

class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(std::vector<int> alpha);
    static MultiIndex zero(std::size_t n) { return MultiIndex(std::vector<int>(n, 0)); }

    std::size_t dim() const { return alpha_.size(); }
    int operator[](std::size_t j) const { return alpha_[j]; }
    int order() const;
    const std::vector<int>& values() const { return alpha_; }

    bool operator==(const MultiIndex&) const = default;

private:
    std::vector<int> alpha_;
};

/// phi_{alpha,z}: the alpha-th x-derivative of the Szego kernel K(., conj(z)).
struct DictElement {
    MultiIndex alpha;
    TubePoint z;

    DictElement() = default;
    DictElement(MultiIndex a, TubePoint p);
    std::size_t dim() const { return z.dim(); }
};

} // namespace hafd::kernels
