#include "hardyafd/signal/spectral_rep.hpp"

#include <cmath>

namespace hafd::signal {

numerics::Grid SourceLayout::window() const {
    std::vector<numerics::Axis> axes;
    for (std::size_t j = 0; j < padded.dim(); ++j) {
        const auto& a = padded.axis(j);
        axes.push_back({a.at(window_offset.at(j)), a.spacing, window_count.at(j)});
    }
    return numerics::Grid(std::move(axes));
}

SpectralRep::SpectralRep(OctantSignature sigma, std::vector<FreqAxis> axes, std::vector<cplx> density,
                         std::vector<std::vector<double>> weights, std::optional<SourceLayout> source)
    : sigma_(std::move(sigma)), axes_(std::move(axes)), density_(std::move(density)), weights_(std::move(weights)),
      source_(std::move(source)) {
    if (axes_.size() != sigma_.dim() || axes_.empty() || axes_.size() > 2) {
        throw DimensionMismatch("spectral axes do not match the octant signature");
    }
    std::size_t total = 1;
    for (std::size_t j = 0; j < axes_.size(); ++j) {
        const FreqAxis& a = axes_[j];
        if (a.count == 0 || !(a.step > 0.0)) throw DomainError("frequency axis must be non-empty with positive step");
        // every node must lie in the closed half-line of sign sigma_j
        const double lo = a.start;
        const double hi = a.at(a.count - 1);
        const double slack = 1e-9 * a.step;
        if (sigma_[j] > 0 ? lo < -slack : hi > slack) {
            throw DomainError("frequency axis leaves the octant of its signature");
        }
        total *= a.count;
    }
    if (density_.size() != total) throw DimensionMismatch("density size does not match frequency axes");
    if (!weights_.empty()) {
        if (weights_.size() != axes_.size()) throw DimensionMismatch("weights per axis expected");
        for (std::size_t j = 0; j < axes_.size(); ++j) {
            if (weights_[j].size() != axes_[j].count) throw DimensionMismatch("weight count mismatch");
        }
    }
    for (const cplx& v : density_) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) throw DomainError("non-finite density sample");
    }
}

SpectralRep SpectralRep::from_density(OctantSignature sigma, std::vector<FreqAxis> axes,
                                      const std::function<cplx(std::span<const double>)>& f) {
    std::vector<std::vector<double>> weights;
    std::size_t total = 1;
    for (const FreqAxis& a : axes) {
        std::vector<double> w(a.count, 1.0);
        w.front() = 0.5;
        w.back() = 0.5;
        weights.push_back(std::move(w));
        total *= a.count;
    }
    std::vector<cplx> density(total);
    std::vector<double> t(axes.size());
    for (std::size_t flat = 0; flat < total; ++flat) {
        std::size_t rest = flat;
        for (std::size_t j = axes.size(); j-- > 0;) {
            t[j] = axes[j].at(rest % axes[j].count);
            rest /= axes[j].count;
        }
        density[flat] = f(t);
    }
    return SpectralRep(std::move(sigma), std::move(axes), std::move(density), std::move(weights));
}

double SpectralRep::weight(std::size_t axis, std::size_t k) const {
    return weights_.empty() ? 1.0 : weights_[axis][k];
}

SpectralRep SpectralRep::scaled(cplx c) const {
    SpectralRep out(*this);
    for (cplx& v : out.density_) v *= c;
    return out;
}

} // namespace hafd::signal
