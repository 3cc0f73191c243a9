#pragma once

#include "hardyafd/numerics/grid.hpp"
#include "hardyafd/signal/octant.hpp"

#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace hafd::signal {

struct FreqAxis {
    double start = 0.0;
    double step = 1.0;
    std::size_t count = 0;

    double at(std::size_t k) const { return start + step * static_cast<double>(k); }
    bool operator==(const FreqAxis&) const = default;
};

/// Where a projected spectrum came from: the zero-padded transform grid and
/// the position of the original sample window inside it.
struct SourceLayout {
    numerics::Grid padded;
    std::vector<std::size_t> window_offset;
    std::vector<std::size_t> window_count;

    numerics::Grid window() const;
};

/// Paley-Wiener density of one octant component, F(z) = int e^{2 pi i z.t} f(t) dt,
/// sampled on a tensor frequency grid inside the closed octant. Integrals use
/// sum_k w(t_k) f(t_k) prod(dt_j) with separable per-axis weights.
class SpectralRep {
public:
    SpectralRep() = default;
    SpectralRep(OctantSignature sigma, std::vector<FreqAxis> axes, std::vector<cplx> density,
                std::vector<std::vector<double>> weights = {}, std::optional<SourceLayout> source = {});

    /// Samples `f` on the given axes with trapezoid weights.
    static SpectralRep from_density(OctantSignature sigma, std::vector<FreqAxis> axes,
                                    const std::function<cplx(std::span<const double>)>& f);

    const OctantSignature& sigma() const { return sigma_; }
    std::size_t dim() const { return axes_.size(); }
    const std::vector<FreqAxis>& axes() const { return axes_; }
    const std::vector<cplx>& density() const { return density_; }
    /// Per-node quadrature weight on `axis` (1 when none were given).
    double weight(std::size_t axis, std::size_t k) const;
    const std::optional<SourceLayout>& source() const { return source_; }

    SpectralRep scaled(cplx c) const;

private:
    OctantSignature sigma_;
    std::vector<FreqAxis> axes_;
    std::vector<cplx> density_;
    std::vector<std::vector<double>> weights_;
    std::optional<SourceLayout> source_;
};

} // namespace hafd::signal
