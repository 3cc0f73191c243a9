#include "hardyafd/numerics/grid.hpp"

#include "hardyafd/common.hpp"

#include <string>

namespace hafd::numerics {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

Grid::Grid(std::vector<Axis> axes) : axes_(std::move(axes)) {
    if (axes_.empty() || axes_.size() > 2) {
        throw DimensionMismatch("grid dimension must be 1 or 2, got " + std::to_string(axes_.size()));
    }
    for (const Axis& a : axes_) {
        if (a.count < 8) {
            throw DomainError("grid axis needs at least 8 points, got " + std::to_string(a.count));
        }
        if (!(a.spacing > 0.0)) {
            throw DomainError("grid spacing must be positive");
        }
    }
}

Grid Grid::centered(std::span<const std::size_t> counts, std::span<const double> half_extents) {
    if (counts.size() != half_extents.size()) {
        throw DimensionMismatch("counts and extents differ in length");
    }
    std::vector<Axis> axes;
    for (std::size_t j = 0; j < counts.size(); ++j) {
        if (!(half_extents[j] > 0.0)) {
            throw DomainError("grid half-extent must be positive");
        }
        const double h = 2.0 * half_extents[j] / static_cast<double>(counts[j]);
        axes.push_back({-half_extents[j], h, counts[j]});
    }
    return Grid(std::move(axes));
}

std::size_t Grid::size() const {
    std::size_t n = axes_.empty() ? 0 : 1;
    for (const Axis& a : axes_) n *= a.count;
    return n;
}

bool Grid::power_of_two() const {
    for (const Axis& a : axes_) {
        if (!is_power_of_two(a.count)) return false;
    }
    return !axes_.empty();
}

std::vector<double> Grid::point(std::size_t flat) const {
    std::vector<double> p(axes_.size());
    for (std::size_t j = axes_.size(); j-- > 0;) {
        const std::size_t n = axes_[j].count;
        p[j] = axes_[j].at(flat % n);
        flat /= n;
    }
    return p;
}

} // namespace hafd::numerics
