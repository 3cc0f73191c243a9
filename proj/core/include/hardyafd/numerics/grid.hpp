#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace hafd::numerics {

/// One uniformly sampled axis: nodes start + k * spacing, k = 0..count-1.
struct Axis {
    double start = 0.0;
    double spacing = 1.0;
    std::size_t count = 0;

    double at(std::size_t k) const { return start + spacing * static_cast<double>(k); }
    double extent() const { return spacing * static_cast<double>(count); }

    bool operator==(const Axis&) const = default;
};

bool is_power_of_two(std::size_t n);

/// Tensor-product sampling grid in one or two dimensions, flattened row-major
/// (axis 0 varies slowest).
class Grid {
public:
    Grid() = default;
    explicit Grid(std::vector<Axis> axes);

    /// Grid on [-L_j, L_j) with counts[j] points on axis j.
    static Grid centered(std::span<const std::size_t> counts, std::span<const double> half_extents);

    std::size_t dim() const { return axes_.size(); }
    const Axis& axis(std::size_t j) const { return axes_.at(j); }
    const std::vector<Axis>& axes() const { return axes_; }
    std::size_t size() const;
    bool power_of_two() const;

    /// Coordinates of flat index `flat`.
    std::vector<double> point(std::size_t flat) const;

    bool operator==(const Grid&) const = default;

private:
    std::vector<Axis> axes_;
};

} // namespace hafd::numerics
