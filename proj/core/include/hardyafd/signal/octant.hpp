#pragma once

#include "hardyafd/common.hpp"

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hafd::signal {

/// Sign pattern sigma selecting the octant Gamma_sigma = {y : sign(y_j) = sigma_j}.
class OctantSignature {
public:
    OctantSignature() = default;
    explicit OctantSignature(std::vector<int> signs);

    /// "+", "-", "++", "+-", ...
    static OctantSignature parse(std::string_view text);
    static OctantSignature first(std::size_t n) { return OctantSignature(std::vector<int>(n, 1)); }
    /// All 2^n signatures; index bit j set means axis j is negative.
    static std::vector<OctantSignature> all(std::size_t n);

    std::size_t dim() const { return signs_.size(); }
    int operator[](std::size_t j) const { return signs_[j]; }
    int minus_count() const;
    unsigned mask() const;
    OctantSignature mirrored() const;
    std::string label() const;

    /// True when every y_j is strictly on the sigma_j side of zero.
    bool contains(std::span<const double> y) const;
    /// Coordinate-wise sigma_j * z_j; maps T_{Gamma_sigma} onto the first-octant tube and back.
    std::vector<cplx> reflect(std::span<const cplx> z) const;

    bool operator==(const OctantSignature&) const = default;

private:
    std::vector<int> signs_;
};

} // namespace hafd::signal
