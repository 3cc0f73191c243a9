#include "hardyafd/signal/octant.hpp"

#include <algorithm>

namespace hafd::signal {

OctantSignature::OctantSignature(std::vector<int> signs) : signs_(std::move(signs)) {
    if (signs_.empty()) throw DimensionMismatch("octant signature needs at least one axis");
    for (int s : signs_) {
        if (s != 1 && s != -1) throw DomainError("octant signs must be +1 or -1");
    }
}

OctantSignature OctantSignature::parse(std::string_view text) {
    std::vector<int> signs;
    for (char c : text) {
        if (c == '+' || c == 'p') {
            signs.push_back(1);
        } else if (c == '-' || c == 'm') {
            signs.push_back(-1);
        } else {
            throw ParseError("bad octant signature '" + std::string(text) + "'");
        }
    }
    if (signs.empty()) throw ParseError("empty octant signature");
    return OctantSignature(std::move(signs));
}

std::vector<OctantSignature> OctantSignature::all(std::size_t n) {
    std::vector<OctantSignature> out;
    for (unsigned bits = 0; bits < (1u << n); ++bits) {
        std::vector<int> s(n);
        for (std::size_t j = 0; j < n; ++j) s[j] = (bits >> j) & 1u ? -1 : 1;
        out.emplace_back(std::move(s));
    }
    return out;
}

int OctantSignature::minus_count() const {
    return static_cast<int>(std::count(signs_.begin(), signs_.end(), -1));
}

unsigned OctantSignature::mask() const {
    unsigned m = 0;
    for (std::size_t j = 0; j < signs_.size(); ++j) {
        if (signs_[j] < 0) m |= 1u << j;
    }
    return m;
}

OctantSignature OctantSignature::mirrored() const {
    std::vector<int> s(signs_);
    for (int& v : s) v = -v;
    return OctantSignature(std::move(s));
}

std::string OctantSignature::label() const {
    std::string s;
    for (int v : signs_) s.push_back(v > 0 ? '+' : '-');
    return s;
}

bool OctantSignature::contains(std::span<const double> y) const {
    if (y.size() != signs_.size()) throw DimensionMismatch("point and signature differ in dimension");
    for (std::size_t j = 0; j < y.size(); ++j) {
        if (!(signs_[j] * y[j] > 0.0)) return false;
    }
    return true;
}

std::vector<cplx> OctantSignature::reflect(std::span<const cplx> z) const {
    if (z.size() != signs_.size()) throw DimensionMismatch("point and signature differ in dimension");
    std::vector<cplx> out(z.size());
    for (std::size_t j = 0; j < z.size(); ++j) out[j] = static_cast<double>(signs_[j]) * z[j];
    return out;
}

} // namespace hafd::signal
