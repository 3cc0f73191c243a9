#include "hardyafd/signal/hardy.hpp"

#include "hardyafd/numerics/dft.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <string>

namespace hafd::signal {

namespace {

using numerics::Axis;
using numerics::Grid;

// Placement of one octant's half-spectrum inside the padded spectrum, for one axis.
struct AxisMap {
    FreqAxis axis;
    std::vector<std::size_t> src;
    std::vector<double> weight;
    std::vector<cplx> phase;
};

AxisMap axis_map(const Axis& padded, int sign) {
    const std::size_t m = padded.count;
    const std::size_t half = m / 2;
    const double dt = 1.0 / padded.extent();
    AxisMap map;
    map.axis = {sign > 0 ? 0.0 : -static_cast<double>(half) * dt, dt, half + 1};
    map.src.resize(half + 1);
    map.weight.assign(half + 1, 1.0);
    map.phase.assign(half + 1, cplx{1.0, 0.0});
    map.weight.front() = 0.5;
    map.weight.back() = 0.5;
    for (std::size_t i = 0; i <= half; ++i) {
        if (sign > 0) {
            map.src[i] = i < half ? half + i : 0;
        } else {
            map.src[i] = i;
        }
    }
    if (sign > 0) {
        // the -M/2 bin moved to +M/2 keeps its grid values only with this phase
        double frac = padded.start / padded.spacing;
        frac -= std::round(frac);
        map.phase.back() = std::polar(1.0, -2.0 * pi * frac);
    }
    return map;
}

struct Padded {
    Grid grid;
    std::vector<std::size_t> offset;
    std::vector<std::size_t> count;
};

Padded pad_layout(const Grid& g, std::size_t factor) {
    Padded p;
    std::vector<Axis> axes;
    for (const Axis& a : g.axes()) {
        const std::size_t m = a.count * factor;
        const std::size_t off = (m - a.count) / 2;
        axes.push_back({a.start - static_cast<double>(off) * a.spacing, a.spacing, m});
        p.offset.push_back(off);
        p.count.push_back(a.count);
    }
    p.grid = Grid(std::move(axes));
    return p;
}

numerics::Spectrum padded_transform(const BoundarySamples& s, const Padded& p) {
    std::vector<cplx> buf(p.grid.size());
    if (s.grid.dim() == 1) {
        std::copy(s.values.begin(), s.values.end(), buf.begin() + static_cast<std::ptrdiff_t>(p.offset[0]));
    } else {
        const std::size_t m1 = p.grid.axis(1).count;
        for (std::size_t i = 0; i < p.count[0]; ++i) {
            for (std::size_t j = 0; j < p.count[1]; ++j) {
                buf[(i + p.offset[0]) * m1 + j + p.offset[1]] = s.values[i * p.count[1] + j];
            }
        }
    }
    return numerics::dft_forward(p.grid, buf);
}

SpectralRep extract(const numerics::Spectrum& spec, const Padded& p, const OctantSignature& sigma) {
    std::vector<AxisMap> maps;
    std::vector<FreqAxis> axes;
    for (std::size_t j = 0; j < p.grid.dim(); ++j) {
        maps.push_back(axis_map(p.grid.axis(j), sigma[j]));
        axes.push_back(maps.back().axis);
    }
    std::vector<cplx> density;
    if (maps.size() == 1) {
        const AxisMap& a = maps[0];
        density.resize(a.src.size());
        for (std::size_t i = 0; i < a.src.size(); ++i) density[i] = a.phase[i] * spec.values[a.src[i]];
    } else {
        const AxisMap& a = maps[0];
        const AxisMap& b = maps[1];
        const std::size_t m1 = p.grid.axis(1).count;
        density.resize(a.src.size() * b.src.size());
        for (std::size_t i = 0; i < a.src.size(); ++i) {
            for (std::size_t j = 0; j < b.src.size(); ++j) {
                density[i * b.src.size() + j] = a.phase[i] * b.phase[j] * spec.values[a.src[i] * m1 + b.src[j]];
            }
        }
    }
    std::vector<std::vector<double>> weights;
    for (AxisMap& a : maps) weights.push_back(std::move(a.weight));
    SourceLayout src{p.grid, p.offset, p.count};
    return SpectralRep(sigma, std::move(axes), std::move(density), std::move(weights), std::move(src));
}

void embed(const SpectralRep& r, std::vector<cplx>& full) {
    const SourceLayout& src = *r.source();
    std::vector<AxisMap> maps;
    for (std::size_t j = 0; j < r.dim(); ++j) maps.push_back(axis_map(src.padded.axis(j), r.sigma()[j]));
    const auto& d = r.density();
    if (maps.size() == 1) {
        for (std::size_t i = 0; i < maps[0].src.size(); ++i) full[maps[0].src[i]] += r.weight(0, i) * d[i] * std::conj(maps[0].phase[i]);
    } else {
        const AxisMap& a = maps[0];
        const AxisMap& b = maps[1];
        const std::size_t m1 = src.padded.axis(1).count;
        for (std::size_t i = 0; i < a.src.size(); ++i) {
            for (std::size_t j = 0; j < b.src.size(); ++j) {
                full[a.src[i] * m1 + b.src[j]] += r.weight(0, i) * r.weight(1, j) * d[i * b.src.size() + j] *
                                                  std::conj(a.phase[i]) * std::conj(b.phase[j]);
            }
        }
    }
}

BoundarySamples crop(const SourceLayout& src, const std::vector<cplx>& full) {
    BoundarySamples out;
    out.grid = src.window();
    out.values.resize(out.grid.size());
    if (src.padded.dim() == 1) {
        for (std::size_t i = 0; i < src.window_count[0]; ++i) out.values[i] = full[i + src.window_offset[0]];
    } else {
        const std::size_t m1 = src.padded.axis(1).count;
        for (std::size_t i = 0; i < src.window_count[0]; ++i) {
            for (std::size_t j = 0; j < src.window_count[1]; ++j) {
                out.values[i * src.window_count[1] + j] =
                    full[(i + src.window_offset[0]) * m1 + j + src.window_offset[1]];
            }
        }
    }
    return out;
}

std::size_t resolve_pad(const Grid& g, const ProjectOptions& opt) {
    const std::size_t p = opt.pad_factor == 0 ? default_pad_factor(g) : opt.pad_factor;
    if (!numerics::is_power_of_two(p)) throw DomainError("pad factor must be a power of two");
    return p;
}

void check_inside(const SpectralRep& r, std::span<const cplx> z) {
    if (z.size() != r.dim()) throw DimensionMismatch("evaluation point has wrong dimension");
    for (std::size_t j = 0; j < z.size(); ++j) {
        if (!(r.sigma()[j] * z[j].imag() > 0.0)) {
            throw DomainError("evaluation point is not inside the tube of octant " + r.sigma().label());
        }
    }
}

cplx ipow(cplx b, int e) {
    cplx r{1.0, 0.0};
    for (int k = 0; k < e; ++k) r *= b;
    return r;
}

// w_k dt (2 pi i t_k)^alpha e^{2 pi i z t_k} along one axis.
Eigen::VectorXcd axis_factor(const SpectralRep& r, std::size_t j, int alpha, cplx z) {
    const FreqAxis& a = r.axes()[j];
    Eigen::VectorXcd v(static_cast<Eigen::Index>(a.count));
    const cplx two_pi_i = 2.0 * pi * I;
    for (std::size_t k = 0; k < a.count; ++k) {
        const double t = a.at(k);
        cplx f = r.weight(j, k) * a.step * std::exp(two_pi_i * z * t);
        if (alpha > 0) f *= ipow(two_pi_i * t, alpha);
        v[static_cast<Eigen::Index>(k)] = f;
    }
    return v;
}

} // namespace

void BoundarySamples::validate() const {
    if (values.size() != grid.size()) throw DimensionMismatch("sample count does not match grid");
    for (const cplx& v : values) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) throw DomainError("non-finite sample");
        if (declared_real && v.imag() != 0.0) throw DomainError("declared-real samples have imaginary parts");
    }
}

std::size_t default_pad_factor(const Grid& grid) {
    constexpr std::size_t budget = std::size_t{1} << 22;
    std::size_t p = 16;
    while (p > 1) {
        std::size_t total = grid.size();
        for (std::size_t j = 0; j < grid.dim(); ++j) total *= p;
        if (total <= budget) break;
        p /= 2;
    }
    return p;
}

SpectralRep hardy_project(const BoundarySamples& s, const OctantSignature& sigma, const ProjectOptions& opt) {
    s.validate();
    if (sigma.dim() != s.grid.dim()) throw DimensionMismatch("signature and samples differ in dimension");
    const Padded p = pad_layout(s.grid, resolve_pad(s.grid, opt));
    return extract(padded_transform(s, p), p, sigma);
}

std::vector<SpectralRep> hardy_split(const BoundarySamples& s, const ProjectOptions& opt) {
    s.validate();
    const Padded p = pad_layout(s.grid, resolve_pad(s.grid, opt));
    const auto spec = padded_transform(s, p);
    std::vector<SpectralRep> out;
    for (const auto& sigma : OctantSignature::all(s.grid.dim())) out.push_back(extract(spec, p, sigma));
    return out;
}

BoundarySamples reconstruct(std::span<const SpectralRep> components) {
    if (components.empty()) throw DimensionMismatch("no components to reconstruct");
    const std::size_t n = components.front().dim();
    if (components.size() != (std::size_t{1} << n)) {
        throw DimensionMismatch("expected " + std::to_string(1u << n) + " components, got " +
                                std::to_string(components.size()));
    }
    std::vector<bool> seen(components.size(), false);
    for (const auto& c : components) {
        if (c.dim() != n || !c.source()) throw DimensionMismatch("component lacks a compatible sample layout");
        if (!(c.source()->padded == components.front().source()->padded) ||
            c.source()->window_offset != components.front().source()->window_offset) {
            throw DimensionMismatch("components come from different grids");
        }
        const unsigned m = c.sigma().mask();
        if (seen[m]) throw DomainError("duplicate octant " + c.sigma().label());
        seen[m] = true;
    }
    const SourceLayout& src = *components.front().source();
    std::vector<cplx> full(src.padded.size());
    for (const auto& c : components) embed(c, full);
    return crop(src, numerics::dft_inverse({src.padded, std::move(full)}));
}

BoundarySamples boundary_values(const SpectralRep& r) {
    if (!r.source()) throw DomainError("spectral representation has no sample layout");
    const SourceLayout& src = *r.source();
    std::vector<cplx> full(src.padded.size());
    embed(r, full);
    return crop(src, numerics::dft_inverse({src.padded, std::move(full)}));
}

cplx eval_F(const SpectralRep& r, std::span<const cplx> z) {
    return eval_dF(r, kernels::MultiIndex::zero(r.dim()), z);
}

cplx eval_dF(const SpectralRep& r, const kernels::MultiIndex& alpha, std::span<const cplx> z) {
    check_inside(r, z);
    if (alpha.dim() != r.dim()) throw DimensionMismatch("multi-index has wrong dimension");
    const Eigen::VectorXcd e0 = axis_factor(r, 0, alpha[0], z[0]);
    if (r.dim() == 1) {
        const Eigen::Map<const Eigen::VectorXcd> d(r.density().data(), e0.size());
        return e0.cwiseProduct(d).sum();
    }
    const Eigen::VectorXcd e1 = axis_factor(r, 1, alpha[1], z[1]);
    using RowMat = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
    const Eigen::Map<const RowMat> d(r.density().data(), e0.size(), e1.size());
    return (e0.transpose() * d * e1)(0, 0);
}

std::vector<cplx> eval_dF_lattice(const SpectralRep& r, const kernels::MultiIndex& alpha,
                                  const std::vector<std::vector<cplx>>& axis_points) {
    if (axis_points.size() != r.dim() || alpha.dim() != r.dim()) {
        throw DimensionMismatch("lattice has wrong dimension");
    }
    using RowMat = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
    std::vector<RowMat> e;
    for (std::size_t j = 0; j < r.dim(); ++j) {
        RowMat m(static_cast<Eigen::Index>(axis_points[j].size()), static_cast<Eigen::Index>(r.axes()[j].count));
        for (std::size_t p = 0; p < axis_points[j].size(); ++p) {
            if (!(r.sigma()[j] * axis_points[j][p].imag() > 0.0)) {
                throw DomainError("lattice point is not inside the tube of octant " + r.sigma().label());
            }
            m.row(static_cast<Eigen::Index>(p)) = axis_factor(r, j, alpha[j], axis_points[j][p]).transpose();
        }
        e.push_back(std::move(m));
    }
    std::vector<cplx> out;
    if (r.dim() == 1) {
        const Eigen::Map<const Eigen::VectorXcd> d(r.density().data(), e[0].cols());
        const Eigen::VectorXcd v = e[0] * d;
        out.assign(v.data(), v.data() + v.size());
    } else {
        const Eigen::Map<const RowMat> d(r.density().data(), e[0].cols(), e[1].cols());
        const RowMat v = e[0] * d * e[1].transpose();
        out.assign(v.data(), v.data() + v.size());
    }
    return out;
}

double norm_F(const SpectralRep& r) {
    double cell = 1.0;
    for (const auto& a : r.axes()) cell *= a.step;
    double s = 0.0;
    const auto& d = r.density();
    if (r.dim() == 1) {
        for (std::size_t k = 0; k < d.size(); ++k) s += r.weight(0, k) * std::norm(d[k]);
    } else {
        const std::size_t n1 = r.axes()[1].count;
        for (std::size_t k = 0; k < d.size(); ++k) s += r.weight(0, k / n1) * r.weight(1, k % n1) * std::norm(d[k]);
    }
    return std::sqrt(cell * s);
}

} // namespace hafd::signal
