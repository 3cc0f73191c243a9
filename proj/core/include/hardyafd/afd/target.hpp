#pragma once

#include "hardyafd/kernels/tube_point.hpp"
#include "hardyafd/signal/octant.hpp"
#include "hardyafd/signal/spectral_rep.hpp"

#include <utility>
#include <vector>

namespace hafd::afd {

/// A function F in the first-octant Hardy space, seen through its inner
/// products with dictionary elements. Components of other octants are
/// reflected into the first octant (z -> sigma z) before approximation.
class Target {
public:
    virtual ~Target() = default;

    virtual std::size_t dim() const = 0;
    virtual double norm_squared() const = 0;
    /// <F, phi_{alpha,u}> = d^alpha_x F(u).
    virtual cplx inner_phi(const kernels::MultiIndex& alpha, const kernels::TubePoint& u) const = 0;
    /// inner_phi on the tensor lattice axis_points[0] x axis_points[1], row-major.
    virtual std::vector<cplx> inner_phi_lattice(const kernels::MultiIndex& alpha,
                                                const std::vector<std::vector<cplx>>& axis_points) const;
    /// Octant in which results are reported.
    virtual signal::OctantSignature sigma() const { return signal::OctantSignature::first(dim()); }

    cplx value(const kernels::TubePoint& u) const { return inner_phi(kernels::MultiIndex::zero(dim()), u); }
};

/// F = sum_j a_j phi_{e_j}, evaluated in closed form.
class KernelSumTarget : public Target {
public:
    explicit KernelSumTarget(std::vector<std::pair<kernels::DictElement, cplx>> terms);
    /// phi_{0,b} / ||phi_{0,b}||.
    static KernelSumTarget normalized_kernel(const kernels::TubePoint& b, cplx scale = 1.0);

    std::size_t dim() const override { return dim_; }
    double norm_squared() const override { return norm2_; }
    cplx inner_phi(const kernels::MultiIndex& alpha, const kernels::TubePoint& u) const override;

    const std::vector<std::pair<kernels::DictElement, cplx>>& terms() const { return terms_; }
    /// F(w) for w in the closed first-octant tube.
    cplx evaluate(std::span<const cplx> w) const;

private:
    std::size_t dim_;
    std::vector<std::pair<kernels::DictElement, cplx>> terms_;
    double norm2_;
};

/// One Hardy component given by its Paley-Wiener density.
class SpectralTarget : public Target {
public:
    explicit SpectralTarget(signal::SpectralRep rep);

    std::size_t dim() const override { return rep_.dim(); }
    double norm_squared() const override { return norm2_; }
    cplx inner_phi(const kernels::MultiIndex& alpha, const kernels::TubePoint& u) const override;
    std::vector<cplx> inner_phi_lattice(const kernels::MultiIndex& alpha,
                                        const std::vector<std::vector<cplx>>& axis_points) const override;
    signal::OctantSignature sigma() const override { return rep_.sigma(); }

    const signal::SpectralRep& rep() const { return rep_; }

private:
    signal::SpectralRep rep_;
    double norm2_;
};

} // namespace hafd::afd
