#pragma once

#include "hardyafd/common.hpp"

#include <functional>
#include <span>
#include <vector>

namespace hafd::numerics {

struct QuadratureSpec {
    double rel_tol = 1e-9;
    double abs_tol = 1e-14;
    /// Infinite ranges are split this far beyond the outermost breakpoint; the
    /// remaining tails are mapped to finite intervals by substitution.
    double tail_radius = 1.0;
    unsigned max_depth = 18;
};

/// A one-dimensional range, possibly infinite at either end, with interior
/// points where the integrand is peaked or non-smooth.
struct Interval {
    double lo;
    double hi;
    std::vector<double> breaks{};

    static Interval real_line(std::vector<double> breaks = {});
    static Interval half_line(double lo = 0.0, std::vector<double> breaks = {});
};

/// Integration domain in one or two dimensions. In 2-D the inner range may
/// depend on the outer coordinate (used for cones).
struct Domain {
    Interval outer;
    std::function<Interval(double)> inner{};

    std::size_t dim() const { return inner ? 2 : 1; }

    static Domain line(Interval axis);
    static Domain product(Interval outer, Interval inner);
    static Domain nested(Interval outer, std::function<Interval(double)> inner);
};

/// Raised when the error estimate exceeds the requested tolerance at the
/// configured refinement depth.
class QuadratureError : public Error {
public:
    QuadratureError(const std::string& what, cplx estimate, double error_bound)
        : Error(what), estimate_(estimate), error_bound_(error_bound) {}

    cplx estimate() const { return estimate_; }
    double error_bound() const { return error_bound_; }

private:
    cplx estimate_;
    double error_bound_;
};

struct QuadratureResult {
    cplx value;
    double error;
    double l1; ///< integral of |f|, the scale the relative tolerance refers to
};

/// Adaptive Gauss-Kronrod over a 1-D interval; throws QuadratureError.
QuadratureResult integrate(const std::function<cplx(double)>& f, const Interval& range,
                           const QuadratureSpec& spec = {});

/// Iterated adaptive integration over a 1-D or 2-D domain. The integrand
/// receives a point of length domain.dim().
cplx integrate_nd(const std::function<cplx(std::span<const double>)>& f, const Domain& domain,
                  const QuadratureSpec& spec = {});

} // namespace hafd::numerics
