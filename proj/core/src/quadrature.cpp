#include "hardyafd/numerics/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace hafd::numerics {

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();
// error estimates below this multiple of eps * L1 are accumulated rounding
constexpr double roundoff_floor = 1e3 * std::numeric_limits<double>::epsilon();

// Split points of `range`: interior breaks plus tail cut-offs for infinite ends.
std::vector<double> segments(const Interval& range, double tail_radius) {
    std::vector<double> pts;
    for (double b : range.breaks) {
        if (b > range.lo && b < range.hi) pts.push_back(b);
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    if (std::isinf(range.lo) || std::isinf(range.hi)) {
        double lo_anchor = pts.empty() ? (std::isinf(range.hi) ? (std::isinf(range.lo) ? 0.0 : range.lo) : range.hi)
                                       : pts.front();
        double hi_anchor = pts.empty() ? lo_anchor : pts.back();
        if (std::isinf(range.lo)) {
            const double cut = lo_anchor - tail_radius;
            if (std::isinf(range.hi) || cut < range.hi) pts.insert(pts.begin(), cut);
        }
        if (std::isinf(range.hi)) {
            const double cut = hi_anchor + tail_radius;
            if (std::isinf(range.lo) || cut > range.lo) pts.push_back(cut);
        }
        std::sort(pts.begin(), pts.end());
    }
    pts.insert(pts.begin(), range.lo);
    pts.push_back(range.hi);
    return pts;
}

} // namespace

Interval Interval::real_line(std::vector<double> breaks) { return {-inf, inf, std::move(breaks)}; }

Interval Interval::half_line(double lo, std::vector<double> breaks) { return {lo, inf, std::move(breaks)}; }

Domain Domain::line(Interval axis) { return {std::move(axis), {}}; }

Domain Domain::product(Interval outer, Interval inner) {
    return {std::move(outer), [inner = std::move(inner)](double) { return inner; }};
}

Domain Domain::nested(Interval outer, std::function<Interval(double)> inner) {
    return {std::move(outer), std::move(inner)};
}

namespace {

QuadratureResult integrate_unchecked(const std::function<cplx(double)>& f, const Interval& range,
                                     const QuadratureSpec& spec) {
    if (!(spec.rel_tol > 0.0) || !(spec.abs_tol > 0.0) || !(spec.tail_radius > 0.0)) {
        throw DomainError("quadrature tolerances and tail radius must be positive");
    }
    QuadratureResult total{cplx{}, 0.0, 0.0};
    if (!(range.lo < range.hi)) return total;
    using boost::math::quadrature::gauss_kronrod;
    const auto pts = segments(range, spec.tail_radius);
    for (std::size_t s = 0; s + 1 < pts.size(); ++s) {
        if (!(pts[s] < pts[s + 1])) continue;
        double err = 0.0;
        double l1 = 0.0;
        const cplx piece =
            gauss_kronrod<double, 15>::integrate(f, pts[s], pts[s + 1], spec.max_depth, 0.25 * spec.rel_tol, &err, &l1);
        total.value += piece;
        total.error += err;
        total.l1 += l1;
    }
    return total;
}

bool within(const QuadratureResult& r, double abs_tol, double rel_tol) {
    return std::isfinite(r.value.real()) && std::isfinite(r.value.imag()) &&
           r.error <= std::max({abs_tol, rel_tol * r.l1, roundoff_floor * r.l1});
}

[[noreturn]] void fail(const QuadratureResult& r) {
    std::ostringstream msg;
    msg.precision(3);
    msg << "quadrature tolerance not reached: estimate " << r.value << ", error bound " << r.error << ", L1 " << r.l1;
    throw QuadratureError(msg.str(), r.value, r.error);
}

} // namespace

QuadratureResult integrate(const std::function<cplx(double)>& f, const Interval& range, const QuadratureSpec& spec) {
    const auto r = integrate_unchecked(f, range, spec);
    if (!within(r, spec.abs_tol, spec.rel_tol)) fail(r);
    return r;
}

cplx integrate_nd(const std::function<cplx(std::span<const double>)>& f, const Domain& domain,
                  const QuadratureSpec& spec) {
    if (domain.dim() == 1) {
        return integrate([&](double t) { return f(std::span<const double>(&t, 1)); }, domain.outer, spec).value;
    }
    QuadratureSpec inner_spec = spec;
    inner_spec.rel_tol = spec.rel_tol * 0.1;
    inner_spec.abs_tol = spec.abs_tol * 0.1;
    // inner errors are judged after the fact against the largest inner integral,
    // so that negligible tail slices do not have to meet a relative tolerance
    std::vector<QuadratureResult> inner;
    auto outer = [&](double u) {
        const Interval range = domain.inner(u);
        inner.push_back(integrate_unchecked(
            [&](double v) {
                const double p[2] = {u, v};
                return f(std::span<const double>(p, 2));
            },
            range, inner_spec));
        return inner.back().value;
    };
    const auto result = integrate(outer, domain.outer, spec);
    double peak = 0.0;
    for (const auto& r : inner) peak = std::max(peak, r.l1);
    for (const auto& r : inner) {
        if (!within(r, std::max(inner_spec.abs_tol, inner_spec.rel_tol * peak), inner_spec.rel_tol)) fail(r);
    }
    return result.value;
}

} // namespace hafd::numerics
