#include "hardyafd/afd/search.hpp"

#include "hardyafd/afd/errors.hpp"
#include "hardyafd/afd/escalation.hpp"
#include "hardyafd/kernels/kernels.hpp"
#include "search_detail.hpp"

#include <gsl/gsl_multimin.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <string>

namespace hafd::afd {

using kernels::DictElement;
using kernels::MultiIndex;
using kernels::TubePoint;

SearchConfig SearchConfig::for_grid(const numerics::Grid& grid, std::size_t nx, std::size_t ny) {
    SearchConfig cfg;
    for (const auto& a : grid.axes()) {
        cfg.x.push_back({a.start, a.start + a.spacing * static_cast<double>(a.count - 1), nx});
        cfg.y.push_back({a.spacing, a.extent(), ny});
    }
    return cfg;
}

SearchConfig SearchConfig::box(std::size_t dim, double x_lo, double x_hi, double y_lo, double y_hi, std::size_t nx,
                               std::size_t ny) {
    SearchConfig cfg;
    for (std::size_t j = 0; j < dim; ++j) {
        cfg.x.push_back({x_lo, x_hi, nx});
        cfg.y.push_back({y_lo, y_hi, ny});
    }
    return cfg;
}

void SearchConfig::validate() const {
    if (x.empty() || x.size() != y.size() || x.size() > 2) throw DimensionMismatch("lattice needs 1 or 2 axes");
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (x[j].count == 0 || y[j].count == 0) throw DomainError("lattice axes must be non-empty");
        if (!(x[j].hi >= x[j].lo)) throw DomainError("lattice x-range is reversed");
        if (!(y[j].lo > 0.0) || !(y[j].hi >= y[j].lo)) throw DomainError("lattice y-range must lie inside the cone");
    }
    if (!(degeneracy > 0.0 && degeneracy < 1.0)) throw DomainError("degeneracy threshold must lie in (0, 1)");
    if (order_cap < 0) throw DomainError("order cap must be non-negative");
}

double SearchConfig::merge_eps() const {
    if (merge_radius > 0.0) return merge_radius;
    double h = std::numeric_limits<double>::infinity();
    for (const auto& a : x) {
        if (a.count > 1) h = std::min(h, (a.hi - a.lo) / static_cast<double>(a.count - 1));
    }
    if (!std::isfinite(h) || h <= 0.0) h = 1.0;
    return 1e-6 * h;
}

std::vector<std::vector<cplx>> SearchConfig::lattice() const {
    validate();
    std::vector<std::vector<cplx>> out;
    for (std::size_t j = 0; j < x.size(); ++j) {
        std::vector<cplx> pts;
        for (std::size_t a = 0; a < x[j].count; ++a) {
            const double xv = x[j].count == 1
                                  ? 0.5 * (x[j].lo + x[j].hi)
                                  : x[j].lo + (x[j].hi - x[j].lo) * static_cast<double>(a) / (x[j].count - 1);
            for (std::size_t b = 0; b < y[j].count; ++b) {
                const double yv =
                    y[j].count == 1
                        ? std::sqrt(y[j].lo * y[j].hi)
                        : y[j].lo * std::pow(y[j].hi / y[j].lo, static_cast<double>(b) / (y[j].count - 1));
                pts.emplace_back(xv, yv);
            }
        }
        out.push_back(std::move(pts));
    }
    return out;
}

unsigned SearchConfig::worker_count() const {
    unsigned w = threads != 0 ? threads : std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("AFD_THREADS")) {
        const long cap = std::strtol(env, nullptr, 10);
        if (cap > 0) w = std::min(w, static_cast<unsigned>(cap));
    }
    return std::max(1u, w);
}

double correlation_objective(const Residual& r, const DictElement& e, cplx f_phi) {
    const Eigen::VectorXcd u = r.system.overlaps(e);
    const double phi2 = kernels::phi_norm_squared(e.alpha, e.z.ys());
    const double remaining = 1.0 - u.squaredNorm() / phi2;
    if (!(remaining >= r.system.degeneracy())) return 0.0;
    cplx num = f_phi;
    for (Eigen::Index k = 0; k < u.size(); ++k) num -= std::conj(u[k]) * r.coeffs[static_cast<std::size_t>(k)];
    return std::abs(num) / std::sqrt(phi2 * remaining);
}

double correlation_objective(const Residual& r, const DictElement& e) {
    return correlation_objective(r, e, r.target.inner_phi(e.alpha, e.z));
}

double correlation_objective_at(const Residual& r, const TubePoint& z, const SearchConfig& cfg) {
    const auto history = r.system.points();
    try {
        const Escalation esc = escalate_order(history, z, cfg.merge_eps(), cfg.order_cap);
        return correlation_objective(r, DictElement(esc.alpha, esc.point));
    } catch (const DictionaryExhausted&) {
        return 0.0;
    }
}

namespace detail {

namespace {

struct SimplexData {
    const std::function<double(const TubePoint&)>* f;
    std::size_t dim;
};

TubePoint decode(const gsl_vector* v, std::size_t dim) {
    std::vector<cplx> z(dim);
    for (std::size_t j = 0; j < dim; ++j) z[j] = {gsl_vector_get(v, 2 * j), std::exp(gsl_vector_get(v, 2 * j + 1))};
    return TubePoint(std::move(z));
}

double simplex_cost(const gsl_vector* v, void* params) {
    const auto* d = static_cast<const SimplexData*>(params);
    for (std::size_t j = 0; j < d->dim; ++j) {
        const double x = gsl_vector_get(v, 2 * j);
        const double log_y = gsl_vector_get(v, 2 * j + 1);
        if (!std::isfinite(x) || !std::isfinite(log_y) || std::abs(log_y) > 600.0) return 0.0;
    }
    const double val = (*d->f)(decode(v, d->dim));
    return std::isfinite(val) ? -val : 0.0;
}

} // namespace

Refined refine_simplex(const TubePoint& start, const std::function<double(const TubePoint&)>& f,
                       const SearchConfig& cfg) {
    const std::size_t n = start.dim();
    SimplexData data{&f, n};
    gsl_multimin_function fn{&simplex_cost, 2 * n, &data};

    gsl_vector* x = gsl_vector_alloc(2 * n);
    gsl_vector* step = gsl_vector_alloc(2 * n);
    for (std::size_t j = 0; j < n; ++j) {
        gsl_vector_set(x, 2 * j, start.x(j));
        gsl_vector_set(x, 2 * j + 1, std::log(start.y(j)));
        const auto& xr = cfg.x[j];
        const auto& yr = cfg.y[j];
        const double hx = xr.count > 1 ? (xr.hi - xr.lo) / static_cast<double>(xr.count - 1) : 1.0;
        const double hy = yr.count > 1 ? std::log(yr.hi / yr.lo) / static_cast<double>(yr.count - 1) : 0.5;
        gsl_vector_set(step, 2 * j, 0.5 * (hx > 0 ? hx : 1.0));
        gsl_vector_set(step, 2 * j + 1, 0.5 * (hy > 0 ? hy : 0.5));
    }
    gsl_multimin_fminimizer* s = gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, 2 * n);
    gsl_multimin_fminimizer_set(s, &fn, x, step);
    for (int it = 0; it < cfg.refine_iterations; ++it) {
        if (gsl_multimin_fminimizer_iterate(s) != GSL_SUCCESS) break;
        if (gsl_multimin_test_size(gsl_multimin_fminimizer_size(s), cfg.refine_tol) == GSL_SUCCESS) break;
    }
    Refined out{decode(gsl_multimin_fminimizer_x(s), n), -gsl_multimin_fminimizer_minimum(s)};
    gsl_multimin_fminimizer_free(s);
    gsl_vector_free(step);
    gsl_vector_free(x);
    return out;
}

std::size_t lattice_size(const std::vector<std::vector<cplx>>& axes) {
    std::size_t n = 1;
    for (const auto& a : axes) n *= a.size();
    return n;
}

TubePoint lattice_point(const std::vector<std::vector<cplx>>& axes, std::size_t flat) {
    if (axes.size() == 1) return TubePoint({axes[0][flat]});
    const std::size_t n1 = axes[1].size();
    return TubePoint({axes[0][flat / n1], axes[1][flat % n1]});
}

std::vector<std::size_t> top_indices(const std::vector<double>& v, std::size_t k) {
    std::vector<std::size_t> idx(v.size());
    std::iota(idx.begin(), idx.end(), 0);
    k = std::min(k, v.size());
    std::partial_sort(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(k), idx.end(),
                      [&](std::size_t a, std::size_t b) { return v[a] > v[b] || (v[a] == v[b] && a < b); });
    idx.resize(k);
    return idx;
}

} // namespace detail

Selection msp_select(const Residual& r, const SearchConfig& cfg) {
    cfg.validate();
    if (cfg.dim() != r.target.dim()) throw DimensionMismatch("search lattice and target differ in dimension");
    const auto axes = cfg.lattice();
    const std::size_t total = detail::lattice_size(axes);
    const double eps = cfg.merge_eps();
    const auto history = r.system.points();

    const auto f_phi = r.target.inner_phi_lattice(MultiIndex::zero(cfg.dim()), axes);
    std::vector<double> values(total, 0.0);
    detail::parallel_for(total, cfg.worker_count(), [&](std::size_t i) {
        const TubePoint z = detail::lattice_point(axes, i);
        bool near = false;
        for (const auto& p : history) near = near || kernels::distance(p, z) <= eps;
        if (near) {
            values[i] = correlation_objective_at(r, z, cfg);
        } else {
            values[i] = correlation_objective(r, DictElement(MultiIndex::zero(cfg.dim()), z), f_phi[i]);
        }
    });

    Selection best;
    std::size_t best_idx = 0;
    for (std::size_t i = 0; i < total; ++i) {
        if (values[i] > values[best_idx]) best_idx = i;
    }
    best.lattice_best = values[best_idx];
    best.objective = values[best_idx];
    best.element = DictElement(MultiIndex::zero(cfg.dim()), detail::lattice_point(axes, best_idx));

    // already selected points, offered at their next derivative order
    for (std::size_t h = 0; h < history.size(); ++h) {
        bool first = true;
        for (std::size_t g = 0; g < h; ++g) first = first && kernels::distance(history[g], history[h]) > eps;
        if (!first) continue;
        try {
            const Escalation esc = escalate_order(history, history[h], eps, cfg.order_cap);
            const DictElement e(esc.alpha, esc.point);
            const double v = correlation_objective(r, e);
            if (v > best.objective) best = {e, v, best.lattice_best};
            best.lattice_best = std::max(best.lattice_best, v);
        } catch (const DictionaryExhausted&) {
        }
    }

    const double scale = std::max(1.0, std::sqrt(r.target.norm_squared()));
    if (best.lattice_best < cfg.zero_threshold * scale) {
        throw ResidualZero("residual numerically zero: best correlation " + std::to_string(best.lattice_best));
    }

    const std::function<double(const TubePoint&)> objective = [&](const TubePoint& z) {
        return correlation_objective_at(r, z, cfg);
    };
    for (std::size_t i : detail::top_indices(values, cfg.refine_starts)) {
        if (values[i] <= 0.0) continue;
        const auto refined = detail::refine_simplex(detail::lattice_point(axes, i), objective, cfg);
        if (refined.value > best.objective) {
            const Escalation esc = escalate_order(history, refined.z, eps, cfg.order_cap);
            const DictElement e(esc.alpha, esc.point);
            const double v = correlation_objective(r, e);
            if (v > best.objective) {
                best.element = e;
                best.objective = v;
            }
        }
    }
    return best;
}

} // namespace hafd::afd
