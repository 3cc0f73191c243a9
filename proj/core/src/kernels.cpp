#include "hardyafd/kernels/kernels.hpp"

#include <array>
#include <cmath>
#include <string>

namespace hafd::kernels {

namespace {

constexpr int exact_limit = 20;

constexpr std::array<double, exact_limit + 1> factorials = [] {
    std::array<double, exact_limit + 1> f{};
    f[0] = 1.0;
    for (int k = 1; k <= exact_limit; ++k) f[k] = f[k - 1] * k;
    return f;
}();

cplx ipow(cplx base, int e) {
    cplx r{1.0, 0.0};
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

// k! / d^(k+1), in log space once k! leaves the exact range
cplx fact_over_power(int k, cplx d) {
    if (k <= exact_limit) return factorials[k] / ipow(d, k + 1);
    return std::exp(log_factorial(k) - static_cast<double>(k + 1) * std::log(d));
}

const cplx minus_inv_2pi_i = -1.0 / (2.0 * pi * I);

void same_dim(std::size_t a, std::size_t b) {
    if (a != b) {
        throw DimensionMismatch("dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
    }
}

} // namespace

double log_factorial(int k) {
    if (k < 0) throw DomainError("negative factorial argument");
    if (k <= exact_limit) return std::log(factorials[k]);
    return std::lgamma(static_cast<double>(k) + 1.0);
}

cplx szego(std::span<const cplx> w, const TubePoint& z) {
    same_dim(w.size(), z.dim());
    cplx r{1.0, 0.0};
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (w[k].imag() < 0.0) throw DomainError("kernel argument below the real boundary");
        r *= minus_inv_2pi_i / (w[k] - std::conj(z.z(k)));
    }
    return r;
}

double poisson(std::span<const double> x, std::span<const double> y) {
    same_dim(x.size(), y.size());
    double r = 1.0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        if (!(y[k] > 0.0)) throw DomainError("Poisson kernel needs y > 0");
        r *= y[k] / (pi * (x[k] * x[k] + y[k] * y[k]));
    }
    return r;
}

cplx phi_eval(const DictElement& e, std::span<const cplx> w) {
    same_dim(w.size(), e.dim());
    cplx r{1.0, 0.0};
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (w[k].imag() < 0.0) throw DomainError("kernel argument below the real boundary");
        r *= minus_inv_2pi_i * fact_over_power(e.alpha[k], w[k] - std::conj(e.z.z(k)));
    }
    return r;
}

double phi_lp_norm(const MultiIndex& alpha, std::span<const double> y, double p) {
    same_dim(alpha.dim(), y.size());
    double log_r = 0.5 * static_cast<double>(y.size()) * std::log(pi);
    for (std::size_t j = 0; j < y.size(); ++j) {
        const double s = p * (alpha[j] + 1);
        if (!(s > 1.0) || !std::isfinite(p)) throw DomainError("need p(alpha_j+1) > 1 and finite p");
        if (!(y[j] > 0.0)) throw DomainError("y must be positive");
        log_r += std::lgamma(0.5 * s - 0.5) - std::lgamma(0.5 * s) - (s - 1.0) * std::log(y[j]);
    }
    return std::exp(log_r);
}

double phi_norm_squared(const MultiIndex& alpha, std::span<const double> y) {
    return phi_norm_squared_uncorrected(alpha, y) / std::pow(2.0 * pi, static_cast<double>(y.size()));
}

double phi_norm(const MultiIndex& alpha, std::span<const double> y) { return std::sqrt(phi_norm_squared(alpha, y)); }

double phi_norm_squared_uncorrected(const MultiIndex& alpha, std::span<const double> y) {
    same_dim(alpha.dim(), y.size());
    double log_r = 0.0;
    for (std::size_t j = 0; j < y.size(); ++j) {
        if (!(y[j] > 0.0)) throw DomainError("y must be positive");
        log_r += log_factorial(2 * alpha[j]) - (2.0 * alpha[j] + 1.0) * std::log(2.0 * y[j]);
    }
    return std::exp(log_r);
}

cplx ip_phi_phi(const DictElement& e1, const DictElement& e2) {
    same_dim(e1.dim(), e2.dim());
    cplx r{1.0, 0.0};
    for (std::size_t k = 0; k < e1.dim(); ++k) {
        const int a = e1.alpha[k];
        const int b = e2.alpha[k];
        const double sign = (b % 2 == 0) ? 1.0 : -1.0;
        r *= minus_inv_2pi_i * sign * fact_over_power(a + b, e2.z.z(k) - std::conj(e1.z.z(k)));
    }
    return r;
}

double ip_kernel_phi_normalized(const TubePoint& w, const DictElement& e) {
    same_dim(w.dim(), e.dim());
    double log_r = 0.0;
    for (std::size_t j = 0; j < w.dim(); ++j) {
        const int a = e.alpha[j];
        const double y = e.z.y(j);
        const double dist = std::abs(e.z.z(j) - std::conj(w.z(j)));
        log_r += -0.5 * std::log(2.0 * pi) + (a + 0.5) * std::log(2.0 * y) + log_factorial(a) -
                 (a + 1.0) * std::log(dist) - 0.5 * log_factorial(2 * a);
    }
    return std::exp(log_r);
}

} // namespace hafd::kernels
