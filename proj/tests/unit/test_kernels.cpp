#include "hardyafd/kernels/kernels.hpp"
#include "hardyafd/numerics/quadrature.hpp"

#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

using namespace hafd;
using namespace hafd::kernels;

namespace {

TubePoint tp(std::vector<cplx> z) { return TubePoint(std::move(z)); }

DictElement el(std::vector<int> alpha, std::vector<cplx> z) { return {MultiIndex(std::move(alpha)), tp(std::move(z))}; }

bool close(cplx a, cplx b, double rel) { return std::abs(a - b) <= rel * std::abs(b); }

} // namespace

TEST_SUITE("kernels") {

TEST_CASE("tube points and multi-indices validate their input") {
    CHECK_THROWS_AS(tp({cplx{0.0, -1.0}}), DomainError);
    CHECK_THROWS_AS(tp({cplx{0.0, 0.0}}), DomainError);
    CHECK_THROWS_AS(MultiIndex({-1}), DomainError);
    CHECK(MultiIndex({2, 1}).order() == 3);
    CHECK(distance(tp({I}), tp({cplx{3.0, 5.0}})) == doctest::Approx(5.0));
}

TEST_CASE("szego kernel on the diagonal") {
    const cplx w1[] = {I};
    CHECK(close(szego(w1, tp({I})), cplx{1.0 / (4.0 * pi)}, 1e-15));
    const cplx w2[] = {I, I};
    CHECK(close(szego(w2, tp({I, I})), cplx{1.0 / (16.0 * pi * pi)}, 1e-15));

    const double diag = numerics::integrate([](double t) { return cplx{std::exp(-4.0 * pi * t)}; },
                                            numerics::Interval::half_line())
                            .value.real();
    CHECK(szego(w1, tp({I})).real() == doctest::Approx(diag).epsilon(1e-10));
}

TEST_CASE("szego kernel rejects mismatched dimensions") {
    const cplx w[] = {I, I};
    CHECK_THROWS_AS(szego(w, tp({I})), DimensionMismatch);
}

TEST_CASE("poisson kernel") {
    const double x0[] = {0.0};
    const double y1[] = {1.0};
    CHECK(poisson(x0, y1) == doctest::Approx(1.0 / pi));
    const double x2[] = {0.0, 0.0};
    const double y2[] = {1.0, 2.0};
    CHECK(poisson(x2, y2) == doctest::Approx(1.0 / (2.0 * pi * pi)));
    const double mass = numerics::integrate(
                            [](double x) {
                                const double y[] = {1.0};
                                return cplx{poisson(std::span<const double>(&x, 1), y)};
                            },
                            numerics::Interval::real_line({0.0}))
                            .value.real();
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-10));
    const double bad[] = {-1.0};
    CHECK_THROWS_AS(poisson(x0, bad), DomainError);
}

TEST_CASE("order-zero elements are the szego kernel") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-2.0, 2.0), v(0.1, 3.0);
    for (int k = 0; k < 20; ++k) {
        const std::vector<cplx> z = {cplx{u(rng), v(rng)}, cplx{u(rng), v(rng)}};
        const cplx w[] = {cplx{u(rng), v(rng)}, cplx{u(rng), 0.0}};
        CHECK(close(phi_eval(el({0, 0}, z), w), szego(w, tp(z)), 1e-14));
    }
}

TEST_CASE("first-order element") {
    const cplx w[] = {I};
    CHECK(close(phi_eval(el({1}, {I}), w), cplx{0.0, -1.0 / (8.0 * pi)}, 1e-14));

    // x-derivative of K(w, conj z) in the point z
    const double h = 1e-4;
    const cplx z{0.3, 0.7};
    const cplx w2[] = {cplx{-0.4, 1.1}};
    const cplx fd = (szego(w2, tp({z + h})) - szego(w2, tp({z - h}))) / (2.0 * h);
    CHECK(close(fd, phi_eval(el({1}, {z}), w2), 1e-6));
}

TEST_CASE("lp norms of the kernel products") {
    const double y1[] = {1.0};
    const double y2[] = {2.0};
    CHECK(phi_lp_norm(MultiIndex({0}), y1, 2.0) == doctest::Approx(pi).epsilon(1e-12));
    CHECK(phi_lp_norm(MultiIndex({1}), y1, 2.0) == doctest::Approx(pi / 2.0).epsilon(1e-12));
    CHECK(phi_lp_norm(MultiIndex({0}), y2, 2.0) == doctest::Approx(pi / 2.0).epsilon(1e-12));
    CHECK_THROWS_AS(phi_lp_norm(MultiIndex({0}), y1, 1.0), DomainError);

    const double p = 3.0;
    const double q = numerics::integrate([&](double x) { return cplx{std::pow(1.0 / (x * x + 1.0), p)}; },
                                         numerics::Interval::real_line({0.0}))
                         .value.real();
    CHECK(phi_lp_norm(MultiIndex({0}), y1, 2.0 * p) == doctest::Approx(q).epsilon(1e-9));
}

TEST_CASE("element norms") {
    const double y1[] = {1.0};
    const double y2[] = {2.0};
    CHECK(phi_norm_squared(MultiIndex({0}), y1) == doctest::Approx(1.0 / (4.0 * pi)).epsilon(1e-14));
    CHECK(phi_norm_squared(MultiIndex({1}), y1) == doctest::Approx(1.0 / (8.0 * pi)).epsilon(1e-14));
    CHECK(phi_norm(MultiIndex({0}), y1) == doctest::Approx(std::sqrt(1.0 / (4.0 * pi))));
    for (int a = 0; a < 5; ++a) {
        const double ratio = phi_norm_squared(MultiIndex({a}), y2) / phi_norm_squared(MultiIndex({a}), y1);
        CHECK(ratio == doctest::Approx(std::pow(0.5, 2 * a + 1)).epsilon(1e-14));
    }
    CHECK(phi_norm_squared_uncorrected(MultiIndex({0}), y1) ==
          doctest::Approx(2.0 * pi * phi_norm_squared(MultiIndex({0}), y1)));

    const double q = numerics::integrate(
                         [](double x) {
                             const cplx w[] = {cplx{x, 0.0}};
                             return cplx{std::norm(phi_eval(el({2}, {cplx{0.5, 0.8}}), w))};
                         },
                         numerics::Interval::real_line({0.5}))
                         .value.real();
    const double y[] = {0.8};
    CHECK(phi_norm_squared(MultiIndex({2}), y) == doctest::Approx(q).epsilon(1e-9));
}

TEST_CASE("inner products between elements") {
    CHECK(close(ip_phi_phi(el({0}, {I}), el({0}, {I})), cplx{1.0 / (4.0 * pi)}, 1e-14));
    CHECK(close(ip_phi_phi(el({1}, {I}), el({0}, {I})), cplx{0.0, -1.0 / (8.0 * pi)}, 1e-14));
    CHECK(close(ip_phi_phi(el({0}, {I}), el({0}, {2.0 * I})), cplx{1.0 / (6.0 * pi)}, 1e-14));

    const auto e1 = el({2, 0}, {cplx{0.2, 0.6}, cplx{-0.3, 1.2}});
    const auto e2 = el({1, 1}, {cplx{-0.5, 0.9}, cplx{0.4, 0.5}});
    CHECK(close(ip_phi_phi(e1, e2), std::conj(ip_phi_phi(e2, e1)), 1e-14));
    const double y1[] = {0.6, 1.2};
    CHECK(ip_phi_phi(e1, e1).real() == doctest::Approx(phi_norm_squared(e1.alpha, y1)).epsilon(1e-13));

    // 1-D against quadrature of phi_1 conj(phi_2) along the real line
    const auto a = el({1}, {cplx{0.3, 0.4}});
    const auto b = el({2}, {cplx{-0.6, 1.1}});
    const cplx q = numerics::integrate(
                       [&](double x) {
                           const cplx w[] = {cplx{x, 0.0}};
                           return phi_eval(a, w) * std::conj(phi_eval(b, w));
                       },
                       numerics::Interval::real_line({0.3, -0.6}))
                       .value;
    CHECK(close(ip_phi_phi(a, b), q, 1e-9));
}

TEST_CASE("reproducing identity for kernel combinations") {
    const std::vector<cplx> zs = {cplx{0.1, 0.5}, cplx{-1.0, 1.5}, cplx{2.0, 0.3}};
    const std::vector<cplx> cs = {cplx{1.0, 0.5}, cplx{-0.3, 0.0}, cplx{0.2, -0.7}};
    const cplx w{0.4, 0.9};
    cplx via_ip{}, via_eval{};
    for (std::size_t j = 0; j < zs.size(); ++j) {
        via_ip += cs[j] * ip_phi_phi(el({0}, {zs[j]}), el({0}, {w}));
        const cplx wv[] = {w};
        via_eval += cs[j] * szego(wv, tp({zs[j]}));
    }
    CHECK(close(via_ip, via_eval, 1e-10));
}

TEST_CASE("normalized kernel correlation") {
    const cplx z{0.7, 0.3};
    CHECK(ip_kernel_phi_normalized(tp({z}), el({0}, {z})) ==
          doctest::Approx(1.0 / std::sqrt(4.0 * pi * 0.3)).epsilon(1e-14));
    CHECK(ip_kernel_phi_normalized(tp({I}), el({0}, {I})) == doctest::Approx(0.5 / std::sqrt(pi)).epsilon(1e-14));

    const auto e = el({1}, {cplx{0.2, 0.5}});
    const cplx w{-0.3, 0.8};
    const double direct = std::abs(ip_phi_phi(el({0}, {w}), e)) / phi_norm(e.alpha, e.z.ys());
    CHECK(ip_kernel_phi_normalized(tp({w}), e) == doctest::Approx(direct).epsilon(1e-13));

    double prev = 1e300;
    for (int k = 0; k <= 16; ++k) {
        const double v = ip_kernel_phi_normalized(tp({I}), el({0}, {cplx{0.0, std::ldexp(1.0, -k)}}));
        CHECK(v < prev);
        prev = v;
    }
    CHECK(prev < 0.01);
}

TEST_CASE("log factorial") {
    CHECK(log_factorial(0) == 0.0);
    CHECK(log_factorial(5) == doctest::Approx(std::log(120.0)));
    CHECK(log_factorial(30) == doctest::Approx(std::lgamma(31.0)).epsilon(1e-14));
}

}
