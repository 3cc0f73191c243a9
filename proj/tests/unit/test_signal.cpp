#include "hardyafd/kernels/kernels.hpp"
#include "hardyafd/signal/hardy.hpp"
#include "hardyafd/signal/sample_io.hpp"

#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <random>
#include <sstream>

using namespace hafd;
using namespace hafd::signal;
using numerics::Grid;

namespace {

BoundarySamples sampled(std::size_t n, double half, const std::function<cplx(double)>& f) {
    const std::size_t counts[] = {n};
    const double h[] = {half};
    BoundarySamples s{Grid::centered(counts, h), {}};
    for (std::size_t k = 0; k < n; ++k) s.values.push_back(f(s.grid.axis(0).at(k)));
    return s;
}

BoundarySamples sampled2(std::size_t n, double half, const std::function<cplx(double, double)>& f) {
    const std::size_t counts[] = {n, n};
    const double h[] = {half, half};
    BoundarySamples s{Grid::centered(counts, h), {}};
    for (std::size_t k = 0; k < s.grid.size(); ++k) {
        const auto p = s.grid.point(k);
        s.values.push_back(f(p[0], p[1]));
    }
    return s;
}

double max_diff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    double m = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) m = std::max(m, std::abs(a[k] - b[k]));
    return m;
}

// smooth, well-localized random signal
std::function<cplx(double)> random_bump(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g;
    std::vector<cplx> c;
    std::vector<double> f, s;
    for (int k = 0; k < 4; ++k) {
        c.emplace_back(g(rng), g(rng));
        f.push_back(g(rng));
        s.push_back(0.5 + 0.25 * std::abs(g(rng)));
    }
    return [=](double x) {
        cplx v{};
        for (std::size_t k = 0; k < c.size(); ++k) {
            v += c[k] * std::exp(-x * x / (2.0 * s[k] * s[k])) * std::polar(1.0, 2.0 * pi * f[k] * x);
        }
        return v;
    };
}

const OctantSignature plus = OctantSignature::parse("+");
const OctantSignature minus = OctantSignature::parse("-");

} // namespace

TEST_SUITE("signal") {

TEST_CASE("octant signatures") {
    const auto all = OctantSignature::all(2);
    REQUIRE(all.size() == 4);
    CHECK(all[0].label() == "++");
    CHECK(all[1].label() == "-+");
    CHECK(all[3].label() == "--");
    CHECK(OctantSignature::parse("+-").mirrored() == OctantSignature::parse("-+"));
    CHECK(OctantSignature::parse("+-").minus_count() == 1);
    const double y[] = {1.0, -2.0};
    CHECK(OctantSignature::parse("+-").contains(y));
    CHECK_FALSE(OctantSignature::parse("++").contains(y));
    const cplx z[] = {cplx{1.0, 2.0}, cplx{3.0, -4.0}};
    const auto r = OctantSignature::parse("+-").reflect(z);
    CHECK(r[1] == cplx{-3.0, 4.0});
    CHECK_THROWS_AS(OctantSignature::parse("+x"), ParseError);
}

TEST_CASE("Lorentzian splits into i/(x+i) and its conjugate") {
    const auto s = sampled(4096, 64.0, [](double x) { return cplx{2.0 / (1.0 + x * x)}; });
    const auto comps = hardy_split(s);
    REQUIRE(comps.size() == 2);
    const auto bv = boundary_values(comps[0]);
    double err = 0.0;
    for (std::size_t k = 0; k < bv.values.size(); ++k) {
        const double x = bv.grid.axis(0).at(k);
        if (std::abs(x) <= 32.0) err = std::max(err, std::abs(bv.values[k] - I / (x + I)));
    }
    CHECK(err < 1e-5);

    const cplx z[] = {2.0 * I};
    CHECK(std::abs(eval_F(comps[0], z) - 1.0 / 3.0) < 1e-4);
    CHECK(norm_F(comps[0]) == doctest::Approx(std::sqrt(pi)).epsilon(1e-5));
    CHECK(norm_F(comps[0].scaled(cplx{0.0, -3.0})) == doctest::Approx(3.0 * norm_F(comps[0])).epsilon(1e-14));
}

TEST_CASE("split then reconstruct is the identity") {
    const auto f = random_bump(11);
    const auto s = sampled(512, 16.0, f);
    const auto comps = hardy_split(s);
    CHECK(max_diff(reconstruct(comps).values, s.values) < 1e-8);

    const auto f2 = random_bump(12);
    const auto s2 = sampled2(128, 8.0, [&](double a, double b) { return f(a) * f2(b) + 0.3 * f2(a - 1.0); });
    const auto comps2 = hardy_split(s2);
    REQUIRE(comps2.size() == 4);
    CHECK(max_diff(reconstruct(comps2).values, s2.values) < 1e-8);
}

TEST_CASE("real input gives conjugate components") {
    const auto f = random_bump(5);
    auto s = sampled(512, 16.0, [&](double x) { return cplx{f(x).real()}; });
    s.declared_real = true;
    const auto comps = hardy_split(s);
    const auto p = boundary_values(comps[0]);
    const auto m = boundary_values(comps[1]);
    double dev = 0.0;
    for (std::size_t k = 0; k < p.values.size(); ++k) dev = std::max(dev, std::abs(m.values[k] - std::conj(p.values[k])));
    CHECK(dev < 1e-10);
    for (const cplx& v : reconstruct(comps).values) CHECK(std::abs(v.imag()) < 1e-10);
}

TEST_CASE("analytic input has a negligible lower component") {
    const auto s = sampled(512, 16.0, [](double x) { return std::exp(-pi * x * x) * std::polar(1.0, 2.0 * pi * 3.0 * x); });
    const auto plus_part = hardy_project(s, plus);
    const auto minus_part = hardy_project(s, minus);
    const double total = std::pow(norm_F(plus_part), 2) + std::pow(norm_F(minus_part), 2);
    CHECK(std::pow(norm_F(minus_part), 2) < 1e-10 * total);

    // projecting the upper part again changes nothing
    const auto again = hardy_project(boundary_values(plus_part), plus);
    CHECK(max_diff(boundary_values(again).values, boundary_values(plus_part).values) < 1e-12);
}

TEST_CASE("tensor input projects to the product of 1-D projections") {
    auto g = [](double x) { return cplx{2.0 / (1.0 + x * x)}; };
    auto h = [](double x) { return std::exp(-x * x) * cplx{1.0, 0.5}; };
    const auto s = sampled2(256, 16.0, [&](double a, double b) { return g(a) * h(b); });
    ProjectOptions opt;
    opt.pad_factor = 4;
    const auto pm = boundary_values(hardy_project(s, OctantSignature::parse("+-"), opt));
    const auto gp = boundary_values(hardy_project(sampled(256, 16.0, g), plus, opt));
    const auto hm = boundary_values(hardy_project(sampled(256, 16.0, h), minus, opt));
    double err = 0.0;
    for (std::size_t i = 0; i < 256; ++i) {
        for (std::size_t j = 0; j < 256; ++j) err = std::max(err, std::abs(pm.values[i * 256 + j] - gp.values[i] * hm.values[j]));
    }
    CHECK(err < 1e-12);
}

TEST_CASE("projection validates its input") {
    auto s = sampled(512, 16.0, [](double) { return cplx{1.0, 1.0}; });
    s.declared_real = true;
    CHECK_THROWS_AS(hardy_project(s, plus), DomainError);
    s.declared_real = false;
    CHECK_THROWS_AS(hardy_project(s, OctantSignature::parse("++")), DimensionMismatch);
    ProjectOptions opt;
    opt.pad_factor = 3;
    CHECK_THROWS_AS(hardy_project(s, plus, opt), DomainError);
}

TEST_CASE("kernel spectrum reproduces the szego kernel") {
    const cplx z0{0.3, 1.0};
    const FreqAxis axis{0.0, 1.0 / 65536.0, 4 * 65536 + 1};
    const auto rep = SpectralRep::from_density(plus, {axis},
                                               [&](std::span<const double> t) { return std::exp(-2.0 * pi * I * std::conj(z0) * t[0]); });
    const kernels::TubePoint k0({z0});
    const cplx z[] = {cplx{-0.2, 0.8}};
    CHECK(std::abs(eval_F(rep, z) - kernels::szego(z, k0)) < 1e-8 * std::abs(kernels::szego(z, k0)));
    CHECK(eval_dF(rep, kernels::MultiIndex({0}), z) == eval_F(rep, z));
    for (int a = 1; a <= 2; ++a) {
        const kernels::DictElement e(kernels::MultiIndex({a}), kernels::TubePoint({z[0]}));
        const cplx want = kernels::ip_phi_phi(kernels::DictElement(kernels::MultiIndex({0}), k0), e);
        CHECK(std::abs(eval_dF(rep, e.alpha, z) - want) < 1e-8 * std::abs(want));
    }
    const double y[] = {1.0};
    CHECK(norm_F(rep) == doctest::Approx(kernels::phi_norm(kernels::MultiIndex({0}), y)).epsilon(1e-8));
}

TEST_CASE("derivatives match central differences") {
    const FreqAxis a0{0.0, 1.0 / 256.0, 257};
    const FreqAxis a1{-1.0, 1.0 / 128.0, 129};
    const auto rep = SpectralRep::from_density(OctantSignature::parse("+-"), {a0, a1}, [](std::span<const double> t) {
        return cplx{std::sin(3.0 * t[0]) + 1.0, t[1] * t[1]} * std::exp(-t[0]);
    });
    const cplx z[] = {cplx{0.2, 0.4}, cplx{-0.1, -0.3}};
    const double h = 1e-4;
    const cplx zp[] = {z[0] + h, z[1]};
    const cplx zm[] = {z[0] - h, z[1]};
    const cplx fd = (eval_F(rep, zp) - eval_F(rep, zm)) / (2.0 * h);
    const cplx d = eval_dF(rep, kernels::MultiIndex({1, 0}), z);
    CHECK(std::abs(fd - d) < 1e-6 * std::abs(d));

    const std::vector<std::vector<cplx>> pts = {{z[0], cplx{0.5, 0.2}}, {z[1]}};
    const auto lat = eval_dF_lattice(rep, kernels::MultiIndex({0, 1}), pts);
    REQUIRE(lat.size() == 2);
    CHECK(std::abs(lat[0] - eval_dF(rep, kernels::MultiIndex({0, 1}), z)) < 1e-13 * std::abs(lat[0]));

    const cplx outside[] = {cplx{0.2, 0.4}, cplx{-0.1, 0.3}};
    CHECK_THROWS_AS(eval_F(rep, outside), DomainError);
}

TEST_CASE("zero spectrum") {
    const FreqAxis axis{0.0, 0.01, 101};
    const auto rep = SpectralRep::from_density(plus, {axis}, [](std::span<const double>) { return cplx{}; });
    const cplx z[] = {I};
    CHECK(eval_F(rep, z) == cplx{});
    CHECK(norm_F(rep) == 0.0);
}

TEST_CASE("sample files roundtrip") {
    const auto s = sampled2(16, 2.0, [](double a, double b) { return cplx{a, b * b}; });
    std::stringstream bin;
    write_samples_binary(bin, s);
    const auto back = read_samples_binary(bin);
    CHECK(back.grid == s.grid);
    CHECK(back.values == s.values);

    std::stringstream csv;
    write_samples_csv(csv, s);
    const auto back_csv = read_samples_csv(csv);
    CHECK(back_csv.grid.size() == s.grid.size());
    CHECK(max_diff(back_csv.values, s.values) < 1e-15);

    std::stringstream junk("not a sample file");
    CHECK_THROWS_AS(read_samples_binary(junk), ParseError);
}

TEST_CASE("spectral files roundtrip") {
    const auto s = sampled(256, 8.0, random_bump(2));
    const auto rep = hardy_project(s, minus);
    const auto path = std::filesystem::temp_directory_path() / "hafd_unit_component.afds";
    write_spectral(path, rep);
    CHECK(is_spectral_file(path));
    const auto back = read_spectral(path);
    std::filesystem::remove(path);
    const cplx z[] = {cplx{0.3, -0.5}};
    CHECK(eval_F(back, z) == eval_F(rep, z));
    CHECK(norm_F(back) == norm_F(rep));
    CHECK(max_diff(boundary_values(back).values, boundary_values(rep).values) == 0.0);
}

}
