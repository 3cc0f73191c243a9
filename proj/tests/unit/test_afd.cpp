#include "hardyafd/afd/afd.hpp"
#include "hardyafd/afd/errors.hpp"
#include "hardyafd/afd/escalation.hpp"
#include "hardyafd/kernels/kernels.hpp"
#include "hardyafd/signal/hardy.hpp"

#include <doctest.h>

#include <cmath>

using namespace hafd;
using namespace hafd::afd;
using kernels::DictElement;
using kernels::MultiIndex;
using kernels::TubePoint;

namespace {

TubePoint tp(std::vector<cplx> z) { return TubePoint(std::move(z)); }

DictElement el(std::vector<int> alpha, std::vector<cplx> z) { return {MultiIndex(std::move(alpha)), tp(std::move(z))}; }

SearchConfig box1() { return SearchConfig::box(1, -6.0, 6.0, 0.05, 10.0, 64, 32); }

KernelSumTarget three_kernels() {
    return KernelSumTarget({{el({0}, {I}), cplx{1.0}},
                            {el({0}, {cplx{1.0, 2.0}}), cplx{0.5}},
                            {el({0}, {cplx{-2.0, 1.0}}), cplx{0.25}}});
}

// band-limited first-octant function given by a smooth density on [0, 2]
signal::SpectralRep band_limited() {
    const signal::FreqAxis axis{0.0, 1.0 / 512.0, 1025};
    return signal::SpectralRep::from_density(signal::OctantSignature::first(1), {axis}, [](std::span<const double> t) {
        return cplx{std::sin(pi * t[0]), 0.5 * std::cos(3.0 * t[0])} * t[0] * (2.0 - t[0]);
    });
}

} // namespace

TEST_SUITE("afd") {

TEST_CASE("escalation orders") {
    CHECK(binomial(5, 2) == 10);
    CHECK(order_for_occurrence(1, 1) == 0);
    CHECK(order_for_occurrence(3, 1) == 0);
    CHECK(order_for_occurrence(2, 2) == 1);
    CHECK(order_for_occurrence(2, 3) == 1);
    CHECK(order_for_occurrence(2, 4) == 2);
    for (std::size_t k = 1; k <= 6; ++k) CHECK(order_for_occurrence(1, k) == static_cast<int>(k) - 1);
    CHECK(graded_lex(2, 2, 0) == MultiIndex({2, 0}));
    CHECK(graded_lex(2, 2, 1) == MultiIndex({1, 1}));
    CHECK(graded_lex(2, 2, 2) == MultiIndex({0, 2}));
}

TEST_CASE("escalation at repeated points") {
    const TubePoint b = tp({I, cplx{0.5, 1.0}});
    std::vector<TubePoint> history;
    const auto fresh = escalate_order(history, b, 1e-9, 4);
    CHECK(fresh.occurrence == 1);
    CHECK(fresh.order == 0);
    CHECK(fresh.alpha == MultiIndex({0, 0}));

    history = {b, tp({cplx{3.0, 1.0}, I})};
    const auto second = escalate_order(history, tp({cplx{1e-12, 1.0}, cplx{0.5, 1.0}}), 1e-9, 4);
    CHECK(second.occurrence == 2);
    CHECK(second.alpha == MultiIndex({1, 0}));
    CHECK(second.point == b);

    history = {b, b, b};
    CHECK(escalate_order(history, b, 1e-9, 4).alpha == MultiIndex({2, 0}));
    CHECK_THROWS_AS(escalate_order(history, b, 1e-9, 1), DictionaryExhausted);
}

TEST_CASE("Gram-Schmidt over closed-form inner products") {
    OrthoSystem sys(1);
    const auto e1 = el({0}, {I});
    const auto c1 = sys.preorthogonalize(e1);
    CHECK(c1.remaining == doctest::Approx(1.0));
    sys.accept(c1);
    const double y1[] = {1.0};
    CHECK(std::abs(sys.coeffs()(0, 0) - 1.0 / kernels::phi_norm(MultiIndex({0}), y1)) < 1e-14);

    CHECK(sys.preorthogonalize(e1).degenerate);
    CHECK_THROWS_AS(sys.accept(sys.preorthogonalize(e1)), DegenerateCandidate);

    const auto e2 = el({0}, {2.0 * I});
    const auto c2 = sys.preorthogonalize(e2);
    const double y2[] = {2.0};
    const double n2 = kernels::phi_norm_squared(MultiIndex({0}), y2);
    const double g = std::abs(kernels::ip_phi_phi(e2, e1)) / std::sqrt(kernels::phi_norm_squared(MultiIndex({0}), y1)) /
                     std::sqrt(n2);
    CHECK(c2.beta_norm * c2.beta_norm == doctest::Approx(n2 * (1.0 - g * g)).epsilon(1e-12));

    sys.accept(c2);
    sys.accept(sys.preorthogonalize(el({1}, {2.0 * I})));
    sys.accept(sys.preorthogonalize(el({0}, {cplx{-1.0, 0.5}})));
    sys.accept(sys.preorthogonalize(el({2}, {2.0 * I})));
    CHECK(sys.size() == 5);
    CHECK(sys.orthonormality_error() < 1e-10);
}

TEST_CASE("correlation objective") {
    const TubePoint b = tp({cplx{0.4, 0.7}});
    const auto f = KernelSumTarget::normalized_kernel(b);
    OrthoSystem sys(1);
    const SearchConfig cfg = box1();
    Residual r{f, sys, {}};
    CHECK(correlation_objective_at(r, b, cfg) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(correlation_objective_at(r, tp({cplx{0.4, std::ldexp(1.0, -12)}}), cfg) < 0.05);

    const auto c = sys.preorthogonalize(DictElement(MultiIndex({0}), b));
    sys.accept(c);
    Residual r1{f, sys, {f.inner_phi(MultiIndex({0}), b) * sys.coeffs()(0, 0)}};
    for (const cplx z : {cplx{0.4, 0.7}, cplx{1.0, 0.3}, cplx{-2.0, 4.0}}) {
        CHECK(correlation_objective_at(r1, tp({z}), cfg) <= 1e-8);
    }
}

TEST_CASE("maximal selection finds a single kernel") {
    const TubePoint b = tp({cplx{0.37, 0.81}});
    const auto f = KernelSumTarget::normalized_kernel(b);
    OrthoSystem sys(1);
    Residual r{f, sys, {}};
    const auto s = msp_select(r, box1());
    CHECK(kernels::distance(s.element.z, b) <= 1e-3);
    CHECK(s.objective >= s.lattice_best);

    // lattice nodes avoid b; refinement still has to reach it
    const auto coarse = SearchConfig::box(1, -5.0, 5.0, 0.1, 10.0, 6, 4);
    const auto s2 = msp_select(r, coarse);
    CHECK(kernels::distance(s2.element.z, b) <= 1e-3);

    const KernelSumTarget zero({{el({0}, {I}), cplx{}}});
    Residual rz{zero, sys, {}};
    CHECK_THROWS_AS(msp_select(rz, box1()), ResidualZero);
}

TEST_CASE("search configuration validation") {
    auto cfg = box1();
    cfg.y[0].lo = -1.0;
    CHECK_THROWS_AS(cfg.validate(), DomainError);
    const auto lat = box1().lattice();
    REQUIRE(lat.size() == 1);
    CHECK(lat[0].size() == 64 * 32);
}

TEST_CASE("single kernel is recovered in one step") {
    const auto f = KernelSumTarget::normalized_kernel(tp({cplx{-0.3, 1.4}}), cplx{0.0, 2.0});
    const auto run = afd_run(f, 5, 1e-6, box1());
    REQUIRE(run.steps.size() == 1);
    CHECK(run.steps[0].residual_exact <= 1e-6);
    CHECK(kernels::distance(tp(run.model.atoms[0].z), tp({cplx{-0.3, 1.4}})) <= 1e-3);
}

TEST_CASE("three overlapping kernels") {
    const auto f = three_kernels();
    // the true atoms span F exactly
    const std::vector<TubePoint> atoms = {tp({I}), tp({cplx{1.0, 2.0}}), tp({cplx{-2.0, 1.0}})};
    const auto p = project_interpolate(f, atoms);
    CHECK(std::sqrt(std::max(0.0, residual_squared(f, p.elements, p.gram_weights))) <= 1e-9);

    // the first greedy pick is the dense-grid maximizer of |F(z)| / ||phi_z||, which is not an atom
    double best = 0.0;
    TubePoint arg = atoms[0];
    for (int i = 0; i <= 800; ++i) {
        for (int j = 0; j <= 990; ++j) {
            const TubePoint z = tp({cplx{-4.0 + 0.01 * i, 0.05 + 0.005 * j}});
            const double v = normalized_correlation(f, z);
            if (v > best) {
                best = v;
                arg = z;
            }
        }
    }
    const auto run = afd_run(f, 6, 0.0, box1());
    REQUIRE(run.steps.size() == 6);
    CHECK(kernels::distance(tp(run.model.atoms[0].z), arg) <= 1e-2);
    CHECK(run.steps[0].objective >= best * (1.0 - 1e-9));
    CHECK(run.steps[2].residual_exact <= 0.025 * std::sqrt(f.norm_squared()));
    CHECK(run.steps[5].residual_exact <= 0.01 * std::sqrt(f.norm_squared()));
    CHECK(run.system.orthonormality_error() < 1e-10);
}

TEST_CASE("residuals decrease on a band-limited function") {
    const SpectralTarget f(band_limited());
    const auto run = afd_run(f, 10, 0.0, box1());
    REQUIRE(run.steps.size() == 10);
    double prev = std::sqrt(f.norm_squared());
    for (const auto& s : run.steps) {
        CHECK(s.residual < prev);
        CHECK(std::abs(s.energy_error) < 1e-8);
        prev = s.residual;
    }
    // the model evaluated inside the tube against the explicit residual
    Eigen::VectorXcd d = run.model.weights();
    CHECK(residual_squared(f, run.system.elements(), d) == doctest::Approx(std::pow(run.steps.back().residual_exact, 2)).epsilon(1e-6));
}

TEST_CASE("orthogonal projection interpolates") {
    const auto f = three_kernels();
    const std::vector<TubePoint> one = {tp({cplx{0.5, 0.5}})};
    const auto p1 = project_interpolate(f, one);
    const cplx w[] = {cplx{0.5, 0.5}};
    CHECK(std::abs(p1.model.evaluate(w) - f.value(one[0])) < 1e-12 * std::abs(f.value(one[0])));

    const std::vector<TubePoint> own = {tp({I}), tp({cplx{1.0, 2.0}}), tp({cplx{-2.0, 1.0}})};
    const auto p3 = project_interpolate(f, own);
    CHECK(std::sqrt(std::max(0.0, residual_squared(f, p3.elements, p3.gram_weights))) <= 1e-9);

    std::vector<TubePoint> pts = {tp({cplx{0.2, 0.6}})};
    double prev = 0.0;
    for (const cplx z : {cplx{1.5, 1.0}, cplx{-1.0, 3.0}, cplx{0.0, 0.2}}) {
        pts.push_back(tp({z}));
        const auto p = project_interpolate(f, pts);
        const double energy = f.norm_squared() - residual_squared(f, p.elements, p.gram_weights);
        CHECK(energy >= prev - 1e-12);
        prev = energy;
    }

    const std::vector<TubePoint> twice = {tp({I}), tp({I})};
    const auto esc = project_interpolate(f, twice);
    CHECK(esc.elements[1].alpha == MultiIndex({1}));
    const std::vector<TubePoint> close = {tp({I}), tp({cplx{1e-9, 1.0}})};
    CHECK_THROWS_AS(project_interpolate(f, close), IllConditioned);
}

TEST_CASE("matching pursuit") {
    const auto one = KernelSumTarget::normalized_kernel(tp({cplx{0.7, 0.9}}));
    auto cfg = box1();
    cfg.order_cap = 2;
    const auto r1 = mp_run(one, 3, cfg);
    REQUIRE(!r1.steps.empty());
    CHECK(r1.steps[0].residual <= 1e-6);

    const SpectralTarget f(band_limited());
    const auto run = mp_run(f, 10, cfg);
    REQUIRE(run.steps.size() == 10);
    for (const auto& s : run.steps) CHECK(std::abs(s.energy_error) < 1e-8);
}

TEST_CASE("rate harness") {
    const double one[] = {1.0};
    const auto r1 = rate_harness(1, 1, one, 1, box1(), 4);
    REQUIRE(r1.rows.size() == 1);
    CHECK(r1.rows[0].residual_exact <= 1e-6);
    CHECK(r1.violations == 0);

    std::vector<double> mags;
    for (int j = 1; j <= 10; ++j) mags.push_back(std::ldexp(1.0, -j));
    const auto base = rate_harness(1, 10, mags, 6, box1(), 9);
    RateOptions twice;
    twice.scale = 2.0;
    const auto doubled = rate_harness(1, 10, mags, 6, box1(), 9, twice);
    CHECK(base.violations == 0);
    REQUIRE(doubled.rows.size() == base.rows.size());
    for (std::size_t m = 0; m < base.rows.size(); ++m) {
        CHECK(doubled.rows[m].bound == doctest::Approx(2.0 * base.rows[m].bound));
        CHECK(doubled.rows[m].residual_exact == doctest::Approx(2.0 * base.rows[m].residual_exact).epsilon(1e-6));
    }
}

TEST_CASE("models mirror and serialize") {
    const auto run = afd_run(three_kernels(), 2, 0.0, box1());
    const auto m = run.model;
    const auto mirror = conjugate_model(m);
    CHECK(mirror.sigma.label() == "-");
    CHECK(mirror.atoms[0].z[0] == std::conj(m.atoms[0].z[0]));
    CHECK(mirror.atoms[0].coeff == std::conj(m.atoms[0].coeff));
    for (const double x : {-3.0, 0.0, 0.7}) {
        const cplx w[] = {cplx{x, 0.0}};
        const cplx sum = m.evaluate(w) + mirror.evaluate(w);
        CHECK(std::abs(sum.imag()) < 1e-12);
        CHECK(sum.real() == doctest::Approx(2.0 * m.evaluate(w).real()));
    }

    const auto back = Approximant::from_json(m.to_json());
    const cplx w[] = {cplx{0.3, 0.4}};
    CHECK(std::abs(back.evaluate(w) - m.evaluate(w)) < 1e-15 * std::abs(m.evaluate(w)) + 1e-300);
    CHECK_THROWS_AS(Approximant::from_json("{"), ParseError);
    CHECK_THROWS_AS(Approximant::from_json(R"({"dim":1,"sigma":"+","atoms":[{"alpha":[0],"z_re":[0],"z_im":[-1],"coeff_re":1,"coeff_im":0}]})"),
                    ParseError);

    signal::OctantSignature mm = signal::OctantSignature::parse("++");
    const auto two = make_approximant(mm, {el({0, 0}, {I, I})}, Eigen::MatrixXcd::Identity(1, 1), {cplx{1.0, 1.0}}, {1.0});
    CHECK(conjugate_model(two).sigma.label() == "--");
}

}
