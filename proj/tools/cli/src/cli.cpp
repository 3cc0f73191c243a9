#include "hafd/cli.hpp"

#include "hafd/validation.hpp"
#include "hardyafd/afd/afd.hpp"
#include "hardyafd/afd/errors.hpp"
#include "hardyafd/cones/cones.hpp"
#include "hardyafd/kernels/kernels.hpp"
#include "hardyafd/signal/hardy.hpp"
#include "hardyafd/signal/sample_io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

namespace hafd::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

/// Bad flags or unusable input; maps to exit code 2.
class UsageError : public Error {
public:
    using Error::Error;
};

struct SplitArgs {
    std::string input;
    std::string output;
    int dim = 0;
    bool real = false;
};

struct ApproxArgs {
    std::string input;
    std::string output;
    std::string method = "afd";
    std::string sigma;
    std::size_t terms = 10;
    double tol = 0.0;
    std::size_t lattice_x = 32;
    std::size_t lattice_y = 16;
    int alpha_cap = 8;
};

struct EvalArgs {
    std::string input;
    std::string output;
    std::size_t grid = 256;
    double extent = 16.0;
    bool with_conjugate = false;
};

struct RateArgs {
    std::size_t dim = 1;
    std::size_t atoms = 10;
    std::size_t terms = 20;
    std::uint64_t seed = 0;
    std::size_t lattice_x = 64;
    std::size_t lattice_y = 32;
};

struct BvcArgs {
    double kappa = 1.0;
    std::string path = "boundary";
    double p = 2.0;
    std::size_t steps = 12;
};

std::string label_to_file(const std::string& label) {
    std::string s = label;
    std::replace(s.begin(), s.end(), '+', 'p');
    std::replace(s.begin(), s.end(), '-', 'm');
    return "component_" + s + ".afds";
}

double relative_l2(std::span<const cplx> got, std::span<const cplx> want) {
    double num = 0.0;
    double den = 0.0;
    for (std::size_t k = 0; k < got.size(); ++k) {
        num += std::norm(got[k] - want[k]);
        den += std::norm(want[k]);
    }
    return den > 0.0 ? std::sqrt(num / den) : std::sqrt(num);
}

signal::BoundarySamples load_samples(const std::string& path) {
    try {
        return signal::read_samples(path);
    } catch (const ParseError& e) {
        throw UsageError(e.what());
    }
}

void check_dim(std::size_t got, int wanted) {
    if (wanted != 0 && got != static_cast<std::size_t>(wanted)) {
        throw UsageError("input has dimension " + std::to_string(got) + " but --dim " + std::to_string(wanted) +
                         " was given");
    }
}

int cmd_split(const SplitArgs& a, std::ostream& out, std::ostream& err) {
    auto s = load_samples(a.input);
    check_dim(s.grid.dim(), a.dim);
    if (!s.grid.power_of_two()) throw UsageError("grid counts must be powers of two");
    if (a.real) {
        s.declared_real = true;
        try {
            s.validate();
        } catch (const DomainError& e) {
            throw UsageError(std::string("--real: ") + e.what());
        }
    }
    const auto comps = signal::hardy_split(s);
    const auto rec = signal::reconstruct(comps);
    const double rec_err = relative_l2(rec.values, s.values);

    fs::create_directories(a.output);
    double total = 0.0;
    for (const auto& v : s.values) total += std::norm(v);
    total *= s.grid.axis(0).spacing * (s.grid.dim() == 2 ? s.grid.axis(1).spacing : 1.0);

    json manifest;
    manifest["dim"] = s.grid.dim();
    manifest["real"] = s.declared_real;
    manifest["reconstruction_error"] = rec_err;
    manifest["components"] = json::array();
    out.precision(17);
    for (const auto& c : comps) {
        const std::string file = label_to_file(c.sigma().label());
        signal::write_spectral(fs::path(a.output) / file, c);
        const double nrm = signal::norm_F(c);
        const double frac = total > 0.0 ? nrm * nrm / total : 0.0;
        manifest["components"].push_back({{"sigma", c.sigma().label()}, {"file", file}, {"norm", nrm}, {"energy_fraction", frac}});
        out << "component " << c.sigma().label() << " file " << file << " norm " << nrm << " energy_fraction " << frac << '\n';
    }
    if (s.declared_real) {
        for (const auto& c : comps) {
            const auto mirror = c.sigma().mirrored();
            if (mirror.mask() < c.sigma().mask()) continue;
            const auto& m = comps[mirror.mask()];
            const auto a_vals = signal::boundary_values(c).values;
            const auto b_vals = signal::boundary_values(m).values;
            double dev = 0.0;
            double scale = 0.0;
            for (std::size_t k = 0; k < a_vals.size(); ++k) {
                dev = std::max(dev, std::abs(b_vals[k] - std::conj(a_vals[k])));
                scale = std::max(scale, std::abs(a_vals[k]));
            }
            const double rel = scale > 0.0 ? dev / scale : dev;
            manifest["conjugate_pairs"].push_back({{"sigma", c.sigma().label()}, {"mirror", mirror.label()}, {"max_deviation", rel}});
            out << "conjugate_pair " << c.sigma().label() << ' ' << mirror.label() << " max_deviation " << rel << '\n';
        }
    }
    out << "reconstruction_error " << rec_err << '\n';
    std::ofstream mf(fs::path(a.output) / "manifest.json");
    mf << manifest.dump(2) << '\n';
    if (!mf) {
        err << "cannot write manifest in " << a.output << '\n';
        return exit_failure;
    }
    return exit_ok;
}

struct LoadedTarget {
    std::unique_ptr<afd::Target> target;
    afd::SearchConfig cfg;
};

LoadedTarget load_target(const ApproxArgs& a) {
    LoadedTarget lt;
    const fs::path path(a.input);
    if (!fs::exists(path)) throw UsageError("cannot open " + a.input);
    if (signal::is_spectral_file(path)) {
        auto rep = signal::read_spectral(path);
        if (!rep.source()) throw UsageError("component file lacks a sample layout");
        lt.cfg = afd::SearchConfig::for_grid(rep.source()->window(), a.lattice_x, a.lattice_y);
        lt.target = std::make_unique<afd::SpectralTarget>(std::move(rep));
    } else if (path.extension() == ".json") {
        std::ifstream in(path);
        std::stringstream buf;
        buf << in.rdbuf();
        afd::Approximant m;
        try {
            m = afd::Approximant::from_json(buf.str());
        } catch (const ParseError& e) {
            throw UsageError(e.what());
        }
        if (!(m.sigma == signal::OctantSignature::first(m.dim))) {
            throw UsageError("model input must live in the first octant");
        }
        if (m.atoms.empty()) throw UsageError("model input has no atoms");
        const Eigen::VectorXcd d = m.weights();
        std::vector<std::pair<kernels::DictElement, cplx>> terms;
        double xlo = 1e300, xhi = -1e300, ylo = 1e300, yhi = 0.0;
        for (std::size_t l = 0; l < m.atoms.size(); ++l) {
            const kernels::TubePoint z(m.atoms[l].z);
            for (std::size_t j = 0; j < z.dim(); ++j) {
                xlo = std::min(xlo, z.x(j));
                xhi = std::max(xhi, z.x(j));
                ylo = std::min(ylo, z.y(j));
                yhi = std::max(yhi, z.y(j));
            }
            terms.emplace_back(kernels::DictElement(m.atoms[l].alpha, z), d[static_cast<Eigen::Index>(l)]);
        }
        const double pad = 4.0 * yhi;
        lt.cfg = afd::SearchConfig::box(m.dim, xlo - pad, xhi + pad, ylo / 20.0, yhi * 20.0, a.lattice_x, a.lattice_y);
        lt.target = std::make_unique<afd::KernelSumTarget>(std::move(terms));
    } else {
        const auto s = load_samples(a.input);
        if (!s.grid.power_of_two()) throw UsageError("grid counts must be powers of two");
        const auto sigma = a.sigma.empty() ? signal::OctantSignature::first(s.grid.dim()) : signal::OctantSignature::parse(a.sigma);
        if (sigma.dim() != s.grid.dim()) throw UsageError("--sigma does not match the input dimension");
        lt.cfg = afd::SearchConfig::for_grid(s.grid, a.lattice_x, a.lattice_y);
        lt.target = std::make_unique<afd::SpectralTarget>(signal::hardy_project(s, sigma));
    }
    lt.cfg.order_cap = a.alpha_cap;
    return lt;
}

int cmd_approx(const ApproxArgs& a, std::ostream& out, std::ostream&) {
    if (a.method != "afd" && a.method != "mp") throw UsageError("--method must be afd or mp");
    if (a.tol < 0.0) throw UsageError("--tol must be non-negative");
    if (a.alpha_cap < 0) throw UsageError("--alpha-cap must be non-negative");
    auto lt = load_target(a);
    const auto run = a.method == "afd" ? afd::afd_run(*lt.target, a.terms, a.tol, lt.cfg)
                                       : afd::mp_run(*lt.target, a.terms, lt.cfg);
    std::ofstream mf(a.output);
    mf << run.model.to_json() << '\n';
    if (!mf) throw Error("cannot write " + a.output);

    const double norm2 = lt.target->norm_squared();
    out.precision(17);
    out << "m,residual,energy_captured\n";
    if (run.steps.empty()) out << 0 << ',' << std::sqrt(norm2) << ',' << 0.0 << '\n';
    double captured = 0.0;
    for (std::size_t k = 0; k < run.steps.size(); ++k) {
        captured += std::norm(run.coeffs[k]);
        out << run.steps[k].m << ',' << run.steps[k].residual << ',' << (norm2 > 0.0 ? captured / norm2 : 0.0) << '\n';
    }
    return exit_ok;
}

int cmd_eval(const EvalArgs& a, std::ostream& out, std::ostream& err) {
    std::ifstream in(a.input);
    if (!in) throw UsageError("cannot open " + a.input);
    std::stringstream buf;
    buf << in.rdbuf();
    afd::Approximant m;
    try {
        m = afd::Approximant::from_json(buf.str());
    } catch (const ParseError& e) {
        throw UsageError(e.what());
    }
    if (a.grid < 8 || !(a.extent > 0.0)) throw UsageError("--grid must be >= 8 and --extent positive");
    std::vector<std::size_t> counts(m.dim, a.grid);
    std::vector<double> half(m.dim, a.extent);
    const auto grid = numerics::Grid::centered(counts, half);

    double min_y = std::numeric_limits<double>::infinity();
    for (const auto& atom : m.atoms) {
        for (const auto& z : atom.z) min_y = std::min(min_y, std::abs(z.imag()));
    }
    const double h = grid.axis(0).spacing;
    if (h > min_y) {
        err << "warning: grid spacing " << h << " exceeds the smallest atom height " << min_y
            << "; peaks are undersampled\n";
    }
    signal::BoundarySamples s{grid, m.evaluate_grid(grid), false};
    if (a.with_conjugate) {
        const auto mirror = afd::conjugate_model(m);
        const auto extra = mirror.evaluate_grid(grid);
        for (std::size_t k = 0; k < extra.size(); ++k) s.values[k] += extra[k];
    }
    if (a.output.empty()) {
        signal::write_samples_csv(out, s);
    } else {
        signal::write_samples(a.output, s);
    }
    return exit_ok;
}

int cmd_validate(const std::string& suite, std::ostream& out, std::ostream& err) {
    std::vector<std::string> names;
    if (suite == "all") {
        names = validation::suite_names();
    } else if (validation::is_suite(suite)) {
        names = {suite};
    } else {
        throw UsageError("unknown suite '" + suite + "'");
    }
    std::vector<validation::Report> reports;
    bool ok = true;
    for (const auto& n : names) {
        reports.push_back(validation::run_suite(n));
        ok = ok && reports.back().passed();
        if (!reports.back().note.empty()) err << "note (" << n << "): " << reports.back().note << '\n';
    }
    validation::write_csv(out, reports);
    return ok ? exit_ok : exit_failure;
}

int cmd_rate(const RateArgs& a, std::ostream& out, std::ostream&) {
    if (a.dim < 1 || a.dim > 2) throw UsageError("--dim must be 1 or 2");
    if (a.atoms == 0) throw UsageError("--atoms must be positive");
    std::mt19937_64 rng(a.seed ^ 0x9e3779b97f4a7c15ULL);
    std::uniform_real_distribution<double> mag(0.2, 1.0);
    std::vector<double> mags(a.atoms);
    for (auto& m : mags) m = mag(rng);
    const auto cfg = afd::SearchConfig::box(a.dim, -6.0, 6.0, 0.05, 10.0, a.lattice_x, a.lattice_y);
    const auto rep = afd::rate_harness(a.dim, a.atoms, mags, a.terms, cfg, a.seed);
    out.precision(17);
    out << "m,residual,residual_exact,bound,ok\n";
    for (const auto& r : rep.rows) {
        out << r.m << ',' << r.residual << ',' << r.residual_exact << ',' << r.bound << ',' << (r.ok ? 1 : 0) << '\n';
    }
    return rep.violations == 0 ? exit_ok : exit_failure;
}

int cmd_bvc(const BvcArgs& a, std::ostream& out, std::ostream&) {
    cones::PathKind kind;
    try {
        kind = cones::parse_path_kind(a.path);
    } catch (const ParseError& e) {
        throw UsageError(e.what());
    }
    const cones::Cone2D cone(a.kappa);
    // fixed test function: two kernels with parameters inside the cone tube
    const cones::ConeKernelSum f(cones::PolygonalCone::from_kappa(a.kappa),
                                 {{cplx{0.0, 0.0}, cplx{0.0, 1.0}}, {cplx{0.5, 0.25 * a.kappa}, cplx{-0.3, 0.8}}},
                                 {cplx{1.0, 0.0}, cplx{0.0, 0.5}});
    cones::BvcPath path{kind, a.p, a.steps};
    const auto rows = cones::bvc_diagnostic([&](std::span<const cplx> w) { return f(w); }, cone, path);
    out.precision(17);
    out << "k,parameter,ratio,k_diag\n";
    for (const auto& r : rows) out << r.step << ',' << r.parameter << ',' << r.ratio << ',' << r.k_diag << '\n';
    return exit_ok;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Adaptive Fourier decomposition on tube domains"};
    app.require_subcommand(1);

    SplitArgs split;
    auto* c_split = app.add_subcommand("split", "split boundary samples into octant Hardy components");
    c_split->add_option("--input", split.input, "sample file (.csv or AFDT binary)")->required();
    c_split->add_option("--output", split.output, "output directory")->required();
    c_split->add_option("--dim", split.dim, "expected dimension")->check(CLI::Range(1, 2));
    c_split->add_flag("--real", split.real, "input is real; report mirrored components as conjugate pairs");

    ApproxArgs approx;
    auto* c_approx = app.add_subcommand("approx", "run AFD (or matching pursuit) on one component");
    c_approx->add_option("--input", approx.input, "component (.afds), samples, or first-octant model (.json)")->required();
    c_approx->add_option("--output", approx.output, "model file")->required();
    c_approx->add_option("--method", approx.method, "afd or mp");
    c_approx->add_option("--sigma", approx.sigma, "octant to project sample input onto, e.g. +-");
    c_approx->add_option("--terms", approx.terms, "maximum number of terms");
    c_approx->add_option("--tol", approx.tol, "stop once the residual is at most this");
    c_approx->add_option("--lattice-x", approx.lattice_x, "search lattice points per x axis")->check(CLI::PositiveNumber);
    c_approx->add_option("--lattice-y", approx.lattice_y, "search lattice points per y axis")->check(CLI::PositiveNumber);
    c_approx->add_option("--alpha-cap", approx.alpha_cap, "largest derivative order");

    EvalArgs eval;
    auto* c_eval = app.add_subcommand("eval", "evaluate a model on a boundary grid");
    c_eval->add_option("--input", eval.input, "model file")->required();
    c_eval->add_option("--output", eval.output, "sample file (stdout CSV when omitted)");
    c_eval->add_option("--grid", eval.grid, "points per axis");
    c_eval->add_option("--extent", eval.extent, "grid covers [-extent, extent) per axis");
    c_eval->add_flag("--with-conjugate,--real", eval.with_conjugate, "add the mirrored model (real pipeline)");

    std::string suite = "all";
    auto* c_validate = app.add_subcommand("validate", "run validation suites");
    c_validate->add_option("--suite", suite, "suite name or all");

    RateArgs rate;
    auto* c_rate = app.add_subcommand("rate", "residual against M/sqrt(m) for a random instance");
    c_rate->add_option("--dim", rate.dim)->check(CLI::Range(1, 2));
    c_rate->add_option("--atoms", rate.atoms);
    c_rate->add_option("--terms", rate.terms);
    c_rate->add_option("--seed", rate.seed);
    c_rate->add_option("--lattice-x", rate.lattice_x)->check(CLI::PositiveNumber);
    c_rate->add_option("--lattice-y", rate.lattice_y)->check(CLI::PositiveNumber);

    BvcArgs bvc;
    auto* c_bvc = app.add_subcommand("bvc", "boundary vanishing diagnostic on Gamma^kappa");
    c_bvc->add_option("--kappa", bvc.kappa);
    c_bvc->add_option("--path", bvc.path, "boundary, scale or xinf");
    c_bvc->add_option("--p", bvc.p);
    c_bvc->add_option("--steps", bvc.steps);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }

    try {
        if (c_split->parsed()) return cmd_split(split, out, err);
        if (c_approx->parsed()) return cmd_approx(approx, out, err);
        if (c_eval->parsed()) return cmd_eval(eval, out, err);
        if (c_validate->parsed()) return cmd_validate(suite, out, err);
        if (c_rate->parsed()) return cmd_rate(rate, out, err);
        if (c_bvc->parsed()) return cmd_bvc(bvc, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_failure;
    }
    return exit_usage;
}

} // namespace hafd::cli
