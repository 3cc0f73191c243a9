#include "hafd/cli.hpp"
#include "hardyafd/afd/approximant.hpp"
#include "hardyafd/kernels/kernels.hpp"
#include "hardyafd/signal/sample_io.hpp"

#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace hafd;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    args.insert(args.begin(), "afdtool");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

struct TempDir {
    fs::path path;
    explicit TempDir(const std::string& name) : path(fs::temp_directory_path() / ("hafd_cli_" + name)) {
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string operator/(const std::string& f) const { return (path / f).string(); }
};

void write_1d(const std::string& path, std::size_t n, double half, const std::function<cplx(double)>& f) {
    const std::size_t counts[] = {n};
    const double h[] = {half};
    signal::BoundarySamples s{numerics::Grid::centered(counts, h), {}};
    for (std::size_t k = 0; k < n; ++k) s.values.push_back(f(s.grid.axis(0).at(k)));
    signal::write_samples(path, s);
}

void write_text(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

// value following `key` on the line that starts with `line_start`
double field(const std::string& text, const std::string& line_start, const std::string& key) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.rfind(line_start, 0) != 0) continue;
        const auto pos = line.find(key + ' ');
        if (pos != std::string::npos) return std::stod(line.substr(pos + key.size() + 1));
    }
    FAIL("missing " << line_start << " / " << key);
    return 0.0;
}

std::vector<std::vector<double>> csv_rows(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::getline(in, line);
    std::vector<std::vector<double>> rows;
    while (std::getline(in, line)) {
        std::vector<double> row;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) row.push_back(std::stod(cell));
        rows.push_back(row);
    }
    return rows;
}

const char* one_atom = R"({"dim":1,"sigma":"+","atoms":[{"alpha":[0],"coeff_re":1.0,"coeff_im":0.5,"z_re":[0.3],"z_im":[0.7]}]})";

} // namespace

TEST_SUITE("cli") {

TEST_CASE("split of a Lorentzian") {
    TempDir d("split");
    write_1d(d / "lor.csv", 1024, 32.0, [](double x) { return cplx{2.0 / (1.0 + x * x)}; });
    const auto r = run({"split", "--input", d / "lor.csv", "--output", d / "comps", "--real"});
    REQUIRE(r.code == 0);
    CHECK(field(r.out, "reconstruction_error", "reconstruction_error") < 1e-8);
    CHECK(field(r.out, "conjugate_pair", "max_deviation") < 1e-10);
    CHECK(fs::exists(d / "comps/component_p.afds"));
    CHECK(fs::exists(d / "comps/component_m.afds"));
    CHECK(fs::exists(d / "comps/manifest.json"));
}

TEST_CASE("split of an analytic signal") {
    TempDir d("analytic");
    write_1d(d / "a.afdt", 512, 16.0, [](double x) { return std::exp(-pi * x * x) * std::polar(1.0, 6.0 * pi * x); });
    const auto r = run({"split", "--input", d / "a.afdt", "--output", d / "c"});
    REQUIRE(r.code == 0);
    CHECK(field(r.out, "component -", "energy_fraction") < 1e-10);
}

TEST_CASE("split rejects bad input") {
    TempDir d("bad");
    std::string csv = "x1,re,im\n";
    for (int k = 0; k < 12; ++k) csv += std::to_string(k) + ",1,0\n";
    write_text(d / "odd.csv", csv);
    CHECK(run({"split", "--input", d / "odd.csv", "--output", d / "c"}).code == 2);
    CHECK(run({"split", "--input", d / "missing.csv", "--output", d / "c"}).code == 2);
    write_1d(d / "c.csv", 64, 4.0, [](double x) { return cplx{x, 1.0}; });
    CHECK(run({"split", "--input", d / "c.csv", "--output", d / "c", "--real"}).code == 2);
    CHECK(run({"split", "--input", d / "c.csv", "--output", d / "c", "--dim", "2"}).code == 2);
    CHECK(run({"split"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
}

TEST_CASE("approx recovers a single kernel") {
    TempDir d("approx");
    write_text(d / "one.json", one_atom);
    const auto r = run({"approx", "--input", d / "one.json", "--output", d / "m.json", "--terms", "3"});
    REQUIRE(r.code == 0);
    const auto rows = csv_rows(r.out);
    REQUIRE(!rows.empty());
    CHECK(rows.back()[1] <= 1e-6);
}

TEST_CASE("approx with zero terms") {
    TempDir d("zero");
    write_text(d / "one.json", one_atom);
    const auto r = run({"approx", "--input", d / "one.json", "--output", d / "m.json", "--terms", "0"});
    REQUIRE(r.code == 0);
    const auto rows = csv_rows(r.out);
    REQUIRE(rows.size() == 1);
    const double y[] = {0.7};
    const double norm = std::abs(cplx{1.0, 0.5}) * kernels::phi_norm(kernels::MultiIndex({0}), y);
    CHECK(rows[0][1] == doctest::Approx(norm).epsilon(1e-12));
    std::ifstream in(d / "m.json");
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(afd::Approximant::from_json(buf.str()).atoms.empty());
}

TEST_CASE("approx is deterministic") {
    TempDir d("det");
    write_1d(d / "s.csv", 256, 8.0, [](double x) { return cplx{std::exp(-x * x), std::sin(x) / (1.0 + x * x)}; });
    const std::vector<std::string> args = {"approx", "--input", d / "s.csv", "--terms", "4", "--output"};
    auto a1 = args, a2 = args;
    a1.push_back(d / "m1.json");
    a2.push_back(d / "m2.json");
    const auto r1 = run(a1);
    const auto r2 = run(a2);
    REQUIRE(r1.code == 0);
    CHECK(r1.out == r2.out);
    std::ifstream f1(d / "m1.json"), f2(d / "m2.json");
    std::stringstream b1, b2;
    b1 << f1.rdbuf();
    b2 << f2.rdbuf();
    CHECK(b1.str() == b2.str());

    const auto mp = run({"approx", "--input", d / "s.csv", "--terms", "3", "--method", "mp", "--output", d / "mp.json"});
    CHECK(mp.code == 0);
    CHECK(run({"approx", "--input", d / "s.csv", "--method", "omp", "--output", d / "x.json"}).code == 2);
}

TEST_CASE("eval of one atom") {
    TempDir d("eval");
    write_text(d / "one.json", one_atom);
    const auto r = run({"eval", "--input", d / "one.json", "--grid", "8", "--extent", "2"});
    REQUIRE(r.code == 0);
    std::istringstream in(r.out);
    const auto s = signal::read_samples_csv(in);
    REQUIRE(s.values.size() == 8);
    const kernels::DictElement e(kernels::MultiIndex({0}), kernels::TubePoint({cplx{0.3, 0.7}}));
    for (std::size_t k = 0; k < 8; ++k) {
        const cplx w[] = {cplx{s.grid.axis(0).at(k), 0.0}};
        const cplx want = cplx{1.0, 0.5} * kernels::phi_eval(e, w);
        CHECK(std::abs(s.values[k] - want) < 1e-14 * std::abs(want));
    }
}

TEST_CASE("eval of an empty model") {
    TempDir d("empty");
    write_text(d / "e.json", R"({"dim":2,"sigma":"+-","atoms":[]})");
    const auto r = run({"eval", "--input", d / "e.json", "--grid", "8"});
    REQUIRE(r.code == 0);
    std::istringstream in(r.out);
    const auto s = signal::read_samples_csv(in);
    CHECK(s.values.size() == 64);
    for (const cplx& v : s.values) CHECK(v == cplx{});
    write_text(d / "bad.json", "{\"dim\":1}");
    CHECK(run({"eval", "--input", d / "bad.json"}).code == 2);
}

TEST_CASE("real pipeline evaluates to real values") {
    TempDir d("real");
    write_1d(d / "r.csv", 512, 16.0, [](double x) { return cplx{std::exp(-x * x / 2.0) * std::cos(2.0 * x)}; });
    REQUIRE(run({"split", "--input", d / "r.csv", "--output", d / "c", "--real"}).code == 0);
    REQUIRE(run({"approx", "--input", d / "c/component_p.afds", "--output", d / "m.json", "--terms", "5"}).code == 0);
    const auto r = run({"eval", "--input", d / "m.json", "--with-conjugate", "--grid", "64", "--extent", "8"});
    REQUIRE(r.code == 0);
    std::istringstream in(r.out);
    const auto s = signal::read_samples_csv(in);
    double worst = 0.0, scale = 0.0;
    for (const cplx& v : s.values) {
        worst = std::max(worst, std::abs(v.imag()));
        scale = std::max(scale, std::abs(v));
    }
    CHECK(scale > 0.1);
    CHECK(worst < 1e-10);
}

TEST_CASE("validate") {
    const auto ok = run({"validate", "--suite", "norms"});
    CHECK(ok.code == 0);
    CHECK(ok.out.rfind("suite,case,measured,bound,pass\n", 0) == 0);
    CHECK(ok.out.find(",0\n") == std::string::npos);
    CHECK(run({"validate", "--suite", "nonsense"}).code == 2);
}

TEST_CASE("rate table") {
    const auto r = run({"rate", "--atoms", "10", "--seed", "7", "--lattice-x", "32", "--lattice-y", "16"});
    REQUIRE(r.code == 0);
    const auto rows = csv_rows(r.out);
    REQUIRE(rows.size() == 20);
    for (const auto& row : rows) {
        CHECK(row[2] <= row[3]);
        CHECK(row[4] == 1.0);
    }
    const auto again = run({"rate", "--atoms", "10", "--seed", "7", "--lattice-x", "32", "--lattice-y", "16"});
    CHECK(again.out == r.out);
}

TEST_CASE("bvc tables") {
    const auto b = run({"bvc", "--kappa", "1", "--path", "boundary"});
    REQUIRE(b.code == 0);
    const auto rows = csv_rows(b.out);
    REQUIRE(rows.size() == 13);
    for (std::size_t k = 1; k < rows.size(); ++k) CHECK(rows[k][2] < rows[k - 1][2]);

    const auto s = run({"bvc", "--kappa", "2", "--path", "scale"});
    REQUIRE(s.code == 0);
    const auto srows = csv_rows(s.out);
    const double c0 = srows[0][3] * srows[0][1] * srows[0][1];
    for (const auto& row : srows) CHECK(row[3] * row[1] * row[1] == doctest::Approx(c0).epsilon(1e-12));

    CHECK(run({"bvc", "--path", "sideways"}).code == 2);
}

}
