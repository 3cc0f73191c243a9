#include "suites.hpp"

#include "hardyafd/common.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <ostream>

namespace hafd::validation {

namespace {

using SuiteFn = std::function<Report(const Options&)>;

const std::map<std::string, SuiteFn, std::less<>>& registry() {
    static const std::map<std::string, SuiteFn, std::less<>> r{
        {"norms", detail::norms_suite},       {"ip", detail::ip_suite},       {"interp", detail::interp_suite},
        {"energy", detail::energy_suite},     {"single", detail::single_suite}, {"rate", detail::rate_suite},
        {"bvc", detail::bvc_suite},           {"hardy", detail::hardy_suite}, {"escalation", detail::escalation_suite},
        {"cones", detail::cones_suite},       {"mp", detail::mp_suite},
    };
    return r;
}

} // namespace

bool Report::passed() const {
    return std::all_of(rows.begin(), rows.end(), [](const Row& r) { return r.pass; });
}

double Report::worst_ratio() const {
    double w = 0.0;
    for (const auto& r : rows) {
        if (r.bound > 0.0) w = std::max(w, r.measured / r.bound);
    }
    return w;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"norms", "ip",  "interp",     "energy", "single", "rate",
                                                "bvc",   "hardy", "escalation", "cones",  "mp"};
    return names;
}

bool is_suite(std::string_view name) { return registry().contains(name); }

Report run_suite(std::string_view name, const Options& opt) {
    const auto it = registry().find(name);
    if (it == registry().end()) throw ParseError("unknown suite '" + std::string(name) + "'");
    return it->second(opt);
}

void write_csv(std::ostream& out, const std::vector<Report>& reports) {
    const auto old = out.precision(17);
    out << "suite,case,measured,bound,pass\n";
    for (const auto& rep : reports) {
        for (const auto& r : rep.rows) {
            out << r.suite << ',' << r.name << ',' << r.measured << ',' << r.bound << ',' << (r.pass ? 1 : 0) << '\n';
        }
    }
    out.precision(old);
}

namespace detail {

void add_row(Report& r, std::string name, double measured, double bound) {
    r.rows.push_back({r.suite, std::move(name), measured, bound, measured <= bound});
}

double relative_error(std::complex<double> got, std::complex<double> want) {
    return std::abs(got - want) / std::abs(want);
}

kernels::TubePoint random_point(std::mt19937_64& rng, std::size_t n, double x_extent, double y_lo, double y_hi) {
    std::uniform_real_distribution<double> ux(-x_extent, x_extent);
    std::uniform_real_distribution<double> uy(std::log(y_lo), std::log(y_hi));
    std::vector<std::complex<double>> z(n);
    for (auto& c : z) c = {ux(rng), std::exp(uy(rng))};
    return kernels::TubePoint(std::move(z));
}

} // namespace detail

} // namespace hafd::validation
