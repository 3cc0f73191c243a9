#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace hafd::validation {

struct Row {
    std::string suite;
    std::string name;
    double measured = 0.0;
    double bound = 0.0;
    bool pass = false;
};

struct Report {
    std::string suite;
    std::vector<Row> rows;
    /// Free-form remark printed after the rows, e.g. the value under a corrected constant.
    std::string note;

    bool passed() const;
    /// Largest measured/bound over the rows (0 for an empty report).
    double worst_ratio() const;
};

struct Options {
    std::uint64_t seed = 0;
};

/// norms, ip, interp, energy, single, rate, bvc, hardy, escalation, cones, mp.
const std::vector<std::string>& suite_names();
bool is_suite(std::string_view name);

/// Throws hafd::ParseError for an unknown name.
Report run_suite(std::string_view name, const Options& opt = {});

/// Header "suite,case,measured,bound,pass" then one line per row.
void write_csv(std::ostream& out, const std::vector<Report>& reports);

} // namespace hafd::validation
