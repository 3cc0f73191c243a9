#pragma once

#include "hafd/validation.hpp"

#include "hardyafd/kernels/tube_point.hpp"

#include <random>

namespace hafd::validation::detail {

Report norms_suite(const Options& opt);
Report ip_suite(const Options& opt);
Report interp_suite(const Options& opt);
Report energy_suite(const Options& opt);
Report single_suite(const Options& opt);
Report rate_suite(const Options& opt);
Report bvc_suite(const Options& opt);
Report hardy_suite(const Options& opt);
Report escalation_suite(const Options& opt);
Report cones_suite(const Options& opt);
Report mp_suite(const Options& opt);

/// measured <= bound
void add_row(Report& r, std::string name, double measured, double bound);

double relative_error(std::complex<double> got, std::complex<double> want);

kernels::TubePoint random_point(std::mt19937_64& rng, std::size_t n, double x_extent, double y_lo, double y_hi);

} // namespace hafd::validation::detail
