#pragma once

#include "hardyafd/kernels/tube_point.hpp"

#include <span>

namespace hafd::kernels {

/// prod_k -1 / (2 pi i (w_k - conj(z_k))). w may lie on the real boundary.
cplx szego(std::span<const cplx> w, const TubePoint& z);

/// prod_k y_k / (pi (x_k^2 + y_k^2)).
double poisson(std::span<const double> x, std::span<const double> y);

/// (-1/(2 pi i))^n prod_j alpha_j! / (w_j - conj(z_j))^(alpha_j + 1).
cplx phi_eval(const DictElement& e, std::span<const cplx> w);

/// Integral over R^n of |prod_j (xi_j - conj(z_j))^-(alpha_j+1)|^p. Requires p(alpha_j+1) > 1.
double phi_lp_norm(const MultiIndex& alpha, std::span<const double> y, double p);

/// ||phi_{alpha,z}||^2 = prod_j (2 alpha_j)! / (2 pi (2 y_j)^(2 alpha_j + 1)).
double phi_norm_squared(const MultiIndex& alpha, std::span<const double> y);
double phi_norm(const MultiIndex& alpha, std::span<const double> y);

/// The same product without the 1/(2 pi) per axis; only used to report the constant mismatch.
double phi_norm_squared_uncorrected(const MultiIndex& alpha, std::span<const double> y);

/// <phi_e1, phi_e2> = integral of phi_e1 * conj(phi_e2) over R^n, in closed form.
cplx ip_phi_phi(const DictElement& e1, const DictElement& e2);

/// |<K(., conj(w)), phi_{alpha,z}>| / ||phi_{alpha,z}||.
double ip_kernel_phi_normalized(const TubePoint& w, const DictElement& e);

/// log(k!) for k >= 0; exact table below 21.
double log_factorial(int k);

} // namespace hafd::kernels
