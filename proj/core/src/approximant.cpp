#include "hardyafd/afd/approximant.hpp"

#include "hardyafd/kernels/kernels.hpp"

#include <json.hpp>

#include <cmath>

namespace hafd::afd {

using nlohmann::json;

cplx native_phi(const signal::OctantSignature& sigma, const kernels::MultiIndex& alpha, std::span<const cplx> b,
                std::span<const cplx> w) {
    if (b.size() != sigma.dim() || w.size() != sigma.dim() || alpha.dim() != sigma.dim()) {
        throw DimensionMismatch("atom, point and signature differ in dimension");
    }
    const cplx c = -1.0 / (2.0 * pi * I);
    cplx r{1.0, 0.0};
    for (std::size_t j = 0; j < w.size(); ++j) {
        if (sigma[j] * w[j].imag() < 0.0) throw DomainError("evaluation point outside the octant tube");
        const cplx d = w[j] - std::conj(b[j]);
        cplx p{1.0, 0.0};
        for (int k = 0; k <= alpha[j]; ++k) p *= d;
        r *= static_cast<double>(sigma[j]) * c * std::exp(kernels::log_factorial(alpha[j])) / p;
    }
    return r;
}

Eigen::VectorXcd Approximant::weights() const {
    Eigen::VectorXcd c(static_cast<Eigen::Index>(atoms.size()));
    for (std::size_t k = 0; k < atoms.size(); ++k) c[static_cast<Eigen::Index>(k)] = atoms[k].coeff;
    if (atoms.empty()) return c;
    return bmatrix * c;
}

cplx Approximant::evaluate(std::span<const cplx> w) const {
    const Eigen::VectorXcd d = weights();
    cplx s{};
    for (std::size_t l = 0; l < atoms.size(); ++l) {
        s += d[static_cast<Eigen::Index>(l)] * native_phi(sigma, atoms[l].alpha, atoms[l].z, w);
    }
    return s;
}

std::vector<cplx> Approximant::evaluate_grid(const numerics::Grid& grid) const {
    if (grid.dim() != dim) throw DimensionMismatch("grid and model differ in dimension");
    std::vector<cplx> out(grid.size());
    std::vector<cplx> w(dim);
    for (std::size_t k = 0; k < grid.size(); ++k) {
        const auto p = grid.point(k);
        for (std::size_t j = 0; j < dim; ++j) w[j] = {p[j], 0.0};
        out[k] = evaluate(w);
    }
    return out;
}

Approximant make_approximant(const signal::OctantSignature& sigma, const std::vector<kernels::DictElement>& elements,
                             const Eigen::MatrixXcd& bmatrix, const std::vector<cplx>& coeffs,
                             std::vector<double> residual_history) {
    Approximant a;
    a.dim = sigma.dim();
    a.sigma = sigma;
    a.bmatrix = bmatrix;
    a.residual_history = std::move(residual_history);
    for (std::size_t l = 0; l < elements.size(); ++l) {
        const auto& e = elements[l];
        a.atoms.push_back({e.alpha, sigma.reflect(e.z.coords()), coeffs.at(l)});
        // phi_{alpha,u}(sigma w) = prod_{sigma_j < 0} (-1)^{alpha_j} phi^sigma_{alpha, sigma u}(w)
        double s = 1.0;
        for (std::size_t j = 0; j < a.dim; ++j) {
            if (sigma[j] < 0 && e.alpha[j] % 2 == 1) s = -s;
        }
        a.bmatrix.row(static_cast<Eigen::Index>(l)) *= s;
    }
    return a;
}

Approximant conjugate_model(const Approximant& model) {
    Approximant out(model);
    out.sigma = model.sigma.mirrored();
    for (auto& atom : out.atoms) {
        for (auto& z : atom.z) z = std::conj(z);
        atom.coeff = std::conj(atom.coeff);
    }
    out.bmatrix = model.bmatrix.conjugate();
    return out;
}

std::string Approximant::to_json() const {
    json j;
    j["dim"] = dim;
    j["sigma"] = sigma.label();
    j["atoms"] = json::array();
    for (const auto& a : atoms) {
        json atom;
        atom["alpha"] = a.alpha.values();
        std::vector<double> re, im;
        for (const cplx& z : a.z) {
            re.push_back(z.real());
            im.push_back(z.imag());
        }
        atom["z_re"] = re;
        atom["z_im"] = im;
        atom["coeff_re"] = a.coeff.real();
        atom["coeff_im"] = a.coeff.imag();
        j["atoms"].push_back(std::move(atom));
    }
    json bm = json::array();
    for (Eigen::Index r = 0; r < bmatrix.rows(); ++r) {
        for (Eigen::Index c = 0; c < bmatrix.cols(); ++c) bm.push_back({bmatrix(r, c).real(), bmatrix(r, c).imag()});
    }
    j["bmatrix"] = bm;
    j["residual_history"] = residual_history;
    return j.dump(2) + "\n";
}

Approximant Approximant::from_json(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("model is not valid JSON: ") + e.what());
    }
    try {
        Approximant a;
        a.dim = j.at("dim").get<std::size_t>();
        a.sigma = signal::OctantSignature::parse(j.at("sigma").get<std::string>());
        if (a.sigma.dim() != a.dim) throw ParseError("sigma does not match dim");
        for (const auto& atom : j.at("atoms")) {
            Atom at;
            at.alpha = kernels::MultiIndex(atom.at("alpha").get<std::vector<int>>());
            const auto re = atom.at("z_re").get<std::vector<double>>();
            const auto im = atom.at("z_im").get<std::vector<double>>();
            if (re.size() != a.dim || im.size() != a.dim || at.alpha.dim() != a.dim) {
                throw ParseError("atom has wrong dimension");
            }
            for (std::size_t k = 0; k < a.dim; ++k) {
                if (!(a.sigma[k] * im[k] > 0.0)) throw ParseError("atom lies outside its octant tube");
                at.z.emplace_back(re[k], im[k]);
            }
            at.coeff = {atom.at("coeff_re").get<double>(), atom.at("coeff_im").get<double>()};
            a.atoms.push_back(std::move(at));
        }
        const auto m = static_cast<Eigen::Index>(a.atoms.size());
        // without a bmatrix the coefficients multiply the dictionary elements directly
        a.bmatrix = Eigen::MatrixXcd::Identity(m, m);
        if (j.contains("bmatrix")) {
            const auto& bm = j.at("bmatrix");
            if (bm.size() != static_cast<std::size_t>(m * m)) {
                throw ParseError("bmatrix size does not match atom count");
            }
            for (Eigen::Index k = 0; k < m * m; ++k) {
                const auto& pair = bm.at(static_cast<std::size_t>(k));
                a.bmatrix(k / m, k % m) = {pair.at(0).get<double>(), pair.at(1).get<double>()};
            }
        }
        a.residual_history = j.value("residual_history", std::vector<double>{});
        return a;
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed model: ") + e.what());
    } catch (const DomainError& e) {
        throw ParseError(std::string("malformed model: ") + e.what());
    }
}

} // namespace hafd::afd
