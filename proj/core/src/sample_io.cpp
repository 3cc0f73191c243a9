#include "hardyafd/signal/sample_io.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

static_assert(std::endian::native == std::endian::little, "binary formats assume a little-endian host");

namespace hafd::signal {

namespace {

constexpr std::uint16_t format_version = 1;

template <class T>
void put(std::ostream& out, T v) {
    out.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <class T>
T get(std::istream& in) {
    T v{};
    in.read(reinterpret_cast<char*>(&v), sizeof(T));
    if (!in) throw ParseError("truncated binary header");
    return v;
}

std::vector<cplx> read_payload(std::istream& in, std::size_t n) {
    std::vector<cplx> v(n);
    in.read(reinterpret_cast<char*>(v.data()), static_cast<std::streamsize>(n * sizeof(cplx)));
    if (static_cast<std::size_t>(in.gcount()) != n * sizeof(cplx)) throw ParseError("truncated binary payload");
    return v;
}

std::vector<double> split_numbers(const std::string& line, std::size_t lineno) {
    std::vector<double> out;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
        const auto b = cell.find_first_not_of(" \t\r");
        const auto e = cell.find_last_not_of(" \t\r");
        if (b == std::string::npos) throw ParseError("empty field on line " + std::to_string(lineno));
        const std::string trimmed = cell.substr(b, e - b + 1);
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(trimmed, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != trimmed.size()) {
            throw ParseError("bad number '" + trimmed + "' on line " + std::to_string(lineno));
        }
        out.push_back(v);
    }
    return out;
}

numerics::Axis axis_from_values(const std::vector<double>& xs) {
    if (xs.size() < 2) throw ParseError("need at least two distinct coordinates per axis");
    const double h = xs[1] - xs[0];
    if (!(h > 0.0)) throw ParseError("coordinates must increase");
    for (std::size_t k = 1; k < xs.size(); ++k) {
        const double expect = xs[0] + h * static_cast<double>(k);
        if (std::abs(xs[k] - expect) > 1e-9 * std::max(1.0, std::abs(expect)) + 1e-6 * h) {
            throw ParseError("coordinates are not uniformly spaced");
        }
    }
    const double span = xs.back() - xs.front();
    return {xs.front(), span / static_cast<double>(xs.size() - 1), xs.size()};
}

} // namespace

BoundarySamples read_samples_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw ParseError("empty CSV input");
    const auto ncols = static_cast<std::size_t>(std::count(line.begin(), line.end(), ',') + 1);
    if (ncols != 3 && ncols != 4) throw ParseError("CSV needs columns x1[,x2],re,im");
    const std::size_t dim = ncols - 2;

    std::vector<std::vector<double>> rows;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto row = split_numbers(line, lineno);
        if (row.size() != ncols) throw ParseError("wrong column count on line " + std::to_string(lineno));
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError("CSV has no data rows");

    BoundarySamples s;
    if (dim == 1) {
        std::vector<double> xs;
        for (const auto& r : rows) xs.push_back(r[0]);
        s.grid = numerics::Grid({axis_from_values(xs)});
        for (const auto& r : rows) s.values.emplace_back(r[1], r[2]);
    } else {
        std::vector<double> x1;
        for (const auto& r : rows) {
            if (x1.empty() || r[0] != x1.back()) x1.push_back(r[0]);
        }
        const std::size_t n0 = x1.size();
        if (rows.size() % n0 != 0) throw ParseError("2-D CSV is not a full tensor grid");
        const std::size_t n1 = rows.size() / n0;
        std::vector<double> x2;
        for (std::size_t k = 0; k < n1; ++k) x2.push_back(rows[k][1]);
        for (std::size_t i = 0; i < n0; ++i) {
            for (std::size_t k = 0; k < n1; ++k) {
                const auto& r = rows[i * n1 + k];
                if (r[0] != x1[i] || r[1] != x2[k]) throw ParseError("2-D CSV rows are not in row-major order");
            }
        }
        s.grid = numerics::Grid({axis_from_values(x1), axis_from_values(x2)});
        for (const auto& r : rows) s.values.emplace_back(r[2], r[3]);
    }
    s.validate();
    return s;
}

BoundarySamples read_samples_binary(std::istream& in) {
    std::array<char, 4> magic{};
    in.read(magic.data(), 4);
    if (!in || std::memcmp(magic.data(), "AFDT", 4) != 0) throw ParseError("not an AFDT sample file");
    const auto version = get<std::uint16_t>(in);
    if (version != format_version) throw ParseError("unsupported AFDT version " + std::to_string(version));
    const auto dim = get<std::uint8_t>(in);
    const auto flags = get<std::uint8_t>(in);
    if (dim < 1 || dim > 2) throw ParseError("AFDT dimension must be 1 or 2");
    std::array<std::uint32_t, 2> counts{get<std::uint32_t>(in), get<std::uint32_t>(in)};
    std::array<double, 2> half{get<double>(in), get<double>(in)};

    std::vector<std::size_t> n(counts.begin(), counts.begin() + dim);
    std::vector<double> l(half.begin(), half.begin() + dim);
    BoundarySamples s;
    s.grid = numerics::Grid::centered(n, l);
    s.declared_real = (flags & 1u) != 0;
    s.values = read_payload(in, s.grid.size());
    s.validate();
    return s;
}

BoundarySamples read_samples(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path.string());
    std::array<char, 4> magic{};
    in.read(magic.data(), 4);
    const bool binary = in.gcount() == 4 && std::memcmp(magic.data(), "AFDT", 4) == 0;
    in.clear();
    in.seekg(0);
    return binary ? read_samples_binary(in) : read_samples_csv(in);
}

void write_samples_csv(std::ostream& out, const BoundarySamples& s) {
    s.validate();
    out << std::setprecision(17);
    out << (s.grid.dim() == 1 ? "x1,re,im\n" : "x1,x2,re,im\n");
    for (std::size_t k = 0; k < s.values.size(); ++k) {
        for (double c : s.grid.point(k)) out << c << ',';
        out << s.values[k].real() << ',' << s.values[k].imag() << '\n';
    }
}

void write_samples_binary(std::ostream& out, const BoundarySamples& s) {
    s.validate();
    std::array<std::uint32_t, 2> counts{0, 0};
    std::array<double, 2> half{0.0, 0.0};
    for (std::size_t j = 0; j < s.grid.dim(); ++j) {
        const auto& a = s.grid.axis(j);
        half[j] = 0.5 * a.extent();
        if (std::abs(a.start + half[j]) > 1e-12 * std::max(1.0, half[j])) {
            throw DomainError("binary sample format needs a grid centered at the origin");
        }
        counts[j] = static_cast<std::uint32_t>(a.count);
    }
    out.write("AFDT", 4);
    put<std::uint16_t>(out, format_version);
    put<std::uint8_t>(out, static_cast<std::uint8_t>(s.grid.dim()));
    put<std::uint8_t>(out, s.declared_real ? 1 : 0);
    for (auto c : counts) put(out, c);
    for (auto h : half) put(out, h);
    out.write(reinterpret_cast<const char*>(s.values.data()),
              static_cast<std::streamsize>(s.values.size() * sizeof(cplx)));
}

void write_samples(const std::filesystem::path& path, const BoundarySamples& s) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path.string());
    if (path.extension() == ".csv") {
        write_samples_csv(out, s);
    } else {
        write_samples_binary(out, s);
    }
}

void write_spectral(const std::filesystem::path& path, const SpectralRep& r) {
    if (!r.source()) throw DomainError("only projected components can be written");
    const SourceLayout& src = *r.source();
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path.string());
    out.write("AFDS", 4);
    put<std::uint16_t>(out, format_version);
    put<std::uint8_t>(out, static_cast<std::uint8_t>(r.dim()));
    put<std::uint8_t>(out, static_cast<std::uint8_t>(r.sigma().mask()));
    auto field = [&](auto get_value, auto zero) {
        for (std::size_t j = 0; j < 2; ++j) put(out, j < r.dim() ? get_value(j) : zero);
    };
    field([&](std::size_t j) { return static_cast<std::uint32_t>(src.padded.axis(j).count); }, std::uint32_t{0});
    field([&](std::size_t j) { return src.padded.axis(j).start; }, 0.0);
    field([&](std::size_t j) { return src.padded.axis(j).spacing; }, 0.0);
    field([&](std::size_t j) { return static_cast<std::uint32_t>(src.window_count[j]); }, std::uint32_t{0});
    field([&](std::size_t j) { return static_cast<std::uint32_t>(src.window_offset[j]); }, std::uint32_t{0});
    out.write(reinterpret_cast<const char*>(r.density().data()),
              static_cast<std::streamsize>(r.density().size() * sizeof(cplx)));
}

bool is_spectral_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::array<char, 4> magic{};
    in.read(magic.data(), 4);
    return in.gcount() == 4 && std::memcmp(magic.data(), "AFDS", 4) == 0;
}

SpectralRep read_spectral(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path.string());
    std::array<char, 4> magic{};
    in.read(magic.data(), 4);
    if (!in || std::memcmp(magic.data(), "AFDS", 4) != 0) throw ParseError("not an AFDS spectral file");
    const auto version = get<std::uint16_t>(in);
    if (version != format_version) throw ParseError("unsupported AFDS version " + std::to_string(version));
    const auto dim = get<std::uint8_t>(in);
    const auto bits = get<std::uint8_t>(in);
    if (dim < 1 || dim > 2) throw ParseError("AFDS dimension must be 1 or 2");
    std::array<std::uint32_t, 2> counts{get<std::uint32_t>(in), get<std::uint32_t>(in)};
    std::array<double, 2> starts{get<double>(in), get<double>(in)};
    std::array<double, 2> spacing{get<double>(in), get<double>(in)};
    std::array<std::uint32_t, 2> wcount{get<std::uint32_t>(in), get<std::uint32_t>(in)};
    std::array<std::uint32_t, 2> woff{get<std::uint32_t>(in), get<std::uint32_t>(in)};

    std::vector<numerics::Axis> axes;
    std::vector<int> signs;
    std::vector<FreqAxis> freq;
    std::vector<std::vector<double>> weights;
    SourceLayout src;
    std::size_t total = 1;
    for (std::size_t j = 0; j < dim; ++j) {
        if (counts[j] < 8 || !numerics::is_power_of_two(counts[j]) || wcount[j] + woff[j] > counts[j]) {
            throw ParseError("inconsistent AFDS axis layout");
        }
        axes.push_back({starts[j], spacing[j], counts[j]});
        const int s = (bits >> j) & 1u ? -1 : 1;
        signs.push_back(s);
        const std::size_t half = counts[j] / 2;
        const double dt = 1.0 / (spacing[j] * counts[j]);
        freq.push_back({s > 0 ? 0.0 : -static_cast<double>(half) * dt, dt, half + 1});
        // projected spectra carry half weight on the two boundary nodes
        std::vector<double> w(half + 1, 1.0);
        w.front() = 0.5;
        w.back() = 0.5;
        weights.push_back(std::move(w));
        src.window_count.push_back(wcount[j]);
        src.window_offset.push_back(woff[j]);
        total *= half + 1;
    }
    src.padded = numerics::Grid(std::move(axes));
    auto density = read_payload(in, total);
    return SpectralRep(OctantSignature(std::move(signs)), std::move(freq), std::move(density), std::move(weights),
                       std::move(src));
}

} // namespace hafd::signal
