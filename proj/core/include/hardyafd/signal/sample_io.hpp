#pragma once

#include "hardyafd/signal/hardy.hpp"

#include <filesystem>
#include <iosfwd>

namespace hafd::signal {

// Binary sample file, little-endian:
//   0  char[4]  "AFDT"
//   4  u16      version (1)
//   6  u8       dim
//   7  u8       flags (bit 0: declared real)
//   8  u32[2]   counts per axis (unused axis 0)
//   16 f64[2]   half-extents L; axis j covers [-L_j, L_j) with spacing 2L_j/count_j
//   32          count0*count1 complex samples as (re, im) f64 pairs, row-major

// CSV: header row then columns x1[,x2],re,im; in 2-D x1 varies slowest.

BoundarySamples read_samples(const std::filesystem::path& path);
BoundarySamples read_samples_csv(std::istream& in);
BoundarySamples read_samples_binary(std::istream& in);

void write_samples_csv(std::ostream& out, const BoundarySamples& s);
/// Requires a grid centered at the origin.
void write_samples_binary(std::ostream& out, const BoundarySamples& s);
void write_samples(const std::filesystem::path& path, const BoundarySamples& s);

// Spectral component file, little-endian, 64-byte header:
//   0  char[4]  "AFDS"
//   4  u16      version (1)
//   6  u8       dim
//   7  u8       octant bits (bit j: axis j negative)
//   8  u32[2]   padded counts
//   16 f64[2]   padded grid starts
//   32 f64[2]   spacing
//   48 u32[2]   window counts
//   56 u32[2]   window offsets in the padded grid
//   64          density on (count_j/2 + 1) nodes per axis, complex f64 pairs, row-major
//             (both end nodes of every axis take quadrature weight 1/2)

void write_spectral(const std::filesystem::path& path, const SpectralRep& r);
SpectralRep read_spectral(const std::filesystem::path& path);
bool is_spectral_file(const std::filesystem::path& path);

} // namespace hafd::signal
