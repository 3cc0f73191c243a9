#pragma once

#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace hafd {

using cplx = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr cplx I{0.0, 1.0};

/// Base class for every failure raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Arguments of incompatible dimension (points, grids, multi-indices).
class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// A point or parameter outside the domain where an operation is defined.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Malformed input file or command-line value.
class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace hafd
