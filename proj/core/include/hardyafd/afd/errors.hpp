#pragma once

#include "hardyafd/common.hpp"

namespace hafd::afd {

/// Candidate lies (numerically) in the span of the selected elements.
class DegenerateCandidate : public Error {
public:
    using Error::Error;
};

/// Escalation at a repeated point needs a derivative order above the cap.
class DictionaryExhausted : public Error {
public:
    using Error::Error;
};

/// Every candidate correlation is below the zero threshold.
class ResidualZero : public Error {
public:
    using Error::Error;
};

class IllConditioned : public Error {
public:
    IllConditioned(const std::string& what, std::size_t i, std::size_t j) : Error(what), first_(i), second_(j) {}
    std::size_t first() const { return first_; }
    std::size_t second() const { return second_; }

private:
    std::size_t first_;
    std::size_t second_;
};

} // namespace hafd::afd
