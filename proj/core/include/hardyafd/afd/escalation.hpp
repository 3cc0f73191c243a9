#pragma once

#include "hardyafd/kernels/tube_point.hpp"

#include <span>

namespace hafd::afd {

std::size_t binomial(std::size_t n, std::size_t k);

/// Order h with binom(h-1+n, n) < l <= binom(h+n, n).
int order_for_occurrence(std::size_t n, std::size_t l);

/// The rank-th (0-based) multi-index of order h in graded-lex order:
/// (h,0,..), (h-1,1,..), ..., (0,..,h).
kernels::MultiIndex graded_lex(std::size_t n, int h, std::size_t rank);

struct Escalation {
    kernels::MultiIndex alpha;
    kernels::TubePoint point; ///< z, snapped onto the matching history point
    std::size_t occurrence;   ///< l
    int order;                ///< h
};

/// l = 1 + number of history points within eps of z; returns the next unused
/// multi-index at that point. Throws DictionaryExhausted when h > order_cap.
Escalation escalate_order(std::span<const kernels::TubePoint> history, const kernels::TubePoint& z, double eps,
                          int order_cap);

} // namespace hafd::afd
