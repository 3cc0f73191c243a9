#include "hardyafd/afd/escalation.hpp"

#include "hardyafd/afd/errors.hpp"

#include <string>

namespace hafd::afd {

std::size_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

int order_for_occurrence(std::size_t n, std::size_t l) {
    if (l == 0) throw DomainError("occurrence count starts at 1");
    int h = 0;
    while (binomial(static_cast<std::size_t>(h) + n, n) < l) ++h;
    return h;
}

kernels::MultiIndex graded_lex(std::size_t n, int h, std::size_t rank) {
    std::vector<int> a(n, 0);
    // walk the compositions of h into n parts in decreasing lexicographic order
    std::size_t r = rank;
    int remaining = h;
    for (std::size_t j = 0; j + 1 < n; ++j) {
        for (int first = remaining; first >= 0; --first) {
            const std::size_t tail = binomial(static_cast<std::size_t>(remaining - first) + (n - j - 2), n - j - 2);
            if (r < tail) {
                a[j] = first;
                remaining -= first;
                break;
            }
            r -= tail;
            if (first == 0) throw DomainError("multi-index rank out of range");
        }
    }
    if (r != 0) throw DomainError("multi-index rank out of range");
    a[n - 1] = remaining;
    return kernels::MultiIndex(std::move(a));
}

Escalation escalate_order(std::span<const kernels::TubePoint> history, const kernels::TubePoint& z, double eps,
                          int order_cap) {
    if (eps < 0.0) throw DomainError("merge radius must be non-negative");
    const std::size_t n = z.dim();
    std::size_t l = 1;
    const kernels::TubePoint* match = nullptr;
    for (const auto& p : history) {
        if (kernels::distance(p, z) <= eps) {
            ++l;
            if (!match) match = &p;
        }
    }
    const int h = order_for_occurrence(n, l);
    if (h > order_cap) {
        std::string where;
        for (std::size_t k = 0; k < n; ++k) {
            where += (k ? ", " : "") + std::to_string(z.x(k)) + (z.y(k) >= 0 ? "+" : "") + std::to_string(z.y(k)) + "i";
        }
        throw DictionaryExhausted("dictionary exhausted at point (" + where + "): order " + std::to_string(h) +
                                  " exceeds cap " + std::to_string(order_cap));
    }
    const std::size_t below = h == 0 ? 0 : binomial(static_cast<std::size_t>(h) - 1 + n, n);
    return {graded_lex(n, h, l - below - 1), match ? *match : z, l, h};
}

} // namespace hafd::afd
