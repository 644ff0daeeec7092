#pragma once

// Exhaustive enumeration over finite fields: all vectors of a space, and one
// representative per projective point (one-dimensional subspace).

#include <cstdint>
#include <limits>

#include "sheafalg/subspace.hpp"

namespace sheafalg {

/// q^k, saturating at UINT64_MAX.
inline std::uint64_t saturating_pow(std::uint64_t q, std::size_t k) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (r > std::numeric_limits<std::uint64_t>::max() / q) return std::numeric_limits<std::uint64_t>::max();
        r *= q;
    }
    return r;
}

/// (q^k - 1)/(q - 1), saturating.
inline std::uint64_t projective_point_count(std::uint64_t q, std::size_t k) {
    std::uint64_t total = 0, term = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (total > std::numeric_limits<std::uint64_t>::max() - term) return std::numeric_limits<std::uint64_t>::max();
        total += term;
        if (i + 1 < k) {
            if (term > std::numeric_limits<std::uint64_t>::max() / q) return std::numeric_limits<std::uint64_t>::max();
            term *= q;
        }
    }
    return total;
}

/// Calls visit(v) for every v in F^n in odometer order; stops early when
/// visit returns false. Returns false iff stopped early.
template <FiniteField F, class Visit>
bool for_each_vector(const F& f, std::size_t n, Visit&& visit) {
    std::vector<std::uint64_t> digits(n, 0);
    Vec<F> v(n, f.zero());
    const std::uint64_t q = f.order();
    while (true) {
        if (!visit(static_cast<const Vec<F>&>(v))) return false;
        std::size_t k = 0;
        while (k < n && digits[k] + 1 == q) {
            digits[k] = 0;
            v[k] = f.zero();
            ++k;
        }
        if (k == n) return true;
        ++digits[k];
        v[k] = f.element(digits[k]);
    }
}

/// Visits one normalized representative (last nonzero coordinate equal to 1)
/// of every one-dimensional subspace of the span of `s`, expressed in ambient
/// coordinates. Throws CapExceeded if there are more than `budget` points.
template <FiniteField F, class Visit>
bool for_each_projective_point(const Subspace<F>& s, std::uint64_t budget, Visit&& visit) {
    const F& f = s.field();
    const std::size_t k = s.dim();
    const auto count = projective_point_count(f.order(), k);
    if (count > budget)
        throw CapExceeded("projective-point budget exceeded: " + std::to_string(count) + " points in dimension " +
                          std::to_string(k) + " over " + f.name() + " (budget " + std::to_string(budget) + ")");
    for (std::size_t lead = 0; lead < k; ++lead) {
        // coefficients c_0..c_{lead-1} free, c_lead = 1, rest 0
        bool go = for_each_vector(f, lead, [&](const Vec<F>& head) {
            Vec<F> coeffs(k, f.zero());
            for (std::size_t i = 0; i < lead; ++i) coeffs[i] = head[i];
            coeffs[lead] = f.one();
            return visit(s.from_coordinates(coeffs));
        });
        if (!go) return false;
    }
    return true;
}

}  // namespace sheafalg
