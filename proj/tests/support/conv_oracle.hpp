#pragma once

// Convolution evaluated pointwise from the sheaf data. Independent of the
// structure-constant table built by ConvAlgebra.

#include "sheafalg/sheaf.hpp"

namespace oracle {

using namespace sheafalg;

// (f * g)(gamma) = sum over gamma = beta delta of f(beta) alpha_beta(g(delta)),
// evaluated from the sheaf data alone with locally computed block offsets.
template <Field F>
Vec<F> convolve(const GSheaf<F>& o, const Vec<F>& fn, const Vec<F>& gn) {
    const auto& g = o.groupoid();
    const F& f = o.field();
    std::vector<std::size_t> start{0};
    for (std::size_t a = 0; a < g.arrow_count(); ++a) start.push_back(start.back() + o.stalk(g.dst(a)).dim());
    auto at = [&](const Vec<F>& v, std::size_t a) {
        return Vec<F>(v.begin() + static_cast<std::ptrdiff_t>(start[a]), v.begin() + static_cast<std::ptrdiff_t>(start[a + 1]));
    };
    Vec<F> out(start.back(), f.zero());
    for (std::size_t gamma = 0; gamma < g.arrow_count(); ++gamma) {
        const auto& stalk = o.stalk(g.dst(gamma));
        Vec<F> sum = stalk.zero();
        for (std::size_t beta = 0; beta < g.arrow_count(); ++beta)
            for (std::size_t delta = 0; delta < g.arrow_count(); ++delta) {
                if (g.compose(beta, delta) != std::optional<std::size_t>(gamma)) continue;
                sum = add(f, sum, stalk.multiply(at(fn, beta), mat_vec(f, o.alpha(beta), at(gn, delta))));
            }
        for (std::size_t k = 0; k < sum.size(); ++k) out[start[gamma] + k] = sum[k];
    }
    return out;
}

}  // namespace oracle
