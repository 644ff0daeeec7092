#pragma once

// Spectral actions of finite inverse semigroups on finite dimensional
// algebras, and the skew inverse semigroup ring L/N.
//
// D_s is stored as a subspace of the ambient algebra A. alpha_s is an ambient
// n x n matrix of which only the restriction to D_{s*} is used; it must map
// D_{s*} isomorphically onto D_s.

#include "sheafalg/ideals.hpp"
#include "sheafalg/semigroup.hpp"

namespace sheafalg {

template <Field F>
struct SpectralRingAction {
    FiniteInverseSemigroup semigroup;
    AlgebraPtr<F> algebra;
    std::vector<Subspace<F>> domain;  // D_s = D_{ss*}
    std::vector<Vec<F>> unit;         // 1_{ss*}, the identity of D_s
    std::vector<Mat<F>> alpha;        // D_{s*} -> D_s
};

template <Field F>
Validation validate_spectral_action(const SpectralRingAction<F>& act) {
    if (auto v = validate_inverse_semigroup(act.semigroup)) return v;
    const auto& s = act.semigroup;
    const auto& a = *act.algebra;
    const F& f = a.field();
    const std::size_t n = a.dim(), m = s.size();
    if (act.domain.size() != m || act.unit.size() != m || act.alpha.size() != m)
        return Violation{"shape", "need one domain, unit and alpha per semigroup element"};
    for (std::size_t i = 0; i < m; ++i) {
        if (act.unit[i].size() != n || act.alpha[i].rows() != n || act.alpha[i].cols() != n ||
            act.domain[i].parent_dim() != n)
            return Violation{"shape", "dimension mismatch at " + s.label(i)};
    }
    auto apply = [&](std::size_t i, const Vec<F>& x) { return mat_vec(f, act.alpha[i], x); };

    for (std::size_t i = 0; i < m; ++i) {
        const auto& d = act.domain[i];
        const auto e = s.mul(i, s.star(i));
        const std::string at = " at " + s.label(i);
        if (!is_two_sided_ideal(a, d)) return Violation{"ideal", "D is not a two-sided ideal" + at};
        if (!(d == act.domain[e])) return Violation{"domain", "D_s differs from D_ss*" + at};
        if (act.unit[i] != act.unit[e]) return Violation{"unit", "1_s differs from 1_ss*" + at};
        const auto& u = act.unit[i];
        if (!d.contains(u) || a.multiply(u, u) != u) return Violation{"unit", "not an idempotent of D" + at};
        for (std::size_t j = 0; j < n; ++j)
            if (a.multiply(u, a.basis(j)) != a.multiply(a.basis(j), u))
                return Violation{"unit", "not central" + at};
        for (const auto& b : d.basis_vectors())
            if (a.multiply(u, b) != b) return Violation{"unit", "not an identity of D" + at};
    }

    for (std::size_t i = 0; i < m; ++i) {
        const std::string at = " at " + s.label(i);
        const auto& src = act.domain[s.star(i)];
        const auto& dst = act.domain[i];
        if (src.dim() != dst.dim() || !(src.image(act.alpha[i]) == dst))
            return Violation{"bijective", "alpha does not map D_s* onto D_s" + at};
        const auto basis = src.basis_vectors();
        for (const auto& x : basis)
            for (const auto& y : basis)
                if (apply(i, a.multiply(x, y)) != a.multiply(apply(i, x), apply(i, y)))
                    return Violation{"multiplicative", "alpha is not multiplicative" + at};
        if (apply(i, act.unit[s.star(i)]) != act.unit[i])
            return Violation{"unital", "alpha does not map 1_s* to 1_s" + at};
        if (s.is_idempotent(i))
            for (const auto& x : basis)
                if (apply(i, x) != x) return Violation{"idempotent", "alpha of an idempotent is not the identity" + at};
    }

    // alpha_s alpha_t = alpha_st as partial maps
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            const auto st = s.mul(i, j);
            const auto dom = act.domain[j].intersect(act.domain[s.star(i)]).image(act.alpha[s.star(j)]);
            const std::string at = " at (" + s.label(i) + ", " + s.label(j) + ")";
            if (!(dom == act.domain[s.star(st)])) return Violation{"homomorphism", "domain of the composite" + at};
            for (const auto& x : dom.basis_vectors())
                if (apply(i, apply(j, x)) != apply(st, x))
                    return Violation{"homomorphism", "alpha_s alpha_t differs from alpha_st" + at};
        }

    Subspace<F> total(f, n);
    for (auto e : s.idempotents()) total = total + act.domain[e];
    if (!total.is_full()) return Violation{"non-degenerate", "the domains of idempotents do not span A"};
    return std::nullopt;
}

/// L = sum of D_s delta_s, the ideal N, and the quotient L/N.
template <Field F>
struct SkewRing {
    FDAlgebra<F> big;                  // L
    std::vector<std::size_t> offset;   // first L index of each D_s delta_s block, size |S|+1
    Subspace<F> relations;             // N
    FDAlgebra<F> algebra;              // L/N
    Mat<F> projection;                 // L -> L/N

    /// a delta_s in L coordinates, a in D_s given in ambient coordinates.
    Vec<F> element(const SpectralRingAction<F>& act, std::size_t s, std::span<const typename F::value_type> a) const {
        Vec<F> out = big.zero();
        const auto c = act.domain[s].coordinates(a);
        for (std::size_t k = 0; k < c.size(); ++k) out[offset[s] + k] = c[k];
        return out;
    }
};

/// Builds the skew ring without validating the action first.
template <Field F>
SkewRing<F> build_skew_ring(const SpectralRingAction<F>& act) {
    const auto& s = act.semigroup;
    const auto& a = *act.algebra;
    const F& f = a.field();
    const std::size_t m = s.size();
    std::vector<std::size_t> offset;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < m; ++i) {
        offset.push_back(labels.size());
        for (const auto& b : act.domain[i].basis_vectors()) labels.push_back(a.format(b) + "@" + s.label(i));
    }
    offset.push_back(labels.size());
    const std::size_t n = labels.size();

    std::vector<Vec<F>> table(n * n, zero_vector(f, n));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            const auto st = s.mul(i, j);
            const auto bi = act.domain[i].basis_vectors();
            const auto bj = act.domain[j].basis_vectors();
            for (std::size_t p = 0; p < bi.size(); ++p) {
                const auto back = mat_vec(f, act.alpha[s.star(i)], bi[p]);
                for (std::size_t q = 0; q < bj.size(); ++q) {
                    const auto prod = mat_vec(f, act.alpha[i], a.multiply(back, bj[q]));
                    if (!act.domain[st].contains(prod))
                        throw InvariantViolation("skew product of " + labels[offset[i] + p] + " and " +
                                                 labels[offset[j] + q] + " leaves D_st");
                    const auto c = act.domain[st].coordinates(prod);
                    auto& cell = table[(offset[i] + p) * n + offset[j] + q];
                    for (std::size_t k = 0; k < c.size(); ++k) cell[offset[st] + k] = c[k];
                }
            }
        }
    FDAlgebra<F> big(f, labels, std::move(table), std::nullopt);

    // a delta_r - a delta_s for r <= s, a running over a basis of D_r
    std::vector<Vec<F>> gens;
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t t = 0; t < m; ++t) {
            if (r == t || !s.leq(r, t)) continue;
            for (std::size_t k = 0; k < act.domain[r].dim(); ++k) {
                const auto b = act.domain[r].basis_vector(k);
                if (!act.domain[t].contains(b))
                    throw InvariantViolation("D_" + s.label(r) + " is not contained in D_" + s.label(t));
                Vec<F> v = zero_vector(f, n);
                v[offset[r] + k] = f.one();
                const auto c = act.domain[t].coordinates(b);
                for (std::size_t q = 0; q < c.size(); ++q) v[offset[t] + q] = f.sub(v[offset[t] + q], c[q]);
                gens.push_back(std::move(v));
            }
        }
    auto rel = Subspace<F>::span(f, n, gens);
    if (!is_two_sided_ideal(big, rel)) throw InvariantViolation("N is not a two-sided ideal of L");
    auto q = quotient_algebra(big, rel);
    return {std::move(big), std::move(offset), std::move(rel), with_found_unit(q.algebra), std::move(q.projection)};
}

/// The skew inverse semigroup ring of a validated action.
template <Field F>
SkewRing<F> skew_isg_ring(const SpectralRingAction<F>& act) {
    if (auto v = validate_spectral_action(act)) throw InputError("ring action: " + v->message());
    return build_skew_ring(act);
}

/// A global action of a group by automorphisms of A (D_g = A for all g).
template <Field F>
SpectralRingAction<F> global_action(const FiniteGroup& g, const AlgebraPtr<F>& a, std::vector<Mat<F>> autos) {
    if (!a->unit()) throw InputError("a global action needs a unital algebra");
    const std::size_t n = g.order();
    return {semigroup_from_group(g), a, std::vector<Subspace<F>>(n, Subspace<F>::full(a->field(), a->dim())),
            std::vector<Vec<F>>(n, *a->unit()), std::move(autos)};
}

/// Coordinates of the images of L's complement basis: turns a map out of L
/// that kills N into a map out of L/N.
template <Field F>
Mat<F> descend_to_quotient(const SkewRing<F>& r, const Mat<F>& map_from_big) {
    const auto idx = r.relations.complement_indices();
    std::vector<Vec<F>> cols;
    for (auto i : idx) cols.push_back(map_from_big.column(i));
    return from_columns(r.algebra.field(), map_from_big.rows(), cols);
}

}  // namespace sheafalg
