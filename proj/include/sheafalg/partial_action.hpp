#pragma once

// Partial actions of finite groups on finite sets, the transformation
// groupoid G x| X, and the comparison of the partial crossed product
// F^X x| G with Gamma_c(G x| X, Delta(F)).
//
// The arrow (t,x) has x in X_t, r(t,x) = x and d(t,x) = theta_{t^-1}(x);
// composition is (s,y)(t,x) = (st,y).

#include "sheafalg/siri.hpp"
#include "sheafalg/space_action.hpp"

namespace sheafalg {

struct PartialGroupAction {
    FiniteGroup group;
    std::vector<std::string> points;
    std::vector<std::vector<int>> theta;  // theta[g][x], -1 where undefined

    SpaceAction as_space_action() const { return {semigroup_from_group(group), points, theta}; }
};

/// theta_1 = id, theta_{g^-1} = theta_g^-1, theta_g theta_h a restriction of theta_gh.
inline Validation validate_partial_action(const PartialGroupAction& act) {
    if (auto v = validate_group(act.group)) return v;
    const auto e = act.group.identity();
    if (act.theta.size() != act.group.order()) return Violation{"shape", "need one partial map per group element"};
    for (std::size_t x = 0; x < act.points.size(); ++x)
        if (act.theta[e].size() != act.points.size() || act.theta[e][x] != static_cast<int>(x))
            return Violation{"identity", "the identity must act as the identity on every point"};
    return validate_space_action(act.as_space_action());
}

struct TransformationGroupoid {
    FiniteGroupoid groupoid;
    std::vector<std::vector<std::size_t>> arrow;  // arrow[t][x] for x in X_t, npos otherwise
};

inline TransformationGroupoid transformation_groupoid(const PartialGroupAction& act) {
    if (auto v = validate_partial_action(act)) throw InputError("partial action: " + v->message());
    const auto& grp = act.group;
    const std::size_t m = grp.order(), n = act.points.size();
    // x in X_t iff theta_{t^-1} is defined at x
    auto in_range = [&](std::size_t t, std::size_t x) { return act.theta[grp.inverse(t)][x] >= 0; };
    auto back = [&](std::size_t t, std::size_t x) { return static_cast<std::size_t>(act.theta[grp.inverse(t)][x]); };
    auto id = [&](std::size_t t, std::size_t x) {
        return t == grp.identity() ? act.points[x] : "(" + grp.label(t) + "," + act.points[x] + ")";
    };

    GroupoidSpec spec;
    spec.units = act.points;
    for (std::size_t t = 0; t < m; ++t)
        for (std::size_t x = 0; x < n; ++x)
            if (t != grp.identity() && in_range(t, x)) spec.arrows.push_back({id(t, x), act.points[back(t, x)], act.points[x]});
    for (std::size_t s = 0; s < m; ++s)
        for (std::size_t y = 0; y < n; ++y) {
            if (!in_range(s, y)) continue;
            spec.inverse.emplace_back(id(s, y), id(grp.inverse(s), back(s, y)));
            const auto x = back(s, y);
            for (std::size_t t = 0; t < m; ++t)
                if (in_range(t, x)) spec.compose.push_back({id(s, y), id(t, x), id(grp.mul(s, t), y)});
        }
    TransformationGroupoid out{FiniteGroupoid(spec), std::vector<std::vector<std::size_t>>(
                                                         m, std::vector<std::size_t>(n, FiniteGroupoid::npos))};
    for (std::size_t t = 0; t < m; ++t)
        for (std::size_t x = 0; x < n; ++x)
            if (in_range(t, x)) out.arrow[t][x] = out.groupoid.arrow_index(id(t, x));
    if (auto v = validate_groupoid(out.groupoid)) throw InvariantViolation("transformation groupoid: " + v->message());
    return out;
}

/// F^X with the point idempotents as basis.
template <Field F>
FDAlgebra<F> function_algebra(const F& f, const std::vector<std::string>& points) {
    const std::size_t n = points.size();
    std::vector<Vec<F>> table;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) table.push_back(i == j ? unit_vector(f, n, i) : zero_vector(f, n));
    std::vector<std::string> labels;
    for (const auto& p : points) labels.push_back("e_" + p);
    return FDAlgebra<F>(f, std::move(labels), std::move(table), Vec<F>(n, f.one()));
}

/// The dual action on F^X: D_g = functions vanishing off X_g, alpha_g(f) = f o theta_{g^-1}.
template <Field F>
SpectralRingAction<F> dual_ring_action(const PartialGroupAction& act, const F& f) {
    const auto& grp = act.group;
    const std::size_t n = act.points.size();
    SpectralRingAction<F> out{semigroup_from_group(grp), share(function_algebra(f, act.points)), {}, {}, {}};
    for (std::size_t g = 0; g < grp.order(); ++g) {
        std::vector<Vec<F>> gens;
        Vec<F> one = zero_vector(f, n);
        Mat<F> m = zero_matrix(f, n, n);
        for (std::size_t x = 0; x < n; ++x) {
            if (act.theta[grp.inverse(g)][x] >= 0) {
                gens.push_back(unit_vector(f, n, x));
                one[x] = f.one();
            }
            if (act.theta[g][x] >= 0) m(static_cast<std::size_t>(act.theta[g][x]), x) = f.one();
        }
        out.domain.push_back(Subspace<F>::span(f, n, gens));
        out.unit.push_back(std::move(one));
        out.alpha.push_back(std::move(m));
    }
    return out;
}

/// The ring-level partial action axioms: alpha_g maps D_{g^-1} onto D_g as
/// a ring isomorphism, and alpha_g alpha_h is a restriction of alpha_gh.
/// (D_g is not D_{gg^-1} here, so this is not a spectral action of G.)
template <Field F>
Validation validate_partial_ring_action(const FiniteGroup& grp, const SpectralRingAction<F>& act) {
    const auto& a = *act.algebra;
    const F& f = a.field();
    auto apply = [&](std::size_t g, const Vec<F>& x) { return mat_vec(f, act.alpha[g], x); };
    for (std::size_t g = 0; g < grp.order(); ++g) {
        const auto& src = act.domain[grp.inverse(g)];
        const std::string at = " at " + grp.label(g);
        if (!is_two_sided_ideal(a, act.domain[g])) return Violation{"ideal", "D is not a two-sided ideal" + at};
        if (!(src.image(act.alpha[g]) == act.domain[g]) || src.dim() != act.domain[g].dim())
            return Violation{"bijective", "alpha does not map D_g^-1 onto D_g" + at};
        for (const auto& x : src.basis_vectors())
            for (const auto& y : src.basis_vectors())
                if (apply(g, a.multiply(x, y)) != a.multiply(apply(g, x), apply(g, y)))
                    return Violation{"multiplicative", "alpha is not multiplicative" + at};
    }
    for (std::size_t g = 0; g < grp.order(); ++g)
        for (std::size_t h = 0; h < grp.order(); ++h) {
            const auto dom = act.domain[h].intersect(act.domain[grp.inverse(g)]).image(act.alpha[grp.inverse(h)]);
            for (const auto& x : dom.basis_vectors())
                if (apply(g, apply(h, x)) != apply(grp.mul(g, h), x))
                    return Violation{"compatibility", "alpha_g alpha_h is not a restriction of alpha_gh at (" +
                                                          grp.label(g) + ", " + grp.label(h) + ")"};
        }
    return std::nullopt;
}

/// The partial crossed product: sum of D_g delta_g with the skew product (no relations).
template <Field F>
SkewRing<F> partial_crossed_product(const FiniteGroup& grp, const SpectralRingAction<F>& act) {
    if (auto v = validate_partial_ring_action(grp, act)) throw InputError("partial ring action: " + v->message());
    return build_skew_ring(act);
}

/// F^X x| G is isomorphic to Gamma_c(G x| X, Delta(F)) via a delta_g -> a * chi_{U_g},
/// U_g = {(g,x) : x in X_g}. Also runs the bisection-semigroup comparison on
/// the same groupoid (the full G^a case).
template <Field F>
Report verify_partial_crossed(const PartialGroupAction& act, const F& f, const Caps& caps = {}) {
    const auto tg = transformation_groupoid(act);
    const auto ring_act = dual_ring_action(act, f);
    const auto skew = partial_crossed_product(act.group, ring_act);
    const auto conv = build_conv_algebra(constant_sheaf(tg.groupoid, share(ground_field_algebra(f))));
    const auto& grp = act.group;
    const std::size_t n = act.points.size();

    std::vector<Vec<F>> cols;
    for (std::size_t g = 0; g < grp.order(); ++g) {
        Bisection u;
        for (std::size_t x = 0; x < n; ++x)
            if (tg.arrow[g][x] != FiniteGroupoid::npos) u.push_back(tg.arrow[g][x]);
        std::sort(u.begin(), u.end());
        const auto chi = conv.chi(u);
        for (const auto& a : ring_act.domain[g].basis_vectors()) {
            Vec<F> diag = conv.algebra().zero();
            for (std::size_t x = 0; x < n; ++x)
                if (!f.is_zero(a[x])) diag = add(f, diag, conv.point_mass(tg.groupoid.unit_arrow(x), Vec<F>{a[x]}));
            cols.push_back(conv.algebra().multiply(diag, chi));
        }
    }
    const auto big_map = from_columns(f, conv.dim(), cols);
    const auto map = descend_to_quotient(skew, big_map);

    Report r;
    r.check = "partial-crossed";
    r.hypothesis("partial_action_valid", true);
    const auto failure = ring_iso_failure(skew.algebra, conv.algebra(), map);
    if (failure) r.witnesses["iso_failure"] = *failure;
    const auto siri = siri_comparison(conv, caps);
    r.lhs["crossed_product_dim"] = skew.algebra.dim();
    r.lhs["N_dim"] = skew.relations.dim();
    r.rhs["conv_dim"] = conv.dim();
    r.rhs["groupoid_arrows"] = tg.groupoid.arrow_count();
    r.lhs["ring_isomorphism"] = !failure.has_value();
    r.lhs["bisection_semigroup_isomorphism"] = siri.report.passed();
    r.notes.push_back("coefficients are exact (Q or F_p); the comparison is purely ring-theoretic");
    return r.conclude(!failure && skew.relations.is_zero() && siri.report.passed());
}

}  // namespace sheafalg
