#pragma once

// The Pierce sheaf of a spectral action in the finite case. The Pierce
// spectrum is the set of atoms of the Boolean algebra of central idempotents
// (a character lambda_e has kernel {a : ea = 0} and stalk eA). S acts on the
// atoms by e -> alpha_s(e), the germ [s,e] acts on stalks by
//   [a]_e -> [alpha_s(1_{s*s} a)]_{alpha_s(e)},
// and a delta_s goes to the section [s,e] -> alpha_s(e) a.

#include "sheafalg/ring_action.hpp"
#include "sheafalg/space_action.hpp"

namespace sheafalg {

/// Minimal nonzero central idempotents, in canonical order.
template <FiniteField F>
std::vector<Vec<F>> central_atoms(const FDAlgebra<F>& a, const Caps& caps = {}) {
    const auto all = central_idempotents(a, caps.order);
    std::vector<Vec<F>> out;
    for (const auto& e : all) {
        if (is_zero_vector(a.field(), e)) continue;
        bool minimal = true;
        for (const auto& g : all)
            if (!is_zero_vector(a.field(), g) && g != e && a.multiply(e, g) == g) minimal = false;
        if (minimal) out.push_back(e);
    }
    return out;
}

template <FiniteField F>
struct PierceResult {
    Report report;
    std::vector<Vec<F>> atoms;
    SpaceAction space;
    GermGroupoid germs;
    ConvAlgebra<F> conv;
    SkewRing<F> skew;
    Mat<F> map;  // L/N -> Gamma_c
};

template <FiniteField F>
PierceResult<F> pierce_comparison(const SpectralRingAction<F>& act, const Caps& caps = {}) {
    auto skew = skew_isg_ring(act);
    const auto& a = *act.algebra;
    const F& f = a.field();
    const auto& s = act.semigroup;
    const auto atoms = central_atoms(a, caps);
    const std::size_t n = atoms.size(), m = s.size();
    auto atom_index = [&](const Vec<F>& v) {
        for (std::size_t k = 0; k < n; ++k)
            if (atoms[k] == v) return k;
        throw InvariantViolation("alpha_s does not map an atom to an atom");
    };

    SpaceAction space{s, {}, std::vector<std::vector<int>>(m, std::vector<int>(n, -1))};
    for (std::size_t k = 0; k < n; ++k) space.points.push_back("e" + std::to_string(k + 1));
    for (std::size_t i = 0; i < m; ++i) {
        const auto& one = act.unit[s.star(i)];
        for (std::size_t k = 0; k < n; ++k)
            if (a.multiply(atoms[k], one) == atoms[k])
                space.theta[i][k] = static_cast<int>(atom_index(mat_vec(f, act.alpha[i], atoms[k])));
    }
    auto germs = germ_groupoid(space);
    const auto& g = germs.groupoid;

    // stalks eA
    std::vector<Subspace<F>> ideal;
    std::vector<AlgebraPtr<F>> stalks;
    for (const auto& e : atoms) {
        std::vector<Vec<F>> gens;
        for (std::size_t j = 0; j < a.dim(); ++j) gens.push_back(a.multiply(e, a.basis(j)));
        ideal.push_back(Subspace<F>::span(f, a.dim(), gens));
        stalks.push_back(share(with_found_unit(subalgebra(a, ideal.back()))));
    }
    auto transition = [&](std::size_t i, std::size_t k) {
        const auto to = space.apply(i, k);
        std::vector<Vec<F>> cols;
        for (const auto& b : ideal[k].basis_vectors())
            cols.push_back(ideal[to].coordinates(mat_vec(f, act.alpha[i], a.multiply(act.unit[s.star(i)], b))));
        return from_columns(f, ideal[to].dim(), cols);
    };
    std::vector<std::optional<Mat<F>>> alpha(g.arrow_count());
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (!space.defined(i, k)) continue;
            auto t = transition(i, k);
            auto& slot = alpha[germs.germ[i][k]];
            if (slot && *slot != t) throw InvariantViolation("Pierce transition depends on the germ representative");
            slot = std::move(t);
        }
    std::vector<Mat<F>> alphas;
    for (auto& x : alpha) alphas.push_back(std::move(*x));
    auto conv = build_conv_algebra(GSheaf<F>(g, stalks, alphas));

    // a delta_s -> sum over e in X_s* of (alpha_s(e) a) delta_[s,e]
    std::vector<Vec<F>> cols;
    for (std::size_t i = 0; i < m; ++i)
        for (const auto& b : act.domain[i].basis_vectors()) {
            Vec<F> img = conv.algebra().zero();
            for (std::size_t k = 0; k < n; ++k) {
                if (!space.defined(i, k)) continue;
                const auto to = space.apply(i, k);
                const auto part = ideal[to].coordinates(a.multiply(atoms[to], b));
                img = add(f, img, conv.point_mass(germs.germ[i][k], part));
            }
            cols.push_back(std::move(img));
        }
    const auto big_map = from_columns(f, conv.dim(), cols);

    Report r;
    r.check = "pierce";
    r.hypothesis("spectral_action_valid", true);
    bool kills = true;
    for (const auto& v : skew.relations.basis_vectors())
        if (!is_zero_vector(f, mat_vec(f, big_map, v))) {
            kills = false;
            r.witnesses["relation_not_killed"] = skew.big.format(v);
            break;
        }
    auto map = descend_to_quotient(skew, big_map);
    const auto failure = ring_iso_failure(skew.algebra, conv.algebra(), map);
    if (failure) r.witnesses["iso_failure"] = *failure;
    r.lhs["skew_dim"] = skew.algebra.dim();
    r.lhs["N_dim"] = skew.relations.dim();
    r.rhs["conv_dim"] = conv.dim();
    r.rhs["atoms"] = n;
    r.rhs["germ_arrows"] = g.arrow_count();
    r.lhs["map_kills_N"] = kills;
    r.lhs["ring_isomorphism"] = !failure.has_value();
    r.notes.push_back("finite case: the Pierce spectrum is the set of atoms of E(Z(A))");
    r.conclude(kills && !failure);
    return {std::move(r), atoms, std::move(space), std::move(germs), std::move(conv), std::move(skew), std::move(map)};
}

template <FiniteField F>
Report pierce_verification(const SpectralRingAction<F>& act, const Caps& caps = {}) {
    return pierce_comparison(act, caps).report;
}

}  // namespace sheafalg
