#pragma once

// Gamma_c(G, O) as the skew ring of the diagonal by the bisection semigroup.
// G^a acts on the diagonal: D_U is the sections supported on r(U) and
//   alpha_U(f)(r(g)) = alpha_g(f(d(g)))  for g in U.
// The comparison map sends a delta_U to a * chi_U.

#include "sheafalg/convolution.hpp"
#include "sheafalg/report.hpp"
#include "sheafalg/ring_action.hpp"

namespace sheafalg {

/// The spectral action of a bisection semigroup on the diagonal algebra.
/// Coordinates are those of c.diagonal().
template <Field F>
SpectralRingAction<F> diagonal_action(const ConvAlgebra<F>& c, const BisectionSemigroup& bs) {
    const auto& g = c.groupoid();
    const F& f = c.field();
    const auto diag = c.diagonal();
    const std::size_t n = diag.dim();
    auto on_units = [&](const std::vector<std::size_t>& units) {
        std::vector<std::size_t> arrows;
        for (auto x : units) arrows.push_back(g.unit_arrow(x));
        std::sort(arrows.begin(), arrows.end());
        return arrows;
    };
    auto to_diag = [&](const Vec<F>& v) { return diag.coordinates(v); };

    SpectralRingAction<F> act{bs.semigroup, share(diagonal_algebra(c)), {}, {}, {}};
    for (const auto& u : bs.sets) {
        const auto range = on_units(bisection_range(g, u));
        std::vector<Vec<F>> gens;
        for (const auto& b : c.supported_on(range).basis_vectors()) gens.push_back(to_diag(b));
        act.domain.push_back(Subspace<F>::span(f, n, gens));
        act.unit.push_back(to_diag(c.chi(range)));

        Mat<F> m = zero_matrix(f, n, n);
        for (auto gamma : u) {
            const auto from = g.unit_arrow(g.src(gamma)), to = g.unit_arrow(g.dst(gamma));
            const auto& al = c.sheaf().alpha(gamma);
            for (std::size_t i = 0; i < al.cols(); ++i) {
                const auto col = to_diag(c.point_mass(to, al.column(i)));
                const auto k = diag.coordinates(c.algebra().basis(c.offset(from) + i));
                // k is a standard basis vector of the diagonal
                const auto pos = static_cast<std::size_t>(std::find_if(k.begin(), k.end(), [&](const auto& v) {
                                                              return !f.is_zero(v);
                                                          }) - k.begin());
                m.set_column(pos, col);
            }
        }
        act.alpha.push_back(std::move(m));
    }
    return act;
}

template <Field F>
struct SiriResult {
    Report report;
    SpectralRingAction<F> action;
    SkewRing<F> skew;
    Mat<F> map;  // L/N -> Gamma_c
};

/// Builds the skew ring of the diagonal by G^a (or by `semigroup` if given)
/// and checks that a delta_U -> a * chi_U is a ring isomorphism onto Gamma_c.
template <Field F>
SiriResult<F> siri_comparison(const ConvAlgebra<F>& c, const Caps& caps = {},
                              std::optional<BisectionSemigroup> semigroup = std::nullopt) {
    const auto bs = semigroup ? *semigroup : bisection_semigroup(c.groupoid(), caps.arrows);
    auto act = diagonal_action(c, bs);
    // the action is spectral by construction; a failure here is a bug
    if (auto v = validate_spectral_action(act)) throw InvariantViolation("diagonal action: " + v->message());
    Report r;
    r.check = "siri";
    r.hypothesis("spectral_action_valid", true);
    auto skew = build_skew_ring(act);
    const F& f = c.field();
    const auto diag = c.diagonal();

    // a delta_U -> a * chi_U, on the basis of L
    std::vector<Vec<F>> cols;
    for (std::size_t u = 0; u < bs.sets.size(); ++u) {
        const auto chi = c.chi(bs.sets[u]);
        for (const auto& a : act.domain[u].basis_vectors())
            cols.push_back(c.algebra().multiply(diag.from_coordinates(a), chi));
    }
    const Mat<F> big_map = from_columns(f, c.dim(), cols);

    bool kills = true;
    for (const auto& nvec : skew.relations.basis_vectors())
        if (!is_zero_vector(f, mat_vec(f, big_map, nvec))) {
            kills = false;
            r.witnesses["relation_not_killed"] = skew.big.format(nvec);
            break;
        }
    const auto map = descend_to_quotient(skew, big_map);
    const auto failure = ring_iso_failure(skew.algebra, c.algebra(), map);
    if (failure) r.witnesses["iso_failure"] = *failure;

    // diagonal onto diagonal, chi to chi
    bool chi_ok = true;
    std::vector<Vec<F>> diag_gens;
    for (std::size_t u = 0; u < bs.sets.size(); ++u) {
        if (mat_vec(f, big_map, skew.element(act, u, act.unit[u])) != c.chi(bs.sets[u])) chi_ok = false;
        if (bs.semigroup.is_idempotent(u))
            for (const auto& a : act.domain[u].basis_vectors())
                diag_gens.push_back(mat_vec(f, big_map, skew.element(act, u, a)));
    }
    const auto diag_image = Subspace<F>::span(f, c.dim(), diag_gens);
    const bool diag_ok = diag_image == diag;

    r.lhs["semigroup_size"] = bs.sets.size();
    r.lhs["L_dim"] = skew.big.dim();
    r.lhs["N_dim"] = skew.relations.dim();
    r.lhs["skew_dim"] = skew.algebra.dim();
    r.rhs["conv_dim"] = c.dim();
    r.lhs["map_kills_N"] = kills;
    r.lhs["ring_isomorphism"] = !failure.has_value();
    r.lhs["diagonal_onto_diagonal"] = diag_ok;
    r.lhs["chi_to_chi"] = chi_ok;
    r.conclude(kills && !failure && diag_ok && chi_ok);
    return {std::move(r), std::move(act), std::move(skew), map};
}

template <Field F>
Report verify_siri(const ConvAlgebra<F>& c, const Caps& caps = {}) {
    return siri_comparison(c, caps).report;
}

}  // namespace sheafalg
