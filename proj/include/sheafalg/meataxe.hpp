#pragma once

// Composition factors of modules over finite fields (a small MeatAxe) and the
// Jacobson radical built on top of them.
//
// Splitting a module M:
//   * small M: try the cyclic submodule of every projective point; if none is
//     proper, M is simple.
//   * otherwise Norton's test: pick theta = T^{p^d} - T for T the action of a
//     random algebra element and the least d with ker(theta) != 0. Either some
//     v in ker(theta) generates a proper submodule, or some w in ker(theta^T)
//     generates a proper submodule of the dual (whose annihilator is a proper
//     submodule of M), or M is simple.

#include <random>

#include "sheafalg/module.hpp"

namespace sheafalg {

namespace detail {

inline constexpr std::uint64_t kExhaustiveCyclicPoints = 4096;
inline constexpr int kRandomElementTries = 12;

template <FiniteField F>
Vec<F> random_vector(const F& f, std::size_t n, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint64_t> dist(0, f.order() - 1);
    Vec<F> v(n);
    for (auto& x : v) x = f.element(dist(rng));
    return v;
}

/// Submodule generated under a list of matrices (used for duals, where the
/// matrices are transposes).
template <Field F>
Subspace<F> closure_under(const F& f, const std::vector<Mat<F>>& mats, std::size_t n, const Vec<F>& v) {
    EchelonBuilder<F> builder(f, n);
    std::deque<Vec<F>> queue;
    if (builder.insert(v)) queue.push_back(v);
    while (!queue.empty()) {
        auto x = std::move(queue.front());
        queue.pop_front();
        for (const auto& m : mats) {
            auto y = mat_vec(f, m, x);
            if (builder.insert(y)) queue.push_back(std::move(y));
        }
    }
    return builder.subspace();
}

}  // namespace detail

template <FiniteField F>
class MeatAxe {
  public:
    explicit MeatAxe(const Caps& caps = {}) : caps_(caps), rng_(caps.seed) {}

    /// A proper nonzero submodule, or nullopt when M is simple (or zero).
    std::optional<Subspace<F>> find_proper_submodule(const AlgebraModule<F>& m) {
        const F& f = m.field();
        const std::size_t n = m.dim();
        if (n <= 1) return std::nullopt;

        if (projective_point_count(f.order(), n) <= detail::kExhaustiveCyclicPoints) {
            std::optional<Subspace<F>> found;
            for_each_projective_point(Subspace<F>::full(f, n), caps_.projective_points, [&](const Vec<F>& v) {
                auto s = submodule_generated(m, {v});
                if (!s.is_full()) {
                    found = std::move(s);
                    return false;
                }
                return true;
            });
            return found;
        }

        for (int i = 0; i < 4; ++i) {
            auto v = detail::random_vector(f, n, rng_);
            if (is_zero_vector(f, v)) continue;
            auto s = submodule_generated(m, {v});
            if (!s.is_full()) return s;
        }

        auto [theta, ker] = small_kernel_element(m);
        std::optional<Subspace<F>> found;
        for_each_projective_point(ker, caps_.projective_points, [&](const Vec<F>& v) {
            auto s = submodule_generated(m, {v});
            if (!s.is_full()) {
                found = std::move(s);
                return false;
            }
            return true;
        });
        if (found) return found;

        std::vector<Mat<F>> dual;
        for (const auto& rho : m.actions()) dual.push_back(transpose(rho));
        auto ker_t = Subspace<F>::row_space(f, kernel(f, transpose(theta)));
        for_each_projective_point(ker_t, caps_.projective_points, [&](const Vec<F>& w) {
            auto s = detail::closure_under(f, dual, n, w);
            if (!s.is_full()) {
                found = Subspace<F>::row_space(f, kernel(f, s.basis()));
                return false;
            }
            return true;
        });
        return found;
    }

    std::vector<AlgebraModule<F>> composition_factors(const AlgebraModule<F>& m) {
        std::vector<AlgebraModule<F>> out;
        std::vector<AlgebraModule<F>> work{m};
        while (!work.empty()) {
            auto cur = std::move(work.back());
            work.pop_back();
            if (cur.dim() == 0) continue;
            auto sub = find_proper_submodule(cur);
            if (!sub) {
                out.push_back(std::move(cur));
                continue;
            }
            work.push_back(quotient_module(cur, *sub));
            work.push_back(submodule(cur, *sub));
        }
        return out;
    }

  private:
    std::pair<Mat<F>, Subspace<F>> small_kernel_element(const AlgebraModule<F>& m) {
        const F& f = m.field();
        const std::size_t n = m.dim();
        std::optional<std::pair<Mat<F>, Subspace<F>>> best;
        for (int t = 0; t < detail::kRandomElementTries; ++t) {
            Mat<F> tmat = m.act(detail::random_vector(f, m.algebra().dim(), rng_));
            Mat<F> power = tmat;
            for (std::size_t d = 1; d <= n; ++d) {
                power = mat_pow(f, power, f.order());
                Mat<F> theta = mat_sub(f, power, tmat);
                auto ker = Subspace<F>::row_space(f, kernel(f, theta));
                if (ker.is_zero()) continue;
                if (!best || ker.dim() < best->second.dim()) best.emplace(std::move(theta), std::move(ker));
                break;
            }
            if (best && best->second.dim() == 1) break;
        }
        if (!best) throw InvariantViolation("no algebra element with a nonzero kernel polynomial");
        return std::move(*best);
    }

    Caps caps_;
    std::mt19937_64 rng_;
};

template <Field F>
bool are_isomorphic_simples(const AlgebraModule<F>& s, const AlgebraModule<F>& t) {
    return s.dim() == t.dim() && !hom_space(s, t).empty();
}

/// Pairwise non-isomorphic representatives, first occurrence kept.
template <Field F>
std::vector<AlgebraModule<F>> distinct_simples(std::vector<AlgebraModule<F>> mods) {
    std::vector<AlgebraModule<F>> out;
    for (auto& m : mods) {
        bool dup = false;
        for (const auto& o : out)
            if (are_isomorphic_simples(m, o)) {
                dup = true;
                break;
            }
        if (!dup) out.push_back(std::move(m));
    }
    return out;
}

/// Every simple module of A, up to isomorphism: the distinct composition
/// factors of the regular module.
template <FiniteField F>
std::vector<AlgebraModule<F>> simple_modules(const AlgebraPtr<F>& a, const Caps& caps = {}) {
    MeatAxe<F> axe(caps);
    return distinct_simples(axe.composition_factors(regular_module(a)));
}

/// Pairwise non-isomorphic simple quotients of M: the composition-factor
/// types S of M with Hom(M, S) != 0.
template <FiniteField F>
std::vector<AlgebraModule<F>> meataxe_simple_quotients(const AlgebraModule<F>& m, const Caps& caps = {}) {
    if (m.dim() > 64) throw CapExceeded("meataxe: module dimension " + std::to_string(m.dim()) + " > 64");
    MeatAxe<F> axe(caps);
    std::vector<AlgebraModule<F>> out;
    for (auto& s : distinct_simples(axe.composition_factors(m)))
        if (!hom_space(m, s).empty()) out.push_back(std::move(s));
    return out;
}

namespace detail {

template <FiniteField F>
Subspace<F> radical_from_simples(const FDAlgebra<F>& a, const std::vector<AlgebraModule<F>>& simples) {
    auto j = Subspace<F>::full(a.field(), a.dim());
    for (const auto& s : simples) j = j.intersect(annihilator(s));
    return j;
}

/// Dickson's trace criterion, valid in characteristic zero:
/// J(A) = {a : tr(L_{x a}) = 0 for all x}.
template <Field F>
Subspace<F> radical_trace_form(const FDAlgebra<F>& a) {
    const F& f = a.field();
    const std::size_t n = a.dim();
    Mat<F> form(n, n, f.zero());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            auto l = a.left_multiplication(a.product(i, j));
            auto tr = f.zero();
            for (std::size_t k = 0; k < n; ++k) tr = f.add(tr, l(k, k));
            form(i, j) = tr;
        }
    return Subspace<F>::row_space(f, kernel(f, form));
}

template <Field F>
bool is_nilpotent_ideal(const FDAlgebra<F>& a, const Subspace<F>& j) {
    auto power = j;
    for (std::size_t k = 0; k <= a.dim(); ++k) {
        if (power.is_zero()) return true;
        power = subspace_product(a, power, j);
    }
    return power.is_zero();
}

}  // namespace detail

/// J(A). Over F_p: intersection of the annihilators of all simple modules.
/// Over Q: the trace-form kernel. Postconditions (checked): J is a nilpotent
/// two-sided ideal and A/J has zero radical.
template <Field F>
Subspace<F> jacobson_radical(const AlgebraPtr<F>& a, const Caps& caps = {}) {
    if (!a->is_unital()) throw InputError("jacobson_radical: algebra must be unital");
    Subspace<F> j = [&] {
        if constexpr (F::is_finite)
            return detail::radical_from_simples(*a, simple_modules(a, caps));
        else
            return detail::radical_trace_form(*a);
    }();
    if (!is_two_sided_ideal(*a, j)) throw InvariantViolation("radical is not a two-sided ideal");
    if (!detail::is_nilpotent_ideal(*a, j)) throw InvariantViolation("radical is not nilpotent");
    if (!j.is_zero() && !j.is_full()) {
        auto q = share(quotient_algebra(*a, j).algebra);
        Subspace<F> jq = [&] {
            if constexpr (F::is_finite)
                return detail::radical_from_simples(*q, simple_modules(q, caps));
            else
                return detail::radical_trace_form(*q);
        }();
        if (!jq.is_zero()) throw InvariantViolation("A/J(A) has a nonzero radical");
    }
    return j;
}

}  // namespace sheafalg
