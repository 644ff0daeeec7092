#pragma once

// Ideals, centralizers, simplicity and regularity tests for structure-constant
// algebras.

#include <algorithm>
#include <deque>
#include <set>

#include "sheafalg/algebra.hpp"
#include "sheafalg/enumerate.hpp"

namespace sheafalg {

enum class Side { left, right, two_sided };

/// Default enumeration limits. Every exhaustive routine takes its cap
/// explicitly; these are the values the CLI starts from.
struct Caps {
    std::size_t arrows = 8;
    std::size_t ideal_dim = 8;
    std::uint64_t order = std::uint64_t{1} << 16;
    std::uint64_t projective_points = 1'000'000;
    std::uint64_t seed = 0x5eedULL;
};

template <Field F>
bool is_closed_under(const FDAlgebra<F>& a, const Subspace<F>& s, Side side) {
    for (std::size_t r = 0; r < s.dim(); ++r)
        for (std::size_t i = 0; i < a.dim(); ++i) {
            auto e = a.basis(i);
            if (side != Side::right && !s.contains(a.multiply(e, s.basis().row(r)))) return false;
            if (side != Side::left && !s.contains(a.multiply(s.basis().row(r), e))) return false;
        }
    return true;
}

template <Field F>
bool is_two_sided_ideal(const FDAlgebra<F>& a, const Subspace<F>& s) {
    return is_closed_under(a, s, Side::two_sided);
}

template <Field F>
bool is_subalgebra(const FDAlgebra<F>& a, const Subspace<F>& s) {
    for (std::size_t i = 0; i < s.dim(); ++i)
        for (std::size_t j = 0; j < s.dim(); ++j)
            if (!s.contains(a.multiply(s.basis().row(i), s.basis().row(j)))) return false;
    return true;
}

/// Smallest subspace containing `gens` and closed under the requested
/// multiplications by basis elements. Saturates a work queue until the echelon
/// basis stops growing.
template <Field F>
Subspace<F> ideal_generated(const FDAlgebra<F>& a, const std::vector<Vec<F>>& gens, Side side) {
    const F& f = a.field();
    const std::size_t n = a.dim();
    EchelonBuilder<F> builder(f, n);
    std::deque<Vec<F>> queue;
    auto offer = [&](Vec<F> v) {
        if (builder.insert(v)) queue.push_back(std::move(v));
    };
    for (const auto& g : gens) {
        if (g.size() != n) throw InputError("generator has dimension " + std::to_string(g.size()) + ", algebra has " +
                                            std::to_string(n));
        offer(g);
    }
    std::vector<Vec<F>> basis;
    for (std::size_t i = 0; i < n; ++i) basis.push_back(a.basis(i));
    while (!queue.empty()) {
        Vec<F> v = std::move(queue.front());
        queue.pop_front();
        for (const auto& e : basis) {
            if (side != Side::right) offer(a.multiply(e, v));
            if (side != Side::left) offer(a.multiply(v, e));
        }
    }
    return builder.subspace();
}

/// Product I*J = span{ij} of two subspaces.
template <Field F>
Subspace<F> subspace_product(const FDAlgebra<F>& a, const Subspace<F>& i, const Subspace<F>& j) {
    std::vector<Vec<F>> prods;
    for (std::size_t r = 0; r < i.dim(); ++r)
        for (std::size_t s = 0; s < j.dim(); ++s) prods.push_back(a.multiply(i.basis().row(r), j.basis().row(s)));
    return Subspace<F>::span(a.field(), a.dim(), prods);
}

/// Every two-sided ideal, canonical and sorted. Each ideal is a sum of
/// principal ideals, so the list is the closure of the principal ideals of all
/// projective points under sums.
template <FiniteField F>
std::vector<Subspace<F>> enumerate_two_sided_ideals(const FDAlgebra<F>& a, const Caps& caps = {}) {
    if (a.dim() > caps.ideal_dim)
        throw CapExceeded("ideal enumeration cap: algebra dimension " + std::to_string(a.dim()) + " > " +
                          std::to_string(caps.ideal_dim));
    const F& f = a.field();
    std::vector<Subspace<F>> principal;
    std::set<Subspace<F>> seen_principal;
    for_each_projective_point(Subspace<F>::full(f, a.dim()), caps.projective_points, [&](const Vec<F>& v) {
        auto id = ideal_generated(a, {v}, Side::two_sided);
        if (seen_principal.insert(id).second) principal.push_back(std::move(id));
        return true;
    });
    std::set<Subspace<F>> ideals;
    ideals.insert(Subspace<F>(f, a.dim()));
    std::deque<Subspace<F>> queue;
    for (const auto& p : principal)
        if (ideals.insert(p).second) queue.push_back(p);
    while (!queue.empty()) {
        auto cur = std::move(queue.front());
        queue.pop_front();
        for (const auto& p : principal) {
            if (cur.contains(p)) continue;
            auto s = cur + p;
            if (ideals.insert(s).second) queue.push_back(std::move(s));
        }
    }
    return {ideals.begin(), ideals.end()};
}

/// Maximal elements among the proper ideals of a list.
template <Field F>
std::vector<Subspace<F>> maximal_ideals(const std::vector<Subspace<F>>& ideals) {
    std::vector<Subspace<F>> out;
    for (const auto& i : ideals) {
        if (i.is_full()) continue;
        bool maximal = true;
        for (const auto& j : ideals)
            if (!j.is_full() && !(j == i) && j.contains(i)) maximal = false;
        if (maximal) out.push_back(i);
    }
    return out;
}

template <Field F>
struct Decision {
    bool value;
    std::optional<Vec<F>> witness;
};

/// Simplicity by projective-point generation: A is simple iff every nonzero
/// vector generates A as a two-sided ideal. Witness: a vector generating a
/// proper ideal.
template <FiniteField F>
Decision<F> is_simple(const FDAlgebra<F>& a, const Caps& caps = {}) {
    if (a.dim() == 0) throw InputError("is_simple: zero algebra");
    if (!a.is_unital()) throw InputError("is_simple: algebra must be unital");
    std::optional<Vec<F>> witness;
    for_each_projective_point(Subspace<F>::full(a.field(), a.dim()), caps.projective_points, [&](const Vec<F>& v) {
        if (!ideal_generated(a, {v}, Side::two_sided).is_full()) {
            witness = v;
            return false;
        }
        return true;
    });
    return {!witness.has_value(), witness};
}

/// {c : c s = s c for all s in a basis of S}.
template <Field F>
Subspace<F> centralizer(const FDAlgebra<F>& a, const Subspace<F>& s) {
    if (!is_subalgebra(a, s)) throw InputError("centralizer: subspace is not closed under multiplication");
    const F& f = a.field();
    const std::size_t n = a.dim();
    Mat<F> stacked(0, n, f.zero());
    for (std::size_t r = 0; r < s.dim(); ++r) {
        auto sr = s.basis_vector(r);
        Mat<F> comm = mat_sub(f, a.right_multiplication(sr), a.left_multiplication(sr));
        stacked = stack(stacked, comm);
    }
    if (stacked.rows() == 0) return Subspace<F>::full(f, n);
    return Subspace<F>::row_space(f, kernel(f, stacked));
}

template <Field F>
Subspace<F> center(const FDAlgebra<F>& a) {
    return centralizer(a, Subspace<F>::full(a.field(), a.dim()));
}

/// Why `map` (dim B x dim A, columns are images of A's basis) fails to be a
/// unital ring isomorphism, or nullopt if it is one.
template <Field F>
std::optional<std::string> ring_iso_failure(const FDAlgebra<F>& a, const FDAlgebra<F>& b, const Mat<F>& map) {
    if (map.rows() != b.dim() || map.cols() != a.dim())
        throw InputError("ring map has shape " + std::to_string(map.rows()) + "x" + std::to_string(map.cols()) +
                         ", expected " + std::to_string(b.dim()) + "x" + std::to_string(a.dim()));
    const F& f = a.field();
    if (!is_invertible(f, map)) return "map is not bijective";
    std::vector<Vec<F>> images;
    for (std::size_t i = 0; i < a.dim(); ++i) images.push_back(map.column(i));
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            if (mat_vec(f, map, a.product(i, j)) != b.multiply(images[i], images[j]))
                return "not multiplicative on (" + a.label(i) + ", " + a.label(j) + ")";
    if (a.unit().has_value() != b.unit().has_value()) return "exactly one side is unital";
    if (a.unit() && mat_vec(f, map, *a.unit()) != *b.unit()) return "unit is not mapped to unit";
    return std::nullopt;
}

template <Field F>
bool check_ring_iso(const FDAlgebra<F>& a, const FDAlgebra<F>& b, const Mat<F>& map) {
    return !ring_iso_failure(a, b, map).has_value();
}

/// a x a = a solvable in x for every a (exhaustive). Witness: an element with
/// no solution.
template <FiniteField F>
Decision<F> is_von_neumann_regular(const FDAlgebra<F>& a, std::uint64_t order_cap = std::uint64_t{1} << 16) {
    const F& f = a.field();
    const auto order = saturating_pow(f.order(), a.dim());
    if (order > order_cap)
        throw CapExceeded("von Neumann regularity: |A| = " + std::to_string(order) + " exceeds cap " +
                          std::to_string(order_cap));
    std::optional<Vec<F>> witness;
    for_each_vector(f, a.dim(), [&](const Vec<F>& x) {
        Mat<F> sandwich = mat_mul(f, a.left_multiplication(x), a.right_multiplication(x));
        if (!solve(f, sandwich, x)) {
            witness = x;
            return false;
        }
        return true;
    });
    return {!witness.has_value(), witness};
}

/// Exhaustive: every nonzero element invertible. Requires a unit.
template <FiniteField F>
Decision<F> is_field_algebra(const FDAlgebra<F>& a, std::uint64_t order_cap = std::uint64_t{1} << 16) {
    const F& f = a.field();
    if (!a.unit() || a.dim() == 0) return {false, std::nullopt};
    if (saturating_pow(f.order(), a.dim()) > order_cap) throw CapExceeded("field test: algebra too large");
    if (!is_commutative(a)) return {false, std::nullopt};
    std::optional<Vec<F>> witness;
    for_each_vector(f, a.dim(), [&](const Vec<F>& x) {
        if (is_zero_vector(f, x)) return true;
        if (!solve(f, a.left_multiplication(x), *a.unit())) {
            witness = x;
            return false;
        }
        return true;
    });
    return {!witness.has_value(), witness};
}

/// No central idempotents besides 0 and 1 (exhaustive over the center).
template <FiniteField F>
Decision<F> is_indecomposable(const FDAlgebra<F>& a, std::uint64_t order_cap = std::uint64_t{1} << 12) {
    const F& f = a.field();
    if (saturating_pow(f.order(), a.dim()) > order_cap) throw CapExceeded("indecomposability test: algebra too large");
    const auto z = center(a);
    std::optional<Vec<F>> witness;
    for_each_vector(f, z.dim(), [&](const Vec<F>& c) {
        auto e = z.from_coordinates(c);
        if (is_zero_vector(f, e) || (a.unit() && e == *a.unit())) return true;
        if (a.multiply(e, e) == e) {
            witness = e;
            return false;
        }
        return true;
    });
    return {!witness.has_value(), witness};
}

/// All idempotents of the center, sorted canonically.
template <FiniteField F>
std::vector<Vec<F>> central_idempotents(const FDAlgebra<F>& a, std::uint64_t order_cap = std::uint64_t{1} << 16) {
    const F& f = a.field();
    const auto z = center(a);
    if (saturating_pow(f.order(), z.dim()) > order_cap) throw CapExceeded("central idempotents: center too large");
    std::vector<Vec<F>> out;
    for_each_vector(f, z.dim(), [&](const Vec<F>& c) {
        auto e = z.from_coordinates(c);
        if (a.multiply(e, e) == e) out.push_back(std::move(e));
        return true;
    });
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace sheafalg
