#pragma once

// Bisections of a finite groupoid and the inverse semigroup G^a they form.
// A bisection is stored as the sorted list of its arrow indices.

#include "sheafalg/groupoid.hpp"
#include "sheafalg/semigroup.hpp"

namespace sheafalg {

using Bisection = std::vector<std::size_t>;

inline bool is_bisection(const FiniteGroupoid& g, const Bisection& b) {
    std::set<std::size_t> srcs, dsts;
    for (auto a : b)
        if (!srcs.insert(g.src(a)).second || !dsts.insert(g.dst(a)).second) return false;
    return true;
}

/// BC = {bc : b in B, c in C, d(b) = r(c)}.
inline Bisection bisection_product(const FiniteGroupoid& g, const Bisection& b, const Bisection& c) {
    Bisection out;
    for (auto x : b)
        for (auto y : c)
            if (auto xy = g.compose(x, y)) out.push_back(*xy);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline Bisection bisection_inverse(const FiniteGroupoid& g, const Bisection& b) {
    Bisection out;
    for (auto x : b) out.push_back(g.inverse(x));
    std::sort(out.begin(), out.end());
    return out;
}

/// r(B) or d(B) as sorted unit indices.
inline std::vector<std::size_t> bisection_range(const FiniteGroupoid& g, const Bisection& b) {
    std::vector<std::size_t> out;
    for (auto a : b) out.push_back(g.dst(a));
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<std::size_t> bisection_source(const FiniteGroupoid& g, const Bisection& b) {
    std::vector<std::size_t> out;
    for (auto a : b) out.push_back(g.src(a));
    std::sort(out.begin(), out.end());
    return out;
}

inline std::string bisection_label(const FiniteGroupoid& g, const Bisection& b) {
    std::string out = "{";
    for (std::size_t k = 0; k < b.size(); ++k) out += (k ? "," : "") + g.arrow_id(b[k]);
    return out + "}";
}

/// An inverse semigroup of bisections; element k of `semigroup` is `sets[k]`.
struct BisectionSemigroup {
    FiniteInverseSemigroup semigroup;
    std::vector<Bisection> sets;

    std::size_t index_of(const Bisection& b) const {
        auto it = std::find(sets.begin(), sets.end(), b);
        if (it == sets.end()) throw InputError("bisection not in the semigroup");
        return static_cast<std::size_t>(it - sets.begin());
    }
};

namespace detail {

inline BisectionSemigroup tabulate_bisections(const FiniteGroupoid& g, std::vector<Bisection> sets) {
    std::sort(sets.begin(), sets.end(), [](const Bisection& a, const Bisection& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    const std::size_t n = sets.size();
    std::map<Bisection, std::size_t> index;
    for (std::size_t k = 0; k < n; ++k) index[sets[k]] = k;
    auto find = [&](const Bisection& b) {
        auto it = index.find(b);
        if (it == index.end()) throw InputError("bisection family is not closed: " + bisection_label(g, b));
        return it->second;
    };
    std::vector<std::string> labels;
    std::vector<std::size_t> mul(n * n), star(n);
    for (std::size_t i = 0; i < n; ++i) {
        labels.push_back(bisection_label(g, sets[i]));
        star[i] = find(bisection_inverse(g, sets[i]));
        for (std::size_t j = 0; j < n; ++j) mul[i * n + j] = find(bisection_product(g, sets[i], sets[j]));
    }
    BisectionSemigroup out{FiniteInverseSemigroup(std::move(labels), std::move(mul), std::move(star)), std::move(sets)};
    // the idempotents must be exactly the subsets of the unit space in the family
    for (std::size_t k = 0; k < n; ++k) {
        const bool units_only = std::all_of(out.sets[k].begin(), out.sets[k].end(), [&](std::size_t a) { return g.is_identity(a); });
        if (units_only != out.semigroup.is_idempotent(k))
            throw InvariantViolation("idempotent bisections are not the unit subsets at " + out.semigroup.label(k));
    }
    return out;
}

}  // namespace detail

/// G^a: every bisection, empty set included, ordered by size then arrows.
inline BisectionSemigroup bisection_semigroup(const FiniteGroupoid& g, std::size_t arrow_cap = 8) {
    if (g.arrow_count() > arrow_cap)
        throw CapExceeded("bisection cap: " + std::to_string(g.arrow_count()) + " arrows > " + std::to_string(arrow_cap));
    std::vector<Bisection> sets;
    Bisection cur;
    std::vector<bool> src_used(g.unit_count()), dst_used(g.unit_count());
    auto rec = [&](auto&& self, std::size_t a) -> void {
        if (a == g.arrow_count()) {
            sets.push_back(cur);
            return;
        }
        self(self, a + 1);
        if (src_used[g.src(a)] || dst_used[g.dst(a)]) return;
        src_used[g.src(a)] = dst_used[g.dst(a)] = true;
        cur.push_back(a);
        self(self, a + 1);
        cur.pop_back();
        src_used[g.src(a)] = dst_used[g.dst(a)] = false;
    };
    rec(rec, 0);
    return detail::tabulate_bisections(g, std::move(sets));
}

/// The inverse semigroup of bisections generated by `gens` (plus the empty
/// bisection). The family must cover every arrow and its idempotents must
/// cover the unit space; both are checked.
inline BisectionSemigroup generated_bisection_semigroup(const FiniteGroupoid& g, const std::vector<Bisection>& gens) {
    std::set<Bisection> family{Bisection{}};
    std::deque<Bisection> queue;
    for (auto b : gens) {
        std::sort(b.begin(), b.end());
        if (!is_bisection(g, b)) throw InputError("generator " + bisection_label(g, b) + " is not a bisection");
        if (family.insert(b).second) queue.push_back(b);
    }
    while (!queue.empty()) {
        auto b = queue.front();
        queue.pop_front();
        std::vector<Bisection> next{bisection_inverse(g, b)};
        for (const auto& c : std::vector<Bisection>(family.begin(), family.end())) {
            next.push_back(bisection_product(g, b, c));
            next.push_back(bisection_product(g, c, b));
        }
        for (auto& n : next)
            if (family.insert(n).second) queue.push_back(std::move(n));
    }
    std::vector<bool> covered(g.arrow_count(), false), units(g.unit_count(), false);
    for (const auto& b : family)
        for (auto a : b) {
            covered[a] = true;
            if (g.is_identity(a)) units[g.src(a)] = true;
        }
    for (std::size_t a = 0; a < g.arrow_count(); ++a)
        if (!covered[a]) throw InputError("generated bisections do not cover arrow " + g.arrow_id(a));
    for (std::size_t x = 0; x < g.unit_count(); ++x)
        if (!units[x]) throw InputError("idempotent bisections do not cover unit " + g.unit_id(x));
    return detail::tabulate_bisections(g, {family.begin(), family.end()});
}

}  // namespace sheafalg
