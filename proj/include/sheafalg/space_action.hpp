#pragma once

// Actions of finite inverse semigroups on finite sets by partial bijections,
// their groupoids of germs, and topological freeness (interiors are the sets
// themselves on a finite discrete space).

#include <numeric>

#include "sheafalg/checks.hpp"
#include "sheafalg/semigroup.hpp"

namespace sheafalg {

struct SpaceAction {
    FiniteInverseSemigroup semigroup;
    std::vector<std::string> points;
    std::vector<std::vector<int>> theta;  // theta[s][x], -1 where undefined

    bool defined(std::size_t s, std::size_t x) const { return theta[s][x] >= 0; }
    std::size_t apply(std::size_t s, std::size_t x) const { return static_cast<std::size_t>(theta[s][x]); }
    std::size_t point_index(const std::string& id) const {
        for (std::size_t x = 0; x < points.size(); ++x)
            if (points[x] == id) return x;
        throw InputError("unknown point '" + id + "'");
    }
};

inline Validation validate_space_action(const SpaceAction& act) {
    if (auto v = validate_inverse_semigroup(act.semigroup)) return v;
    const auto& s = act.semigroup;
    const std::size_t m = s.size(), n = act.points.size();
    if (n == 0) return Violation{"points", "no points"};
    if (act.theta.size() != m) return Violation{"shape", "need one partial map per semigroup element"};
    for (std::size_t i = 0; i < m; ++i) {
        if (act.theta[i].size() != n) return Violation{"shape", "partial map of " + s.label(i) + " has wrong length"};
        std::vector<bool> hit(n, false);
        for (std::size_t x = 0; x < n; ++x) {
            const int y = act.theta[i][x];
            if (y < -1 || y >= static_cast<int>(n)) return Violation{"shape", "value out of range at " + s.label(i)};
            if (y < 0) continue;
            if (hit[static_cast<std::size_t>(y)]) return Violation{"injective", s.label(i) + " is not injective"};
            hit[static_cast<std::size_t>(y)] = true;
        }
    }
    auto at = [&](std::size_t i, std::size_t x) { return " at (" + s.label(i) + ", " + act.points[x] + ")"; };
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t x = 0; x < n; ++x) {
            const std::size_t si = s.star(i);
            if (act.defined(i, x)) {
                const auto y = act.apply(i, x);
                if (!act.defined(si, y) || act.apply(si, y) != x)
                    return Violation{"star", "theta_s* is not the inverse of theta_s" + at(i, x)};
            }
            if (act.defined(si, x) && !act.defined(i, act.apply(si, x)))
                return Violation{"star", "theta_s* is not the inverse of theta_s" + at(si, x)};
            if (s.is_idempotent(i) && act.defined(i, x) && act.apply(i, x) != x)
                return Violation{"idempotent", "an idempotent moves a point" + at(i, x)};
        }
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t x = 0; x < n; ++x) {
                if (!act.defined(j, x) || !act.defined(i, act.apply(j, x))) continue;
                const auto st = s.mul(i, j);
                if (!act.defined(st, x) || act.apply(st, x) != act.apply(i, act.apply(j, x)))
                    return Violation{"compatibility", "theta_s theta_t is not a restriction of theta_st" +
                                                          at(st, x)};
            }
    for (std::size_t x = 0; x < n; ++x) {
        bool covered = false;
        for (auto e : s.idempotents()) covered = covered || act.defined(e, x);
        if (!covered) return Violation{"non-degenerate", "point " + act.points[x] + " lies in no domain"};
    }
    return std::nullopt;
}

/// Orbits of the action, each sorted, blocks ordered by least point.
inline std::vector<std::vector<std::size_t>> action_orbits(const SpaceAction& act) {
    const std::size_t n = act.points.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t s = 0; s < act.semigroup.size(); ++s)
        for (std::size_t x = 0; x < n; ++x)
            if (act.defined(s, x)) {
                auto a = find(x), b = find(act.apply(s, x));
                if (a != b) parent[std::max(a, b)] = std::min(a, b);
            }
    std::map<std::size_t, std::vector<std::size_t>> blocks;
    for (std::size_t x = 0; x < n; ++x) blocks[find(x)].push_back(x);
    std::vector<std::vector<std::size_t>> out;
    for (auto& [root, b] : blocks) out.push_back(std::move(b));
    return out;
}

inline bool is_minimal_action(const SpaceAction& act) { return action_orbits(act).size() == 1; }

struct GermGroupoid {
    FiniteGroupoid groupoid;
    std::vector<std::vector<std::size_t>> germ;  // germ[s][x]: arrow of [s,x], npos where undefined
};

/// The groupoid of germs. (s,x) ~ (t,x) iff some u <= s,t is defined at x;
/// the relation is checked to be an equivalence rather than assumed.
inline GermGroupoid germ_groupoid(const SpaceAction& act) {
    if (auto v = validate_space_action(act)) throw InputError("space action: " + v->message());
    const auto& s = act.semigroup;
    const std::size_t m = s.size(), n = act.points.size();
    constexpr auto npos = FiniteGroupoid::npos;

    auto related = [&](std::size_t a, std::size_t b, std::size_t x) {
        for (std::size_t u = 0; u < m; ++u)
            if (s.leq(u, a) && s.leq(u, b) && act.defined(u, x)) return true;
        return false;
    };
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b) {
                if (!act.defined(a, x) || !act.defined(b, x) || !related(a, b, x)) continue;
                if (act.apply(a, x) != act.apply(b, x))
                    throw InvariantViolation("related germs with different ranges at " + act.points[x]);
                for (std::size_t c = 0; c < m; ++c)
                    if (act.defined(c, x) && related(b, c, x) && !related(a, c, x))
                        throw InvariantViolation("germ relation is not transitive at " + act.points[x]);
            }

    // representative: the least element of each class
    std::vector<std::vector<std::size_t>> rep(m, std::vector<std::size_t>(n, npos));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t a = 0; a < m; ++a) {
            if (!act.defined(a, x)) continue;
            for (std::size_t b = 0; b <= a && rep[a][x] == npos; ++b)
                if (act.defined(b, x) && related(a, b, x)) rep[a][x] = b;
        }

    auto germ_id = [&](std::size_t a, std::size_t x) {
        const auto r = rep[a][x];
        const auto e = s.mul(s.star(r), r);
        if (related(r, e, x)) return act.points[x];
        return "[" + s.label(r) + "," + act.points[x] + "]";
    };

    GroupoidSpec spec;
    spec.units = act.points;
    std::set<std::string> seen;
    for (std::size_t x = 0; x < n; ++x) seen.insert(act.points[x]);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t x = 0; x < n; ++x) {
            if (!act.defined(a, x) || rep[a][x] != a) continue;
            const auto id = germ_id(a, x);
            if (seen.insert(id).second) spec.arrows.push_back({id, act.points[x], act.points[act.apply(a, x)]});
        }

    std::map<std::pair<std::string, std::string>, std::string> products;
    std::map<std::string, std::string> inverses;
    auto record = [](auto& table, const auto& key, const std::string& value) {
        auto [it, inserted] = table.emplace(key, value);
        if (!inserted && it->second != value) throw InvariantViolation("germ operations are not well defined");
    };
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t x = 0; x < n; ++x) {
            if (!act.defined(a, x)) continue;
            const auto y = act.apply(a, x);
            record(inverses, germ_id(a, x), germ_id(s.star(a), y));
            for (std::size_t b = 0; b < m; ++b)
                if (act.defined(b, y)) record(products, std::make_pair(germ_id(b, y), germ_id(a, x)), germ_id(s.mul(b, a), x));
        }
    for (const auto& [k, v] : products) spec.compose.push_back({k.first, k.second, v});
    for (const auto& [k, v] : inverses) spec.inverse.emplace_back(k, v);

    GermGroupoid out{FiniteGroupoid(spec), std::vector<std::vector<std::size_t>>(m, std::vector<std::size_t>(n, npos))};
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t x = 0; x < n; ++x)
            if (act.defined(a, x)) out.germ[a][x] = out.groupoid.arrow_index(germ_id(a, x));
    if (auto v = validate_groupoid(out.groupoid)) throw InvariantViolation("germ groupoid: " + v->message());
    return out;
}

struct FreenessWitness {
    std::size_t element, point;
};

/// First (s, x) where x is fixed by theta_s but lies under no idempotent
/// e <= s; nullopt when the action is topologically free.
inline std::optional<FreenessWitness> topological_freeness_failure(const SpaceAction& act) {
    const auto& s = act.semigroup;
    for (std::size_t a = 0; a < s.size(); ++a)
        for (std::size_t x = 0; x < act.points.size(); ++x) {
            const bool fixed = act.defined(a, x) && act.apply(a, x) == x;
            bool dominated = false;
            for (auto e : s.idempotents()) dominated = dominated || (s.leq(e, a) && act.defined(e, x));
            if (fixed != dominated) return FreenessWitness{a, x};
        }
    return std::nullopt;
}

inline bool is_topologically_free(const SpaceAction& act) { return !topological_freeness_failure(act).has_value(); }

inline Report check_topfree(const SpaceAction& act) {
    Report r;
    r.check = "topfree";
    const auto w = topological_freeness_failure(act);
    r.lhs["topologically_free"] = !w.has_value();
    r.rhs["topologically_free"] = true;
    if (w) {
        r.witnesses["element"] = act.semigroup.label(w->element);
        r.witnesses["fixed_point"] = act.points[w->point];
    }
    r.notes.push_back("finite discrete space: the interior of a set is the set");
    return r.conclude(!w);
}

/// Topologically free <=> the germ groupoid is effective.
inline Report check_cinza(const SpaceAction& act) {
    Report r;
    r.check = "cinza";
    const auto g = germ_groupoid(act);
    const bool free = is_topologically_free(act);
    const bool eff = is_effective(g.groupoid);
    r.lhs["topologically_free"] = free;
    r.rhs["germ_groupoid_effective"] = eff;
    if (auto w = topological_freeness_failure(act)) {
        r.witnesses["element"] = act.semigroup.label(w->element);
        r.witnesses["fixed_point"] = act.points[w->point];
    }
    return r.conclude(free == eff);
}

/// The action and its groupoid of germs have the same orbits.
inline Report check_action_orbits(const SpaceAction& act) {
    Report r;
    r.check = "orbits";
    const auto g = germ_groupoid(act);
    auto names = [&](const std::vector<std::vector<std::size_t>>& blocks) {
        Json out = Json::array();
        for (const auto& b : blocks) {
            Json block = Json::array();
            for (auto x : b) block.push_back(act.points[x]);
            out.push_back(block);
        }
        return out;
    };
    r.lhs["action_orbits"] = names(action_orbits(act));
    r.rhs["germ_orbits"] = names(orbits(g.groupoid));
    r.lhs["minimal"] = is_minimal_action(act);
    r.rhs["germ_minimal"] = is_minimal(g.groupoid);
    return r.conclude(r.lhs["action_orbits"] == r.rhs["germ_orbits"]);
}

/// For topologically free actions: minimal <=> Gamma_c(S x| X, O) simple,
/// with O the constant sheaf of `stalk` (a field).
template <FiniteField F>
Report check_simpleaction(const SpaceAction& act, const AlgebraPtr<F>& stalk, const Caps& caps = {}) {
    Report r;
    r.check = "simpleaction";
    const auto g = germ_groupoid(act);
    auto c = build_conv_algebra(constant_sheaf(g.groupoid, stalk));
    r.hypothesis("topologically_free", is_topologically_free(act));
    r.hypothesis("sheaf_of_fields", detail::fields_hypothesis(c.sheaf()));
    const bool minimal = is_minimal_action(act);
    const auto simple = is_simple(c.algebra(), caps);
    r.lhs["minimal"] = minimal;
    r.rhs["simple"] = simple.value;
    r.rhs["conv_dim"] = c.dim();
    if (simple.witness) r.witnesses["proper_ideal_generator"] = c.algebra().format(*simple.witness);
    return r.conclude(minimal == simple.value);
}

// ---- constructors -----------------------------------------------------------

/// A group acting by total permutations; perm[g][x] is the image of x.
inline SpaceAction group_space_action(const FiniteGroup& g, std::vector<std::string> points,
                                      const std::vector<std::vector<int>>& perm) {
    return {semigroup_from_group(g), std::move(points), perm};
}

/// The symmetric inverse monoid I(n) acting on {1..n}.
inline SpaceAction natural_action(std::size_t n) {
    SpaceAction act{symmetric_inverse_monoid(n), {}, partial_injections(n)};
    for (std::size_t i = 1; i <= n; ++i) act.points.push_back(std::to_string(i));
    return act;
}

/// The one-element semigroup acting as the identity on the given points.
inline SpaceAction identity_action(std::vector<std::string> points) {
    std::vector<int> id(points.size());
    std::iota(id.begin(), id.end(), 0);
    return {FiniteInverseSemigroup({"1"}, {0}, {0}), std::move(points), {id}};
}

}  // namespace sheafalg
